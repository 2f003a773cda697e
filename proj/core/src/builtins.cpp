#include "placidus/registry.hpp"

#include "placidus/error.hpp"
#include "placidus/fts.hpp"
#include "placidus/variability.hpp"

namespace placidus
{

// --- Predicate registry -----------------------------------------------------

void PredicateRegistry::add( Predicate predicate )
{
    auto id = predicate.id;
    _predicates.insert_or_assign( std::move( id ), std::move( predicate ) );
}

void PredicateRegistry::declare_external( const std::string& id, std::string description )
{
    add( Predicate{ id, std::move( description ), {} } );
}

const Predicate* PredicateRegistry::find( std::string_view id ) const
{
    const auto it = _predicates.find( id );
    return it == _predicates.end() ? nullptr : &it->second;
}

std::vector< std::string > PredicateRegistry::ids() const
{
    std::vector< std::string > out;
    for ( const auto& [ id, p ] : _predicates )
        out.push_back( id );
    return out;
}

namespace
{

const Value& member( const Value& data, const char* key )
{
    if ( !data.is_object() || !data.contains( key ) )
        throw error{ std::string{ "expected a '" } + key + "' member in " + data.dump() };
    return data.at( key );
}

FeatureUniverse universe_of( const Value& input )
{
    return FeatureUniverse{ member( input, "universe" ).get< std::vector< std::string > >() };
}

Value verdict_value( bool ok )
{
    return Value{ { "verdict", ok ? "pass" : "fail" } };
}

} // namespace

// --- Predicates -------------------------------------------------------------

void register_builtin_predicates( Registry& registry )
{
    auto& p = registry.predicates;
    p.declare_external( forall_in_set, "every element of data.set satisfies data.pred" );
    p.declare_external( "represents", "the analysed artifact faithfully represents the system" );
    p.declare_external( "formalizes", "the specification formalizes the claimed property" );
    p.declare_external( "analysis_sound", "the analysis is sound" );
    p.declare_external( "lift_correct", "the family analysis is a correct lift of the product analysis on the input" );

    p.add( { "complete", "data.set is covered by the union of data.family",
             []( const Value& data, const Context& ctx )
             { return domdecomp_check_complete( ctx.resolve( member( data, "set" ) ),
                                                ctx.resolve( member( data, "family" ) ) ); } } );

    p.add( { "analysis_verdict", "the product analysis reports pass on data.input (and returns data.result)",
             []( const Value& data, const Context& ctx )
             {
                 const auto& analysis = ctx.reg().analyses.require_product( member( data, "analysis" ).get< std::string >() );
                 const auto output = analysis.run( ctx.resolve( member( data, "input" ) ), ctx );
                 if ( !passed( output ) )
                     return false;
                 return !data.contains( "result" ) || ( output.contains( "result" ) && output.at( "result" ) == data.at( "result" ) );
             } } );
}

// --- Analyses ---------------------------------------------------------------

namespace
{

Value run_complete( const Value& input )
{
    const auto& set = member( input, "set" );
    const auto& family = member( input, "family" );
    if ( !set.is_array() || !family.is_array() )
        throw error{ "complete needs a set and a family of sets" };
    Value uncovered = Value::array();
    for ( const auto& element : set )
        if ( !domdecomp_check_complete( Value::array( { element } ), family ) )
            uncovered.push_back( element );
    if ( uncovered.empty() )
        return verdict_value( true );
    return Value{ { "verdict", "fail" }, { "uncovered", canonical_set( std::move( uncovered ) ) } };
}

Value query_output( Value result )
{
    return Value{ { "verdict", "pass" }, { "result", std::move( result ) } };
}

Value class_result( const Value& output, const Configuration& config )
{
    for ( const auto& cls : member( output, "classes" ) )
        for ( const auto& names : cls.at( "configs" ) )
            if ( Configuration::from_names( config.universe(), names.get< std::vector< std::string > >() ) == config )
                return cls.at( "result" );
    throw error{ "no class of the family result contains " + config.to_string() };
}

// Family analysis checking that `input.family` is the named construction of
// `input.set`; such families are complete at every configuration.
FamilyAnalysis construction_analysis( std::string id, Value ( *construct )( const Value&, const FeatureUniverse& ) )
{
    FamilyAnalysis a;
    a.id = std::move( id );
    a.product = "complete";
    a.mode = lift_mode::exact;
    a.description = "recomputes the family from the set and reports completeness";
    a.run = [ construct ]( const Value& input, const Context& )
    {
        const auto expected = construct( member( input, "set" ), universe_of( input ) );
        if ( expected != member( input, "family" ) )
            return Value{ { "verdict", "fail" }, { "construction", expected } };
        return Value{ { "verdict", "pass" }, { "construction", expected } };
    };
    a.derive_output = []( const Value& output, const Configuration&, const Context& )
    { return Value{ { "verdict", output.at( "verdict" ) } }; };
    a.clean = []( const Value& output ) { return passed( output ); };
    return a;
}

} // namespace

void register_builtin_analyses( Registry& registry )
{
    auto& a = registry.analyses;

    a.add( ProductAnalysis{ "mc", "CTL-fragment model checking of a transition system",
                            []( const Value& input, const Context& )
                            {
                                const auto ts = ts_from_json( member( input, "model" ) );
                                const auto formula = parse_formula( member( input, "formula" ).get< std::string >() );
                                return to_json( mc_product( ts, formula ) );
                            } } );

    a.add( ProductAnalysis{ "query", "states of a transition system with a label matching a glob",
                            []( const Value& input, const Context& )
                            {
                                const auto ts = ts_from_json( member( input, "model" ) );
                                return query_output( query( ts, member( input, "pattern" ).get< std::string >() ) );
                            } } );

    a.add( ProductAnalysis{ "complete", "a set is covered by the union of a family",
                            []( const Value& input, const Context& ) { return run_complete( input ); } } );

    const auto mc_family_analysis = []( std::string id, lift_mode mode )
    {
        FamilyAnalysis f;
        f.id = std::move( id );
        f.product = "mc";
        f.mode = mode;
        f.description = mode == lift_mode::exact ? "per product-class model checking of an FTS"
                                                 : "single-verdict model checking of an FTS";
        f.run = [ mode ]( const Value& input, const Context& )
        {
            const auto fts = fts_from_json( member( input, "model" ) );
            const auto formula = parse_formula( member( input, "formula" ).get< std::string >() );
            return to_json( mc_family( fts, formula, mode ) );
        };
        f.derive_output = []( const Value& output, const Configuration& config, const Context& )
        { return class_result( output, config ); };
        f.clean = []( const Value& output ) { return passed( output ); };
        return f;
    };
    a.add( mc_family_analysis( "mc_family_exact", lift_mode::exact ) );
    a.add( mc_family_analysis( "mc_family_quasi", lift_mode::quasi ) );

    FamilyAnalysis vq;
    vq.id = "vquery";
    vq.product = "query";
    vq.mode = lift_mode::exact;
    vq.description = "matching states of an FTS annotated with their presence conditions";
    vq.run = []( const Value& input, const Context& )
    {
        const auto fts = fts_from_json( member( input, "model" ) );
        const auto found = vquery( fts, member( input, "pattern" ).get< std::string >() );
        VarSet< Value > values{ found.universe() };
        for ( const auto& element : found )
            values.add( element.value, element.pc );
        return query_output( to_json( values ) );
    };
    vq.derive_output = []( const Value& output, const Configuration& config, const Context& ctx )
    { return ctx.derive( output, config ); };
    vq.clean = []( const Value& output ) { return passed( output ); };
    a.add( std::move( vq ) );

    a.add( construction_analysis( "explode_complete", &explode_value ) );
    a.add( construction_analysis( "aggregate_complete", &aggregate_value ) );
}

// --- Templates --------------------------------------------------------------

namespace
{

const PredGoal& forall_goal( const Goal& parent )
{
    const auto* p = parent.as_pred();
    if ( p == nullptr || p->predicate != forall_in_set )
        throw instantiation_refused{ "domain decomposition applies to " + std::string{ forall_in_set } + " goals" };
    return *p;
}

AnalyticTemplate mc_analytic()
{
    return AnalyticTemplate{ "mc-analytic", "mc", "model", "formula", false, {} };
}

AnalyticTemplate query_analytic()
{
    AnalyticTemplate t{ "query-analytic", "query", "model", "pattern", true, {} };
    t.consequent = []( const Value& input, const Value& output ) -> std::optional< Goal >
    {
        if ( !input.contains( "pred" ) )
            return std::nullopt;
        const auto pred = input.at( "pred" ).get< std::string >();
        return Goal::pred( forall_in_set, Value{ { "set", output.at( "result" ) }, { "pred", pred } },
                           "Every state in the query result satisfies " + pred );
    };
    return t;
}

Template analytic_template( const AnalyticTemplate& t, std::string description )
{
    Template out;
    out.id = t.id;
    out.description = std::move( description );
    out.instantiate = [ t ]( const InstantiationRequest& request, const Context& ctx )
    { return analytic_instantiate( t, request, ctx ); };
    return out;
}

} // namespace

void register_builtin_templates( Registry& registry )
{
    Template dd;
    dd.id = "domdecomp";
    dd.description = "domain decomposition of a forall-in-set goal by a complete family";
    dd.parent_predicate = forall_in_set;
    dd.precondition_predicate = "complete";
    dd.precondition = []( const Goal& parent, const Value& aux, const Context& ctx )
    {
        const auto& goal = forall_goal( parent );
        return domdecomp_check_complete( ctx.resolve( member( goal.data, "set" ) ), ctx.resolve( aux ) );
    };
    dd.instantiate = []( const InstantiationRequest& request, const Context& ctx )
    {
        const auto& goal = forall_goal( request.parent );
        return domdecomp_instantiate( request.node_id, ctx.resolve( member( goal.data, "set" ) ),
                                      ctx.resolve( request.aux ), member( goal.data, "pred" ).get< std::string >() );
    };
    registry.templates.add( std::move( dd ) );

    registry.templates.add( analytic_template( mc_analytic(), "argument over a model-checking run" ) );
    registry.templates.add( analytic_template( query_analytic(), "argument over a label query" ) );

    Template id;
    id.id = "identity";
    id.description = "restates the goal as its only subgoal";
    id.instantiate = []( const InstantiationRequest& request, const Context& )
    { return std::vector< GsnNode >{ GsnNode::undeveloped( request.node_id + ".1", request.parent ) }; };
    registry.templates.add( std::move( id ) );
}

// --- Lifted templates -------------------------------------------------------

namespace
{

Value names_of( const FeatureUniverse& universe )
{
    return Value( universe.names() );
}

// Records an exhaustive table of product `complete` runs over the scope.
VariationalEvidence exhaustive_complete( const Value& set, const Value& family, const VInstantiationRequest& request,
                                         const Context& ctx )
{
    const auto& complete = ctx.reg().analyses.require_product( "complete" );
    const Value data{ { "set", set }, { "family", family } };
    ExhaustiveEvidence table;
    for ( const auto& config : evidence_domain( request.model, request.scope ) )
    {
        const auto input = ctx.resolve( ctx.derive( data, config ) );
        const auto output = complete.run( input, ctx );
        table.table.emplace( config.mask(), MachineRecord{ "complete", digest( input ), digest( output ),
                                                           passed( output ) ? verdict::pass : verdict::fail,
                                                           output.contains( "uncovered" ) ? output.at( "uncovered" ) : Value{} } );
    }
    return VariationalEvidence{ request.scope, std::move( table ) };
}

VInstantiation vdomdecomp( const VInstantiationRequest& request, const Context& ctx )
{
    const auto& goal = forall_goal( request.parent.body );
    const auto& universe = request.model.universe();
    const auto set = ctx.resolve( member( goal.data, "set" ) );
    const auto pred = member( goal.data, "pred" ).get< std::string >();

    VInstantiation out;
    std::optional< std::string > construction;
    if ( request.aux == "explode" )
    {
        out.aux = explode_value( set, universe );
        construction = "explode_complete";
    }
    else if ( request.aux == "aggregate" )
    {
        out.aux = aggregate_value( set, universe );
        construction = "aggregate_complete";
    }
    else
        out.aux = ctx.resolve( request.aux );

    if ( construction )
    {
        const Value input{ { "set", set }, { "family", out.aux }, { "universe", names_of( universe ) } };
        out.precondition = VariationalEvidence{ request.scope, run_family_analysis( *construction, input, ctx ) };
    }
    else
        out.precondition = exhaustive_complete( set, out.aux, request, ctx );

    out.children = vdomdecomp_instantiate( request.node_id, set, out.aux, pred, universe );
    return out;
}

VTemplate lifted_analytic( const Registry& registry, const AnalyticTemplate& t, std::string id,
                           std::string family_analysis, AnalyticLabels labels = {} )
{
    return lift_template( *registry.templates.find( t.id ), std::move( id ),
                          [ t, family_analysis, labels ]( const VInstantiationRequest& request, const Context& ctx )
                          { return lifted_analytic_instantiate( t, family_analysis, request, ctx, labels ); } );
}

} // namespace

void register_builtin_vtemplates( Registry& registry )
{
    registry.vtemplates.add( lift_template(
        *registry.templates.find( "domdecomp" ), "vdomdecomp", &vdomdecomp,
        []( const VGoal& parent, const Value& aux, const Context& ctx )
        { return Value{ { "set", ctx.resolve( member( forall_goal( parent.body ).data, "set" ) ) }, { "family", aux } }; } ) );

    registry.vtemplates.add( lifted_analytic( registry, mc_analytic(), "vmc-analytic", "mc_family_exact" ) );
    AnalyticLabels quasi;
    quasi.verdict = "The family model checker reported no violation (soundness direction only)";
    registry.vtemplates.add( lifted_analytic( registry, mc_analytic(), "vmc-analytic-quasi", "mc_family_quasi", quasi ) );
    registry.vtemplates.add( lifted_analytic( registry, query_analytic(), "vquery-analytic", "vquery" ) );

    registry.vtemplates.add( lift_template( *registry.templates.find( "identity" ), "videntity",
                                            []( const VInstantiationRequest& request, const Context& )
                                            {
                                                VInstantiation out;
                                                out.aux = request.aux;
                                                auto child = request.parent;
                                                child.pc = FeatExpr::all( request.model.universe() );
                                                out.children.push_back( VGsnNode::undeveloped( request.node_id + ".1", child ) );
                                                return out;
                                            } ) );
}

// --- Registry ---------------------------------------------------------------

Registry Registry::make_builtin()
{
    Registry registry;
    registry.derivations = DerivationRegistry::builtin();
    register_builtin_predicates( registry );
    register_builtin_analyses( registry );
    register_builtin_templates( registry );
    register_builtin_vtemplates( registry );
    return registry;
}

const Registry& Registry::builtin()
{
    static const Registry registry = make_builtin();
    return registry;
}

} // namespace placidus
