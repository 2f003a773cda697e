#include "placidus/vgsn.hpp"

#include "placidus/analysis.hpp"
#include "placidus/error.hpp"
#include "placidus/registry.hpp"

#include <unordered_set>

namespace placidus
{

// --- Nodes ------------------------------------------------------------------

VGsnNode VGsnNode::make_evidence( std::string id, VGoal goal, VariationalEvidence evidence )
{
    VGsnNode node;
    node.k = kind::evidence;
    node.id = std::move( id );
    node.goal = std::move( goal );
    node.evidence = std::move( evidence );
    return node;
}

VGsnNode VGsnNode::make_strategy( std::string id, VGoal goal, std::optional< VStrategyJustification > justification,
                                  std::vector< VGsnNode > children )
{
    VGsnNode node;
    node.k = kind::strategy;
    node.id = std::move( id );
    node.goal = std::move( goal );
    node.justification = std::move( justification );
    node.children = std::move( children );
    return node;
}

VGsnNode VGsnNode::undeveloped( std::string id, VGoal goal )
{
    return make_strategy( std::move( id ), std::move( goal ), std::nullopt, {} );
}

const VGsnNode* find_node( const VGsnNode& root, const std::string& id )
{
    if ( root.id == id )
        return &root;
    for ( const auto& child : root.children )
        if ( const auto* found = find_node( child, id ) )
            return found;
    return nullptr;
}

VGsnNode* find_node( VGsnNode& root, const std::string& id )
{
    return const_cast< VGsnNode* >( find_node( static_cast< const VGsnNode& >( root ), id ) );
}

std::size_t count_nodes( const VGsnNode& root )
{
    std::size_t n = 1;
    for ( const auto& child : root.children )
        n += count_nodes( child );
    return n;
}

std::optional< FeatExpr > effective_pc( const VGsnNode& root, const std::string& id )
{
    if ( root.id == id )
        return root.goal.pc;
    for ( const auto& child : root.children )
        if ( auto below = effective_pc( child, id ) )
            return root.goal.pc & *below;
    return std::nullopt;
}

namespace
{

void validate_node( const VGsnNode& node, const FeatExpr& model, const FeatExpr& effective,
                    std::unordered_set< std::string >& ids, std::vector< std::string >& out )
{
    if ( node.id.empty() )
        out.emplace_back( "node without an id" );
    else if ( !ids.insert( node.id ).second )
        out.push_back( "duplicate node id '" + node.id + "'" );

    if ( !( node.goal.pc.universe() == model.universe() ) )
    {
        out.push_back( "node " + node.id + ": presence condition over another universe" );
        return;
    }
    const auto here = effective & node.goal.pc;

    if ( node.is_evidence() )
    {
        if ( !node.evidence )
            out.push_back( "node " + node.id + ": evidence node without evidence" );
        else if ( !( node.evidence->scope.universe() == model.universe() ) ||
                  semantics( model & node.evidence->scope ) != semantics( model & here ) )
            out.push_back( "node " + node.id + ": evidence scope " + node.evidence->scope.to_string() +
                           " differs from the effective presence condition " + here.to_string() );
        if ( !node.children.empty() )
            out.push_back( "node " + node.id + ": evidence node with children" );
    }
    if ( node.justification )
        if ( const auto* instance = std::get_if< VTemplateInstance >( &*node.justification ) )
            if ( instance->precondition &&
                 ( !( instance->precondition->scope.universe() == model.universe() ) ||
                   semantics( model & instance->precondition->scope ) != semantics( model & here ) ) )
                out.push_back( "node " + node.id + ": precondition evidence scope differs from the effective presence condition" );

    for ( const auto& child : node.children )
        validate_node( child, model, here, ids, out );
}

} // namespace

std::vector< std::string > validate_plac( const PlAc& ac )
{
    std::vector< std::string > out;
    std::unordered_set< std::string > ids;
    validate_node( ac.root, ac.model, FeatExpr::all( ac.universe() ), ids, out );
    return out;
}

// --- Derivation -------------------------------------------------------------

Goal derive_goal( const Goal& goal, const Configuration& config, const Context& ctx )
{
    if ( const auto* p = goal.as_pred() )
        return Goal::pred( p->predicate, ctx.derive( p->data, config ), goal.text );
    return goal;
}

namespace
{

// `depth` limits how far below `node` children are derived (-1: unlimited).
GsnNode derive_limited( const VGsnNode& node, const Configuration& config, const Context& ctx, int depth )
{
    if ( !sat( config, node.goal.pc ) )
        return GsnNode::nil();

    auto goal = derive_goal( node.goal.body, config, ctx );
    if ( node.is_evidence() )
    {
        auto out = GsnNode::make_evidence( node.id, std::move( goal ), derive_evidence( *node.evidence, config, ctx ) );
        out.description = node.description;
        return out;
    }

    std::optional< StrategyJustification > justification;
    if ( node.justification )
    {
        if ( const auto* axiom = std::get_if< Axiomatic >( &*node.justification ) )
            justification = *axiom;
        else
        {
            const auto& instance = std::get< VTemplateInstance >( *node.justification );
            const auto* vt = ctx.reg().vtemplates.find( instance.template_id );
            if ( vt == nullptr )
                throw dangling_reference{ "unknown lifted template '" + instance.template_id + "'" };

            TemplateInstance derived{ vt->product_template, ctx.derive( instance.aux, config ), std::nullopt, 0 };
            if ( instance.precondition )
                derived.precondition = derive_evidence( *instance.precondition, config, ctx );
            const auto extra = std::min( instance.extra_premises, node.children.size() );
            for ( auto i = node.children.size() - extra; i < node.children.size(); ++i )
                derived.extra_premises += sat( config, node.children[ i ].goal.pc ) ? 1 : 0;
            justification = std::move( derived );
        }
    }

    std::vector< GsnNode > children;
    if ( depth != 0 )
    {
        for ( const auto& child : node.children )
        {
            auto derived = derive_limited( child, config, ctx, depth < 0 ? depth : depth - 1 );
            if ( !derived.is_nil() )
                children.push_back( std::move( derived ) );
        }
    }
    auto out = GsnNode::make_strategy( node.id, std::move( goal ), std::move( justification ), std::move( children ) );
    out.description = node.description;
    return out;
}

} // namespace

GsnNode derive_node( const VGsnNode& node, const Configuration& config, const Context& ctx )
{
    return derive_limited( node, config, ctx, -1 );
}

GsnNode derive_ac( const PlAc& ac, const Configuration& config, const Context& ctx )
{
    if ( !( config.universe() == ac.universe() ) )
        throw universe_mismatch{};
    if ( !sat( config, ac.model ) )
        throw error{ "configuration " + config.to_string() + " is not valid under " + ac.model.to_string() };
    return derive_node( ac.root, config, ctx );
}

// --- Lifted templates -------------------------------------------------------

void VTemplateRegistry::add( VTemplate t )
{
    auto id = t.id;
    _templates.insert_or_assign( std::move( id ), std::move( t ) );
}

const VTemplate* VTemplateRegistry::find( std::string_view id ) const
{
    const auto it = _templates.find( id );
    return it == _templates.end() ? nullptr : &it->second;
}

std::vector< std::string > VTemplateRegistry::ids() const
{
    std::vector< std::string > out;
    for ( const auto& [ id, t ] : _templates )
        out.push_back( id );
    return out;
}

VTemplate lift_template( const Template& product, std::string id,
                         std::function< VInstantiation( const VInstantiationRequest&, const Context& ) > inst,
                         std::function< Value( const VGoal&, const Value&, const Context& ) > precondition_data )
{
    VTemplate t;
    t.id = std::move( id );
    t.product_template = product.id;
    t.description = "lift of " + product.id;
    t.instantiate = std::move( inst );
    t.precondition_data = std::move( precondition_data );
    return t;
}

namespace
{

std::string summarize( const std::vector< GsnNode >& nodes )
{
    std::string out = "[";
    for ( const auto& n : nodes )
    {
        if ( out.size() > 1 )
            out += "; ";
        out += n.goal->key();
        if ( const auto* p = n.goal->as_pred() )
            out += " " + p->data.dump();
    }
    return out + "]";
}

const Template& require_template( const Context& ctx, const std::string& id )
{
    const auto* t = ctx.reg().templates.find( id );
    if ( t == nullptr )
        throw dangling_reference{ "unknown template '" + id + "'" };
    return *t;
}

const VTemplate& require_vtemplate( const Context& ctx, const std::string& id )
{
    const auto* t = ctx.reg().vtemplates.find( id );
    if ( t == nullptr )
        throw dangling_reference{ "unknown lifted template '" + id + "'" };
    return *t;
}

} // namespace

LiftObligation check_instantiation_lift( const VTemplate& vt, const VInstantiationRequest& request,
                                         const VInstantiation& inst, const Context& ctx )
{
    const auto& product = require_template( ctx, vt.product_template );

    // The lifted strategy as it would sit in the tree.
    auto lifted = VGsnNode::make_strategy(
        request.node_id, request.parent,
        VTemplateInstance{ vt.id, inst.aux, inst.precondition, inst.extra_premises }, inst.children );
    lifted.goal.pc = FeatExpr::all( request.model.universe() );

    LiftObligation out;
    for ( const auto& config : evidence_domain( request.model, request.scope ) )
    {
        ++out.report.configurations_checked;
        const auto derived = derive_limited( lifted, config, ctx, 1 );
        const auto& instance = std::get< TemplateInstance >( *derived.justification );

        std::vector< GsnNode > expected;
        std::string problem;
        try
        {
            expected = product.instantiate( { request.node_id, *derived.goal, instance.aux }, ctx );
            problem = compare_instantiation( derived.children, expected, instance.extra_premises );
        }
        catch ( const dangling_reference& )
        {
            throw;
        }
        catch ( const std::exception& e )
        {
            problem = std::string{ "product instantiation refused: " } + e.what();
        }
        if ( problem.empty() )
            continue;
        out.report.witnesses.push_back( { config, summarize( expected ), summarize( derived.children ) } );
        out.witness_lines.push_back( config.to_string() + ": " + problem );
    }
    out.report.status = out.report.witnesses.empty() ? lift_status::exact : lift_status::failed;
    return out;
}

namespace
{

PlAc replace_node( const PlAc& ac, const std::string& node_id, const std::function< void( VGsnNode& ) >& edit )
{
    PlAc out = ac;
    auto* node = find_node( out.root, node_id );
    if ( node == nullptr )
        throw dangling_reference{ "no node '" + node_id + "' in the assurance case" };
    edit( *node );
    return out;
}

void require_undeveloped( const VGsnNode& node )
{
    if ( !node.is_strategy() || node.justification || !node.children.empty() )
        throw instantiation_refused{ "node " + node.id + " is already developed" };
}

} // namespace

PlAc instantiate( const PlAc& ac, const std::string& node_id, const std::string& template_id, const Value& aux,
                  const Context& ctx )
{
    const auto* node = find_node( ac.root, node_id );
    if ( node == nullptr )
        throw dangling_reference{ "no node '" + node_id + "' in the assurance case" };
    require_undeveloped( *node );

    const auto& vt = require_vtemplate( ctx, template_id );
    const auto& product = require_template( ctx, vt.product_template );
    if ( product.parent_predicate && node->goal.body.key() != *product.parent_predicate )
        throw instantiation_refused{ "template " + template_id + " decomposes " + *product.parent_predicate +
                                     " goals, node " + node_id + " claims " + node->goal.body.key() };

    const VInstantiationRequest request{ node_id, node->goal, *effective_pc( ac.root, node_id ), ac.model, aux };
    auto inst = vt.instantiate( request, ctx );

    if ( !product.precondition_predicate.empty() )
    {
        if ( !inst.precondition )
            throw instantiation_refused{ "template " + template_id + " produced no precondition evidence" };
        const auto data = vt.precondition_data ? vt.precondition_data( node->goal, inst.aux, ctx ) : inst.aux;
        const auto check = verify_var_evidence( product.precondition_predicate, data, request.scope, ac.model,
                                                *inst.precondition, ctx );
        if ( check.status == evidence_status::rejected )
        {
            std::vector< std::string > witnesses;
            for ( const auto& c : check.failing )
                witnesses.push_back( c.to_string() + ": " + product.precondition_predicate + " fails" );
            for ( const auto& c : check.uncovered )
                witnesses.push_back( c.to_string() + ": not covered" );
            throw instantiation_refused{ "precondition " + product.precondition_predicate + " rejected: " + check.message,
                                         std::move( witnesses ) };
        }
    }

    auto obligation = check_instantiation_lift( vt, request, inst, ctx );
    if ( !obligation.report.ok() )
        throw instantiation_refused{ "lift obligation of " + template_id + " fails in " +
                                         std::to_string( obligation.report.witnesses.size() ) + " configuration(s)",
                                     std::move( obligation.witness_lines ) };

    return replace_node( ac, node_id,
                         [ & ]( VGsnNode& target )
                         {
                             target.justification = VTemplateInstance{ template_id, inst.aux, inst.precondition,
                                                                       inst.extra_premises };
                             target.children = inst.children;
                         } );
}

PlAc attest( const PlAc& ac, const std::string& node_id, const std::string& text, const std::string& signer )
{
    const auto scope = effective_pc( ac.root, node_id );
    if ( !scope )
        throw dangling_reference{ "no node '" + node_id + "' in the assurance case" };
    return replace_node( ac, node_id,
                         [ & ]( VGsnNode& target )
                         {
                             require_undeveloped( target );
                             target.k = VGsnNode::kind::evidence;
                             target.evidence = VariationalEvidence{ *scope, AttestedEvidence{ text, signer } };
                         } );
}

Value explode_value( const Value& vset, const FeatureUniverse& universe )
{
    return to_json( explode( varset_from_json( vset, universe ) ) );
}

Value aggregate_value( const Value& vset, const FeatureUniverse& universe )
{
    return to_json( aggregate( varset_from_json( vset, universe ) ) );
}

std::vector< VGsnNode > vdomdecomp_instantiate( const std::string& node_id, const Value& vset, const Value& vfamily,
                                                const std::string& predicate, const FeatureUniverse& universe )
{
    (void)varset_from_json( vset, universe ); // format check only
    const auto family = varfamily_from_json( vfamily, universe );
    // An empty family is judged per product by the completeness precondition:
    // elements whose pcs are dead within the model leave nothing to cover.
    std::vector< VGsnNode > nodes;
    std::size_t index = 0;
    for ( const auto& member : family )
    {
        Value elements = Value::array();
        for ( const auto& v : member.value )
            elements.push_back( v );
        auto text = "Every element of " + elements.dump() + " satisfies " + predicate;
        nodes.push_back( VGsnNode::undeveloped(
            node_id + "." + std::to_string( ++index ),
            VGoal{ member.pc, Goal::pred( forall_in_set, Value{ { "set", std::move( elements ) }, { "pred", predicate } },
                                          std::move( text ) ) } ) );
    }
    return nodes;
}

VInstantiation lifted_analytic_instantiate( const AnalyticTemplate& t, const std::string& family_analysis,
                                            const VInstantiationRequest& request, const Context& ctx,
                                            const AnalyticLabels& labels )
{
    const auto& family = ctx.reg().analyses.require_family( family_analysis );
    if ( family.product != t.analysis )
        throw instantiation_refused{ family_analysis + " is not a lift of " + t.analysis };
    const auto& product = ctx.reg().analyses.require_product( t.analysis );

    const auto input = ctx.resolve_top( request.aux );
    if ( !input.is_object() || !input.contains( t.subject_key ) || !input.contains( t.specification_key ) )
        throw instantiation_refused{ "template " + t.id + " needs an input with '" + t.subject_key + "' and '" +
                                     t.specification_key + "'" };

    AnalyticEvidence run;
    try
    {
        run = run_family_analysis( family_analysis, input, ctx );
    }
    catch ( const dangling_reference& )
    {
        throw;
    }
    catch ( const std::exception& e )
    {
        throw instantiation_refused{ "analysis " + family_analysis + " failed: " + e.what() };
    }

    // Lift check of this run, kept as per-configuration records.
    ExhaustiveEvidence lift_table;
    std::vector< std::string > witnesses;
    const bool clean = family.mode == lift_mode::quasi && family.clean( run.output );
    for ( const auto& config : evidence_domain( request.model, request.scope ) )
    {
        const auto derived_input = ctx.resolve( ctx.derive( input, config ) );
        Value product_out;
        try
        {
            product_out = product.run( derived_input, ctx );
        }
        catch ( const std::exception& e )
        {
            throw instantiation_refused{ "analysis " + t.analysis + " failed at " + config.to_string() + ": " + e.what() };
        }
        bool ok = false;
        Value compared;
        if ( family.mode == lift_mode::exact )
        {
            const auto family_side = family.derive_output( run.output, config, ctx );
            ok = family_side == product_out;
            compared = Value{ { "product", product_out }, { "family", family_side } };
        }
        else
        {
            ok = !clean || passed( product_out );
            compared = Value{ { "product", product_out }, { "family_clean", clean } };
        }
        if ( !ok )
            witnesses.push_back( config.to_string() + ": " + compared.dump() );
        lift_table.table.emplace( config.mask(), MachineRecord{ "lift_check", digest( derived_input ), digest( compared ),
                                                                ok ? verdict::pass : verdict::fail, Value{} } );
    }
    if ( !witnesses.empty() )
        throw instantiation_refused{ family_analysis + " is not a correct " + to_string( family.mode ) + " lift of " +
                                         t.analysis + " on this input",
                                     std::move( witnesses ) };

    const auto top = FeatExpr::all( request.model.universe() );
    const auto id = [ & ]( std::size_t i ) { return request.node_id + "." + std::to_string( i ); };

    VInstantiation out;
    out.aux = request.aux;
    out.children.push_back( VGsnNode::undeveloped( id( 1 ), { top, analytic_represents_goal( t, input, labels ) } ) );
    out.children.push_back( VGsnNode::undeveloped( id( 2 ), { top, analytic_formalizes_goal( t, input, labels ) } ) );
    out.children.push_back( VGsnNode::make_evidence( id( 3 ), { top, analytic_verdict_goal( t, input, run.output, labels ) },
                                                     VariationalEvidence{ request.scope, run } ) );
    out.children.push_back( VGsnNode::undeveloped( id( 4 ), { top, analytic_sound_goal( t, labels ) } ) );
    if ( t.consequent )
        if ( auto goal = t.consequent( input, run.output ) )
            out.children.push_back( VGsnNode::undeveloped( id( out.children.size() + 1 ), { top, std::move( *goal ) } ) );

    Value lift_data{ { "family", family_analysis }, { "product", t.analysis }, { "mode", to_string( family.mode ) },
                     { "input", input } };
    auto lift_text = family_analysis + " is a correct " + std::string{ to_string( family.mode ) } + " lift of " +
                     t.analysis + " on this input";
    out.children.push_back( VGsnNode::make_evidence( id( out.children.size() + 1 ),
                                                     { top, Goal::pred( "lift_correct", std::move( lift_data ),
                                                                        std::move( lift_text ) ) },
                                                     VariationalEvidence{ request.scope, std::move( lift_table ) } ) );
    out.extra_premises = 1;
    return out;
}

// --- Checks -----------------------------------------------------------------

namespace
{

node_status worst( node_status a, node_status b )
{
    return rank( b ) < rank( a ) ? b : a;
}

// Children as recorded against the template's fresh instantiation, at the
// variational level: same goals, equivalent pcs within the scope, identical
// evidence where the template supplies it.
bool same_lifted_children( const std::vector< VGsnNode >& children, const VInstantiation& inst,
                           std::size_t recorded_extra, const FeatExpr& within )
{
    if ( recorded_extra != inst.extra_premises || children.size() != inst.children.size() )
        return false;
    for ( std::size_t i = 0; i < children.size(); ++i )
    {
        const auto& have = children[ i ];
        const auto& want = inst.children[ i ];
        if ( !( have.goal.body == want.goal.body ) ||
             semantics( within & have.goal.pc ) != semantics( within & want.goal.pc ) )
            return false;
        if ( want.is_evidence() && ( !have.is_evidence() || !( *have.evidence == *want.evidence ) ) )
            return false;
    }
    return true;
}

bool shortcut_certifies( const VGsnNode& strategy, const VTemplateInstance& instance, const FeatExpr& scope,
                         const FeatExpr& model, const Context& ctx, std::string& detail )
{
    const auto& vt = require_vtemplate( ctx, instance.template_id );
    const auto& product = require_template( ctx, vt.product_template );
    if ( product.parent_predicate && strategy.goal.body.key() != *product.parent_predicate )
        return false;

    if ( !product.precondition_predicate.empty() )
    {
        if ( !instance.precondition )
            return false;
        const auto data =
            vt.precondition_data ? vt.precondition_data( strategy.goal, instance.aux, ctx ) : instance.aux;
        const auto check =
            verify_var_evidence( product.precondition_predicate, data, scope, model, *instance.precondition, ctx );
        if ( check.status != evidence_status::verified )
            return false;
    }

    const VInstantiationRequest request{ strategy.id, strategy.goal, scope, model, instance.aux };
    VInstantiation fresh;
    try
    {
        fresh = vt.instantiate( request, ctx );
    }
    catch ( const instantiation_refused& )
    {
        return false;
    }
    if ( !same_lifted_children( strategy.children, fresh, instance.extra_premises, model & scope ) )
        return false;
    if ( !check_instantiation_lift( vt, request, fresh, ctx ).report.ok() )
        return false;
    detail = "lifted instance of " + vt.id + " (variational precondition verified)";
    return true;
}

} // namespace

VRefinesResult vrefines_check( const VGsnNode& strategy, const FeatExpr& scope, const FeatExpr& model,
                               const Context& ctx, certification mode )
{
    if ( !strategy.is_strategy() )
        throw error{ "vrefines_check expects a strategy node" };

    const auto& u = model.universe();
    VRefinesResult out{ node_status::certified, ConfigSet::empty( u ), ConfigSet::empty( u ), ConfigSet::empty( u ),
                        false, {} };
    const auto domain = semantics( model & scope );
    if ( domain.is_empty() )
        return out;

    if ( !strategy.justification )
    {
        out.broken = domain;
        out.status = node_status::broken;
        out.detail = "strategy has no justification";
        return out;
    }
    if ( const auto* axiom = std::get_if< Axiomatic >( &*strategy.justification ) )
    {
        out.assumed = domain;
        out.status = node_status::assumed;
        out.detail = axiom->rationale;
        return out;
    }

    const auto& instance = std::get< VTemplateInstance >( *strategy.justification );
    if ( mode == certification::shortcut_or_descent &&
         shortcut_certifies( strategy, instance, scope, model, ctx, out.detail ) )
    {
        out.certified = domain;
        out.shortcut = true;
        return out;
    }

    for ( const auto& config : domain.configurations() )
    {
        node_status status = node_status::broken;
        std::string detail;
        try
        {
            auto derived = derive_limited( strategy, config, ctx, 1 );
            auto result = refines_check( derived, ctx );
            status = result.status;
            detail = std::move( result.detail );
        }
        catch ( const std::exception& e )
        {
            detail = e.what();
        }
        switch ( status )
        {
        case node_status::certified: out.certified.insert( config ); break;
        case node_status::assumed: out.assumed.insert( config ); break;
        default:
            out.broken.insert( config );
            if ( out.detail.empty() )
                out.detail = config.to_string() + ": " + detail;
            break;
        }
        out.status = worst( out.status, status == node_status::certified || status == node_status::assumed
                                             ? status
                                             : node_status::broken );
    }
    return out;
}

const VNodeReport* VDeductiveReport::find( const std::string& id ) const
{
    const auto it = std::find_if( nodes.begin(), nodes.end(), [ & ]( const VNodeReport& n ) { return n.id == id; } );
    return it == nodes.end() ? nullptr : &*it;
}

std::vector< std::string > VDeductiveReport::assumptions_at( const Configuration& config ) const
{
    std::vector< std::string > out;
    for ( const auto& n : nodes )
        if ( n.assumed.contains( config ) )
            out.push_back( n.id );
    return out;
}

namespace
{

struct vchecker
{
    const FeatExpr& model;
    const Context& ctx;
    certification mode;
    VDeductiveReport& report;

    void visit( const VGsnNode& node, const ConfigSet& parent_present, const FeatExpr& parent_pc )
    {
        const auto& u = model.universe();
        const auto effective = parent_pc & node.goal.pc;
        VNodeReport entry{ node.id,
                           node.is_evidence() ? node_status::evidence_backed : node_status::certified,
                           parent_present & semantics( node.goal.pc ),
                           ConfigSet::empty( u ),
                           ConfigSet::empty( u ),
                           ConfigSet::empty( u ),
                           {} };

        if ( node.is_evidence() )
        {
            for ( const auto& config : entry.present.configurations() )
            {
                node_status status = node_status::broken;
                try
                {
                    status = evidence_node_status( node.goal.body, derive_evidence( *node.evidence, config, ctx ) );
                }
                catch ( const std::exception& e )
                {
                    entry.detail = e.what();
                }
                if ( status == node_status::broken )
                    entry.broken.insert( config );
                else if ( status == node_status::assumed )
                    entry.assumed.insert( config );
            }
        }
        else if ( node.children.empty() )
        {
            entry.undeveloped = entry.present;
            entry.detail = "no children";
        }
        else
        {
            auto developed = ConfigSet::empty( u );
            for ( const auto& child : node.children )
                developed |= semantics( child.goal.pc );
            developed &= entry.present;
            entry.undeveloped = entry.present - developed;
            if ( !developed.is_empty() )
            {
                auto refined = vrefines_check( node, effective, model, ctx, mode );
                entry.broken = refined.broken & developed;
                entry.assumed = refined.assumed & developed;
                entry.detail = refined.detail;
            }
        }

        if ( !entry.broken.is_empty() )
            entry.status = node_status::broken;
        else if ( !entry.undeveloped.is_empty() )
            entry.status = node_status::undeveloped;
        else if ( !entry.assumed.is_empty() )
            entry.status = node_status::assumed;

        if ( !entry.assumed.is_empty() )
            report.assumptions.push_back( node.id );
        report.failing |= entry.failing();

        const auto present = entry.present;
        report.nodes.push_back( std::move( entry ) );
        for ( const auto& child : node.children )
            visit( child, present, effective );
    }
};

} // namespace

VDeductiveReport vdeductive_check( const PlAc& ac, const Context& ctx, certification mode )
{
    const auto& u = ac.universe();
    VDeductiveReport report;
    report.domain = semantics( ac.model & ac.root.goal.pc );
    report.failing = ConfigSet::empty( u );

    vchecker checker{ ac.model, ctx, mode, report };
    checker.visit( ac.root, semantics( ac.model ), FeatExpr::all( u ) );

    if ( !report.failing.is_empty() )
        report.verdict = deductive_verdict::not_deductive;
    else if ( !report.assumptions.empty() )
        report.verdict = deductive_verdict::deductive_modulo_assumptions;
    return report;
}

} // namespace placidus
