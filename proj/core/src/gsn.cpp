#include "placidus/gsn.hpp"

#include "placidus/analysis.hpp"
#include "placidus/error.hpp"
#include "placidus/registry.hpp"

#include <algorithm>

namespace placidus
{

// --- Goals and nodes --------------------------------------------------------

Goal Goal::atom( std::string claim, std::string text )
{
    return Goal{ AtomGoal{ std::move( claim ) }, std::move( text ) };
}

Goal Goal::pred( std::string predicate, Value data, std::string text )
{
    return Goal{ PredGoal{ std::move( predicate ), std::move( data ) }, std::move( text ) };
}

const std::string& Goal::key() const
{
    if ( const auto* p = as_pred() )
        return p->predicate;
    return std::get< AtomGoal >( body ).claim;
}

GsnNode GsnNode::nil()
{
    return GsnNode{};
}

GsnNode GsnNode::make_evidence( std::string id, Goal goal, EvidenceRecord record )
{
    GsnNode node;
    node.k = kind::evidence;
    node.id = std::move( id );
    node.goal = std::move( goal );
    node.evidence = std::move( record );
    return node;
}

GsnNode GsnNode::make_strategy( std::string id, Goal goal, std::optional< StrategyJustification > justification,
                                std::vector< GsnNode > children )
{
    GsnNode node;
    node.k = kind::strategy;
    node.id = std::move( id );
    node.goal = std::move( goal );
    node.justification = std::move( justification );
    node.children = std::move( children );
    return node;
}

GsnNode GsnNode::undeveloped( std::string id, Goal goal )
{
    return make_strategy( std::move( id ), std::move( goal ), std::nullopt, {} );
}

const GsnNode* find_node( const GsnNode& root, const std::string& id )
{
    if ( root.id == id && !root.is_nil() )
        return &root;
    for ( const auto& child : root.children )
        if ( const auto* found = find_node( child, id ) )
            return found;
    return nullptr;
}

GsnNode* find_node( GsnNode& root, const std::string& id )
{
    return const_cast< GsnNode* >( find_node( static_cast< const GsnNode& >( root ), id ) );
}

std::size_t count_nodes( const GsnNode& root )
{
    if ( root.is_nil() )
        return 0;
    std::size_t n = 1;
    for ( const auto& child : root.children )
        n += count_nodes( child );
    return n;
}

// --- Templates --------------------------------------------------------------

bool Template::check_precondition( const Goal& parent, const Value& aux, const Context& ctx ) const
{
    return !precondition || precondition( parent, aux, ctx );
}

void TemplateRegistry::add( Template t )
{
    auto id = t.id;
    _templates.insert_or_assign( std::move( id ), std::move( t ) );
}

const Template* TemplateRegistry::find( std::string_view id ) const
{
    const auto it = _templates.find( id );
    return it == _templates.end() ? nullptr : &it->second;
}

std::vector< std::string > TemplateRegistry::ids() const
{
    std::vector< std::string > out;
    for ( const auto& [ id, t ] : _templates )
        out.push_back( id );
    return out;
}

namespace
{

std::string child_id( const std::string& parent, std::size_t index )
{
    return parent + "." + std::to_string( index + 1 );
}

// Short human name for a value: artifact name for references, the text for strings.
std::string name_of( const Value& value )
{
    if ( is_ref( value ) )
        return value.at( "ref" ).get< std::string >();
    if ( value.is_string() )
        return value.get< std::string >();
    return value.dump();
}

std::string or_default( const std::string& text, std::string fallback )
{
    return text.empty() ? std::move( fallback ) : text;
}

} // namespace

Goal analytic_represents_goal( const AnalyticTemplate& t, const Value& input, const AnalyticLabels& labels )
{
    const auto& subject = input.at( t.subject_key );
    return Goal::pred( "represents", Value{ { t.subject_key, subject } },
                       or_default( labels.represents, name_of( subject ) + " is a faithful representation of the system" ) );
}

Goal analytic_formalizes_goal( const AnalyticTemplate& t, const Value& input, const AnalyticLabels& labels )
{
    const auto& spec = input.at( t.specification_key );
    return Goal::pred( "formalizes", Value{ { t.specification_key, spec } },
                       or_default( labels.formalizes, name_of( spec ) + " formalizes the claimed property" ) );
}

Goal analytic_verdict_goal( const AnalyticTemplate& t, const Value& input, const Value& output,
                            const AnalyticLabels& labels )
{
    Value data{ { "analysis", t.analysis }, { "input", input } };
    std::string text = t.analysis + " reports no violation of " + name_of( input.at( t.specification_key ) );
    if ( t.weave_result )
    {
        data[ "result" ] = output.at( "result" );
        text = t.analysis + " on " + name_of( input.at( t.specification_key ) ) + " returned exactly R = " +
               output.at( "result" ).dump();
    }
    return Goal::pred( "analysis_verdict", std::move( data ), or_default( labels.verdict, std::move( text ) ) );
}

Goal analytic_sound_goal( const AnalyticTemplate& t, const AnalyticLabels& labels )
{
    return Goal::pred( "analysis_sound", Value{ { "analysis", t.analysis } },
                       or_default( labels.sound, "The " + t.analysis + " analysis is sound" ) );
}

std::vector< GsnNode > analytic_instantiate( const AnalyticTemplate& t, const InstantiationRequest& request,
                                             const Context& ctx, const AnalyticLabels& labels )
{
    const auto input = ctx.resolve_top( request.aux );
    if ( !input.is_object() || !input.contains( t.subject_key ) || !input.contains( t.specification_key ) )
        throw instantiation_refused{ "template " + t.id + " needs an input with '" + t.subject_key + "' and '" +
                                     t.specification_key + "'" };

    const auto& analysis = ctx.reg().analyses.require_product( t.analysis );
    const auto resolved = ctx.resolve( input );
    Value output;
    try
    {
        output = analysis.run( resolved, ctx );
    }
    catch ( const dangling_reference& )
    {
        throw;
    }
    catch ( const std::exception& e )
    {
        throw instantiation_refused{ "analysis " + t.analysis + " failed: " + e.what() };
    }

    std::vector< GsnNode > nodes;
    nodes.push_back( GsnNode::undeveloped( child_id( request.node_id, 0 ), analytic_represents_goal( t, input, labels ) ) );
    nodes.push_back( GsnNode::undeveloped( child_id( request.node_id, 1 ), analytic_formalizes_goal( t, input, labels ) ) );

    const auto cex = output.contains( "counterexample" ) ? output.at( "counterexample" ) : Value{};
    MachineRecord record{ t.analysis, digest( resolved ), digest( output ), passed( output ) ? verdict::pass : verdict::fail,
                          cex };
    nodes.push_back( GsnNode::make_evidence( child_id( request.node_id, 2 ),
                                             analytic_verdict_goal( t, input, output, labels ), std::move( record ) ) );
    nodes.push_back( GsnNode::undeveloped( child_id( request.node_id, 3 ), analytic_sound_goal( t, labels ) ) );

    if ( t.consequent )
        if ( auto goal = t.consequent( input, output ) )
            nodes.push_back( GsnNode::undeveloped( child_id( request.node_id, 4 ), std::move( *goal ) ) );
    return nodes;
}

std::vector< GsnNode > domdecomp_instantiate( const std::string& node_id, const Value& set, const Value& family,
                                              const std::string& predicate )
{
    if ( !set.is_array() || !family.is_array() )
        throw instantiation_refused{ "domain decomposition needs a set and a family of sets" };
    if ( family.empty() && !set.empty() )
        throw instantiation_refused{ "empty family cannot decompose the non-empty set " + set.dump() };

    std::vector< GsnNode > nodes;
    for ( std::size_t i = 0; i < family.size(); ++i )
    {
        auto member = canonical_set( family[ i ] );
        auto text = "Every element of " + member.dump() + " satisfies " + predicate;
        nodes.push_back( GsnNode::undeveloped(
            child_id( node_id, i ),
            Goal::pred( forall_in_set, Value{ { "set", std::move( member ) }, { "pred", predicate } }, std::move( text ) ) ) );
    }
    return nodes;
}

bool domdecomp_check_complete( const Value& set, const Value& family )
{
    if ( !set.is_array() || !family.is_array() )
        return false;
    return std::all_of( set.begin(), set.end(),
                        [ & ]( const Value& element )
                        {
                            return std::any_of( family.begin(), family.end(),
                                                [ & ]( const Value& member )
                                                {
                                                    return member.is_array() &&
                                                           std::find( member.begin(), member.end(), element ) !=
                                                               member.end();
                                                } );
                        } );
}

namespace
{

GsnNode& require_undeveloped( GsnNode& root, const std::string& node_id )
{
    auto* node = find_node( root, node_id );
    if ( node == nullptr || node->is_nil() )
        throw dangling_reference{ "no node '" + node_id + "' in the assurance case" };
    if ( !node->is_strategy() || node->justification || !node->children.empty() )
        throw instantiation_refused{ "node " + node_id + " is already developed" };
    return *node;
}

} // namespace

GsnNode instantiate( const GsnNode& root, const std::string& node_id, const std::string& template_id,
                     const Value& aux, const Context& ctx )
{
    GsnNode out = root;
    auto& node = require_undeveloped( out, node_id );
    const auto* t = ctx.reg().templates.find( template_id );
    if ( t == nullptr )
        throw dangling_reference{ "unknown template '" + template_id + "'" };
    if ( t->parent_predicate && node.goal->key() != *t->parent_predicate )
        throw instantiation_refused{ "template " + template_id + " decomposes " + *t->parent_predicate +
                                     " goals, node " + node_id + " claims " + node.goal->key() };

    std::optional< EvidenceRecord > precondition;
    if ( !t->check_precondition( *node.goal, aux, ctx ) )
        throw instantiation_refused{ "precondition " + t->precondition_predicate + " of " + template_id + " fails" };
    if ( !t->precondition_predicate.empty() )
        precondition = MachineRecord{ t->precondition_predicate, digest( ctx.resolve( aux ) ), {}, verdict::pass, {} };

    node.children = t->instantiate( { node_id, *node.goal, aux }, ctx );
    node.justification = TemplateInstance{ template_id, aux, std::move( precondition ), 0 };
    return out;
}

GsnNode attest( const GsnNode& root, const std::string& node_id, const std::string& text, const std::string& source )
{
    GsnNode out = root;
    auto& node = require_undeveloped( out, node_id );
    node.k = GsnNode::kind::evidence;
    node.evidence = AttestedRecord{ text, source };
    return out;
}

// --- Checks -----------------------------------------------------------------

const char* to_string( node_status status )
{
    switch ( status )
    {
    case node_status::certified: return "certified";
    case node_status::evidence_backed: return "evidence-backed";
    case node_status::assumed: return "assumed";
    case node_status::broken: return "broken";
    case node_status::undeveloped: return "undeveloped";
    }
    return "?";
}

int rank( node_status status )
{
    switch ( status )
    {
    case node_status::broken: return 0;
    case node_status::undeveloped: return 1;
    case node_status::assumed: return 2;
    case node_status::certified:
    case node_status::evidence_backed: return 3;
    }
    return 0;
}

const char* to_string( deductive_verdict v )
{
    switch ( v )
    {
    case deductive_verdict::deductive: return "deductive";
    case deductive_verdict::deductive_modulo_assumptions: return "deductive modulo assumptions";
    case deductive_verdict::not_deductive: return "not deductive";
    }
    return "?";
}

namespace
{

std::optional< verdict > machine_verdict( const std::optional< EvidenceRecord >& record )
{
    if ( !record )
        return std::nullopt;
    if ( const auto* machine = std::get_if< MachineRecord >( &*record ) )
        return machine->result;
    return std::nullopt;
}

} // namespace

std::string compare_instantiation( const std::vector< GsnNode >& children, const std::vector< GsnNode >& expected,
                              std::size_t extra )
{
    if ( children.size() != expected.size() + extra )
        return "expected " + std::to_string( expected.size() + extra ) + " children, found " +
               std::to_string( children.size() );
    for ( std::size_t i = 0; i < expected.size(); ++i )
    {
        const auto& child = children[ i ];
        const auto& want = expected[ i ];
        if ( child.is_nil() || !child.goal || !( *child.goal == *want.goal ) )
            return "child " + std::to_string( i + 1 ) + " does not match the template's subgoal";
        if ( want.is_evidence() )
        {
            if ( !child.is_evidence() )
                return "child " + std::to_string( i + 1 ) + " must carry the template's evidence";
            const auto want_verdict = machine_verdict( want.evidence );
            if ( want_verdict && machine_verdict( child.evidence ) != want_verdict )
                return "child " + std::to_string( i + 1 ) + " records a verdict the analysis does not reproduce";
        }
    }
    return {};
}

RefinesResult refines_check( const GsnNode& strategy, const Context& ctx )
{
    if ( !strategy.is_strategy() || !strategy.goal )
        throw error{ "refines_check expects a strategy node" };

    if ( !strategy.justification )
        return { node_status::broken, "strategy has no justification" };
    if ( const auto* axiom = std::get_if< Axiomatic >( &*strategy.justification ) )
        return { node_status::assumed, axiom->rationale };

    const auto& instance = std::get< TemplateInstance >( *strategy.justification );
    const auto* t = ctx.reg().templates.find( instance.template_id );
    if ( t == nullptr )
        throw dangling_reference{ "unknown template '" + instance.template_id + "'" };

    const auto& goal = *strategy.goal;
    if ( t->parent_predicate && goal.key() != *t->parent_predicate )
        return { node_status::broken, "template " + t->id + " decomposes " + *t->parent_predicate + " goals" };

    std::vector< GsnNode > expected;
    try
    {
        if ( !t->check_precondition( goal, instance.aux, ctx ) )
            return { node_status::broken, "precondition " + t->precondition_predicate + " does not hold" };
        expected = t->instantiate( { strategy.id, goal, instance.aux }, ctx );
    }
    catch ( const dangling_reference& )
    {
        throw;
    }
    catch ( const std::exception& e )
    {
        return { node_status::broken, e.what() };
    }

    auto mismatch = compare_instantiation( strategy.children, expected, instance.extra_premises );
    if ( !mismatch.empty() )
        return { node_status::broken, std::move( mismatch ) };
    return { node_status::certified, "instance of " + t->id };
}

node_status evidence_node_status( const Goal& goal, const EvidenceRecord& record )
{
    if ( const auto* machine = std::get_if< MachineRecord >( &record ) )
    {
        if ( machine->result == verdict::fail )
            return node_status::broken;
        // An atomic claim has no machine-checkable meaning: the record is taken on trust.
        return goal.is_atom() ? node_status::assumed : node_status::evidence_backed;
    }
    return node_status::assumed;
}

const NodeReport* DeductiveReport::find( const std::string& id ) const
{
    const auto it = std::find_if( nodes.begin(), nodes.end(), [ & ]( const NodeReport& n ) { return n.id == id; } );
    return it == nodes.end() ? nullptr : &*it;
}

namespace
{

void visit( const GsnNode& node, const Context& ctx, DeductiveReport& report )
{
    NodeReport entry{ node.id, node_status::undeveloped, {} };
    if ( node.is_nil() )
        entry.detail = "nil";
    else if ( node.is_evidence() )
        entry.status = evidence_node_status( *node.goal, *node.evidence );
    else if ( node.children.empty() )
        entry.detail = "no children";
    else
    {
        try
        {
            auto result = refines_check( node, ctx );
            entry.status = result.status;
            entry.detail = std::move( result.detail );
        }
        catch ( const std::exception& e )
        {
            entry.status = node_status::broken;
            entry.detail = e.what();
        }
    }

    if ( entry.status == node_status::assumed )
        report.assumptions.push_back( node.id );
    else if ( entry.status == node_status::broken || entry.status == node_status::undeveloped )
        report.failures.push_back( node.id );
    report.nodes.push_back( std::move( entry ) );

    for ( const auto& child : node.children )
        visit( child, ctx, report );
}

} // namespace

DeductiveReport deductive_check( const GsnNode& root, const Context& ctx )
{
    DeductiveReport report;
    visit( root, ctx, report );
    if ( !report.failures.empty() )
        report.verdict = deductive_verdict::not_deductive;
    else if ( !report.assumptions.empty() )
        report.verdict = deductive_verdict::deductive_modulo_assumptions;
    return report;
}

} // namespace placidus
