#include "placidus/io.hpp"

#include "placidus/error.hpp"

namespace placidus
{

namespace
{

const Value& field( const Value& json, const char* key, const std::string& where )
{
    if ( !json.is_object() || !json.contains( key ) )
        throw error{ where + ": missing '" + key + "'" };
    return json.at( key );
}

std::string string_field( const Value& json, const char* key, const std::string& where )
{
    const auto& v = field( json, key, where );
    if ( !v.is_string() )
        throw error{ where + ": '" + key + "' must be a string" };
    return v.get< std::string >();
}

std::string optional_string( const Value& json, const char* key )
{
    return json.contains( key ) && json.at( key ).is_string() ? json.at( key ).get< std::string >() : std::string{};
}

std::string where_of( const Value& json, const std::string& fallback )
{
    return json.is_object() && json.contains( "id" ) && json.at( "id" ).is_string()
               ? "node " + json.at( "id" ).get< std::string >()
               : fallback;
}

} // namespace

// --- Feature models ---------------------------------------------------------

FeatExpr feature_model_from_json( const Value& json )
{
    const auto& features = field( json, "features", "feature model" );
    if ( !features.is_array() )
        throw error{ "feature model: 'features' must be an array of names" };
    FeatureUniverse universe{ features.get< std::vector< std::string > >() };
    if ( !json.contains( "model" ) )
        return FeatExpr::all( universe );
    return parse_featexpr( string_field( json, "model", "feature model" ), universe );
}

Value feature_model_to_json( const FeatExpr& model )
{
    return Value{ { "features", model.universe().names() }, { "model", model.to_string() } };
}

// --- Evidence ---------------------------------------------------------------

Value to_json( const EvidenceRecord& record )
{
    if ( const auto* machine = std::get_if< MachineRecord >( &record ) )
    {
        Value out{ { "kind", "machine" },
                   { "analysis", machine->analysis },
                   { "input_digest", machine->input_digest },
                   { "output_digest", machine->output_digest },
                   { "verdict", to_string( machine->result ) } };
        if ( !machine->counterexample.is_null() )
            out[ "counterexample" ] = machine->counterexample;
        return out;
    }
    const auto& attested = std::get< AttestedRecord >( record );
    return Value{ { "kind", "attested" }, { "text", attested.text }, { "source", attested.source } };
}

EvidenceRecord evidence_record_from_json( const Value& json )
{
    const auto kind = string_field( json, "kind", "evidence" );
    if ( kind == "machine" )
    {
        const auto v = string_field( json, "verdict", "machine evidence" );
        if ( v != "pass" && v != "fail" )
            throw error{ "machine evidence: verdict must be pass or fail" };
        return MachineRecord{ string_field( json, "analysis", "machine evidence" ),
                              optional_string( json, "input_digest" ), optional_string( json, "output_digest" ),
                              v == "pass" ? verdict::pass : verdict::fail, json.value( "counterexample", Value{} ) };
    }
    if ( kind == "attested" )
        return AttestedRecord{ string_field( json, "text", "attested evidence" ), optional_string( json, "source" ) };
    throw error{ "evidence: unknown kind '" + kind + "'" };
}

Value to_json( const VariationalEvidence& evidence )
{
    Value out{ { "scope", evidence.scope.to_string() } };
    if ( const auto* table = std::get_if< ExhaustiveEvidence >( &evidence.kind ) )
    {
        out[ "kind" ] = "exhaustive";
        Value entries = Value::array();
        for ( const auto& [ mask, record ] : table->table )
            entries.push_back( { { "config", Configuration{ evidence.scope.universe(), mask }.members() },
                                 { "record", to_json( record ) } } );
        out[ "table" ] = std::move( entries );
    }
    else if ( const auto* analytic = std::get_if< AnalyticEvidence >( &evidence.kind ) )
    {
        out[ "kind" ] = "analytic";
        out[ "analysis" ] = analytic->analysis;
        out[ "input" ] = analytic->input;
        out[ "output" ] = analytic->output;
        out[ "input_digest" ] = analytic->input_digest;
        out[ "output_digest" ] = analytic->output_digest;
    }
    else
    {
        const auto& attested = std::get< AttestedEvidence >( evidence.kind );
        out[ "kind" ] = "attested";
        out[ "text" ] = attested.text;
        out[ "signer" ] = attested.signer;
    }
    return out;
}

VariationalEvidence variational_evidence_from_json( const Value& json, const FeatureUniverse& universe )
{
    const auto scope = parse_featexpr( json.contains( "scope" ) ? string_field( json, "scope", "evidence" ) : "true",
                                       universe );
    const auto kind = string_field( json, "kind", "evidence" );
    if ( kind == "exhaustive" )
    {
        ExhaustiveEvidence table;
        for ( const auto& entry : field( json, "table", "exhaustive evidence" ) )
        {
            const auto config = Configuration::from_names(
                universe, field( entry, "config", "exhaustive entry" ).get< std::vector< std::string > >() );
            table.table.emplace( config.mask(), evidence_record_from_json( field( entry, "record", "exhaustive entry" ) ) );
        }
        return { scope, std::move( table ) };
    }
    if ( kind == "analytic" )
        return { scope, AnalyticEvidence{ string_field( json, "analysis", "analytic evidence" ),
                                          field( json, "input", "analytic evidence" ),
                                          field( json, "output", "analytic evidence" ),
                                          string_field( json, "input_digest", "analytic evidence" ),
                                          string_field( json, "output_digest", "analytic evidence" ) } };
    if ( kind == "attested" )
        return { scope, AttestedEvidence{ string_field( json, "text", "attested evidence" ),
                                          optional_string( json, "signer" ) } };
    throw error{ "evidence: unknown kind '" + kind + "'" };
}

// --- Goals ------------------------------------------------------------------

Value to_json( const Goal& goal )
{
    Value out;
    if ( const auto* p = goal.as_pred() )
    {
        out[ "pred" ] = p->predicate;
        out[ "data" ] = p->data;
    }
    else
        out[ "atom" ] = std::get< AtomGoal >( goal.body ).claim;
    if ( !goal.text.empty() )
        out[ "text" ] = goal.text;
    return out;
}

Goal goal_from_json( const Value& json )
{
    if ( json.is_object() && json.contains( "pred" ) )
        return Goal::pred( string_field( json, "pred", "goal" ), json.value( "data", Value{} ),
                           optional_string( json, "text" ) );
    if ( json.is_object() && json.contains( "atom" ) )
        return Goal::atom( string_field( json, "atom", "goal" ), optional_string( json, "text" ) );
    throw error{ "goal: expected 'pred' or 'atom'" };
}

// --- Trees ------------------------------------------------------------------

namespace
{

template < class Instance >
Value justification_json( const std::variant< Instance, Axiomatic >& justification, auto&& precondition_json )
{
    if ( const auto* axiom = std::get_if< Axiomatic >( &justification ) )
        return Value{ { "axiom", axiom->rationale } };
    const auto& instance = std::get< Instance >( justification );
    Value out{ { "template", instance.template_id }, { "aux", instance.aux } };
    if ( instance.precondition )
        out[ "precondition" ] = precondition_json( *instance.precondition );
    if ( instance.extra_premises != 0 )
        out[ "extra_premises" ] = instance.extra_premises;
    return out;
}

template < class Node >
void common_json( const Node& node, Value& out )
{
    out[ "id" ] = node.id;
    if ( !node.description.empty() )
        out[ "description" ] = node.description;
}

std::string node_kind( const Value& json, const std::string& where )
{
    if ( json.contains( "kind" ) )
        return string_field( json, "kind", where );
    if ( json.contains( "evidence" ) )
        return "evidence";
    return "strategy";
}

} // namespace

Value to_json( const GsnNode& node )
{
    Value out;
    if ( node.is_nil() )
        return Value{ { "kind", "nil" } };
    common_json( node, out );
    out[ "kind" ] = node.is_evidence() ? "evidence" : "strategy";
    out[ "goal" ] = to_json( *node.goal );
    if ( node.is_evidence() )
    {
        out[ "evidence" ] = to_json( *node.evidence );
        return out;
    }
    if ( node.justification )
        out[ "justification" ] = justification_json< TemplateInstance >(
            *node.justification, []( const EvidenceRecord& r ) { return to_json( r ); } );
    Value children = Value::array();
    for ( const auto& child : node.children )
        children.push_back( to_json( child ) );
    out[ "children" ] = std::move( children );
    return out;
}

GsnNode gsn_from_json( const Value& json )
{
    const auto where = where_of( json, "node" );
    const auto kind = node_kind( json, where );
    if ( kind == "nil" )
        return GsnNode::nil();

    const auto id = string_field( json, "id", where );
    const auto goal = goal_from_json( field( json, "goal", where ) );
    GsnNode node;
    if ( kind == "evidence" )
        node = GsnNode::make_evidence( id, goal, evidence_record_from_json( field( json, "evidence", where ) ) );
    else if ( kind == "strategy" )
    {
        std::optional< StrategyJustification > justification;
        if ( json.contains( "justification" ) && !json.at( "justification" ).is_null() )
        {
            const auto& j = json.at( "justification" );
            if ( j.contains( "axiom" ) )
                justification = Axiomatic{ string_field( j, "axiom", where ) };
            else
            {
                TemplateInstance instance{ string_field( j, "template", where ), j.value( "aux", Value{} ), std::nullopt,
                                           j.value( "extra_premises", std::size_t{ 0 } ) };
                if ( j.contains( "precondition" ) )
                    instance.precondition = evidence_record_from_json( j.at( "precondition" ) );
                justification = std::move( instance );
            }
        }
        std::vector< GsnNode > children;
        for ( const auto& child : json.value( "children", Value::array() ) )
            children.push_back( gsn_from_json( child ) );
        node = GsnNode::make_strategy( id, goal, std::move( justification ), std::move( children ) );
    }
    else
        throw error{ where + ": unknown kind '" + kind + "'" };
    node.description = optional_string( json, "description" );
    return node;
}

Value to_json( const VGsnNode& node )
{
    Value out;
    common_json( node, out );
    out[ "kind" ] = node.is_evidence() ? "evidence" : "strategy";
    out[ "pc" ] = node.goal.pc.to_string();
    out[ "goal" ] = to_json( node.goal.body );
    if ( node.is_evidence() )
    {
        out[ "evidence" ] = to_json( *node.evidence );
        return out;
    }
    if ( node.justification )
        out[ "justification" ] = justification_json< VTemplateInstance >(
            *node.justification, []( const VariationalEvidence& e ) { return to_json( e ); } );
    Value children = Value::array();
    for ( const auto& child : node.children )
        children.push_back( to_json( child ) );
    out[ "children" ] = std::move( children );
    return out;
}

VGsnNode vgsn_from_json( const Value& json, const FeatureUniverse& universe )
{
    const auto where = where_of( json, "node" );
    const auto kind = node_kind( json, where );
    const auto id = string_field( json, "id", where );
    VGoal goal{ parse_featexpr( json.contains( "pc" ) ? string_field( json, "pc", where ) : "true", universe ),
                goal_from_json( field( json, "goal", where ) ) };

    VGsnNode node;
    if ( kind == "evidence" )
        node = VGsnNode::make_evidence( id, std::move( goal ),
                                        variational_evidence_from_json( field( json, "evidence", where ), universe ) );
    else if ( kind == "strategy" )
    {
        std::optional< VStrategyJustification > justification;
        if ( json.contains( "justification" ) && !json.at( "justification" ).is_null() )
        {
            const auto& j = json.at( "justification" );
            if ( j.contains( "axiom" ) )
                justification = Axiomatic{ string_field( j, "axiom", where ) };
            else
            {
                VTemplateInstance instance{ string_field( j, "template", where ), j.value( "aux", Value{} ),
                                            std::nullopt, j.value( "extra_premises", std::size_t{ 0 } ) };
                if ( j.contains( "precondition" ) )
                    instance.precondition = variational_evidence_from_json( j.at( "precondition" ), universe );
                justification = std::move( instance );
            }
        }
        std::vector< VGsnNode > children;
        for ( const auto& child : json.value( "children", Value::array() ) )
            children.push_back( vgsn_from_json( child, universe ) );
        node = VGsnNode::make_strategy( id, std::move( goal ), std::move( justification ), std::move( children ) );
    }
    else
        throw error{ where + ": unknown kind '" + kind + "'" };
    node.description = optional_string( json, "description" );
    return node;
}

Value to_json( const PlAc& ac )
{
    return Value{ { "feature_model", feature_model_to_json( ac.model ) }, { "root", to_json( ac.root ) } };
}

PlAc plac_from_json( const Value& json )
{
    const auto model = feature_model_from_json( field( json, "feature_model", "PL AC" ) );
    return PlAc{ model, vgsn_from_json( field( json, "root", "PL AC" ), model.universe() ) };
}

bool is_plac_json( const Value& json )
{
    return json.is_object() && json.contains( "feature_model" ) && json.contains( "root" );
}

} // namespace placidus
