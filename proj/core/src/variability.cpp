#include "placidus/variability.hpp"

#include "placidus/analysis.hpp"
#include "placidus/error.hpp"
#include "placidus/registry.hpp"

namespace placidus
{

const char* to_string( lift_status status )
{
    switch ( status )
    {
    case lift_status::exact: return "exact";
    case lift_status::quasi_sound: return "quasi-sound";
    case lift_status::failed: return "failed";
    }
    return "?";
}

const char* to_string( evidence_status status )
{
    switch ( status )
    {
    case evidence_status::verified: return "verified";
    case evidence_status::assumed: return "assumed";
    case evidence_status::rejected: return "rejected";
    }
    return "?";
}

const char* to_string( verdict v )
{
    return v == verdict::pass ? "pass" : "fail";
}

namespace
{

FeatExpr pc_member( const Value& item, const FeatureUniverse& universe )
{
    if ( !item.is_object() || !item.contains( "pc" ) )
        return FeatExpr::all( universe );
    return parse_featexpr( item.at( "pc" ).get< std::string >(), universe );
}

} // namespace

VarSet< Value > varset_from_json( const Value& json, const FeatureUniverse& universe )
{
    VarSet< Value > out{ universe };
    if ( json.is_array() )
    {
        for ( const auto& value : json )
            out.add( value, FeatExpr::all( universe ) );
        return out;
    }
    if ( !json.is_object() || !json.contains( "vset" ) )
        throw error{ "expected a variational set" };
    for ( const auto& item : json.at( "vset" ) )
        out.add( item.at( "value" ), pc_member( item, universe ) );
    return out;
}

Value to_json( const VarSet< Value >& set )
{
    Value items = Value::array();
    for ( const auto& element : set )
        items.push_back( { { "value", element.value }, { "pc", element.pc.to_string() } } );
    return Value{ { "vset", std::move( items ) } };
}

VarFamily< Value > varfamily_from_json( const Value& json, const FeatureUniverse& universe )
{
    VarFamily< Value > out{ universe };
    const auto members = [ & ]( const Value& set )
    {
        if ( !set.is_array() )
            throw error{ "family members must be arrays" };
        return std::set< Value >( set.begin(), set.end() );
    };
    if ( json.is_array() )
    {
        for ( const auto& set : json )
            out.add( members( set ), FeatExpr::all( universe ) );
        return out;
    }
    if ( !json.is_object() || !json.contains( "vfamily" ) )
        throw error{ "expected a variational family" };
    for ( const auto& item : json.at( "vfamily" ) )
        out.add( members( item.at( "set" ) ), pc_member( item, universe ) );
    return out;
}

Value to_json( const VarFamily< Value >& family )
{
    Value items = Value::array();
    for ( const auto& member : family )
    {
        Value set = Value::array();
        for ( const auto& v : member.value )
            set.push_back( v );
        items.push_back( { { "set", std::move( set ) }, { "pc", member.pc.to_string() } } );
    }
    return Value{ { "vfamily", std::move( items ) } };
}

std::vector< Configuration > evidence_domain( const FeatExpr& model, const FeatExpr& scope )
{
    if ( !( model.universe() == scope.universe() ) )
        throw universe_mismatch{};
    return valid_configs( model & scope );
}

namespace
{

Value derived_input( const Value& input, const Configuration& config, const Context& ctx )
{
    return ctx.resolve( ctx.derive( input, config ) );
}

Value counterexample_of( const Value& output )
{
    return output.is_object() && output.contains( "counterexample" ) ? output.at( "counterexample" ) : Value{};
}

// The claim an analytic run argues for must be the claim of the node.
bool analytic_matches_claim( const std::string& predicate, const Value& data, const FamilyAnalysis& family,
                             const AnalyticEvidence& evidence )
{
    if ( predicate == "analysis_verdict" )
        return data.is_object() && data.value( "analysis", "" ) == family.product && data.contains( "input" ) &&
               data.at( "input" ) == evidence.input;
    // Other claims: every member of the claim data appears unchanged in the input.
    if ( !data.is_object() || !evidence.input.is_object() )
        return data == evidence.input;
    for ( const auto& [ key, member ] : data.items() )
        if ( !evidence.input.contains( key ) || evidence.input.at( key ) != member )
            return false;
    return true;
}

EvidenceCheck verify_exhaustive( const Predicate& predicate, const Value& data,
                                 const std::vector< Configuration >& domain, const ExhaustiveEvidence& evidence,
                                 const Context& ctx )
{
    EvidenceCheck check;
    const auto& universe = domain.front().universe();
    const auto in_scope = ConfigSet::of( universe, domain );

    for ( const auto& config : domain )
        if ( evidence.table.count( config.mask() ) == 0 )
            check.uncovered.push_back( config );
    for ( const auto& [ mask, record ] : evidence.table )
        if ( mask >= universe.configuration_count() || !in_scope.contains( mask ) )
            check.unexpected.emplace_back( universe, mask >= universe.configuration_count() ? 0 : mask );

    if ( !check.uncovered.empty() || !check.unexpected.empty() )
    {
        check.status = evidence_status::rejected;
        check.message = "exhaustive table does not cover the scope exactly";
        return check;
    }

    bool attested = false;
    for ( const auto& config : domain )
    {
        const auto& record = evidence.table.at( config.mask() );
        if ( const auto* machine = std::get_if< MachineRecord >( &record ) )
        {
            bool ok = machine->result == verdict::pass;
            if ( ok && predicate.machine_checkable() )
                ok = predicate.check( derived_input( data, config, ctx ), ctx );
            if ( !ok )
                check.failing.push_back( config );
        }
        else
            attested = true;
    }

    if ( !check.failing.empty() )
    {
        check.status = evidence_status::rejected;
        check.message = "product-level check fails in " + std::to_string( check.failing.size() ) + " configuration(s)";
    }
    else if ( attested )
    {
        check.status = evidence_status::assumed;
        check.message = "table contains attested entries";
    }
    return check;
}

EvidenceCheck verify_analytic( const std::string& predicate, const Value& data,
                               const std::vector< Configuration >& domain, const AnalyticEvidence& evidence,
                               const Context& ctx )
{
    EvidenceCheck check;
    check.status = evidence_status::rejected;

    const auto& family = ctx.reg().analyses.require_family( evidence.analysis );
    const auto& product = ctx.reg().analyses.require_product( family.product );

    if ( !analytic_matches_claim( predicate, data, family, evidence ) )
    {
        check.message = "analysis run is about a different claim";
        return check;
    }

    const auto resolved = ctx.resolve( evidence.input );
    if ( digest( resolved ) != evidence.input_digest )
    {
        check.message = "input digest does not match the recorded run";
        return check;
    }
    const auto output = family.run( resolved, ctx );
    if ( output != evidence.output || digest( output ) != evidence.output_digest )
    {
        check.message = "re-running " + family.id + " does not reproduce the recorded output";
        return check;
    }

    if ( family.mode == lift_mode::exact )
    {
        for ( const auto& config : domain )
        {
            const auto expected = product.run( derived_input( evidence.input, config, ctx ), ctx );
            const auto derived = family.derive_output( output, config, ctx );
            if ( derived != expected || !passed( derived ) )
                check.failing.push_back( config );
        }
    }
    else
    {
        const bool clean = family.clean( output );
        for ( const auto& config : domain )
            if ( !clean || !passed( product.run( derived_input( evidence.input, config, ctx ), ctx ) ) )
                check.failing.push_back( config );
    }

    if ( !check.failing.empty() )
    {
        check.message = "lift obligation or derived verdict fails in " + std::to_string( check.failing.size() ) +
                        " configuration(s)";
        return check;
    }
    check.status = evidence_status::verified;
    return check;
}

} // namespace

EvidenceCheck verify_var_evidence( const std::string& predicate, const Value& data, const FeatExpr& scope,
                                   const FeatExpr& model, const VariationalEvidence& evidence, const Context& ctx )
{
    const auto* pred = ctx.reg().predicates.find( predicate );
    if ( pred == nullptr )
        throw dangling_reference{ "unknown predicate '" + predicate + "'" };

    EvidenceCheck check;
    const auto domain = evidence_domain( model, scope );
    if ( domain.empty() )
    {
        check.message = "empty scope";
        return check;
    }
    if ( semantics( model & evidence.scope ) != semantics( model & scope ) )
    {
        check.status = evidence_status::rejected;
        check.message = "evidence scope " + evidence.scope.to_string() + " does not match " + scope.to_string();
        return check;
    }

    if ( const auto* table = std::get_if< ExhaustiveEvidence >( &evidence.kind ) )
        return verify_exhaustive( *pred, data, domain, *table, ctx );
    if ( const auto* analytic = std::get_if< AnalyticEvidence >( &evidence.kind ) )
        return verify_analytic( predicate, data, domain, *analytic, ctx );

    check.status = evidence_status::assumed;
    check.message = "attested by " + std::get< AttestedEvidence >( evidence.kind ).signer;
    return check;
}

EvidenceRecord derive_evidence( const VariationalEvidence& evidence, const Configuration& config,
                                const Context& ctx )
{
    if ( const auto* table = std::get_if< ExhaustiveEvidence >( &evidence.kind ) )
    {
        const auto it = table->table.find( config.mask() );
        if ( it == table->table.end() )
            throw error{ "exhaustive evidence has no entry for configuration " + config.to_string() };
        return it->second;
    }
    if ( const auto* analytic = std::get_if< AnalyticEvidence >( &evidence.kind ) )
    {
        const auto& family = ctx.reg().analyses.require_family( analytic->analysis );
        const auto input = derived_input( analytic->input, config, ctx );
        if ( family.mode == lift_mode::exact )
        {
            const auto output = family.derive_output( analytic->output, config, ctx );
            return MachineRecord{ family.product, digest( input ), digest( output ),
                                  passed( output ) ? verdict::pass : verdict::fail, counterexample_of( output ) };
        }
        return MachineRecord{ family.id, digest( input ), analytic->output_digest,
                              family.clean( analytic->output ) ? verdict::pass : verdict::fail,
                              counterexample_of( analytic->output ) };
    }
    const auto& attested = std::get< AttestedEvidence >( evidence.kind );
    return AttestedRecord{ attested.text, attested.signer };
}

AnalyticEvidence run_family_analysis( const std::string& analysis, const Value& input, const Context& ctx )
{
    const auto& family = ctx.reg().analyses.require_family( analysis );
    const auto resolved = ctx.resolve( input );
    auto output = family.run( resolved, ctx );
    auto output_digest = digest( output );
    return AnalyticEvidence{ analysis, input, std::move( output ), digest( resolved ), std::move( output_digest ) };
}

} // namespace placidus
