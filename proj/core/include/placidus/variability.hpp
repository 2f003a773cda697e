#pragma once

#include "context.hpp"
#include "evidence.hpp"
#include "featexpr.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace placidus
{

// An element of an annotative product line.
template < class T >
struct Annotated
{
    T value;
    FeatExpr pc;
};

// Set of annotated elements. `add` keeps at most one copy of each
// (value, semantically-equal pc) pair.
template < class T >
class VarSet
{
    FeatureUniverse _universe;
    std::vector< Annotated< T > > _elements;

public:
    VarSet() = default;
    explicit VarSet( FeatureUniverse universe ) : _universe{ std::move( universe ) } {}

    void add( T value, FeatExpr pc )
    {
        if ( !( pc.universe() == _universe ) )
            throw universe_mismatch{};
        const auto duplicate = std::any_of( _elements.begin(), _elements.end(), [ & ]( const Annotated< T >& e )
                                            { return e.value == value && equivalent( e.pc, pc ); } );
        if ( !duplicate )
            _elements.push_back( { std::move( value ), std::move( pc ) } );
    }

    [[nodiscard]] const FeatureUniverse& universe() const { return _universe; }
    [[nodiscard]] const std::vector< Annotated< T > >& elements() const { return _elements; }
    [[nodiscard]] std::size_t size() const { return _elements.size(); }
    [[nodiscard]] bool empty() const { return _elements.empty(); }
    [[nodiscard]] auto begin() const { return _elements.begin(); }
    [[nodiscard]] auto end() const { return _elements.end(); }
};

// Ordered list with presence conditions; duplicates allowed.
template < class T >
using VarList = std::vector< Annotated< T > >;

// Product-level family of sets; order follows the variational family.
template < class T >
using Family = std::vector< std::set< T > >;

template < class T >
class VarFamily
{
    FeatureUniverse _universe;
    std::vector< Annotated< std::set< T > > > _members;

public:
    VarFamily() = default;
    explicit VarFamily( FeatureUniverse universe ) : _universe{ std::move( universe ) } {}

    void add( std::set< T > members, FeatExpr pc )
    {
        if ( !( pc.universe() == _universe ) )
            throw universe_mismatch{};
        _members.push_back( { std::move( members ), std::move( pc ) } );
    }

    [[nodiscard]] const FeatureUniverse& universe() const { return _universe; }
    [[nodiscard]] const std::vector< Annotated< std::set< T > > >& members() const { return _members; }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] auto begin() const { return _members.begin(); }
    [[nodiscard]] auto end() const { return _members.end(); }
};

template < class T >
[[nodiscard]] std::set< T > derive_set( const VarSet< T >& set, const Configuration& config )
{
    if ( !( set.universe() == config.universe() ) )
        throw universe_mismatch{};
    std::set< T > out;
    for ( const auto& element : set )
        if ( sat( config, element.pc ) )
            out.insert( element.value );
    return out;
}

template < class T >
[[nodiscard]] std::vector< T > derive_list( const VarList< T >& list, const Configuration& config )
{
    std::vector< T > out;
    for ( const auto& element : list )
        if ( sat( config, element.pc ) )
            out.push_back( element.value );
    return out;
}

template < class T >
[[nodiscard]] Family< T > derive_family( const VarFamily< T >& family, const Configuration& config )
{
    if ( !( family.universe() == config.universe() ) )
        throw universe_mismatch{};
    Family< T > out;
    for ( const auto& member : family )
        if ( sat( config, member.pc ) )
            out.push_back( member.value );
    return out;
}

// JSON forms: {"vset": [{"value": v, "pc": "<expr>"}]} and
// {"vfamily": [{"set": [...], "pc": "<expr>"}]}; a missing pc means true and a
// plain array is read as an all-true set (or family).
[[nodiscard]] VarSet< Value > varset_from_json( const Value& json, const FeatureUniverse& universe );
[[nodiscard]] Value to_json( const VarSet< Value >& set );
[[nodiscard]] VarFamily< Value > varfamily_from_json( const Value& json, const FeatureUniverse& universe );
[[nodiscard]] Value to_json( const VarFamily< Value >& family );

// --- Lift checking ----------------------------------------------------------

enum class lift_status : std::uint8_t { exact, quasi_sound, failed };

[[nodiscard]] const char* to_string( lift_status status );

struct LiftWitness
{
    Configuration config;
    std::string product_side;
    std::string family_side;
};

struct LiftReport
{
    lift_status status = lift_status::exact;
    std::vector< LiftWitness > witnesses;
    std::size_t configurations_checked = 0;

    [[nodiscard]] bool ok() const { return status != lift_status::failed; }
};

// Best-effort rendering of a value for witness reports.
template < class T >
[[nodiscard]] std::string describe( const T& value )
{
    if constexpr ( std::is_same_v< T, std::string > )
        return value;
    else if constexpr ( std::is_constructible_v< nlohmann::json, const T& > )
        return nlohmann::json( value ).dump();
    else
        return "<value>";
}

// Exact lift check over an explicit configuration domain:
// derive_out(family(x), c) == product(derive_in(x, c)) for every c.
template < class Input, class ProductFn, class FamilyFn, class DeriveIn, class DeriveOut >
[[nodiscard]] LiftReport check_lift_over( const std::vector< Configuration >& domain, ProductFn&& product,
                                          FamilyFn&& family, const Input& input, DeriveIn&& derive_in,
                                          DeriveOut&& derive_out )
{
    LiftReport report;
    const auto family_out = family( input );
    for ( const auto& config : domain )
    {
        const auto product_out = product( derive_in( input, config ) );
        const auto derived = derive_out( family_out, config );
        ++report.configurations_checked;
        if ( !( derived == product_out ) )
            report.witnesses.push_back( { config, describe( product_out ), describe( derived ) } );
    }
    report.status = report.witnesses.empty() ? lift_status::exact : lift_status::failed;
    return report;
}

// Exact lift check over the valid configurations of `model`.
template < class Input, class ProductFn, class FamilyFn, class DeriveIn, class DeriveOut >
[[nodiscard]] LiftReport check_lift( ProductFn&& product, FamilyFn&& family, const Input& input,
                                     const FeatExpr& model, DeriveIn&& derive_in, DeriveOut&& derive_out )
{
    return check_lift_over( valid_configs( model ), std::forward< ProductFn >( product ),
                            std::forward< FamilyFn >( family ), input, std::forward< DeriveIn >( derive_in ),
                            std::forward< DeriveOut >( derive_out ) );
}

// Soundness-only check: family_ok(family(x)) implies product_ok(product(x|c))
// for every c in the domain. A family-level alarm never fails the check.
template < class Input, class ProductFn, class FamilyFn, class DeriveIn, class FamilyOk, class ProductOk >
[[nodiscard]] LiftReport check_quasi_lift_over( const std::vector< Configuration >& domain, ProductFn&& product,
                                                FamilyFn&& family, const Input& input, DeriveIn&& derive_in,
                                                FamilyOk&& family_ok, ProductOk&& product_ok )
{
    LiftReport report;
    const auto family_out = family( input );
    const bool family_clean = family_ok( family_out );
    for ( const auto& config : domain )
    {
        ++report.configurations_checked;
        if ( !family_clean )
            continue;
        const auto product_out = product( derive_in( input, config ) );
        if ( !product_ok( product_out ) )
            report.witnesses.push_back( { config, describe( product_out ), describe( family_out ) } );
    }
    report.status = report.witnesses.empty() ? lift_status::quasi_sound : lift_status::failed;
    return report;
}

template < class Input, class ProductFn, class FamilyFn, class DeriveIn, class FamilyOk, class ProductOk >
[[nodiscard]] LiftReport check_quasi_lift( ProductFn&& product, FamilyFn&& family, const Input& input,
                                           const FeatExpr& model, DeriveIn&& derive_in, FamilyOk&& family_ok,
                                           ProductOk&& product_ok )
{
    return check_quasi_lift_over( valid_configs( model ), std::forward< ProductFn >( product ),
                                  std::forward< FamilyFn >( family ), input, std::forward< DeriveIn >( derive_in ),
                                  std::forward< FamilyOk >( family_ok ), std::forward< ProductOk >( product_ok ) );
}

// --- Variational evidence ---------------------------------------------------

enum class evidence_status : std::uint8_t { verified, assumed, rejected };

[[nodiscard]] const char* to_string( evidence_status status );

struct EvidenceCheck
{
    evidence_status status = evidence_status::verified;
    std::vector< Configuration > uncovered;  // in scope, missing from an exhaustive table
    std::vector< Configuration > unexpected; // in an exhaustive table, outside scope
    std::vector< Configuration > failing;    // product-level check failed
    std::string message;
};

// Configurations a piece of evidence must cover: Conf(model & scope).
[[nodiscard]] std::vector< Configuration > evidence_domain( const FeatExpr& model, const FeatExpr& scope );

// Checks that `evidence` proves predicate(data|c) for every c in Conf(model & scope).
// Exhaustive: exact coverage and every entry passes (re-running the predicate
// when it is machine-checkable). Analytic: re-running the analysis reproduces
// both digests, its lift obligation holds and every derived record passes.
// Attested: never better than assumed.
[[nodiscard]] EvidenceCheck verify_var_evidence( const std::string& predicate, const Value& data,
                                                 const FeatExpr& scope, const FeatExpr& model,
                                                 const VariationalEvidence& evidence, const Context& ctx );

// Product-level record of `evidence` at `config`: table lookup, derived
// analysis record, or the attestation itself. Throws when an exhaustive table
// lacks the configuration.
[[nodiscard]] EvidenceRecord derive_evidence( const VariationalEvidence& evidence, const Configuration& config,
                                              const Context& ctx );

// Runs a registered family analysis on (variational) `input` and packages the
// run as analytic evidence.
[[nodiscard]] AnalyticEvidence run_family_analysis( const std::string& analysis, const Value& input,
                                                    const Context& ctx );

} // namespace placidus
