#pragma once

#include "error.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace placidus
{

// Hard cap on the number of features in a universe. Configuration sets are
// materialized as one bit per subset, so 24 features means 2 MiB per set.
inline constexpr std::size_t max_universe_size = 24;

// Current enumeration bound: PLACIDUS_MAX_FEATURES if set (clamped to the
// hard cap), otherwise the hard cap itself.
[[nodiscard]] std::size_t enumeration_bound();

// An ordered list of distinct feature names. Position i is bit i of a
// configuration mask. Copies share storage.
class FeatureUniverse
{
    std::shared_ptr< const std::vector< std::string > > _features;

public:
    FeatureUniverse();
    explicit FeatureUniverse( std::vector< std::string > features );

    [[nodiscard]] std::size_t size() const { return _features->size(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return *_features; }
    [[nodiscard]] const std::string& name( std::size_t index ) const { return _features->at( index ); }
    [[nodiscard]] std::optional< std::size_t > index_of( std::string_view name ) const;

    // Number of configurations, 2^size().
    [[nodiscard]] std::uint64_t configuration_count() const { return std::uint64_t{ 1 } << size(); }

    bool operator==( const FeatureUniverse& other ) const;
};

class Configuration
{
    FeatureUniverse _universe;
    std::uint32_t _mask = 0;

public:
    Configuration() = default;
    Configuration( FeatureUniverse universe, std::uint32_t mask );

    static Configuration from_names( const FeatureUniverse& universe, const std::vector< std::string >& names );
    // Comma-separated feature names; "" and "{}" denote the empty configuration.
    static Configuration parse( const FeatureUniverse& universe, std::string_view text );

    [[nodiscard]] const FeatureUniverse& universe() const { return _universe; }
    [[nodiscard]] std::uint32_t mask() const { return _mask; }
    [[nodiscard]] bool contains( std::size_t feature ) const { return ( _mask >> feature ) & 1U; }
    [[nodiscard]] bool contains( std::string_view feature ) const;
    [[nodiscard]] std::vector< std::string > members() const;

    // "A,B" in universe order, "{}" when empty.
    [[nodiscard]] std::string to_string() const;

    bool operator==( const Configuration& other ) const { return _mask == other._mask && _universe == other._universe; }
    std::strong_ordering operator<=>( const Configuration& other ) const { return _mask <=> other._mask; }
};

// An exact set of configurations: one bit per subset of the universe.
class ConfigSet
{
    FeatureUniverse _universe;
    std::vector< std::uint64_t > _words;

    void trim();
    void require_same( const ConfigSet& other ) const;

public:
    ConfigSet() = default;
    explicit ConfigSet( FeatureUniverse universe );

    static ConfigSet empty( const FeatureUniverse& universe ) { return ConfigSet{ universe }; }
    static ConfigSet universal( const FeatureUniverse& universe );
    static ConfigSet of( const FeatureUniverse& universe, const std::vector< Configuration >& configs );

    [[nodiscard]] const FeatureUniverse& universe() const { return _universe; }

    [[nodiscard]] bool contains( std::uint32_t mask ) const { return ( _words[ mask >> 6U ] >> ( mask & 63U ) ) & 1U; }
    [[nodiscard]] bool contains( const Configuration& config ) const;
    void insert( std::uint32_t mask ) { _words[ mask >> 6U ] |= std::uint64_t{ 1 } << ( mask & 63U ); }
    void insert( const Configuration& config );
    void erase( std::uint32_t mask ) { _words[ mask >> 6U ] &= ~( std::uint64_t{ 1 } << ( mask & 63U ) ); }

    [[nodiscard]] bool is_empty() const;
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool subset_of( const ConfigSet& other ) const;
    // Members in ascending mask order.
    [[nodiscard]] std::vector< Configuration > configurations() const;
    // "{A} {B}" style listing; "(none)" when empty.
    [[nodiscard]] std::string to_string() const;

    ConfigSet operator~() const;
    ConfigSet operator&( const ConfigSet& other ) const;
    ConfigSet operator|( const ConfigSet& other ) const;
    ConfigSet operator-( const ConfigSet& other ) const;
    ConfigSet& operator&=( const ConfigSet& other );
    ConfigSet& operator|=( const ConfigSet& other );

    bool operator==( const ConfigSet& other ) const { return _universe == other._universe && _words == other._words; }
};

// Propositional expression over a feature universe. Feature models and
// presence conditions are both feature expressions.
class FeatExpr
{
public:
    enum class kind : std::uint8_t { all, none, atom, negation, conjunction, disjunction };

private:
    struct node;
    std::shared_ptr< const node > _node;
    FeatureUniverse _universe;

    FeatExpr( std::shared_ptr< const node > n, FeatureUniverse universe )
        : _node{ std::move( n ) }, _universe{ std::move( universe ) } {}

public:
    FeatExpr();

    static FeatExpr all( const FeatureUniverse& universe );
    static FeatExpr none( const FeatureUniverse& universe );
    static FeatExpr atom( const FeatureUniverse& universe, std::size_t feature );
    static FeatExpr atom( const FeatureUniverse& universe, std::string_view feature );

    friend FeatExpr operator!( const FeatExpr& operand );
    friend FeatExpr operator&( const FeatExpr& lhs, const FeatExpr& rhs );
    friend FeatExpr operator|( const FeatExpr& lhs, const FeatExpr& rhs );

    [[nodiscard]] const FeatureUniverse& universe() const { return _universe; }
    [[nodiscard]] kind get_kind() const;
    // Atom only.
    [[nodiscard]] std::size_t feature() const;
    // Negation: operand(); binary: lhs()/rhs().
    [[nodiscard]] FeatExpr operand() const;
    [[nodiscard]] FeatExpr lhs() const;
    [[nodiscard]] FeatExpr rhs() const;

    // Surface syntax, parenthesized only where precedence requires.
    [[nodiscard]] std::string to_string() const;

    // Structural equality. Use `equivalent` for semantic equality.
    bool operator==( const FeatExpr& other ) const;
};

// Grammar: true | false | IDENT | !e | e & e | e "|" e | e -> e | e xor e | (e)
// Precedence ! > & > | > xor > ->, binary operators left-associative.
// `->` and `xor` desugar into the core constructors.
[[nodiscard]] FeatExpr parse_featexpr( std::string_view text, const FeatureUniverse& universe );

[[nodiscard]] ConfigSet semantics( const FeatExpr& expr );
[[nodiscard]] ConfigSet semantics( const FeatExpr& expr, const FeatureUniverse& universe );

// Direct recursive evaluation; agrees with membership in semantics(expr).
[[nodiscard]] bool sat( const Configuration& config, const FeatExpr& expr );

[[nodiscard]] bool equivalent( const FeatExpr& lhs, const FeatExpr& rhs );

// All configurations satisfying the model, ascending by mask (feature 0 is
// the least significant bit).
[[nodiscard]] std::vector< Configuration > valid_configs( const FeatExpr& model );
[[nodiscard]] std::vector< Configuration > valid_configs( const FeatExpr& model, const FeatureUniverse& universe );

} // namespace placidus
