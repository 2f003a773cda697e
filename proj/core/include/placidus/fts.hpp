#pragma once

#include "analysis.hpp"
#include "evidence.hpp"
#include "featexpr.hpp"
#include "value.hpp"
#include "variability.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace placidus
{

// --- Systems ----------------------------------------------------------------

struct TsState
{
    std::string id;
    std::vector< std::string > labels; // sorted, unique

    bool operator==( const TsState& ) const = default;
};

struct TsTransition
{
    std::string src;
    std::string action;
    std::string dst;

    bool operator==( const TsTransition& ) const = default;
};

struct TransitionSystem
{
    std::vector< TsState > states;
    std::vector< TsTransition > transitions;
    std::vector< std::string > initial;

    // Dangling endpoints, unknown or missing initial states, duplicate ids.
    [[nodiscard]] std::vector< std::string > problems() const;

    bool operator==( const TransitionSystem& ) const = default;
};

struct FtsState
{
    std::string id;
    std::vector< std::string > labels;
    FeatExpr pc;
};

struct FtsTransition
{
    std::string src;
    std::string action;
    std::string dst;
    FeatExpr pc;
};

// Featured transition system. States carry presence conditions too; a
// transition may only be present where both endpoints are (within the model).
struct Fts
{
    FeatExpr model;
    std::vector< FtsState > states;
    std::vector< FtsTransition > transitions;
    std::vector< std::string > initial;

    [[nodiscard]] const FeatureUniverse& universe() const { return model.universe(); }
    [[nodiscard]] std::vector< std::string > problems() const;
    // Throws error listing every problem.
    void validate() const;
};

// Product at `config`: states and transitions whose pcs hold. Throws for a
// configuration outside the model.
[[nodiscard]] TransitionSystem derive_fts( const Fts& fts, const Configuration& config );

// --- Formulas ---------------------------------------------------------------

// Boolean combination of state labels.
class StatePredicate
{
public:
    enum class kind : std::uint8_t { truth, falsity, label, negation, conjunction, disjunction };

private:
    struct node;
    std::shared_ptr< const node > _node;
    explicit StatePredicate( std::shared_ptr< const node > n ) : _node{ std::move( n ) } {}

public:
    StatePredicate();
    static StatePredicate truth();
    static StatePredicate falsity();
    static StatePredicate label( std::string name );
    friend StatePredicate operator!( const StatePredicate& p );
    friend StatePredicate operator&( const StatePredicate& lhs, const StatePredicate& rhs );
    friend StatePredicate operator|( const StatePredicate& lhs, const StatePredicate& rhs );

    [[nodiscard]] kind get_kind() const;
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] StatePredicate operand() const;
    [[nodiscard]] StatePredicate lhs() const;
    [[nodiscard]] StatePredicate rhs() const;

    // Labels absent from the set evaluate false.
    [[nodiscard]] bool holds( const std::vector< std::string >& labels ) const;
    [[nodiscard]] std::set< std::string > labels() const;
    [[nodiscard]] std::string to_string() const;
};

// label | true | false | !p | p & p | p "|" p | (p); `&` binds tighter than `|`.
[[nodiscard]] StatePredicate parse_state_predicate( std::string_view text );

struct TemporalFormula
{
    // ag: AG p; au: A[p U q]; ef: EF p; ag_implies_au: AG (p -> A[q U r]).
    enum class kind : std::uint8_t { ag, au, ef, ag_implies_au };

    kind k = kind::ag;
    StatePredicate p;
    StatePredicate q;
    StatePredicate r;

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::set< std::string > labels() const;
};

[[nodiscard]] TemporalFormula parse_formula( std::string_view text );

// --- Model checking ---------------------------------------------------------

struct McResult
{
    verdict result = verdict::pass;
    // Counterexample: finite path from an initial state; when `loop` is set the
    // path ends in a cycle back to path[*loop]. Empty when no witness exists
    // (EF failures).
    std::vector< std::string > path;
    std::optional< std::size_t > loop;
    std::string violating;

    [[nodiscard]] bool passed() const { return result == verdict::pass; }
    bool operator==( const McResult& ) const = default;
};

// CTL evaluation by fixpoints; deadlocked states get an implicit self-loop.
[[nodiscard]] McResult mc_product( const TransitionSystem& ts, const TemporalFormula& formula );

// Labels of `formula` that no state of `ts` carries.
[[nodiscard]] std::vector< std::string > unknown_labels( const TransitionSystem& ts, const TemporalFormula& formula );

struct McClass
{
    ConfigSet configs;
    McResult result;
};

// Exact mode: one class per group of configurations with identical derived
// products, partitioning Conf(model). Quasi mode: a single class, either all
// of Conf(model) passing or the first failing class with its counterexample.
struct FamilyMcResult
{
    lift_mode mode = lift_mode::exact;
    std::vector< McClass > classes;

    [[nodiscard]] bool passed() const;
    // Result for `config` (exact mode).
    [[nodiscard]] const McResult* at( const Configuration& config ) const;
};

[[nodiscard]] FamilyMcResult mc_family( const Fts& fts, const TemporalFormula& formula, lift_mode mode );

// --- Queries ----------------------------------------------------------------

// `*` matches any (possibly empty) run of characters; everything else is literal.
[[nodiscard]] bool glob_match( std::string_view pattern, std::string_view text );

// Ids of states with at least one matching label, sorted.
[[nodiscard]] std::vector< std::string > query( const TransitionSystem& ts, std::string_view pattern );

// Lifted query: matching states annotated with their presence conditions.
[[nodiscard]] VarSet< std::string > vquery( const Fts& fts, std::string_view pattern );

// --- Serialization ----------------------------------------------------------

[[nodiscard]] Value to_json( const TransitionSystem& ts );
[[nodiscard]] TransitionSystem ts_from_json( const Value& json );
// `universe` is a feature-name array; `feature_model` defaults to true.
[[nodiscard]] Value to_json( const Fts& fts );
[[nodiscard]] Fts fts_from_json( const Value& json );
[[nodiscard]] bool is_fts_json( const Value& json );

[[nodiscard]] Value to_json( const McResult& result );
[[nodiscard]] McResult mc_result_from_json( const Value& json );
[[nodiscard]] Value to_json( const FamilyMcResult& result );

} // namespace placidus
