#pragma once

// Reference implementations used to check the library. They share no code
// with it: propositions, predicates and formulas are kept as test-side trees,
// rendered to text for the library and evaluated directly here.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle
{

// --- Propositions over features ---

struct Prop
{
    enum class op { truth, falsity, var, negation, conjunction, disjunction, implication, exclusive };
    op o = op::truth;
    std::size_t var = 0;
    std::vector< Prop > args;

    static Prop truth() { return { op::truth, 0, {} }; }
    static Prop falsity() { return { op::falsity, 0, {} }; }
    static Prop feature( std::size_t i ) { return { op::var, i, {} }; }
    static Prop negate( Prop p ) { return { op::negation, 0, { std::move( p ) } }; }
    static Prop binary( op o, Prop l, Prop r ) { return { o, 0, { std::move( l ), std::move( r ) } }; }

    [[nodiscard]] bool eval( std::uint32_t mask ) const;
    // Fully parenthesized surface syntax.
    [[nodiscard]] std::string text( const std::vector< std::string >& names ) const;
};

// Masks over `n` features satisfying `model`, ascending.
[[nodiscard]] std::vector< std::uint32_t > configs( const Prop& model, std::size_t n );

// --- Transition systems ---

struct Pred
{
    enum class op { truth, falsity, label, negation, conjunction, disjunction };
    op o = op::truth;
    std::string label;
    std::vector< Pred > args;

    [[nodiscard]] bool eval( const std::set< std::string >& labels ) const;
    [[nodiscard]] std::string text() const;
};

struct Formula
{
    enum class op { ag, au, ef, ag_implies_au };
    op o = op::ag;
    Pred p;
    Pred q;
    Pred r;

    [[nodiscard]] std::string text() const;
};

struct Ts
{
    std::vector< std::string > ids;
    std::vector< std::set< std::string > > labels;
    std::vector< std::vector< std::size_t > > succ; // may be empty: deadlock
    std::vector< std::size_t > initial;
};

// Verdict by exhaustive enumeration of simple paths, deadlocks looping on
// themselves.
[[nodiscard]] bool holds( const Ts& ts, const Formula& formula );

// Ids of states with a label matching `pattern` (`*` = any run), sorted.
[[nodiscard]] std::vector< std::string > query( const Ts& ts, const std::string& pattern );
[[nodiscard]] bool glob( const std::string& pattern, const std::string& text );

// --- Featured transition systems ---

struct FtsState
{
    std::string id;
    std::set< std::string > labels;
    Prop pc;
};

struct FtsTransition
{
    std::size_t src;
    std::string action;
    std::size_t dst;
    Prop pc;
};

struct Fts
{
    std::vector< std::string > features;
    Prop model;
    std::vector< FtsState > states;
    std::vector< FtsTransition > transitions;
    std::vector< std::size_t > initial;
};

[[nodiscard]] Ts derive( const Fts& fts, std::uint32_t mask );

// --- Annotated sets ---

struct Element
{
    std::string value;
    Prop pc;
};

struct Member
{
    std::set< std::string > values;
    Prop pc;
};

[[nodiscard]] std::set< std::string > derive( const std::vector< Element >& set, std::uint32_t mask );
[[nodiscard]] std::vector< std::set< std::string > > derive( const std::vector< Member >& family, std::uint32_t mask );

// One singleton per element, and groups of elements with equal truth tables.
[[nodiscard]] std::vector< Member > explode( const std::vector< Element >& set );
[[nodiscard]] std::vector< std::set< std::string > > aggregate_groups( const std::vector< Element >& set,
                                                                        std::size_t features );

} // namespace oracle
