#pragma once

// Hand-rolled random generators for property tests, plus conversions between
// the oracle's structures and the library's.

#include "oracle.hpp"

#include <placidus/context.hpp>
#include <placidus/fts.hpp>
#include <placidus/value.hpp>
#include <placidus/vgsn.hpp>

#include <random>
#include <string>
#include <vector>

namespace gen
{

using Rng = std::mt19937_64;

// Uniform in [lo, hi].
[[nodiscard]] std::size_t pick( Rng& rng, std::size_t lo, std::size_t hi );
[[nodiscard]] bool chance( Rng& rng, double p );

// "F0", "F1", ...
[[nodiscard]] std::vector< std::string > feature_names( std::size_t n );

[[nodiscard]] oracle::Prop prop( Rng& rng, std::size_t features, int depth );
// A proposition with at least one satisfying configuration.
[[nodiscard]] oracle::Prop satisfiable_model( Rng& rng, std::size_t features );

// Labels used by generated systems.
[[nodiscard]] const std::vector< std::string >& labels();
[[nodiscard]] oracle::Pred pred( Rng& rng, int depth );
[[nodiscard]] oracle::Formula formula( Rng& rng );
[[nodiscard]] std::string pattern( Rng& rng );

[[nodiscard]] oracle::Ts ts( Rng& rng, std::size_t max_states );
// Initial state present everywhere; transition pcs imply their endpoints' pcs.
[[nodiscard]] oracle::Fts fts( Rng& rng, std::size_t features, std::size_t max_states );

// Distinct values "e0", "e1", ... with random pcs.
[[nodiscard]] std::vector< oracle::Element > elements( Rng& rng, std::size_t features, std::size_t max_size );
// Random members over the values of `set` (not necessarily complete).
[[nodiscard]] std::vector< oracle::Member > members( Rng& rng, const std::vector< oracle::Element >& set,
                                                     std::size_t features );

// A PL AC over at most `max_features` features and depth at most `max_depth`:
// domain decompositions (explode, aggregate, literal families), identity
// steps, attestations, exhaustive evidence with occasional failing records,
// axiomatic strategies and undeveloped goals, followed by random damage
// (dropped, reordered or re-annotated children, altered goals). Data is inline.
[[nodiscard]] placidus::PlAc plac( Rng& rng, std::size_t max_features, int max_depth, const placidus::Context& ctx );

// --- Conversions ---

[[nodiscard]] placidus::TransitionSystem to_library( const oracle::Ts& ts );
[[nodiscard]] oracle::Ts from_library( const placidus::TransitionSystem& ts );
[[nodiscard]] placidus::Value to_json( const oracle::Fts& fts );
[[nodiscard]] placidus::Value vset_json( const std::vector< oracle::Element >& set, const std::vector< std::string >& names );
[[nodiscard]] placidus::Value vfamily_json( const std::vector< oracle::Member >& family,
                                            const std::vector< std::string >& names );
[[nodiscard]] placidus::Value set_json( const std::set< std::string >& values );
[[nodiscard]] placidus::Value family_json( const std::vector< std::set< std::string > >& family );

} // namespace gen
