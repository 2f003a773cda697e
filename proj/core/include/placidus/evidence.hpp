#pragma once

#include "featexpr.hpp"
#include "value.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>

namespace placidus
{

enum class verdict : std::uint8_t { pass, fail };

[[nodiscard]] const char* to_string( verdict v );

// Output of a machine analysis run. The digests pin the exact input and
// output the verdict was computed from.
struct MachineRecord
{
    std::string analysis;
    std::string input_digest;
    std::string output_digest;
    verdict result = verdict::pass;
    Value counterexample; // null when absent

    bool operator==( const MachineRecord& ) const = default;
};

struct AttestedRecord
{
    std::string text;
    std::string source;

    bool operator==( const AttestedRecord& ) const = default;
};

// Product-level evidence backing a solution node.
using EvidenceRecord = std::variant< MachineRecord, AttestedRecord >;

// Variational evidence (a "variational proof" that a product-level predicate
// holds for every configuration in Conf(model & scope)), in one of three forms.

// One product record per configuration in scope, keyed by configuration mask.
struct ExhaustiveEvidence
{
    std::map< std::uint32_t, EvidenceRecord > table;

    bool operator==( const ExhaustiveEvidence& ) const = default;
};

// A family-level analysis run whose per-configuration records are obtained by
// derivation. `input` is variational data; digests are over the resolved input
// and the raw family output.
struct AnalyticEvidence
{
    std::string analysis;
    Value input;
    Value output;
    std::string input_digest;
    std::string output_digest;

    bool operator==( const AnalyticEvidence& ) const = default;
};

struct AttestedEvidence
{
    std::string text;
    std::string signer;

    bool operator==( const AttestedEvidence& ) const = default;
};

struct VariationalEvidence
{
    FeatExpr scope;
    std::variant< ExhaustiveEvidence, AnalyticEvidence, AttestedEvidence > kind;

    bool operator==( const VariationalEvidence& other ) const
    {
        return equivalent( scope, other.scope ) && kind == other.kind;
    }
};

} // namespace placidus
