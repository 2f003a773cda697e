#pragma once

#include "featexpr.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace placidus
{

// Data that goals talk about: opaque JSON. Product data is plain JSON;
// variational data may contain tagged objects that derivation rewrites:
//
//   {"vset":    [{"value": v, "pc": "<expr>"}, ...]}   -> sorted array of values
//   {"vfamily": [{"set": [...], "pc": "<expr>"}, ...]} -> array of sets
//   {"ref": "<artifact>"}                              -> {"ref": ..., "config": [...]}
//
// Untagged objects and arrays are derived member-wise.
using Value = nlohmann::json;

// Hex SHA-256 of the canonical (sorted-key, compact) serialization.
[[nodiscard]] std::string digest( const Value& value );

// Sorts and deduplicates a JSON array in place; returns it.
Value canonical_set( Value array );

class DerivationRegistry
{
public:
    using derive_fn = std::function< Value( const Value& tagged, const Configuration&, const DerivationRegistry& ) >;

private:
    struct entry
    {
        std::string product_type;
        derive_fn derive;
    };
    std::map< std::string, entry, std::less<> > _entries;

public:
    // Registers a variational type under `tag`, deriving to `product_type`.
    void add( std::string tag, std::string product_type, derive_fn derive );
    [[nodiscard]] bool has( std::string_view tag ) const { return _entries.find( tag ) != _entries.end(); }
    [[nodiscard]] std::optional< std::string > product_type( std::string_view tag ) const;

    // The tag of a tagged object, if any.
    [[nodiscard]] const derive_fn* find_tag( const Value& value, std::string* tag = nullptr ) const;

    [[nodiscard]] Value derive( const Value& value, const Configuration& config ) const;

    // vset, vfamily and ref.
    static DerivationRegistry builtin();
};

// True when `value` contains no variational tags (deriving it is the identity).
[[nodiscard]] bool is_product_value( const Value& value, const DerivationRegistry& registry );

// Builds a reference object {"ref": name}.
[[nodiscard]] Value make_ref( const std::string& artifact );
[[nodiscard]] bool is_ref( const Value& value );

} // namespace placidus
