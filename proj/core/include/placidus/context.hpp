#pragma once

#include "value.hpp"

#include <optional>

namespace placidus
{

struct Registry;

// Resolves {"ref": name[, "config": [...]]} objects to artifact content. With a
// configuration, the artifact is derived first (fts -> ts, varset -> set, ...).
class DataResolver
{
public:
    virtual ~DataResolver() = default;
    [[nodiscard]] virtual std::optional< Value > resolve( const Value& ref ) const = 0;
};

// Everything a check needs besides its arguments: registries and, optionally,
// a resolver for artifact references.
struct Context
{
    const Registry* registry = nullptr;
    const DataResolver* resolver = nullptr;

    [[nodiscard]] const Registry& reg() const;

    // Replaces every reference in `value` with its content. Throws
    // dangling_reference when a reference cannot be resolved.
    [[nodiscard]] Value resolve( const Value& value ) const;

    // Resolves `value` itself when it is a reference; nested references stay.
    [[nodiscard]] Value resolve_top( const Value& value ) const;

    [[nodiscard]] Value derive( const Value& value, const Configuration& config ) const;
};

// Context over the built-in registry and no resolver.
[[nodiscard]] const Context& default_context();

} // namespace placidus
