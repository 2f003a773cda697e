#pragma once

#include "context.hpp"
#include "error.hpp"
#include "featexpr.hpp"
#include "fts.hpp"
#include "gsn.hpp"
#include "value.hpp"
#include "vgsn.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace placidus
{

// Every problem found while loading, not just the first.
class workspace_error : public error
{
    std::vector< std::string > _problems;

public:
    explicit workspace_error( std::vector< std::string > problems );
    [[nodiscard]] const std::vector< std::string >& problems() const { return _problems; }
};

struct Artifact
{
    std::string name;
    std::string kind; // feature-model | fts | ts | varset | family | ac | plac | formula | query
    std::filesystem::path path;
    Value content;    // normalized: varset -> {"vset"}, family -> {"vfamily"}, universes inlined
    Value original;   // file content as read
    std::optional< FeatureUniverse > universe; // what its presence conditions range over
};

// A manifest {"artifacts": {name: {"kind", "path"}}} and the artifacts it
// names, paths relative to the manifest. Doubles as the resolver for
// {"ref": name[, "config": [...]]}: with a configuration the artifact is
// derived first (fts -> ts, plac -> ac, varset -> set, other data member-wise).
class Workspace : public DataResolver
{
    std::filesystem::path _manifest;
    std::map< std::string, Artifact, std::less<> > _artifacts;

public:
    // `location` is a directory holding workspace.json or a manifest file.
    // Throws workspace_error listing every problem.
    static Workspace load( const std::filesystem::path& location );

    [[nodiscard]] const std::filesystem::path& manifest() const { return _manifest; }
    [[nodiscard]] const std::map< std::string, Artifact, std::less<> >& artifacts() const { return _artifacts; }
    [[nodiscard]] const Artifact* find( std::string_view name ) const;
    // Throws dangling_reference when absent, error when of another kind (`kinds` non-empty).
    [[nodiscard]] const Artifact& require( std::string_view name, const std::vector< std::string >& kinds = {} ) const;

    [[nodiscard]] Context context() const;
    [[nodiscard]] std::optional< Value > resolve( const Value& ref ) const override;

    [[nodiscard]] FeatExpr feature_model( std::string_view name ) const;
    [[nodiscard]] Fts fts( std::string_view name ) const;
    [[nodiscard]] TransitionSystem ts( std::string_view name ) const;
    [[nodiscard]] GsnNode ac( std::string_view name ) const;
    [[nodiscard]] PlAc plac( std::string_view name ) const;

    // Universe an artifact's presence conditions range over, if it has one.
    [[nodiscard]] std::optional< FeatureUniverse > universe_of( std::string_view name ) const;

    // Rewrites an AC / PL AC artifact in place, keeping a ".bak" copy of the
    // previous file. A feature model given by artifact name stays a name.
    void save_ac( std::string_view name, const GsnNode& root );
    void save_plac( std::string_view name, const PlAc& ac );
};

// Reads a JSON file; parse errors name the file and byte offset.
[[nodiscard]] Value read_json_file( const std::filesystem::path& path );
void write_json_file( const std::filesystem::path& path, const Value& value );

} // namespace placidus
