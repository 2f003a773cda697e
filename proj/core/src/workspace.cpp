#include "placidus/workspace.hpp"

#include "placidus/io.hpp"
#include "placidus/registry.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace placidus
{

namespace fs = std::filesystem;

workspace_error::workspace_error( std::vector< std::string > problems )
    : error{ [ & ]
             {
                 std::string message = "workspace has " + std::to_string( problems.size() ) + " problem(s)";
                 for ( const auto& p : problems )
                     message += "\n  " + p;
                 return message;
             }() },
      _problems{ std::move( problems ) }
{
}

Value read_json_file( const fs::path& path )
{
    std::ifstream in{ path };
    if ( !in )
        throw error{ path.string() + ": cannot open file" };
    std::stringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return Value::parse( buffer.str() );
    }
    catch ( const nlohmann::json::parse_error& e )
    {
        throw parse_error{ path.string() + ": invalid JSON", e.byte == 0 ? 0 : e.byte - 1 };
    }
}

void write_json_file( const fs::path& path, const Value& value )
{
    std::ofstream out{ path };
    if ( !out )
        throw error{ path.string() + ": cannot write file" };
    out << value.dump( 2 ) << '\n';
}

namespace
{

const std::set< std::string > known_kinds{ "feature-model", "fts", "ts", "varset", "family",
                                           "ac", "plac", "formula", "query" };

void collect_refs( const Value& value, std::vector< std::string >& out )
{
    if ( is_ref( value ) )
    {
        out.push_back( value.at( "ref" ).get< std::string >() );
        return;
    }
    if ( value.is_object() || value.is_array() )
        for ( const auto& item : value )
            collect_refs( item, out );
}

} // namespace

Workspace Workspace::load( const fs::path& location )
{
    Workspace ws;
    ws._manifest = fs::is_directory( location ) ? location / "workspace.json" : location;

    Value manifest;
    try
    {
        manifest = read_json_file( ws._manifest );
    }
    catch ( const error& e )
    {
        throw workspace_error{ { e.what() } };
    }
    if ( !manifest.is_object() )
        throw workspace_error{ { ws._manifest.string() + ": manifest must be a JSON object" } };

    std::vector< std::string > problems;
    const auto base = ws._manifest.parent_path();
    const auto artifacts = manifest.value( "artifacts", Value::object() );
    if ( !artifacts.is_object() )
        throw workspace_error{ { ws._manifest.string() + ": 'artifacts' must be an object" } };

    // Read every file.
    for ( const auto& [ name, entry ] : artifacts.items() )
    {
        const auto prefix = "artifact '" + name + "': ";
        if ( !entry.is_object() || !entry.contains( "kind" ) || !entry.contains( "path" ) )
        {
            problems.push_back( prefix + "needs 'kind' and 'path'" );
            continue;
        }
        Artifact a{ name, entry.at( "kind" ).get< std::string >(), base / entry.at( "path" ).get< std::string >(), {}, {},
                    std::nullopt };
        if ( known_kinds.count( a.kind ) == 0 )
        {
            problems.push_back( prefix + "unknown kind '" + a.kind + "'" );
            continue;
        }
        try
        {
            a.original = read_json_file( a.path );
            a.content = a.original;
            ws._artifacts.emplace( name, std::move( a ) );
        }
        catch ( const std::exception& e )
        {
            problems.push_back( prefix + e.what() );
        }
    }

    // Universes given by feature-model name are inlined.
    const auto feature_model_json = [ & ]( const Value& spec, const std::string& prefix ) -> std::optional< Value >
    {
        if ( spec.is_string() )
        {
            const auto* fm = ws.find( spec.get< std::string >() );
            if ( fm == nullptr || fm->kind != "feature-model" )
            {
                problems.push_back( prefix + "unknown feature model '" + spec.get< std::string >() + "'" );
                return std::nullopt;
            }
            return std::optional< Value >{ std::in_place, fm->content };
        }
        if ( spec.is_array() )
            return Value{ { "features", spec } };
        if ( spec.is_object() )
            return std::optional< Value >{ std::in_place, spec };
        problems.push_back( prefix + "universe must be a feature-model name or a feature list" );
        return std::nullopt;
    };

    for ( auto& [ name, a ] : ws._artifacts )
    {
        const auto prefix = "artifact '" + name + "' (" + a.path.string() + "): ";
        try
        {
            if ( a.kind == "feature-model" )
                a.universe = feature_model_from_json( a.content ).universe();
            else if ( a.kind == "fts" )
            {
                if ( a.content.contains( "universe" ) && a.content.at( "universe" ).is_string() )
                {
                    const auto fm = feature_model_json( a.content.at( "universe" ), prefix );
                    if ( !fm )
                        continue;
                    a.content[ "universe" ] = fm->at( "features" );
                    if ( !a.content.contains( "feature_model" ) && fm->contains( "model" ) )
                        a.content[ "feature_model" ] = fm->at( "model" );
                }
                a.universe = fts_from_json( a.content ).universe();
            }
            else if ( a.kind == "ts" )
                (void)ts_from_json( a.content );
            else if ( a.kind == "varset" || a.kind == "family" )
            {
                const bool set = a.kind == "varset";
                const char* tag = set ? "vset" : "vfamily";
                const auto fm = feature_model_json( a.content.value( "universe", Value{} ), prefix );
                if ( !fm )
                    continue;
                const auto universe = feature_model_from_json( *fm ).universe();
                const char* list = a.content.contains( tag ) ? tag : set ? "elements" : "members";
                Value tagged{ { tag, a.content.value( list, Value::array() ) } };
                if ( set )
                    (void)varset_from_json( tagged, universe );
                else
                    (void)varfamily_from_json( tagged, universe );
                a.content = std::move( tagged );
                a.universe = universe;
            }
            else if ( a.kind == "ac" )
                (void)gsn_from_json( a.content );
            else if ( a.kind == "plac" )
            {
                if ( a.content.contains( "feature_model" ) && a.content.at( "feature_model" ).is_string() )
                {
                    const auto fm = feature_model_json( a.content.at( "feature_model" ), prefix );
                    if ( !fm )
                        continue;
                    a.content[ "feature_model" ] = *fm;
                }
                const auto ac = plac_from_json( a.content );
                a.universe = ac.universe();
                for ( const auto& p : validate_plac( ac ) )
                    problems.push_back( prefix + p );
            }
            else if ( a.kind == "formula" )
            {
                if ( !a.content.contains( "formula" ) || !a.content.at( "formula" ).is_string() )
                    problems.push_back( prefix + "needs a 'formula' string" );
                else
                    (void)parse_formula( a.content.at( "formula" ).get< std::string >() );
            }
            else if ( a.kind == "query" )
            {
                if ( !a.content.contains( "pattern" ) || !a.content.at( "pattern" ).is_string() )
                    problems.push_back( prefix + "needs a 'pattern' string" );
            }
        }
        catch ( const std::exception& e )
        {
            problems.push_back( prefix + e.what() );
        }
    }

    // Cross references: artifacts, predicates and templates.
    const auto& registry = Registry::builtin();
    for ( const auto& [ name, a ] : ws._artifacts )
    {
        std::vector< std::string > refs;
        collect_refs( a.content, refs );
        for ( const auto& ref : refs )
            if ( ws.find( ref ) == nullptr )
                problems.push_back( "artifact '" + name + "': dangling reference to '" + ref + "'" );

        if ( a.kind != "ac" && a.kind != "plac" )
            continue;
        const auto check_node = [ & ]( const auto& self, const Value& node ) -> void
        {
            if ( !node.is_object() )
                return;
            if ( node.contains( "goal" ) && node.at( "goal" ).contains( "pred" ) )
            {
                const auto pred = node.at( "goal" ).at( "pred" ).get< std::string >();
                if ( !registry.predicates.has( pred ) )
                    problems.push_back( "artifact '" + name + "': node " + node.value( "id", "?" ) +
                                        ": unknown predicate '" + pred + "'" );
            }
            if ( node.contains( "justification" ) && node.at( "justification" ).contains( "template" ) )
            {
                const auto t = node.at( "justification" ).at( "template" ).get< std::string >();
                const bool known = a.kind == "ac" ? registry.templates.find( t ) != nullptr
                                                  : registry.vtemplates.find( t ) != nullptr;
                if ( !known )
                    problems.push_back( "artifact '" + name + "': node " + node.value( "id", "?" ) +
                                        ": unknown template '" + t + "'" );
            }
            for ( const auto& child : node.value( "children", Value::array() ) )
                self( self, child );
        };
        check_node( check_node, a.kind == "plac" ? a.content.value( "root", Value{} ) : a.content );
    }

    if ( !problems.empty() )
        throw workspace_error{ std::move( problems ) };
    return ws;
}

const Artifact* Workspace::find( std::string_view name ) const
{
    const auto it = _artifacts.find( name );
    return it == _artifacts.end() ? nullptr : &it->second;
}

const Artifact& Workspace::require( std::string_view name, const std::vector< std::string >& kinds ) const
{
    const auto* a = find( name );
    if ( a == nullptr )
        throw dangling_reference{ "no artifact '" + std::string{ name } + "' in the workspace" };
    if ( !kinds.empty() && std::find( kinds.begin(), kinds.end(), a->kind ) == kinds.end() )
    {
        std::string expected;
        for ( const auto& k : kinds )
            expected += ( expected.empty() ? "" : "|" ) + k;
        throw error{ "artifact '" + a->name + "' is a " + a->kind + ", expected " + expected };
    }
    return *a;
}

Context Workspace::context() const
{
    return Context{ &Registry::builtin(), this };
}

std::optional< FeatureUniverse > Workspace::universe_of( std::string_view name ) const
{
    const auto* a = find( name );
    return a == nullptr ? std::nullopt : a->universe;
}

std::optional< Value > Workspace::resolve( const Value& ref ) const
{
    if ( !is_ref( ref ) )
        return std::nullopt;
    const auto* a = find( ref.at( "ref" ).get< std::string >() );
    if ( a == nullptr )
        return std::nullopt;
    if ( !ref.contains( "config" ) )
        return std::optional< Value >{ std::in_place, a->content };

    const auto members = ref.at( "config" ).get< std::vector< std::string > >();
    const auto universe = universe_of( a->name ).value_or( FeatureUniverse{ members } );
    const auto config = Configuration::from_names( universe, members );
    if ( a->kind == "fts" )
        return to_json( derive_fts( fts( a->name ), config ) );
    if ( a->kind == "plac" )
        return to_json( derive_ac( plac( a->name ), config, context() ) );
    if ( a->kind == "feature-model" )
        return std::optional< Value >{ std::in_place, a->content };
    return Registry::builtin().derivations.derive( a->content, config );
}

FeatExpr Workspace::feature_model( std::string_view name ) const
{
    return feature_model_from_json( require( name, { "feature-model" } ).content );
}

Fts Workspace::fts( std::string_view name ) const
{
    return fts_from_json( require( name, { "fts" } ).content );
}

TransitionSystem Workspace::ts( std::string_view name ) const
{
    return ts_from_json( require( name, { "ts" } ).content );
}

GsnNode Workspace::ac( std::string_view name ) const
{
    return gsn_from_json( require( name, { "ac" } ).content );
}

PlAc Workspace::plac( std::string_view name ) const
{
    return plac_from_json( require( name, { "plac" } ).content );
}

namespace
{

void backup_and_write( const fs::path& path, const Value& value )
{
    if ( fs::exists( path ) )
        fs::copy_file( path, fs::path{ path.string() + ".bak" }, fs::copy_options::overwrite_existing );
    write_json_file( path, value );
}

} // namespace

void Workspace::save_ac( std::string_view name, const GsnNode& root )
{
    auto& a = _artifacts.at( std::string{ name } );
    a.content = a.original = to_json( root );
    backup_and_write( a.path, a.original );
}

void Workspace::save_plac( std::string_view name, const PlAc& ac )
{
    auto& a = _artifacts.at( std::string{ name } );
    auto json = to_json( ac );
    a.content = json;
    if ( a.original.contains( "feature_model" ) && a.original.at( "feature_model" ).is_string() )
        json[ "feature_model" ] = a.original.at( "feature_model" );
    a.original = json;
    backup_and_write( a.path, a.original );
}

} // namespace placidus
