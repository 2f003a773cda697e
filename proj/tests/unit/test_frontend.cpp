#include <placidus/dot.hpp>
#include <placidus/io.hpp>
#include <placidus/registry.hpp>
#include <placidus/workspace.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

using namespace placidus;
namespace fs = std::filesystem;

namespace
{

class TempDir
{
    fs::path _path;

public:
    explicit TempDir( const std::string& name ) : _path{ fs::temp_directory_path() / ( "placidus-" + name ) }
    {
        fs::remove_all( _path );
        fs::create_directories( _path );
    }
    ~TempDir() { fs::remove_all( _path ); }
    [[nodiscard]] const fs::path& path() const { return _path; }

    void write( const std::string& file, const std::string& text ) const { std::ofstream{ _path / file } << text; }
};

std::size_t count( const std::string& text, const std::string& needle )
{
    std::size_t n = 0;
    for ( auto at = text.find( needle ); at != std::string::npos; at = text.find( needle, at + needle.size() ) )
        ++n;
    return n;
}

// G0 argued over a model-checking run: G1, G2, G4 undeveloped, G3 supported
// by the solution Sn.1.
GsnNode model_checking_argument()
{
    const auto g = []( const char* id, const char* claim ) { return GsnNode::undeveloped( id, Goal::atom( claim ) ); };
    auto solution = GsnNode::make_evidence( "Sn.1", Goal::atom( "model checker output" ),
                                            MachineRecord{ "mc", "a", "b", verdict::pass, {} } );
    auto g3 = GsnNode::make_strategy( "G3", Goal::atom( "the model satisfies the property" ), Axiomatic{ "by Sn.1" },
                                      { std::move( solution ) } );
    return GsnNode::make_strategy( "G0", Goal::atom( "the system is safe" ), Axiomatic{ "strategy over model checking" },
                                   { g( "G1", "the model represents the system" ), g( "G2", "the formula expresses safety" ),
                                     std::move( g3 ), g( "G4", "the model checker is sound" ) } );
}

} // namespace

// --- Workspaces ---

TEST( Workspace, LoadsTheDemo )
{
    const auto ws = Workspace::load( PLACIDUS_DEMO_DIR );
    EXPECT_EQ( ws.require( "xor_system" ).kind, "fts" );
    EXPECT_EQ( ws.require( "alarms" ).content.count( "vset" ), 1u );
    EXPECT_EQ( ws.universe_of( "pump" )->size(), 6u );
    EXPECT_THROW( (void)ws.require( "nothing" ), dangling_reference );
    EXPECT_THROW( (void)ws.require( "xor_system", { "plac" } ), error );
}

TEST( Workspace, ReportsEveryProblem )
{
    TempDir dir{ "bad-workspace" };
    dir.write( "workspace.json", R"({"artifacts":{
        "m":{"kind":"feature-model","path":"m.json"},
        "gone":{"kind":"fts","path":"missing.json"},
        "odd":{"kind":"spreadsheet","path":"m.json"},
        "f":{"kind":"formula","path":"f.json"}}})" );
    dir.write( "m.json", R"({"features":["A"],"model":"A | Q"})" );
    dir.write( "f.json", R"({"model":{"ref":"nowhere"},"formula":"AG"})" );
    try
    {
        (void)Workspace::load( dir.path() );
        FAIL() << "expected workspace_error";
    }
    catch ( const workspace_error& e )
    {
        EXPECT_GE( e.problems().size(), 4u );
    }
}

TEST( Workspace, ResolvesAndDerivesReferences )
{
    const auto ws = Workspace::load( PLACIDUS_DEMO_DIR );
    auto ref = make_ref( "alarms" );
    ref[ "config" ] = Value::array();
    const auto none = ws.resolve( ref );
    ASSERT_TRUE( none );
    EXPECT_EQ( *none, Value::parse( R"(["Alrm_EmptyReservoirS"])" ) );
    ref[ "config" ] = Value( std::vector< std::string >{ "CHECK_DRUG_TYPE" } );
    EXPECT_EQ( ws.resolve( ref )->size(), 2u );
    EXPECT_FALSE( ws.resolve( make_ref( "nowhere" ) ) );
}

TEST( Workspace, SaveKeepsBackup )
{
    TempDir dir{ "save" };
    fs::copy( PLACIDUS_DEMO_DIR, dir.path(), fs::copy_options::recursive );
    auto ws = Workspace::load( dir.path() );
    auto ac = ws.plac( "case" );
    ac = attest( ac, "G0", "reviewed", "analyst" );
    ws.save_plac( "case", ac );
    EXPECT_TRUE( fs::exists( dir.path() / "case.json.bak" ) );
    const auto reloaded = Workspace::load( dir.path() );
    EXPECT_TRUE( reloaded.plac( "case" ).root.is_evidence() );
    EXPECT_EQ( read_json_file( dir.path() / "case.json" ).at( "feature_model" ), "infusion" );
}

TEST( Io, ParseErrorsNameTheFile )
{
    TempDir dir{ "io" };
    dir.write( "broken.json", "{ \"a\": " );
    try
    {
        (void)read_json_file( dir.path() / "broken.json" );
        FAIL();
    }
    catch ( const error& e )
    {
        EXPECT_NE( std::string{ e.what() }.find( "broken.json" ), std::string::npos );
    }
}

TEST( Io, AcRoundTrip )
{
    const auto ac = model_checking_argument();
    const auto json = to_json( ac );
    EXPECT_EQ( to_json( gsn_from_json( json ) ), json );
    EXPECT_EQ( json.at( "children" ).size(), 4u );
    EXPECT_EQ( json.at( "kind" ), "strategy" );
}

// --- Rendering ---

TEST( Dot, SingleEvidenceNode )
{
    const auto leaf = GsnNode::make_evidence( "E", Goal::atom( "done" ), AttestedRecord{ "ok", "me" } );
    const auto dot = render_dot( leaf );
    EXPECT_EQ( count( dot, "[label=" ), 1u );
    EXPECT_EQ( count( dot, "->" ), 0u );
    EXPECT_NE( dot.find( "shape=ellipse" ), std::string::npos );
}

TEST( Dot, ModelCheckingArgumentShape )
{
    const auto ac = model_checking_argument();
    const auto dot = render_dot( ac );
    EXPECT_EQ( count( dot, "[label=" ), 6u );
    EXPECT_EQ( count( dot, " -> " ), 5u );
    EXPECT_EQ( render_dot( ac ), dot );
    EXPECT_LT( dot.find( "\"G1\" [" ), dot.find( "\"G4\" [" ) );

    const auto report = deductive_check( ac, default_context() );
    const auto coloured = render_dot( ac, &report );
    EXPECT_NE( coloured.find( "color=gray50" ), std::string::npos );
    EXPECT_NE( coloured.find( "color=darkorange" ), std::string::npos );
}

TEST( Dot, PlAcShowsPresenceConditions )
{
    const auto ws = Workspace::load( PLACIDUS_DEMO_DIR );
    const auto ac = ws.plac( "broken_plac" );
    const auto report = vdeductive_check( ac, ws.context() );
    const auto dot = render_dot( ac, &report );
    EXPECT_EQ( count( dot, "[label=" ), count_nodes( ac.root ) );
    EXPECT_NE( dot.find( "[CHECK_INFUSION_RATE]" ), std::string::npos );
    EXPECT_NE( dot.find( "color=red" ), std::string::npos );
    EXPECT_EQ( dot, render_dot( ac, &report ) );
}

TEST( Dot, EscapesQuotes )
{
    const auto leaf = GsnNode::undeveloped( "G", Goal::atom( "c", "say \"hi\"" ) );
    EXPECT_NE( render_dot( leaf ).find( "say \\\"hi\\\"" ), std::string::npos );
}
