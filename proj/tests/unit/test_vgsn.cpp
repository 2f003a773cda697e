#include "generators.hpp"

#include <placidus/io.hpp>
#include <placidus/registry.hpp>
#include <placidus/vgsn.hpp>
#include <placidus/workspace.hpp>

#include <gtest/gtest.h>

using namespace placidus;

namespace
{

const FeatureUniverse& ab()
{
    static const FeatureUniverse u{ { "A", "B" } };
    return u;
}

FeatExpr pc( const char* text ) { return parse_featexpr( text, ab() ); }

PlAc over_set( const char* model, const char* vset )
{
    const auto data = Value{ { "set", Value::parse( vset ) }, { "pred", "safe" } };
    return PlAc{ pc( model ), VGsnNode::undeveloped( "G", VGoal{ pc( "true" ), Goal::pred( forall_in_set, data ) } ) };
}

constexpr const char* xyz = R"({"vset":[{"value":"x","pc":"A"},{"value":"y","pc":"B"},{"value":"z","pc":"A"}]})";

Workspace demo() { return Workspace::load( PLACIDUS_DEMO_DIR ); }

} // namespace

// --- Derivation ---

TEST( Derive, DropsAbsentNodes )
{
    const auto& ctx = default_context();
    auto ac = over_set( "A | B", xyz );
    ac = instantiate( ac, "G", "vdomdecomp", "explode", ctx );
    ASSERT_EQ( ac.root.children.size(), 3u );
    EXPECT_EQ( ac.root.children[ 1 ].goal.pc.to_string(), "B" );

    const auto only_b = derive_ac( ac, Configuration::parse( ab(), "B" ), ctx );
    ASSERT_EQ( only_b.children.size(), 1u );
    EXPECT_EQ( only_b.children[ 0 ].id, "G.2" );
    EXPECT_EQ( only_b.goal->as_pred()->data.at( "set" ), Value::parse( R"(["y"])" ) );
    EXPECT_TRUE( derive_node( ac.root.children[ 0 ], Configuration::parse( ab(), "B" ), ctx ).is_nil() );
    EXPECT_EQ( refines_check( only_b, ctx ).status, node_status::certified );
}

TEST( Derive, EffectivePcAndValidation )
{
    const auto& ctx = default_context();
    auto ac = instantiate( over_set( "true", xyz ), "G", "vdomdecomp", "aggregate", ctx );
    ASSERT_EQ( ac.root.children.size(), 2u );
    EXPECT_TRUE( equivalent( *effective_pc( ac.root, "G.1" ), pc( "A" ) ) );
    EXPECT_FALSE( effective_pc( ac.root, "nope" ) );
    EXPECT_TRUE( validate_plac( ac ).empty() );

    auto duplicate = ac;
    duplicate.root.children[ 1 ].id = "G.1";
    EXPECT_FALSE( validate_plac( duplicate ).empty() );
}

// --- Lifted instantiation ---

TEST( Instantiate, LiteralFamilyNeedsCompleteness )
{
    const auto& ctx = default_context();
    const auto ac = over_set( "A | B", xyz );
    const auto covering = Value::parse( R"({"vfamily":[{"set":["x","z"],"pc":"A"},{"set":["y"],"pc":"B"}]})" );
    EXPECT_NO_THROW( (void)instantiate( ac, "G", "vdomdecomp", covering, ctx ) );
    const auto gap = Value::parse( R"({"vfamily":[{"set":["x","z"],"pc":"A"},{"set":["y"],"pc":"A"}]})" );
    EXPECT_THROW( (void)instantiate( ac, "G", "vdomdecomp", gap, ctx ), instantiation_refused );
    // Within the model B never holds alone, so covering y under A suffices.
    EXPECT_NO_THROW( (void)instantiate( over_set( "A", xyz ), "G", "vdomdecomp", gap, ctx ) );
}

TEST( Instantiate, DeadElementsNeedNoCover )
{
    const auto& ctx = default_context();
    const auto ac = over_set( "!B", R"({"vset":[{"value":"y","pc":"B"}]})" );
    const auto done = instantiate( ac, "G", "vdomdecomp", Value::parse( R"({"vfamily":[]})" ), ctx );
    EXPECT_TRUE( done.root.children.empty() );
    // Nothing left to argue, but a strategy without premises still counts as undeveloped.
    EXPECT_EQ( vdeductive_check( done, ctx ).find( "G" )->status, node_status::undeveloped );
}

TEST( Instantiate, AttestCoversEffectivePc )
{
    const auto& ctx = default_context();
    auto ac = instantiate( over_set( "true", xyz ), "G", "vdomdecomp", "explode", ctx );
    ac = attest( ac, "G.2", "checked", "analyst" );
    const auto* node = find_node( ac.root, "G.2" );
    ASSERT_TRUE( node->is_evidence() );
    EXPECT_TRUE( equivalent( node->evidence->scope, pc( "B" ) ) );
    EXPECT_THROW( (void)attest( ac, "G.2", "again", "analyst" ), instantiation_refused );
}

// --- Checks ---

TEST( Refines, ShortcutAndDescentAgree )
{
    const auto& ctx = default_context();
    const auto ac = instantiate( over_set( "A | B", xyz ), "G", "vdomdecomp", "explode", ctx );
    const auto shortcut = vrefines_check( ac.root, pc( "true" ), ac.model, ctx, certification::shortcut_or_descent );
    const auto descent = vrefines_check( ac.root, pc( "true" ), ac.model, ctx, certification::descent );
    EXPECT_EQ( shortcut.status, node_status::certified );
    EXPECT_TRUE( shortcut.shortcut );
    EXPECT_EQ( descent.status, node_status::certified );
    EXPECT_FALSE( descent.shortcut );
    EXPECT_EQ( shortcut.certified, descent.certified );

    auto tampered = ac;
    tampered.root.children.pop_back();
    const auto broken = vrefines_check( tampered.root, pc( "true" ), ac.model, ctx );
    EXPECT_EQ( broken.status, node_status::broken );
    EXPECT_EQ( broken.broken, semantics( pc( "A" ) & ac.model ) );
}

TEST( Deductive, DemoCases )
{
    const auto ws = demo();
    const auto ctx = ws.context();
    const auto fresh = vdeductive_check( ws.plac( "case" ), ctx );
    EXPECT_EQ( fresh.verdict, deductive_verdict::not_deductive );
    EXPECT_EQ( fresh.domain.count(), 36u );

    const auto broken = vdeductive_check( ws.plac( "broken_plac" ), ctx );
    EXPECT_FALSE( broken.deductive() );
    const auto* g05 = broken.find( "G0.5" );
    ASSERT_NE( g05, nullptr );
    EXPECT_EQ( g05->status, node_status::broken );
    EXPECT_EQ( g05->broken, semantics( parse_featexpr( "CHECK_DRUG_TYPE", ws.plac( "broken_plac" ).universe() ) ) &
                                semantics( ws.plac( "broken_plac" ).model ) );
    EXPECT_EQ( broken.failing, g05->broken );
}

TEST( Deductive, LiftedModelCheckingOnTheDemo )
{
    const auto ws = demo();
    const auto ctx = ws.context();
    const PlAc ac{ ws.feature_model( "xor_model" ),
                   VGsnNode::undeveloped( "G", VGoal{ FeatExpr::all( ws.feature_model( "xor_model" ).universe() ),
                                                      Goal::atom( "xor_system eventually reaches s0" ) } ) };
    const Value input{ { "model", make_ref( "xor_system" ) }, { "formula", "EF s0" } };
    auto developed = instantiate( ac, "G", "vmc-analytic", input, ctx );
    ASSERT_EQ( developed.root.children.size(), 5u );
    EXPECT_TRUE( developed.root.children[ 2 ].is_evidence() );
    EXPECT_TRUE( developed.root.children[ 4 ].is_evidence() );
    for ( const char* id : { "G.1", "G.2", "G.4" } )
        developed = attest( developed, id, "reviewed", "analyst" );
    const auto report = vdeductive_check( developed, ctx );
    EXPECT_EQ( report.verdict, deductive_verdict::deductive_modulo_assumptions );
    EXPECT_EQ( report.assumptions_at( valid_configs( ac.model ).front() ),
               ( std::vector< std::string >{ "G.1", "G.2", "G.4" } ) );
}

TEST( Property, RandomTreesAgreeWithProducts )
{
    const auto& ctx = default_context();
    gen::Rng rng{ 51 };
    for ( int i = 0; i < 60; ++i )
    {
        const auto ac = gen::plac( rng, 4, 3, ctx );
        ASSERT_TRUE( validate_plac( ac ).empty() );
        const auto report = vdeductive_check( ac, ctx );
        for ( const auto& config : report.domain.configurations() )
        {
            const auto product = deductive_check( derive_ac( ac, config, ctx ), ctx );
            ASSERT_EQ( product.deductive(), !report.failing.contains( config ) ) << to_json( ac ).dump();
            ASSERT_EQ( product.assumptions, report.assumptions_at( config ) );
        }
    }
}

TEST( Serialization, PlAcRoundTrip )
{
    const auto ws = demo();
    const auto ac = ws.plac( "broken_plac" );
    const auto again = plac_from_json( to_json( ac ) );
    EXPECT_EQ( to_json( again ), to_json( ac ) );
    EXPECT_EQ( count_nodes( again.root ), count_nodes( ac.root ) );
}
