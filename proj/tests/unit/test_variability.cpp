#include "generators.hpp"

#include <placidus/context.hpp>
#include <placidus/registry.hpp>
#include <placidus/variability.hpp>
#include <placidus/vgsn.hpp>

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

} // namespace

TEST( VarSet, DerivesPerConfiguration )
{
    VarSet< std::string > s{ ab() };
    s.add( "x", pc( "A" ) );
    s.add( "y", pc( "B" ) );
    s.add( "z", pc( "true" ) );
    EXPECT_EQ( derive_set( s, Configuration::parse( ab(), "A" ) ), ( std::set< std::string >{ "x", "z" } ) );
    EXPECT_EQ( derive_set( s, Configuration::parse( ab(), "{}" ) ), ( std::set< std::string >{ "z" } ) );
}

TEST( VarSet, AddKeepsOneCopyPerSemanticPc )
{
    VarSet< int > s{ ab() };
    s.add( 1, pc( "A" ) );
    s.add( 1, pc( "A & (B | !B)" ) );
    s.add( 1, pc( "B" ) );
    EXPECT_EQ( s.size(), 2u );
    EXPECT_THROW( s.add( 2, parse_featexpr( "X", FeatureUniverse{ { "X" } } ) ), universe_mismatch );
}

TEST( VarSet, JsonForms )
{
    const auto set = varset_from_json( Value::parse( R"({"vset":[{"value":1,"pc":"A"},{"value":2}]})" ), ab() );
    ASSERT_EQ( set.size(), 2u );
    EXPECT_TRUE( equivalent( set.elements()[ 1 ].pc, FeatExpr::all( ab() ) ) );
    const auto plain = varset_from_json( Value::parse( "[3,4]" ), ab() );
    EXPECT_EQ( plain.size(), 2u );
    EXPECT_EQ( varset_from_json( to_json( set ), ab() ).size(), 2u );
    EXPECT_THROW( (void)varset_from_json( Value::parse( R"({"vset":[{"value":1,"pc":"Q"}]})" ), ab() ), error );
}

TEST( Derivation, TaggedValuesAndMemberwise )
{
    const auto& ctx = default_context();
    const auto value = Value::parse(
        R"({"s":{"vset":[{"value":"x","pc":"A"},{"value":"y","pc":"B"}]},"f":{"vfamily":[{"set":["x"],"pc":"!A"}]},"k":[1]})" );
    const auto at_a = ctx.derive( value, Configuration::parse( ab(), "A" ) );
    EXPECT_EQ( at_a, Value::parse( R"({"s":["x"],"f":[],"k":[1]})" ) );
    const auto at_b = ctx.derive( value, Configuration::parse( ab(), "B" ) );
    EXPECT_EQ( at_b, Value::parse( R"({"s":["y"],"f":[["x"]],"k":[1]})" ) );
    EXPECT_TRUE( is_product_value( at_b, Registry::builtin().derivations ) );
    EXPECT_FALSE( is_product_value( value, Registry::builtin().derivations ) );
}

TEST( Derivation, DigestIsCanonical )
{
    EXPECT_EQ( digest( Value::parse( R"({"a":1,"b":2})" ) ), digest( Value::parse( R"({"b":2, "a":1})" ) ) );
    EXPECT_NE( digest( Value::parse( "[1,2]" ) ), digest( Value::parse( "[2,1]" ) ) );
    EXPECT_EQ( digest( Value{} ).size(), 64u );
}

// --- Lift checking ---

TEST( Lift, ExactAndFailedReports )
{
    const auto model = pc( "A | B" );
    VarSet< int > input{ ab() };
    input.add( 1, pc( "A" ) );
    input.add( 2, pc( "B" ) );
    const auto derive_in = []( const VarSet< int >& s, const Configuration& c ) { return derive_set( s, c ); };
    const auto size = []( const std::set< int >& s ) { return s.size(); };

    // Family-level size as a VarSet of sizes keyed by presence: exact.
    const auto family_size = [ & ]( const VarSet< int >& s ) { return s; };
    const auto derive_size = []( const VarSet< int >& s, const Configuration& c ) { return derive_set( s, c ).size(); };
    const auto exact = check_lift( size, family_size, input, model, derive_in, derive_size );
    EXPECT_EQ( exact.status, lift_status::exact );
    EXPECT_EQ( exact.configurations_checked, 3u );

    // A wrong family analysis: always reports 1.
    const auto wrong = check_lift( size, family_size, input, model, derive_in,
                                   []( const VarSet< int >&, const Configuration& ) { return std::size_t{ 1 }; } );
    EXPECT_EQ( wrong.status, lift_status::failed );
    ASSERT_EQ( wrong.witnesses.size(), 1u );
    EXPECT_EQ( wrong.witnesses[ 0 ].config.to_string(), "A,B" );
    EXPECT_EQ( wrong.witnesses[ 0 ].product_side, "2" );
}

TEST( Lift, QuasiOnlyChecksSoundness )
{
    const auto model = pc( "true" );
    const std::vector< int > input{ 1, 2 };
    const auto derive_in = []( const std::vector< int >& v, const Configuration& c ) { return v[ c.mask() % 2 ]; };
    const auto product = []( int x ) { return x; };
    const auto family = []( const std::vector< int >& v ) { return *std::max_element( v.begin(), v.end() ); };

    // "no value above 2" at family level is sound for products.
    const auto sound = check_quasi_lift( product, family, input, model, derive_in, []( int m ) { return m <= 2; },
                                         []( int x ) { return x <= 2; } );
    EXPECT_EQ( sound.status, lift_status::quasi_sound );
    // A family alarm never fails.
    const auto alarm = check_quasi_lift( product, family, input, model, derive_in, []( int m ) { return m <= 1; },
                                         []( int x ) { return x <= 1; } );
    EXPECT_EQ( alarm.status, lift_status::quasi_sound );
    // Unsound: family says clean while a product is not.
    const auto unsound = check_quasi_lift( product, family, input, model, derive_in, []( int ) { return true; },
                                           []( int x ) { return x <= 1; } );
    EXPECT_EQ( unsound.status, lift_status::failed );
    EXPECT_EQ( unsound.witnesses.size(), 2u );
}

// --- Explode and aggregate ---

TEST( Constructions, ExplodeAndAggregate )
{
    VarSet< std::string > s{ ab() };
    s.add( "x", pc( "A & B" ) );
    s.add( "y", pc( "B & A" ) );
    s.add( "z", pc( "!A" ) );
    const auto e = explode( s );
    EXPECT_EQ( e.size(), 3u );
    const auto g = aggregate( s );
    ASSERT_EQ( g.size(), 2u );
    EXPECT_EQ( g.members()[ 0 ].value, ( std::set< std::string >{ "x", "y" } ) );
    EXPECT_EQ( g.members()[ 0 ].pc.to_string(), "A & B" );
}

TEST( Property, ConstructionsMatchOracleAndCover )
{
    gen::Rng rng{ 21 };
    for ( int i = 0; i < 300; ++i )
    {
        const auto n = gen::pick( rng, 1, 4 );
        const auto names = gen::feature_names( n );
        const FeatureUniverse u{ names };
        const auto elements = gen::elements( rng, n, 8 );
        const auto vset = gen::vset_json( elements, names );
        const auto set = varset_from_json( vset, u );
        const auto exploded = explode( set );
        const auto aggregated = aggregate( set );
        for ( std::uint32_t mask = 0; mask < ( 1U << n ); ++mask )
        {
            const Configuration c{ u, mask };
            std::set< std::string > derived;
            for ( const auto& v : derive_set( set, c ) )
                derived.insert( v.get< std::string >() );
            ASSERT_EQ( derived, oracle::derive( elements, mask ) );
            std::set< std::string > cover;
            for ( const auto& f : { derive_family( exploded, c ), derive_family( aggregated, c ) } )
            {
                cover.clear();
                for ( const auto& m : f )
                    for ( const auto& v : m )
                        cover.insert( v.get< std::string >() );
                ASSERT_EQ( cover, derived );
            }
        }
    }
}

// --- Variational evidence ---

TEST( Evidence, DomainIsModelAndScope )
{
    const auto domain = evidence_domain( pc( "A | B" ), pc( "A" ) );
    ASSERT_EQ( domain.size(), 2u );
    EXPECT_EQ( domain[ 0 ].to_string(), "A" );
    EXPECT_EQ( domain[ 1 ].to_string(), "A,B" );
}

TEST( Evidence, ExhaustiveCoverage )
{
    const auto& ctx = default_context();
    const auto model = pc( "true" );
    const auto scope = pc( "A" );
    const Value data{ { "set", Value::parse( R"({"vset":[{"value":"x","pc":"A"}]})" ) }, { "family", Value::parse( R"([["x"]])" ) } };
    const auto& complete = Registry::builtin().analyses.require_product( "complete" );
    ExhaustiveEvidence table;
    for ( const auto& c : evidence_domain( model, scope ) )
    {
        const auto input = ctx.derive( data, c );
        const auto output = complete.run( input, ctx );
        table.table.emplace( c.mask(), MachineRecord{ "complete", digest( input ), digest( output ), verdict::pass, {} } );
    }
    const VariationalEvidence full{ scope, table };
    EXPECT_EQ( verify_var_evidence( "complete", data, scope, model, full, ctx ).status, evidence_status::verified );

    auto partial = table;
    partial.table.erase( partial.table.begin() );
    const auto missing = verify_var_evidence( "complete", data, scope, model, VariationalEvidence{ scope, partial }, ctx );
    EXPECT_EQ( missing.status, evidence_status::rejected );
    EXPECT_EQ( missing.uncovered.size(), 1u );

    const VariationalEvidence attested{ scope, AttestedEvidence{ "checked by hand", "analyst" } };
    EXPECT_EQ( verify_var_evidence( "complete", data, scope, model, attested, ctx ).status, evidence_status::assumed );
}
