#include "generators.hpp"

#include <placidus/featexpr.hpp>

#include <gtest/gtest.h>

using namespace placidus;

namespace
{

const FeatureUniverse& abc()
{
    static const FeatureUniverse u{ { "A", "B", "C" } };
    return u;
}

} // namespace

// --- Universes and configurations ---

TEST( Universe, NamesAndIndices )
{
    EXPECT_EQ( abc().size(), 3u );
    EXPECT_EQ( abc().configuration_count(), 8u );
    EXPECT_EQ( abc().index_of( "B" ), 1u );
    EXPECT_FALSE( abc().index_of( "Z" ) );
    EXPECT_THROW( FeatureUniverse( { "A", "A" } ), error );
}

TEST( Universe, CapOnFeatures )
{
    EXPECT_THROW( FeatureUniverse( gen::feature_names( max_universe_size + 1 ) ), error );
    EXPECT_NO_THROW( FeatureUniverse( gen::feature_names( max_universe_size ) ) );
}

TEST( Configuration, TextForms )
{
    const auto c = Configuration::parse( abc(), "C,A" );
    EXPECT_EQ( c.mask(), 0b101u );
    EXPECT_EQ( c.to_string(), "A,C" );
    EXPECT_EQ( Configuration::parse( abc(), "{}" ).to_string(), "{}" );
    EXPECT_EQ( Configuration::parse( abc(), "" ).mask(), 0u );
    EXPECT_EQ( c.members(), ( std::vector< std::string >{ "A", "C" } ) );
    EXPECT_THROW( (void)Configuration::parse( abc(), "A,Q" ), error );
}

TEST( ConfigSet, Algebra )
{
    auto s = ConfigSet::empty( abc() );
    EXPECT_TRUE( s.is_empty() );
    s.insert( 1 );
    s.insert( 6 );
    EXPECT_EQ( s.count(), 2u );
    EXPECT_EQ( ( ~s ).count(), 6u );
    EXPECT_TRUE( ( s & ~s ).is_empty() );
    EXPECT_EQ( ( s | ~s ), ConfigSet::universal( abc() ) );
    EXPECT_EQ( s.to_string(), "{A} {B,C}" );
    EXPECT_EQ( ConfigSet::empty( abc() ).to_string(), "(none)" );
    EXPECT_TRUE( s.subset_of( ConfigSet::universal( abc() ) ) );
}

// --- Parsing ---

TEST( Parse, Precedence )
{
    const auto e = parse_featexpr( "A | B & !C", abc() );
    EXPECT_TRUE( equivalent( e, parse_featexpr( "A | (B & (!C))", abc() ) ) );
    EXPECT_TRUE( equivalent( parse_featexpr( "A -> B -> C", abc() ), parse_featexpr( "(A -> B) -> C", abc() ) ) );
    EXPECT_TRUE( equivalent( parse_featexpr( "A xor B", abc() ), parse_featexpr( "(A | B) & !(A & B)", abc() ) ) );
    EXPECT_EQ( semantics( parse_featexpr( "true", abc() ) ).count(), 8u );
    EXPECT_EQ( semantics( parse_featexpr( "false", abc() ) ).count(), 0u );
}

TEST( Parse, Errors )
{
    for ( const char* bad : { "", "A &", "(A", "A B", "Q", "A ^ B", "!" } )
        EXPECT_THROW( (void)parse_featexpr( bad, abc() ), parse_error ) << bad;
}

TEST( Parse, UniverseMismatch )
{
    const FeatureUniverse other{ { "A", "B", "C" } };
    const FeatureUniverse different{ { "X" } };
    EXPECT_NO_THROW( (void)( parse_featexpr( "A", abc() ) & parse_featexpr( "B", other ) ) );
    EXPECT_THROW( (void)( parse_featexpr( "A", abc() ) & parse_featexpr( "X", different ) ), universe_mismatch );
}

// --- Properties against the oracle ---

TEST( Property, SemanticsMatchesDirectEvaluation )
{
    gen::Rng rng{ 11 };
    for ( int i = 0; i < 500; ++i )
    {
        const auto n = gen::pick( rng, 1, 6 );
        const auto names = gen::feature_names( n );
        const FeatureUniverse u{ names };
        const auto p = gen::prop( rng, n, 4 );
        const auto e = parse_featexpr( p.text( names ), u );
        const auto set = semantics( e );
        for ( std::uint32_t mask = 0; mask < ( 1U << n ); ++mask )
        {
            ASSERT_EQ( set.contains( mask ), p.eval( mask ) ) << p.text( names );
            ASSERT_EQ( sat( Configuration{ u, mask }, e ), p.eval( mask ) ) << p.text( names );
        }
    }
}

TEST( Property, PrintingRoundTrips )
{
    gen::Rng rng{ 12 };
    for ( int i = 0; i < 500; ++i )
    {
        const auto n = gen::pick( rng, 1, 5 );
        const auto names = gen::feature_names( n );
        const FeatureUniverse u{ names };
        const auto e = parse_featexpr( gen::prop( rng, n, 4 ).text( names ), u );
        const auto again = parse_featexpr( e.to_string(), u );
        ASSERT_TRUE( equivalent( e, again ) ) << e.to_string();
        ASSERT_EQ( again.to_string(), e.to_string() );
    }
}

TEST( Property, ValidConfigsAscendingAndComplete )
{
    gen::Rng rng{ 13 };
    for ( int i = 0; i < 200; ++i )
    {
        const auto n = gen::pick( rng, 1, 6 );
        const auto names = gen::feature_names( n );
        const auto model = gen::prop( rng, n, 3 );
        const auto configs = valid_configs( parse_featexpr( model.text( names ), FeatureUniverse{ names } ) );
        const auto expected = oracle::configs( model, n );
        ASSERT_EQ( configs.size(), expected.size() );
        for ( std::size_t k = 0; k < configs.size(); ++k )
            ASSERT_EQ( configs[ k ].mask(), expected[ k ] );
    }
}

TEST( Property, DeMorganAndConnectives )
{
    gen::Rng rng{ 14 };
    for ( int i = 0; i < 200; ++i )
    {
        const auto n = gen::pick( rng, 1, 5 );
        const auto names = gen::feature_names( n );
        const FeatureUniverse u{ names };
        const auto a = parse_featexpr( gen::prop( rng, n, 3 ).text( names ), u );
        const auto b = parse_featexpr( gen::prop( rng, n, 3 ).text( names ), u );
        ASSERT_TRUE( equivalent( !( a & b ), ( !a ) | ( !b ) ) );
        ASSERT_EQ( semantics( a & b ), semantics( a ) & semantics( b ) );
        ASSERT_EQ( semantics( a | b ), semantics( a ) | semantics( b ) );
        ASSERT_EQ( semantics( !a ), ~semantics( a ) );
    }
}
