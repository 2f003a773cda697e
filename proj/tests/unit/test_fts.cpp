#include "generators.hpp"

#include <placidus/fts.hpp>

#include <gtest/gtest.h>

using namespace placidus;

namespace
{

TransitionSystem chain()
{
    return ts_from_json( Value::parse( R"({
        "states": [ { "id": "s0", "labels": [ "p" ] }, { "id": "s1", "labels": [ "p" ] }, { "id": "s2", "labels": [ "q" ] } ],
        "transitions": [ { "src": "s0", "action": "a", "dst": "s1" }, { "src": "s1", "action": "b", "dst": "s2" },
                         { "src": "s1", "action": "c", "dst": "s0" } ],
        "initial": [ "s0" ] })" ) );
}

Fts xor_system()
{
    return fts_from_json( Value::parse( R"({
        "universe": [ "A", "B" ], "feature_model": "A xor B",
        "states": [ { "id": "s0", "labels": [ "s0" ] }, { "id": "s1", "labels": [ "s1" ] },
                    { "id": "s2", "labels": [ "s2" ], "pc": "A" } ],
        "transitions": [ { "src": "s0", "action": "a", "dst": "s1" }, { "src": "s1", "action": "d", "dst": "s2", "pc": "A" },
                         { "src": "s2", "action": "c", "dst": "s0", "pc": "A" }, { "src": "s1", "action": "b", "dst": "s0", "pc": "B" } ],
        "initial": [ "s0" ] })" ) );
}

} // namespace

// --- Formula parsing ---

TEST( Formula, ParsesEveryShape )
{
    EXPECT_EQ( parse_formula( "AG p" ).k, TemporalFormula::kind::ag );
    EXPECT_EQ( parse_formula( "EF (p & !q)" ).k, TemporalFormula::kind::ef );
    EXPECT_EQ( parse_formula( "A[p U q | r]" ).k, TemporalFormula::kind::au );
    const auto f = parse_formula( "AG (alarm -> A[!dose U cleared])" );
    EXPECT_EQ( f.k, TemporalFormula::kind::ag_implies_au );
    EXPECT_EQ( f.labels(), ( std::set< std::string >{ "alarm", "cleared", "dose" } ) );
    EXPECT_EQ( parse_formula( "AG (p | q)" ).k, TemporalFormula::kind::ag );
    EXPECT_EQ( parse_formula( f.to_string() ).to_string(), f.to_string() );
}

TEST( Formula, Errors )
{
    for ( const char* bad : { "", "AG", "A[p U]", "EX p", "AG p q", "AG (p -> q)", "A[p q]" } )
        EXPECT_THROW( (void)parse_formula( bad ), parse_error ) << bad;
}

// --- Product model checking ---

TEST( ProductMc, VerdictsAndCounterexamples )
{
    const auto ts = chain();
    EXPECT_FALSE( mc_product( ts, parse_formula( "AG p" ) ).passed() );
    const auto ag = mc_product( ts, parse_formula( "AG p" ) );
    EXPECT_EQ( ag.path.back(), "s2" );
    EXPECT_EQ( ag.violating, "s2" );
    EXPECT_TRUE( mc_product( ts, parse_formula( "EF q" ) ).passed() );
    // s0 -> s1 -> s0 loops forever without q.
    const auto au = mc_product( ts, parse_formula( "A[p U q]" ) );
    EXPECT_FALSE( au.passed() );
    EXPECT_TRUE( au.loop.has_value() );
    EXPECT_TRUE( mc_product( ts, parse_formula( "AG (q -> A[q U q])" ) ).passed() );
    EXPECT_EQ( unknown_labels( ts, parse_formula( "AG (p | zz)" ) ), std::vector< std::string >{ "zz" } );
}

TEST( ProductMc, DeadlockLoopsOnItself )
{
    // s2 has no successors: AG q from s2 holds, A[true U p] from s2 fails.
    auto ts = chain();
    ts.initial = { "s2" };
    EXPECT_TRUE( mc_product( ts, parse_formula( "AG q" ) ).passed() );
    EXPECT_FALSE( mc_product( ts, parse_formula( "A[true U p]" ) ).passed() );
}

TEST( Property, ProductMcMatchesOracle )
{
    gen::Rng rng{ 41 };
    for ( int i = 0; i < 400; ++i )
    {
        const auto ts = gen::ts( rng, 6 );
        const auto f = gen::formula( rng );
        ASSERT_EQ( mc_product( gen::to_library( ts ), parse_formula( f.text() ) ).passed(), oracle::holds( ts, f ) )
            << f.text() << " on " << to_json( gen::to_library( ts ) ).dump();
    }
}

// --- Featured systems ---

TEST( Fts, DerivesProducts )
{
    const auto fts = xor_system();
    const auto at_a = derive_fts( fts, Configuration::parse( fts.universe(), "A" ) );
    EXPECT_EQ( at_a.states.size(), 3u );
    EXPECT_EQ( at_a.transitions.size(), 3u );
    const auto at_b = derive_fts( fts, Configuration::parse( fts.universe(), "B" ) );
    EXPECT_EQ( at_b.states.size(), 2u );
    EXPECT_EQ( at_b.transitions.size(), 2u );
    EXPECT_THROW( (void)derive_fts( fts, Configuration::parse( fts.universe(), "A,B" ) ), error );
}

TEST( Fts, RejectsTransitionsOutsideEndpoints )
{
    auto json = to_json( xor_system() );
    json[ "transitions" ][ 1 ][ "pc" ] = "true"; // s1 -> s2 where s2 is absent
    EXPECT_THROW( fts_from_json( json ).validate(), error );
}

TEST( Fts, QueryAndLiftedQuery )
{
    const auto fts = xor_system();
    const auto found = vquery( fts, "s*" );
    EXPECT_EQ( found.size(), 3u );
    for ( const auto& config : valid_configs( fts.model ) )
    {
        const auto lifted = derive_set( found, config );
        EXPECT_EQ( std::vector< std::string >( lifted.begin(), lifted.end() ), query( derive_fts( fts, config ), "s*" ) );
    }
    EXPECT_TRUE( glob_match( "Alrm_*S", "Alrm_WrongDrugS" ) );
    EXPECT_FALSE( glob_match( "Alrm_*", "Idle" ) );
    EXPECT_TRUE( glob_match( "*", "" ) );
}

TEST( Property, FamilyMcMatchesProducts )
{
    gen::Rng rng{ 42 };
    for ( int i = 0; i < 200; ++i )
    {
        const auto n = gen::pick( rng, 1, 3 );
        const auto system = gen::fts( rng, n, 6 );
        const auto fts = fts_from_json( gen::to_json( system ) );
        const auto formula = parse_formula( gen::formula( rng ).text() );
        const auto exact = mc_family( fts, formula, lift_mode::exact );
        const auto quasi = mc_family( fts, formula, lift_mode::quasi );
        bool all = true;
        for ( const auto& c : valid_configs( fts.model ) )
        {
            const auto product = mc_product( derive_fts( fts, c ), formula );
            ASSERT_NE( exact.at( c ), nullptr );
            ASSERT_EQ( exact.at( c )->passed(), product.passed() );
            all = all && product.passed();
        }
        ASSERT_EQ( exact.passed(), all );
        ASSERT_EQ( quasi.passed(), all );
    }
}

TEST( Serialization, RoundTrips )
{
    const auto ts = chain();
    EXPECT_EQ( ts_from_json( to_json( ts ) ), ts );
    const auto result = mc_product( ts, parse_formula( "A[p U q]" ) );
    EXPECT_EQ( mc_result_from_json( to_json( result ) ), result );
    const auto family = mc_family( xor_system(), parse_formula( "AG !s2" ), lift_mode::exact );
    const auto json = to_json( family );
    EXPECT_EQ( json.at( "classes" ).size(), family.classes.size() );
    EXPECT_FALSE( family.passed() );
}
