#include <placidus/fts.hpp>
#include <placidus/registry.hpp>
#include <placidus/vgsn.hpp>
#include <placidus/workspace.hpp>

#include <benchmark/benchmark.h>

using namespace placidus;

namespace
{

const Workspace& demo()
{
    static const Workspace ws = Workspace::load( PLACIDUS_DEMO_DIR );
    return ws;
}

// Chain of implications over n features: F0 -> F1 -> ... has n + 1 models.
FeatExpr chain_model( std::size_t n )
{
    std::vector< std::string > names;
    for ( std::size_t i = 0; i < n; ++i )
        names.push_back( "F" + std::to_string( i ) );
    const FeatureUniverse u{ names };
    auto model = FeatExpr::all( u );
    for ( std::size_t i = 0; i + 1 < n; ++i )
        model = model & ( ( !FeatExpr::atom( u, i ) ) | FeatExpr::atom( u, i + 1 ) );
    return model;
}

// The case study developed and attested as in the walkthrough.
PlAc developed_case()
{
    const auto& ws = demo();
    const auto ctx = ws.context();
    auto ac = ws.plac( "case" );
    ac = instantiate( ac, "G0", "vquery-analytic", make_ref( "alarm_query" ), ctx );
    ac = instantiate( ac, "G0.5", "vdomdecomp", "explode", ctx );
    const std::map< std::string, std::string > formulas{
        { "Alrm_DoseRateHardLimitsViolationS", "dose_rate_property" },
        { "Alrm_EmptyReservoirS", "empty_reservoir_property" },
        { "Alrm_HardwareFailureS", "hardware_failure_property" },
        { "Alrm_WrongDrugS", "wrong_drug_property" } };
    const auto children = find_node( ac.root, "G0.5" )->children;
    for ( const auto& child : children )
    {
        const auto state = child.goal.body.as_pred()->data.at( "set" ).at( 0 ).get< std::string >();
        ac = instantiate( ac, child.id, "vmc-analytic", make_ref( formulas.at( state ) ), ctx );
        for ( const char* leaf : { ".1", ".2", ".4" } )
            ac = attest( ac, child.id + leaf, "reviewed", "analyst" );
    }
    for ( const char* id : { "G0.1", "G0.2", "G0.4" } )
        ac = attest( ac, id, "reviewed", "analyst" );
    return ac;
}

} // namespace

static void valid_configurations( benchmark::State& state )
{
    const auto model = chain_model( static_cast< std::size_t >( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( valid_configs( model ) );
}
BENCHMARK( valid_configurations )->Arg( 8 )->Arg( 16 )->Arg( 20 );

static void family_model_checking( benchmark::State& state )
{
    const auto pump = demo().fts( "pump" );
    const auto formula =
        parse_formula( demo().require( "dose_rate_property" ).content.at( "formula" ).get< std::string >() );
    const auto mode = state.range( 0 ) == 0 ? lift_mode::exact : lift_mode::quasi;
    for ( auto _ : state )
        benchmark::DoNotOptimize( mc_family( pump, formula, mode ) );
}
BENCHMARK( family_model_checking )->Arg( 0 )->Arg( 1 );

static void product_model_checking_all( benchmark::State& state )
{
    const auto pump = demo().fts( "pump" );
    const auto formula =
        parse_formula( demo().require( "dose_rate_property" ).content.at( "formula" ).get< std::string >() );
    const auto configs = valid_configs( pump.model );
    for ( auto _ : state )
        for ( const auto& c : configs )
            benchmark::DoNotOptimize( mc_product( derive_fts( pump, c ), formula ) );
}
BENCHMARK( product_model_checking_all );

static void deductive_check_case( benchmark::State& state )
{
    const auto ac = developed_case();
    const auto ctx = demo().context();
    const auto mode = state.range( 0 ) == 0 ? certification::shortcut_or_descent : certification::descent;
    for ( auto _ : state )
        benchmark::DoNotOptimize( vdeductive_check( ac, ctx, mode ) );
}
BENCHMARK( deductive_check_case )->Arg( 0 )->Arg( 1 )->Unit( benchmark::kMillisecond );

static void vquery_pump( benchmark::State& state )
{
    const auto pump = demo().fts( "pump" );
    for ( auto _ : state )
        benchmark::DoNotOptimize( vquery( pump, "Alrm_*" ) );
}
BENCHMARK( vquery_pump );

BENCHMARK_MAIN();
