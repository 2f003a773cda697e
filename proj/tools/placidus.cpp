#include <placidus/dot.hpp>
#include <placidus/error.hpp>
#include <placidus/fts.hpp>
#include <placidus/gsn.hpp>
#include <placidus/io.hpp>
#include <placidus/registry.hpp>
#include <placidus/variability.hpp>
#include <placidus/vgsn.hpp>
#include <placidus/workspace.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

namespace
{

using namespace placidus;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Input problems the user must fix (exit 2), as opposed to failed checks.
struct usage_error : error
{
    using error::error;
};

struct common_options
{
    std::string workspace;
    bool json = false;
};

void emit( const Value& value )
{
    std::cout << value.dump( 2 ) << '\n';
}

Value members_json( const std::vector< Configuration >& configs )
{
    Value out = Value::array();
    for ( const auto& c : configs )
        out.push_back( c.members() );
    return out;
}

// Long configuration lists are cut short; --json always lists them all.
std::string brief( const ConfigSet& set )
{
    constexpr std::size_t shown = 4;
    const auto configs = set.configurations();
    std::string out = std::to_string( configs.size() ) + " configuration(s):";
    for ( std::size_t i = 0; i < configs.size() && i < shown; ++i )
        out += configs[ i ].members().empty() ? " {}" : " {" + configs[ i ].to_string() + "}";
    if ( configs.size() > shown )
        out += " ... (+" + std::to_string( configs.size() - shown ) + " more)";
    return out;
}

// --- Argument helpers ---

// Instantiation data: a construction keyword, an artifact name, or literal JSON.
Value data_argument( const Workspace& ws, const std::string& text )
{
    if ( text == "explode" || text == "aggregate" )
        return text;
    if ( ws.find( text ) != nullptr )
        return make_ref( text );
    try
    {
        return Value::parse( text );
    }
    catch ( const nlohmann::json::parse_error& )
    {
        throw usage_error{ "'" + text + "' is neither an artifact, a keyword nor JSON" };
    }
}

Configuration config_argument( const FeatExpr& model, const std::string& text )
{
    Configuration config;
    try
    {
        config = Configuration::parse( model.universe(), text );
    }
    catch ( const std::exception& e )
    {
        throw usage_error{ e.what() };
    }
    if ( !sat( config, model ) )
        throw usage_error{ "configuration " + config.to_string() + " is not valid under " + model.to_string() };
    return config;
}

// Feature model an artifact's variability is measured against.
std::optional< FeatExpr > model_of( const Workspace& ws, const std::string& name )
{
    const auto* a = ws.find( name );
    if ( a == nullptr )
        return std::nullopt;
    if ( a->kind == "feature-model" )
        return ws.feature_model( name );
    if ( a->kind == "fts" )
        return ws.fts( name ).model;
    if ( a->kind == "plac" )
        return ws.plac( name ).model;
    if ( a->universe )
        return FeatExpr::all( *a->universe );
    return std::nullopt;
}

// First model found among the artifacts a value (transitively) references.
std::optional< FeatExpr > model_for_value( const Workspace& ws, const Value& value, std::set< std::string >& seen )
{
    if ( is_ref( value ) )
    {
        const auto name = value.at( "ref" ).get< std::string >();
        if ( !seen.insert( name ).second )
            return std::nullopt;
        if ( auto model = model_of( ws, name ) )
            return model;
        if ( const auto* a = ws.find( name ) )
            return model_for_value( ws, a->content, seen );
        return std::nullopt;
    }
    if ( value.is_object() || value.is_array() )
        for ( const auto& item : value )
            if ( auto model = model_for_value( ws, item, seen ) )
                return model;
    return std::nullopt;
}

// --- configs ---

struct configs_options : common_options
{
    std::string model;
};

int run_configs( const configs_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto model = model_of( ws, o.model );
    if ( !model )
        throw usage_error{ "artifact '" + o.model + "' has no feature model" };
    const auto configs = valid_configs( *model );
    if ( o.json )
        emit( { { "feature_model", o.model }, { "count", configs.size() }, { "configurations", members_json( configs ) } } );
    else
        for ( const auto& c : configs )
            std::cout << c.to_string() << '\n';
    return exit_ok;
}

// --- derive ---

struct derive_options : common_options
{
    std::string artifact;
    std::string config;
    std::string output;
};

int run_derive( const derive_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto& a = ws.require( o.artifact );
    const auto model = model_of( ws, o.artifact );
    if ( !model )
        throw usage_error{ "artifact '" + o.artifact + "' is not variational" };
    const auto config = config_argument( *model, o.config );

    Value ref = make_ref( o.artifact );
    ref[ "config" ] = config.members();
    const auto product = *ws.resolve( ref );
    const std::string kind = a.kind == "fts" ? "ts" : a.kind == "plac" ? "ac" : a.kind == "varset" ? "set" : a.kind;

    if ( !o.output.empty() )
        write_json_file( o.output, product );
    if ( o.json )
    {
        Value out{ { "artifact", o.artifact }, { "config", config.members() }, { "kind", kind } };
        if ( o.output.empty() )
            out[ "product" ] = product;
        else
            out[ "output" ] = o.output;
        emit( out );
    }
    else if ( o.output.empty() )
        std::cout << product.dump( 2 ) << '\n';
    else
        std::cout << "wrote " << kind << " for " << config.to_string() << " to " << o.output << '\n';
    return exit_ok;
}

// --- check-ac ---

struct check_ac_options : common_options
{
    std::string artifact;
    bool descent = false;
};

int verdict_exit( deductive_verdict v )
{
    return v == deductive_verdict::deductive ? exit_ok : exit_failed;
}

std::string verdict_line( deductive_verdict v, std::size_t assumptions )
{
    std::string line = "verdict: ";
    if ( v == deductive_verdict::deductive_modulo_assumptions )
        line += "deductive modulo attested assumptions (" + std::to_string( assumptions ) + " node(s))";
    else
        line += to_string( v );
    return line;
}

int run_check_ac( const check_ac_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto& a = ws.require( o.artifact, { "ac", "plac" } );
    const auto ctx = ws.context();

    if ( a.kind == "ac" )
    {
        const auto report = deductive_check( ws.ac( o.artifact ), ctx );
        if ( o.json )
        {
            Value nodes = Value::array();
            for ( const auto& n : report.nodes )
                nodes.push_back( { { "id", n.id }, { "status", to_string( n.status ) }, { "detail", n.detail } } );
            emit( { { "verdict", to_string( report.verdict ) },
                    { "assumptions", report.assumptions },
                    { "failures", report.failures },
                    { "nodes", nodes } } );
        }
        else
        {
            for ( const auto& n : report.nodes )
                std::cout << n.id << "  " << to_string( n.status ) << ( n.detail.empty() ? "" : "  " + n.detail ) << '\n';
            std::cout << verdict_line( report.verdict, report.assumptions.size() ) << '\n';
        }
        return verdict_exit( report.verdict );
    }

    const auto ac = ws.plac( o.artifact );
    const auto report = vdeductive_check( ac, ctx, o.descent ? certification::descent : certification::shortcut_or_descent );
    if ( o.json )
    {
        Value nodes = Value::array();
        for ( const auto& n : report.nodes )
            nodes.push_back( { { "id", n.id },
                               { "status", to_string( n.status ) },
                               { "detail", n.detail },
                               { "present", n.present.count() },
                               { "failing", members_json( n.failing().configurations() ) },
                               { "assumed", members_json( n.assumed.configurations() ) } } );
        emit( { { "verdict", to_string( report.verdict ) },
                { "configurations", report.domain.count() },
                { "assumptions", report.assumptions },
                { "failing", members_json( report.failing.configurations() ) },
                { "nodes", nodes } } );
    }
    else
    {
        for ( const auto& n : report.nodes )
        {
            std::cout << n.id << "  " << to_string( n.status ) << "  (present in " << n.present.count() << ")";
            if ( !n.detail.empty() && n.status != node_status::certified )
                std::cout << "  " << n.detail;
            std::cout << '\n';
            if ( !n.failing().is_empty() )
                std::cout << "    failing in " << brief( n.failing() ) << '\n';
        }
        if ( !report.failing.is_empty() )
            std::cout << "failing in " << brief( report.failing ) << '\n';
        std::cout << verdict_line( report.verdict, report.assumptions.size() ) << '\n';
    }
    return verdict_exit( report.verdict );
}

// --- instantiate ---

struct instantiate_options : common_options
{
    std::string artifact;
    std::string template_id;
    std::string goal;
    std::string data;
    std::string aux;
    std::string text;
    std::string signer = "analyst";
};

// The AC or PL AC holding `node_id` when none is named.
std::string locate_case( const Workspace& ws, const std::string& node_id )
{
    std::vector< std::string > found;
    for ( const auto& [ name, a ] : ws.artifacts() )
    {
        if ( a.kind == "ac" && find_node( ws.ac( name ), node_id ) != nullptr )
            found.push_back( name );
        if ( a.kind == "plac" && find_node( ws.plac( name ).root, node_id ) != nullptr )
            found.push_back( name );
    }
    if ( found.size() != 1 )
        throw usage_error{ found.empty() ? "no assurance case has a node '" + node_id + "'"
                                         : "node '" + node_id + "' exists in several assurance cases; name one" };
    return found.front();
}

int run_instantiate( const instantiate_options& o )
{
    auto ws = Workspace::load( o.workspace );
    const auto name = o.artifact.empty() ? locate_case( ws, o.goal ) : o.artifact;
    const auto& a = ws.require( name, { "ac", "plac" } );
    const auto ctx = ws.context();
    const bool attesting = o.template_id == "attest";

    if ( !o.aux.empty() )
        throw usage_error{ "template '" + o.template_id + "' takes no --aux; pass its data with --data" };
    if ( attesting && o.text.empty() )
        throw usage_error{ "attest needs --text" };
    if ( !attesting && o.data.empty() )
        throw usage_error{ "template '" + o.template_id + "' needs --data" };

    std::vector< std::string > children;
    try
    {
        if ( a.kind == "plac" )
        {
            auto ac = ws.plac( name );
            ac = attesting ? attest( ac, o.goal, o.text, o.signer )
                           : instantiate( ac, o.goal, o.template_id, data_argument( ws, o.data ), ctx );
            for ( const auto& child : find_node( ac.root, o.goal )->children )
                children.push_back( child.id );
            ws.save_plac( name, ac );
        }
        else
        {
            auto root = ws.ac( name );
            root = attesting ? attest( root, o.goal, o.text, o.signer )
                             : instantiate( root, o.goal, o.template_id, data_argument( ws, o.data ), ctx );
            for ( const auto& child : find_node( root, o.goal )->children )
                children.push_back( child.id );
            ws.save_ac( name, root );
        }
    }
    catch ( const instantiation_refused& e )
    {
        if ( o.json )
            emit( { { "status", "refused" }, { "node", o.goal }, { "template", o.template_id }, { "message", e.what() },
                    { "witnesses", e.witnesses() } } );
        else
        {
            std::cout << "refused: " << e.what() << '\n';
            for ( const auto& w : e.witnesses() )
                std::cout << "  witness " << w << '\n';
        }
        return exit_failed;
    }

    if ( o.json )
        emit( { { "status", "instantiated" }, { "artifact", name }, { "node", o.goal }, { "template", o.template_id },
                { "children", children } } );
    else
    {
        std::cout << ( attesting ? "attested " : "instantiated " + o.template_id + " at " ) << o.goal << " in " << name;
        if ( !children.empty() )
        {
            std::cout << ":";
            for ( const auto& c : children )
                std::cout << ' ' << c;
        }
        std::cout << '\n';
    }
    return exit_ok;
}

// --- check-lift ---

struct check_lift_options : common_options
{
    std::string product;
    std::string family;
    std::string input;
    std::string model;
    bool quasi = false;
};

int run_check_lift( const check_lift_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto ctx = ws.context();
    const auto& analyses = ctx.reg().analyses;
    const auto& product = analyses.require_product( o.product );
    const auto& family = analyses.require_family( o.family );
    const auto input = data_argument( ws, o.input );

    std::set< std::string > seen;
    const auto model = o.model.empty() ? model_for_value( ws, input, seen ) : model_of( ws, o.model );
    if ( !model )
        throw usage_error{ "cannot tell the feature model of the input; pass --model" };
    const auto domain = valid_configs( *model );

    const auto product_fn = [ & ]( const Value& x ) { return product.run( x, ctx ); };
    const auto family_fn = [ & ]( const Value& x ) { return family.run( ctx.resolve( x ), ctx ); };
    const auto derive_in = [ & ]( const Value& x, const Configuration& c ) { return ctx.resolve( ctx.derive( x, c ) ); };
    const auto report =
        o.quasi ? check_quasi_lift_over( domain, product_fn, family_fn, input, derive_in,
                                         [ & ]( const Value& out ) { return family.clean( out ); },
                                         []( const Value& out ) { return passed( out ); } )
                : check_lift_over( domain, product_fn, family_fn, input, derive_in,
                                   [ & ]( const Value& out, const Configuration& c )
                                   { return family.derive_output( out, c, ctx ); } );

    if ( o.json )
    {
        Value witnesses = Value::array();
        for ( const auto& w : report.witnesses )
            witnesses.push_back( { { "config", w.config.members() }, { "product", w.product_side }, { "family", w.family_side } } );
        emit( { { "status", to_string( report.status ) },
                { "configurations_checked", report.configurations_checked },
                { "witnesses", witnesses } } );
    }
    else
    {
        std::cout << "status: " << to_string( report.status ) << " (" << report.configurations_checked
                  << " configurations)\n";
        for ( const auto& w : report.witnesses )
            std::cout << "  witness " << w.config.to_string() << "\n    product: " << w.product_side
                      << "\n    family:  " << w.family_side << '\n';
    }
    return report.ok() ? exit_ok : exit_failed;
}

// --- modelcheck ---

struct modelcheck_options : common_options
{
    std::string model;
    std::string formula;
    std::string family = "exact";
};

void print_result( const McResult& r, const std::string& indent )
{
    std::cout << indent << "verdict: " << to_string( r.result ) << '\n';
    if ( r.passed() || r.path.empty() )
        return;
    std::cout << indent << "counterexample:";
    for ( std::size_t i = 0; i < r.path.size(); ++i )
        std::cout << ( i == 0 ? " " : " -> " ) << r.path[ i ];
    if ( r.loop )
        std::cout << " (loops back to " << r.path[ *r.loop ] << ")";
    std::cout << '\n';
}

int run_modelcheck( const modelcheck_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto& a = ws.require( o.model, { "fts", "ts" } );
    std::string text = o.formula;
    if ( const auto* f = ws.find( o.formula ); f != nullptr && f->kind == "formula" )
        text = f->content.at( "formula" ).get< std::string >();
    TemporalFormula formula;
    try
    {
        formula = parse_formula( text );
    }
    catch ( const parse_error& e )
    {
        throw usage_error{ e.what() };
    }

    if ( a.kind == "ts" )
    {
        const auto ts = ws.ts( o.model );
        for ( const auto& label : unknown_labels( ts, formula ) )
            std::cerr << "warning: no state carries label '" << label << "'\n";
        const auto result = mc_product( ts, formula );
        if ( o.json )
            emit( { { "verdict", to_string( result.result ) }, { "result", to_json( result ) } } );
        else
            print_result( result, "" );
        return result.passed() ? exit_ok : exit_failed;
    }

    if ( o.family != "exact" && o.family != "quasi" )
        throw usage_error{ "--family must be exact or quasi" };
    const auto fts = ws.fts( o.model );
    const auto result = mc_family( fts, formula, o.family == "exact" ? lift_mode::exact : lift_mode::quasi );
    if ( o.json )
        emit( to_json( result ) );
    else
    {
        for ( std::size_t i = 0; i < result.classes.size(); ++i )
        {
            const auto& cls = result.classes[ i ];
            std::cout << "class " << i + 1 << ": " << brief( cls.configs ) << '\n';
            print_result( cls.result, "  " );
        }
        std::cout << "family verdict (" << o.family << "): " << ( result.passed() ? "pass" : "fail" ) << '\n';
    }
    return result.passed() ? exit_ok : exit_failed;
}

// --- query ---

struct query_options : common_options
{
    std::string model;
    std::string pattern;
    bool lifted = false;
};

int run_query( const query_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto& a = ws.require( o.model, { "fts", "ts" } );

    if ( a.kind == "ts" )
    {
        const auto result = query( ws.ts( o.model ), o.pattern );
        if ( o.json )
            emit( { { "result", result } } );
        else
            for ( const auto& id : result )
                std::cout << id << '\n';
        return exit_ok;
    }

    const auto fts = ws.fts( o.model );
    if ( o.lifted )
    {
        const auto result = vquery( fts, o.pattern );
        if ( o.json )
        {
            Value items = Value::array();
            for ( const auto& e : result )
                items.push_back( { { "value", e.value }, { "pc", e.pc.to_string() } } );
            emit( { { "result", { { "vset", items } } } } );
        }
        else
            for ( const auto& e : result )
                std::cout << e.value << "  [" << e.pc.to_string() << "]\n";
        return exit_ok;
    }

    Value per_config = Value::array();
    for ( const auto& config : valid_configs( fts.model ) )
    {
        const auto result = query( derive_fts( fts, config ), o.pattern );
        per_config.push_back( { { "config", config.members() }, { "result", result } } );
        if ( !o.json )
        {
            std::cout << config.to_string() << ':';
            for ( const auto& id : result )
                std::cout << ' ' << id;
            std::cout << '\n';
        }
    }
    if ( o.json )
        emit( { { "products", per_config } } );
    return exit_ok;
}

// --- render ---

struct render_options : common_options
{
    std::string artifact;
    std::string output;
    bool status = false;
};

int run_render( const render_options& o )
{
    const auto ws = Workspace::load( o.workspace );
    const auto& a = ws.require( o.artifact, { "ac", "plac" } );
    const auto ctx = ws.context();

    std::string dot;
    std::size_t nodes = 0;
    if ( a.kind == "ac" )
    {
        const auto root = ws.ac( o.artifact );
        nodes = count_nodes( root );
        std::optional< DeductiveReport > report;
        if ( o.status )
            report = deductive_check( root, ctx );
        dot = render_dot( root, report ? &*report : nullptr );
    }
    else
    {
        const auto ac = ws.plac( o.artifact );
        nodes = count_nodes( ac.root );
        std::optional< VDeductiveReport > report;
        if ( o.status )
            report = vdeductive_check( ac, ctx );
        dot = render_dot( ac, report ? &*report : nullptr );
    }

    if ( !o.output.empty() )
    {
        std::ofstream out{ o.output };
        if ( !out )
            throw usage_error{ "cannot write " + o.output };
        out << dot;
    }
    if ( o.json )
    {
        Value out{ { "artifact", o.artifact }, { "nodes", nodes } };
        if ( o.output.empty() )
            out[ "dot" ] = dot;
        else
            out[ "output" ] = o.output;
        emit( out );
    }
    else if ( o.output.empty() )
        std::cout << dot;
    return exit_ok;
}

// --- Dispatch ---

template < class Options >
CLI::App* subcommand( CLI::App& app, const char* name, const char* description, Options& o )
{
    auto* sub = app.add_subcommand( name, description );
    sub->add_option( "workspace", o.workspace, "Workspace directory or manifest" )->required();
    sub->add_flag( "--json", o.json, "Machine-readable output" );
    return sub;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "placidus: product lines of assurance cases" };
    app.require_subcommand( 1 );

    configs_options configs;
    auto* configs_cmd = subcommand( app, "configs", "List the valid configurations of a feature model", configs );
    configs_cmd->add_option( "model", configs.model, "Feature-model (or fts / plac) artifact" )->required();

    derive_options derive;
    auto* derive_cmd = subcommand( app, "derive", "Derive the product of an artifact at a configuration", derive );
    derive_cmd->add_option( "artifact", derive.artifact, "fts, plac, varset or other variational artifact" )->required();
    derive_cmd->add_option( "--config", derive.config, "Comma-separated features, e.g. \"A,B\"" )->required();
    derive_cmd->add_option( "-o,--output", derive.output, "Write the product to this file" );

    check_ac_options check_ac;
    auto* check_ac_cmd = subcommand( app, "check-ac", "Check that an (PL) assurance case is deductive", check_ac );
    check_ac_cmd->add_option( "artifact", check_ac.artifact, "ac or plac artifact" )->required();
    check_ac_cmd->add_flag( "--descent", check_ac.descent, "Certify lifted strategies per configuration only" );

    instantiate_options inst;
    auto* inst_cmd = subcommand( app, "instantiate", "Develop a goal with a template (in place, keeps .bak)", inst );
    inst_cmd->add_option( "artifact", inst.artifact, "ac or plac artifact (default: the one holding --goal)" );
    inst_cmd->add_option( "--template", inst.template_id, "Template id, or 'attest'" )->required();
    inst_cmd->add_option( "--goal", inst.goal, "Id of the undeveloped node" )->required();
    inst_cmd->add_option( "--data", inst.data, "Instantiation data: artifact, explode|aggregate, or JSON" );
    inst_cmd->add_option( "--aux", inst.aux, "Auxiliary data (no built-in template takes one)" );
    inst_cmd->add_option( "--text", inst.text, "Attestation text (attest)" );
    inst_cmd->add_option( "--signer", inst.signer, "Attestation signer (attest)" );

    check_lift_options lift;
    auto* lift_cmd = subcommand( app, "check-lift", "Check a family analysis against its product analysis", lift );
    lift_cmd->add_option( "--product", lift.product, "Product analysis id" )->required();
    lift_cmd->add_option( "--family", lift.family, "Family analysis id" )->required();
    lift_cmd->add_option( "--input", lift.input, "Input artifact (or JSON)" )->required();
    lift_cmd->add_option( "--model", lift.model, "Feature model to enumerate (default: from the input)" );
    lift_cmd->add_flag( "--quasi", lift.quasi, "Check soundness only" );

    modelcheck_options mc;
    auto* mc_cmd = subcommand( app, "modelcheck", "Model-check an fts or ts", mc );
    mc_cmd->add_option( "model", mc.model, "fts or ts artifact" )->required();
    mc_cmd->add_option( "formula", mc.formula, "Formula text or formula artifact" )->required();
    mc_cmd->add_option( "--family", mc.family, "exact or quasi (fts only)" );

    query_options q;
    auto* query_cmd = subcommand( app, "query", "Find states by label glob", q );
    query_cmd->add_option( "model", q.model, "fts or ts artifact" )->required();
    query_cmd->add_option( "pattern", q.pattern, "Label glob, e.g. Alrm_*" )->required();
    query_cmd->add_flag( "--lifted", q.lifted, "Annotate results with presence conditions (fts)" );

    render_options render;
    auto* render_cmd = subcommand( app, "render", "Render an (PL) assurance case as DOT", render );
    render_cmd->add_option( "artifact", render.artifact, "ac or plac artifact" )->required();
    render_cmd->add_option( "-o,--output", render.output, "Output file (default: stdout)" );
    render_cmd->add_flag( "--status", render.status, "Colour nodes by deductive status" );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const auto code = app.exit( e );
        return code == 0 ? exit_ok : exit_usage;
    }

    bool json = false;
    for ( const auto* sub : app.get_subcommands() )
        json = sub->get_option( "--json" )->as< bool >();

    try
    {
        if ( configs_cmd->parsed() )
            return run_configs( configs );
        if ( derive_cmd->parsed() )
            return run_derive( derive );
        if ( check_ac_cmd->parsed() )
            return run_check_ac( check_ac );
        if ( inst_cmd->parsed() )
            return run_instantiate( inst );
        if ( lift_cmd->parsed() )
            return run_check_lift( lift );
        if ( mc_cmd->parsed() )
            return run_modelcheck( mc );
        if ( query_cmd->parsed() )
            return run_query( q );
        if ( render_cmd->parsed() )
            return run_render( render );
    }
    catch ( const workspace_error& e )
    {
        if ( json )
            emit( { { "error", "workspace" }, { "problems", e.problems() } } );
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const std::exception& e )
    {
        if ( json )
            emit( { { "error", e.what() } } );
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
