#include "placidus/fts.hpp"

#include "placidus/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace placidus
{

// --- Systems ----------------------------------------------------------------

namespace
{

template < class States, class Transitions >
void check_graph( const States& states, const Transitions& transitions, const std::vector< std::string >& initial,
                  std::vector< std::string >& out )
{
    std::unordered_set< std::string > ids;
    for ( const auto& s : states )
        if ( !ids.insert( s.id ).second )
            out.push_back( "duplicate state '" + s.id + "'" );
    for ( const auto& t : transitions )
    {
        if ( ids.count( t.src ) == 0 )
            out.push_back( "transition " + t.action + " starts at undeclared state '" + t.src + "'" );
        if ( ids.count( t.dst ) == 0 )
            out.push_back( "transition " + t.action + " ends at undeclared state '" + t.dst + "'" );
    }
    if ( initial.empty() )
        out.emplace_back( "no initial state" );
    for ( const auto& id : initial )
        if ( ids.count( id ) == 0 )
            out.push_back( "initial state '" + id + "' is not declared" );
}

std::vector< std::string > sorted_labels( std::vector< std::string > labels )
{
    std::sort( labels.begin(), labels.end() );
    labels.erase( std::unique( labels.begin(), labels.end() ), labels.end() );
    return labels;
}

} // namespace

std::vector< std::string > TransitionSystem::problems() const
{
    std::vector< std::string > out;
    check_graph( states, transitions, initial, out );
    return out;
}

std::vector< std::string > Fts::problems() const
{
    std::vector< std::string > out;
    check_graph( states, transitions, initial, out );
    if ( !out.empty() )
        return out;

    const auto& u = universe();
    const auto valid = semantics( model );
    std::unordered_map< std::string, ConfigSet > state_sets;
    for ( const auto& s : states )
    {
        if ( !( s.pc.universe() == u ) )
        {
            out.push_back( "state '" + s.id + "' has a presence condition over another universe" );
            continue;
        }
        state_sets.emplace( s.id, semantics( s.pc ) );
    }
    for ( const auto& t : transitions )
    {
        if ( !( t.pc.universe() == u ) )
        {
            out.push_back( "transition " + t.src + " -" + t.action + "-> " + t.dst +
                           " has a presence condition over another universe" );
            continue;
        }
        const auto present = semantics( t.pc ) & valid;
        for ( const auto* end : { &t.src, &t.dst } )
        {
            const auto it = state_sets.find( *end );
            if ( it != state_sets.end() && !present.subset_of( it->second ) )
                out.push_back( "transition " + t.src + " -" + t.action + "-> " + t.dst + " [" + t.pc.to_string() +
                               "] can be present without state '" + *end + "'" );
        }
    }
    for ( const auto& id : initial )
    {
        const auto it = state_sets.find( id );
        if ( it != state_sets.end() && !valid.subset_of( it->second ) )
            out.push_back( "initial state '" + id + "' is absent in some valid configuration" );
    }
    return out;
}

void Fts::validate() const
{
    const auto found = problems();
    if ( found.empty() )
        return;
    std::string message = "ill-formed featured transition system:";
    for ( const auto& p : found )
        message += "\n  " + p;
    throw error{ message };
}

TransitionSystem derive_fts( const Fts& fts, const Configuration& config )
{
    if ( !sat( config, fts.model ) )
        throw error{ "configuration " + config.to_string() + " is not valid under " + fts.model.to_string() };

    TransitionSystem ts;
    std::unordered_set< std::string > kept;
    for ( const auto& s : fts.states )
    {
        if ( !sat( config, s.pc ) )
            continue;
        kept.insert( s.id );
        ts.states.push_back( { s.id, sorted_labels( s.labels ) } );
    }
    for ( const auto& t : fts.transitions )
    {
        if ( !sat( config, t.pc ) )
            continue;
        if ( kept.count( t.src ) == 0 || kept.count( t.dst ) == 0 )
            throw error{ "transition " + t.src + " -" + t.action + "-> " + t.dst + " survives at " +
                         config.to_string() + " without its endpoints" };
        ts.transitions.push_back( { t.src, t.action, t.dst } );
    }
    for ( const auto& id : fts.initial )
        if ( kept.count( id ) != 0 )
            ts.initial.push_back( id );
    return ts;
}

// --- State predicates -------------------------------------------------------

struct StatePredicate::node
{
    kind k;
    std::string name;
    std::shared_ptr< const node > a;
    std::shared_ptr< const node > b;
};

StatePredicate::StatePredicate() : StatePredicate{ truth() } {}

StatePredicate StatePredicate::truth()
{
    static const auto n = std::make_shared< const node >( node{ kind::truth, {}, nullptr, nullptr } );
    return StatePredicate{ n };
}

StatePredicate StatePredicate::falsity()
{
    static const auto n = std::make_shared< const node >( node{ kind::falsity, {}, nullptr, nullptr } );
    return StatePredicate{ n };
}

StatePredicate StatePredicate::label( std::string name )
{
    return StatePredicate{ std::make_shared< const node >( node{ kind::label, std::move( name ), nullptr, nullptr } ) };
}

StatePredicate operator!( const StatePredicate& p )
{
    using node = StatePredicate::node;
    return StatePredicate{ std::make_shared< const node >( node{ StatePredicate::kind::negation, {}, p._node, nullptr } ) };
}

StatePredicate operator&( const StatePredicate& lhs, const StatePredicate& rhs )
{
    using node = StatePredicate::node;
    return StatePredicate{
        std::make_shared< const node >( node{ StatePredicate::kind::conjunction, {}, lhs._node, rhs._node } ) };
}

StatePredicate operator|( const StatePredicate& lhs, const StatePredicate& rhs )
{
    using node = StatePredicate::node;
    return StatePredicate{
        std::make_shared< const node >( node{ StatePredicate::kind::disjunction, {}, lhs._node, rhs._node } ) };
}

StatePredicate::kind StatePredicate::get_kind() const { return _node->k; }
const std::string& StatePredicate::name() const { return _node->name; }
StatePredicate StatePredicate::operand() const { return StatePredicate{ _node->a }; }
StatePredicate StatePredicate::lhs() const { return StatePredicate{ _node->a }; }
StatePredicate StatePredicate::rhs() const { return StatePredicate{ _node->b }; }

bool StatePredicate::holds( const std::vector< std::string >& labels ) const
{
    switch ( _node->k )
    {
    case kind::truth: return true;
    case kind::falsity: return false;
    case kind::label: return std::binary_search( labels.begin(), labels.end(), _node->name );
    case kind::negation: return !operand().holds( labels );
    case kind::conjunction: return lhs().holds( labels ) && rhs().holds( labels );
    case kind::disjunction: return lhs().holds( labels ) || rhs().holds( labels );
    }
    return false;
}

std::set< std::string > StatePredicate::labels() const
{
    std::set< std::string > out;
    switch ( _node->k )
    {
    case kind::truth:
    case kind::falsity: break;
    case kind::label: out.insert( _node->name ); break;
    case kind::negation: out = operand().labels(); break;
    case kind::conjunction:
    case kind::disjunction:
        out = lhs().labels();
        out.merge( rhs().labels() );
        break;
    }
    return out;
}

std::string StatePredicate::to_string() const
{
    const auto wrap = []( const StatePredicate& p, kind parent )
    {
        const auto k = p.get_kind();
        const bool needs = ( k == kind::disjunction && parent != kind::disjunction ) ||
                           ( k == kind::conjunction && parent == kind::negation );
        return needs ? "(" + p.to_string() + ")" : p.to_string();
    };
    switch ( _node->k )
    {
    case kind::truth: return "true";
    case kind::falsity: return "false";
    case kind::label: return _node->name;
    case kind::negation: return "!" + wrap( operand(), kind::negation );
    case kind::conjunction: return wrap( lhs(), kind::conjunction ) + " & " + wrap( rhs(), kind::conjunction );
    case kind::disjunction: return lhs().to_string() + " | " + rhs().to_string();
    }
    return "?";
}

// --- Formula parser ---------------------------------------------------------

namespace
{

struct token
{
    std::string text; // identifier text or the symbol itself; empty at end
    std::size_t position;
    bool identifier;
};

std::vector< token > tokenize( std::string_view text )
{
    std::vector< token > out;
    std::size_t i = 0;
    const auto ident_char = []( char ch ) { return std::isalnum( static_cast< unsigned char >( ch ) ) || ch == '_'; };
    while ( i < text.size() )
    {
        const char ch = text[ i ];
        if ( std::isspace( static_cast< unsigned char >( ch ) ) )
        {
            ++i;
            continue;
        }
        if ( ident_char( ch ) )
        {
            const auto start = i;
            while ( i < text.size() && ident_char( text[ i ] ) )
                ++i;
            out.push_back( { std::string{ text.substr( start, i - start ) }, start, true } );
            continue;
        }
        if ( ch == '-' && i + 1 < text.size() && text[ i + 1 ] == '>' )
        {
            out.push_back( { "->", i, false } );
            i += 2;
            continue;
        }
        if ( std::string_view{ "()[]!&|" }.find( ch ) == std::string_view::npos )
            throw parse_error{ std::string{ "unexpected character '" } + ch + "'", i };
        out.push_back( { std::string( 1, ch ), i, false } );
        ++i;
    }
    out.push_back( { {}, text.size(), false } );
    return out;
}

class formula_parser
{
    std::vector< token > _tokens;
    std::size_t _pos = 0;

    const token& peek( std::size_t ahead = 0 ) const
    {
        return _tokens[ std::min( _pos + ahead, _tokens.size() - 1 ) ];
    }

    bool at( std::string_view text ) const { return peek().text == text && !( text.empty() ); }

    void expect( std::string_view text )
    {
        if ( !at( text ) )
            throw parse_error{ "expected '" + std::string{ text } + "'", peek().position };
        ++_pos;
    }

    static bool reserved( const std::string& word )
    {
        return word == "AG" || word == "EF" || word == "U";
    }

    StatePredicate primary()
    {
        const auto& t = peek();
        if ( t.text == "!" )
        {
            ++_pos;
            return !primary();
        }
        if ( t.text == "(" )
        {
            ++_pos;
            auto inner = disjunction();
            expect( ")" );
            return inner;
        }
        if ( t.identifier && !reserved( t.text ) )
        {
            ++_pos;
            if ( t.text == "true" )
                return StatePredicate::truth();
            if ( t.text == "false" )
                return StatePredicate::falsity();
            return StatePredicate::label( t.text );
        }
        throw parse_error{ t.text.empty() ? "unexpected end of formula" : "unexpected '" + t.text + "'", t.position };
    }

    StatePredicate conjunction()
    {
        auto lhs = primary();
        while ( at( "&" ) )
        {
            ++_pos;
            lhs = lhs & primary();
        }
        return lhs;
    }

    StatePredicate disjunction()
    {
        auto lhs = conjunction();
        while ( at( "|" ) )
        {
            ++_pos;
            lhs = lhs | conjunction();
        }
        return lhs;
    }

    // A [ p U q ]
    std::pair< StatePredicate, StatePredicate > until()
    {
        expect( "A" );
        expect( "[" );
        auto p = disjunction();
        expect( "U" );
        auto q = disjunction();
        expect( "]" );
        return { std::move( p ), std::move( q ) };
    }

    bool at_until() const { return peek().text == "A" && peek( 1 ).text == "["; }

public:
    explicit formula_parser( std::string_view text ) : _tokens{ tokenize( text ) } {}

    StatePredicate predicate_only()
    {
        auto p = disjunction();
        if ( !peek().text.empty() )
            throw parse_error{ "unexpected '" + peek().text + "'", peek().position };
        return p;
    }

    TemporalFormula formula()
    {
        TemporalFormula f;
        if ( at( "EF" ) )
        {
            ++_pos;
            f.k = TemporalFormula::kind::ef;
            f.p = disjunction();
        }
        else if ( at_until() )
        {
            f.k = TemporalFormula::kind::au;
            std::tie( f.p, f.q ) = until();
        }
        else if ( at( "AG" ) )
        {
            ++_pos;
            const auto save = _pos;
            bool implication = false;
            if ( at( "(" ) )
            {
                ++_pos;
                try
                {
                    auto trigger = disjunction();
                    if ( at( "->" ) )
                    {
                        ++_pos;
                        f.k = TemporalFormula::kind::ag_implies_au;
                        f.p = std::move( trigger );
                        std::tie( f.q, f.r ) = until();
                        expect( ")" );
                        implication = true;
                    }
                }
                catch ( const parse_error& )
                {
                    implication = false;
                }
            }
            if ( !implication )
            {
                _pos = save;
                f.k = TemporalFormula::kind::ag;
                f.p = disjunction();
            }
        }
        else
            throw parse_error{ "expected AG, EF or A[", peek().position };

        if ( !peek().text.empty() )
            throw parse_error{ "unexpected '" + peek().text + "'", peek().position };
        return f;
    }
};

} // namespace

StatePredicate parse_state_predicate( std::string_view text )
{
    return formula_parser{ text }.predicate_only();
}

TemporalFormula parse_formula( std::string_view text )
{
    return formula_parser{ text }.formula();
}

std::string TemporalFormula::to_string() const
{
    switch ( k )
    {
    case kind::ag: return "AG " + ( p.get_kind() == StatePredicate::kind::label ? p.to_string() : "(" + p.to_string() + ")" );
    case kind::ef: return "EF " + ( p.get_kind() == StatePredicate::kind::label ? p.to_string() : "(" + p.to_string() + ")" );
    case kind::au: return "A[" + p.to_string() + " U " + q.to_string() + "]";
    case kind::ag_implies_au: return "AG (" + p.to_string() + " -> A[" + q.to_string() + " U " + r.to_string() + "])";
    }
    return "?";
}

std::set< std::string > TemporalFormula::labels() const
{
    auto out = p.labels();
    if ( k == kind::au || k == kind::ag_implies_au )
        out.merge( q.labels() );
    if ( k == kind::ag_implies_au )
        out.merge( r.labels() );
    return out;
}

// --- Model checking ---------------------------------------------------------

namespace
{

// States indexed in id order; successor lists sorted by id and deduplicated.
struct graph
{
    std::vector< std::string > ids;
    std::vector< std::vector< std::string > > labels;
    std::vector< std::vector< std::size_t > > succ;
    std::vector< std::vector< std::size_t > > pred;
    std::vector< std::size_t > initial;

    explicit graph( const TransitionSystem& ts )
    {
        if ( auto found = ts.problems(); !found.empty() )
            throw error{ "ill-formed transition system: " + found.front() };

        std::vector< const TsState* > order;
        for ( const auto& s : ts.states )
            order.push_back( &s );
        std::sort( order.begin(), order.end(), []( const TsState* a, const TsState* b ) { return a->id < b->id; } );

        std::unordered_map< std::string, std::size_t > index;
        for ( const auto* s : order )
        {
            index.emplace( s->id, ids.size() );
            ids.push_back( s->id );
            labels.push_back( sorted_labels( s->labels ) );
        }
        succ.resize( ids.size() );
        pred.resize( ids.size() );
        for ( const auto& t : ts.transitions )
            succ[ index.at( t.src ) ].push_back( index.at( t.dst ) );
        for ( std::size_t s = 0; s < ids.size(); ++s )
        {
            auto& out = succ[ s ];
            if ( out.empty() )
                out.push_back( s );
            std::sort( out.begin(), out.end() );
            out.erase( std::unique( out.begin(), out.end() ), out.end() );
            for ( const auto t : out )
                pred[ t ].push_back( s );
        }
        for ( const auto& id : ts.initial )
            initial.push_back( index.at( id ) );
        std::sort( initial.begin(), initial.end() );
        initial.erase( std::unique( initial.begin(), initial.end() ), initial.end() );
    }

    [[nodiscard]] std::size_t size() const { return ids.size(); }

    [[nodiscard]] std::vector< bool > sat( const StatePredicate& p ) const
    {
        std::vector< bool > out( size() );
        for ( std::size_t s = 0; s < size(); ++s )
            out[ s ] = p.holds( labels[ s ] );
        return out;
    }

    // Least fixpoint of Z = q | (p & AX Z).
    [[nodiscard]] std::vector< bool > au( const std::vector< bool >& p, const std::vector< bool >& q ) const
    {
        std::vector< bool > in( size(), false );
        std::vector< std::size_t > remaining( size() );
        std::vector< std::size_t > work;
        for ( std::size_t s = 0; s < size(); ++s )
        {
            remaining[ s ] = succ[ s ].size();
            if ( q[ s ] )
            {
                in[ s ] = true;
                work.push_back( s );
            }
        }
        while ( !work.empty() )
        {
            const auto z = work.back();
            work.pop_back();
            for ( const auto u : pred[ z ] )
            {
                if ( --remaining[ u ] == 0 && p[ u ] && !in[ u ] )
                {
                    in[ u ] = true;
                    work.push_back( u );
                }
            }
        }
        return in;
    }

    // Lexicographically smallest shortest path from `starts` to a `target`
    // state, moving only through `through` states (the target itself excepted).
    [[nodiscard]] std::optional< std::vector< std::size_t > > bfs( const std::vector< std::size_t >& starts,
                                                                   const std::vector< bool >& target,
                                                                   const std::vector< bool >& through ) const
    {
        constexpr auto none = static_cast< std::size_t >( -1 );
        std::vector< std::size_t > parent( size(), none );
        std::vector< bool > seen( size(), false );
        std::deque< std::size_t > queue;
        for ( const auto s : starts )
        {
            if ( !seen[ s ] )
            {
                seen[ s ] = true;
                queue.push_back( s );
            }
        }
        while ( !queue.empty() )
        {
            const auto s = queue.front();
            queue.pop_front();
            if ( target[ s ] )
            {
                std::vector< std::size_t > path;
                for ( auto at = s; at != none; at = parent[ at ] )
                    path.push_back( at );
                std::reverse( path.begin(), path.end() );
                return path;
            }
            if ( !through[ s ] )
                continue;
            for ( const auto t : succ[ s ] )
            {
                if ( !seen[ t ] )
                {
                    seen[ t ] = true;
                    parent[ t ] = s;
                    queue.push_back( t );
                }
            }
        }
        return std::nullopt;
    }

    // Witness that `start` violates A[p U q], given the fixpoint `holds`.
    [[nodiscard]] McResult until_counterexample( std::size_t start, const std::vector< bool >& p,
                                                 const std::vector< bool >& q,
                                                 const std::vector< bool >& holds ) const
    {
        std::vector< bool > stuck( size() );
        std::vector< bool > waiting( size() );
        for ( std::size_t s = 0; s < size(); ++s )
        {
            stuck[ s ] = !p[ s ] && !q[ s ];
            waiting[ s ] = p[ s ] && !q[ s ] && !holds[ s ];
        }

        McResult result;
        result.result = verdict::fail;
        if ( auto path = bfs( { start }, stuck, waiting ) )
        {
            for ( const auto s : *path )
                result.path.push_back( ids[ s ] );
            result.violating = result.path.back();
            return result;
        }

        // No way out: every reachable state waits forever. Follow the smallest
        // successor that still violates until a state repeats.
        std::vector< std::size_t > walk{ start };
        std::unordered_map< std::size_t, std::size_t > position{ { start, 0 } };
        while ( true )
        {
            const auto& next = succ[ walk.back() ];
            const auto it = std::find_if( next.begin(), next.end(), [ & ]( std::size_t t ) { return !holds[ t ]; } );
            const auto t = *it;
            if ( const auto seen = position.find( t ); seen != position.end() )
            {
                result.loop = seen->second;
                break;
            }
            position.emplace( t, walk.size() );
            walk.push_back( t );
        }
        for ( const auto s : walk )
            result.path.push_back( ids[ s ] );
        result.violating = result.path[ *result.loop ];
        return result;
    }
};

std::vector< bool > negate( std::vector< bool > v )
{
    v.flip();
    return v;
}

} // namespace

McResult mc_product( const TransitionSystem& ts, const TemporalFormula& formula )
{
    const graph g{ ts };
    const std::vector< bool > everywhere( g.size(), true );

    switch ( formula.k )
    {
    case TemporalFormula::kind::ag:
    {
        const auto p = g.sat( formula.p );
        if ( auto path = g.bfs( g.initial, negate( p ), everywhere ) )
        {
            McResult result{ verdict::fail, {}, std::nullopt, {} };
            for ( const auto s : *path )
                result.path.push_back( g.ids[ s ] );
            result.violating = result.path.back();
            return result;
        }
        return {};
    }
    case TemporalFormula::kind::ef:
    {
        const auto p = g.sat( formula.p );
        // EF p must hold in every initial state.
        for ( const auto s : g.initial )
            if ( !g.bfs( { s }, p, everywhere ) )
                return McResult{ verdict::fail, {}, std::nullopt, {} };
        return {};
    }
    case TemporalFormula::kind::au:
    {
        const auto p = g.sat( formula.p );
        const auto q = g.sat( formula.q );
        const auto holds = g.au( p, q );
        for ( const auto s : g.initial )
            if ( !holds[ s ] )
                return g.until_counterexample( s, p, q, holds );
        return {};
    }
    case TemporalFormula::kind::ag_implies_au:
    {
        const auto trigger = g.sat( formula.p );
        const auto q = g.sat( formula.q );
        const auto r = g.sat( formula.r );
        const auto holds = g.au( q, r );
        std::vector< bool > bad( g.size() );
        for ( std::size_t s = 0; s < g.size(); ++s )
            bad[ s ] = trigger[ s ] && !holds[ s ];
        const auto prefix = g.bfs( g.initial, bad, everywhere );
        if ( !prefix )
            return {};
        auto tail = g.until_counterexample( prefix->back(), q, r, holds );
        McResult result{ verdict::fail, {}, std::nullopt, tail.violating };
        for ( const auto s : *prefix )
            result.path.push_back( g.ids[ s ] );
        result.path.insert( result.path.end(), tail.path.begin() + 1, tail.path.end() );
        if ( tail.loop )
            result.loop = *tail.loop + prefix->size() - 1;
        return result;
    }
    }
    return {};
}

std::vector< std::string > unknown_labels( const TransitionSystem& ts, const TemporalFormula& formula )
{
    std::set< std::string > present;
    for ( const auto& s : ts.states )
        present.insert( s.labels.begin(), s.labels.end() );
    std::vector< std::string > out;
    for ( const auto& label : formula.labels() )
        if ( present.count( label ) == 0 )
            out.push_back( label );
    return out;
}

bool FamilyMcResult::passed() const
{
    return std::all_of( classes.begin(), classes.end(), []( const McClass& c ) { return c.result.passed(); } );
}

const McResult* FamilyMcResult::at( const Configuration& config ) const
{
    for ( const auto& c : classes )
        if ( c.configs.contains( config ) )
            return &c.result;
    return nullptr;
}

FamilyMcResult mc_family( const Fts& fts, const TemporalFormula& formula, lift_mode mode )
{
    const auto& u = fts.universe();
    std::vector< std::pair< TransitionSystem, ConfigSet > > groups;
    std::map< std::string, std::size_t > by_digest;
    for ( const auto& config : valid_configs( fts.model ) )
    {
        auto ts = derive_fts( fts, config );
        const auto key = digest( to_json( ts ) );
        const auto [ it, fresh ] = by_digest.emplace( key, groups.size() );
        if ( fresh )
            groups.emplace_back( std::move( ts ), ConfigSet::empty( u ) );
        groups[ it->second ].second.insert( config );
    }

    FamilyMcResult out;
    out.mode = mode;
    for ( auto& [ ts, configs ] : groups )
        out.classes.push_back( { std::move( configs ), mc_product( ts, formula ) } );

    if ( mode == lift_mode::quasi )
    {
        const auto failing = std::find_if( out.classes.begin(), out.classes.end(),
                                           []( const McClass& c ) { return !c.result.passed(); } );
        if ( failing == out.classes.end() )
            out.classes = { McClass{ semantics( fts.model ), McResult{} } };
        else
            out.classes = { *failing };
    }
    return out;
}

// --- Queries ----------------------------------------------------------------

bool glob_match( std::string_view pattern, std::string_view text )
{
    std::size_t p = 0;
    std::size_t t = 0;
    std::size_t star = std::string_view::npos;
    std::size_t resume = 0;
    while ( t < text.size() )
    {
        if ( p < pattern.size() && pattern[ p ] == '*' )
        {
            star = p++;
            resume = t;
        }
        else if ( p < pattern.size() && pattern[ p ] == text[ t ] )
        {
            ++p;
            ++t;
        }
        else if ( star != std::string_view::npos )
        {
            p = star + 1;
            t = ++resume;
        }
        else
            return false;
    }
    while ( p < pattern.size() && pattern[ p ] == '*' )
        ++p;
    return p == pattern.size();
}

namespace
{

bool any_label_matches( const std::vector< std::string >& labels, std::string_view pattern )
{
    return std::any_of( labels.begin(), labels.end(),
                        [ & ]( const std::string& label ) { return glob_match( pattern, label ); } );
}

} // namespace

std::vector< std::string > query( const TransitionSystem& ts, std::string_view pattern )
{
    std::vector< std::string > out;
    for ( const auto& s : ts.states )
        if ( any_label_matches( s.labels, pattern ) )
            out.push_back( s.id );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
}

VarSet< std::string > vquery( const Fts& fts, std::string_view pattern )
{
    std::vector< const FtsState* > matches;
    for ( const auto& s : fts.states )
        if ( any_label_matches( s.labels, pattern ) )
            matches.push_back( &s );
    std::sort( matches.begin(), matches.end(), []( const FtsState* a, const FtsState* b ) { return a->id < b->id; } );

    VarSet< std::string > out{ fts.universe() };
    for ( const auto* s : matches )
        out.add( s->id, s->pc );
    return out;
}

// --- Serialization ----------------------------------------------------------

Value to_json( const TransitionSystem& ts )
{
    Value states = Value::array();
    for ( const auto& s : ts.states )
        states.push_back( { { "id", s.id }, { "labels", s.labels } } );
    Value transitions = Value::array();
    for ( const auto& t : ts.transitions )
        transitions.push_back( { { "src", t.src }, { "action", t.action }, { "dst", t.dst } } );
    return Value{ { "states", std::move( states ) }, { "transitions", std::move( transitions ) }, { "initial", ts.initial } };
}

TransitionSystem ts_from_json( const Value& json )
{
    TransitionSystem ts;
    for ( const auto& s : json.at( "states" ) )
        ts.states.push_back(
            { s.at( "id" ).get< std::string >(), sorted_labels( s.value( "labels", std::vector< std::string >{} ) ) } );
    for ( const auto& t : json.value( "transitions", Value::array() ) )
        ts.transitions.push_back( { t.at( "src" ).get< std::string >(), t.value( "action", std::string{} ),
                                    t.at( "dst" ).get< std::string >() } );
    ts.initial = json.at( "initial" ).get< std::vector< std::string > >();
    if ( auto found = ts.problems(); !found.empty() )
        throw error{ "ill-formed transition system: " + found.front() };
    return ts;
}

bool is_fts_json( const Value& json )
{
    return json.is_object() && json.contains( "universe" ) && json.contains( "states" );
}

Value to_json( const Fts& fts )
{
    Value states = Value::array();
    for ( const auto& s : fts.states )
        states.push_back( { { "id", s.id }, { "labels", s.labels }, { "pc", s.pc.to_string() } } );
    Value transitions = Value::array();
    for ( const auto& t : fts.transitions )
        transitions.push_back(
            { { "src", t.src }, { "action", t.action }, { "dst", t.dst }, { "pc", t.pc.to_string() } } );
    return Value{ { "universe", fts.universe().names() },
                  { "feature_model", fts.model.to_string() },
                  { "states", std::move( states ) },
                  { "transitions", std::move( transitions ) },
                  { "initial", fts.initial } };
}

Fts fts_from_json( const Value& json )
{
    const FeatureUniverse u{ json.at( "universe" ).get< std::vector< std::string > >() };
    const auto pc_of = [ & ]( const Value& item ) { return parse_featexpr( item.value( "pc", "true" ), u ); };

    Fts fts;
    fts.model = parse_featexpr( json.value( "feature_model", "true" ), u );
    for ( const auto& s : json.at( "states" ) )
        fts.states.push_back(
            { s.at( "id" ).get< std::string >(), s.value( "labels", std::vector< std::string >{} ), pc_of( s ) } );
    for ( const auto& t : json.value( "transitions", Value::array() ) )
        fts.transitions.push_back( { t.at( "src" ).get< std::string >(), t.value( "action", std::string{} ),
                                     t.at( "dst" ).get< std::string >(), pc_of( t ) } );
    fts.initial = json.at( "initial" ).get< std::vector< std::string > >();
    fts.validate();
    return fts;
}

Value to_json( const McResult& result )
{
    if ( result.passed() )
        return Value{ { "verdict", "pass" } };
    Value out{ { "verdict", "fail" } };
    if ( !result.path.empty() )
    {
        Value cex{ { "path", result.path }, { "state", result.violating } };
        if ( result.loop )
            cex[ "loop" ] = *result.loop;
        out[ "counterexample" ] = std::move( cex );
    }
    return out;
}

McResult mc_result_from_json( const Value& json )
{
    McResult result;
    result.result = json.at( "verdict" ) == "pass" ? verdict::pass : verdict::fail;
    if ( json.contains( "counterexample" ) )
    {
        const auto& cex = json.at( "counterexample" );
        result.path = cex.at( "path" ).get< std::vector< std::string > >();
        result.violating = cex.value( "state", std::string{} );
        if ( cex.contains( "loop" ) )
            result.loop = cex.at( "loop" ).get< std::size_t >();
    }
    return result;
}

Value to_json( const FamilyMcResult& result )
{
    Value classes = Value::array();
    for ( const auto& c : result.classes )
    {
        Value configs = Value::array();
        for ( const auto& config : c.configs.configurations() )
            configs.push_back( config.members() );
        classes.push_back( { { "configs", std::move( configs ) }, { "result", to_json( c.result ) } } );
    }
    return Value{ { "mode", to_string( result.mode ) },
                  { "verdict", result.passed() ? "pass" : "fail" },
                  { "classes", std::move( classes ) } };
}

} // namespace placidus
