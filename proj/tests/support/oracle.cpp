#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace oracle
{

// --- Propositions ---

bool Prop::eval( std::uint32_t mask ) const
{
    switch ( o )
    {
    case op::truth: return true;
    case op::falsity: return false;
    case op::var: return ( ( mask >> var ) & 1U ) != 0;
    case op::negation: return !args[ 0 ].eval( mask );
    case op::conjunction: return args[ 0 ].eval( mask ) && args[ 1 ].eval( mask );
    case op::disjunction: return args[ 0 ].eval( mask ) || args[ 1 ].eval( mask );
    case op::implication: return !args[ 0 ].eval( mask ) || args[ 1 ].eval( mask );
    case op::exclusive: return args[ 0 ].eval( mask ) != args[ 1 ].eval( mask );
    }
    return false;
}

std::string Prop::text( const std::vector< std::string >& names ) const
{
    const auto bin = [ & ]( const char* sym )
    { return "(" + args[ 0 ].text( names ) + " " + sym + " " + args[ 1 ].text( names ) + ")"; };
    switch ( o )
    {
    case op::truth: return "true";
    case op::falsity: return "false";
    case op::var: return names.at( var );
    case op::negation: return "!" + args[ 0 ].text( names );
    case op::conjunction: return bin( "&" );
    case op::disjunction: return bin( "|" );
    case op::implication: return bin( "->" );
    case op::exclusive: return bin( "xor" );
    }
    return "?";
}

std::vector< std::uint32_t > configs( const Prop& model, std::size_t n )
{
    std::vector< std::uint32_t > out;
    for ( std::uint32_t mask = 0; mask < ( 1U << n ); ++mask )
        if ( model.eval( mask ) )
            out.push_back( mask );
    return out;
}

// --- Predicates and formulas ---

bool Pred::eval( const std::set< std::string >& labels ) const
{
    switch ( o )
    {
    case op::truth: return true;
    case op::falsity: return false;
    case op::label: return labels.count( label ) > 0;
    case op::negation: return !args[ 0 ].eval( labels );
    case op::conjunction: return args[ 0 ].eval( labels ) && args[ 1 ].eval( labels );
    case op::disjunction: return args[ 0 ].eval( labels ) || args[ 1 ].eval( labels );
    }
    return false;
}

std::string Pred::text() const
{
    switch ( o )
    {
    case op::truth: return "true";
    case op::falsity: return "false";
    case op::label: return label;
    case op::negation: return "!" + args[ 0 ].text();
    case op::conjunction: return "(" + args[ 0 ].text() + " & " + args[ 1 ].text() + ")";
    case op::disjunction: return "(" + args[ 0 ].text() + " | " + args[ 1 ].text() + ")";
    }
    return "?";
}

std::string Formula::text() const
{
    switch ( o )
    {
    case op::ag: return "AG " + p.text();
    case op::ef: return "EF " + p.text();
    case op::au: return "A[" + p.text() + " U " + q.text() + "]";
    case op::ag_implies_au: return "AG (" + p.text() + " -> A[" + q.text() + " U " + r.text() + "])";
    }
    return "?";
}

namespace
{

std::vector< std::size_t > successors( const Ts& ts, std::size_t s )
{
    return ts.succ[ s ].empty() ? std::vector< std::size_t >{ s } : ts.succ[ s ];
}

// States reachable from `from` (inclusive).
std::vector< bool > reachable( const Ts& ts, const std::vector< std::size_t >& from )
{
    std::vector< bool > seen( ts.ids.size(), false );
    std::vector< std::size_t > stack = from;
    while ( !stack.empty() )
    {
        const auto s = stack.back();
        stack.pop_back();
        if ( seen[ s ] )
            continue;
        seen[ s ] = true;
        for ( const auto t : successors( ts, s ) )
            stack.push_back( t );
    }
    return seen;
}

// Every path from `start` satisfies p U q. Walks all simple paths; revisiting
// a state on the current path closes a q-free lasso.
bool all_paths_until( const Ts& ts, std::size_t start, const Pred& p, const Pred& q )
{
    std::vector< bool > on_path( ts.ids.size(), false );
    std::function< bool( std::size_t ) > walk = [ & ]( std::size_t s ) -> bool
    {
        if ( q.eval( ts.labels[ s ] ) )
            return true;
        if ( !p.eval( ts.labels[ s ] ) )
            return false;
        on_path[ s ] = true;
        bool ok = true;
        for ( const auto t : successors( ts, s ) )
            if ( on_path[ t ] || !walk( t ) )
            {
                ok = false;
                break;
            }
        on_path[ s ] = false;
        return ok;
    };
    return walk( start );
}

} // namespace

bool holds( const Ts& ts, const Formula& f )
{
    const auto reach = reachable( ts, ts.initial );
    switch ( f.o )
    {
    case Formula::op::ag:
        for ( std::size_t s = 0; s < ts.ids.size(); ++s )
            if ( reach[ s ] && !f.p.eval( ts.labels[ s ] ) )
                return false;
        return true;
    case Formula::op::ef:
        // Every initial state must reach p.
        return std::all_of( ts.initial.begin(), ts.initial.end(), [ & ]( std::size_t i )
        {
            const auto from = reachable( ts, { i } );
            for ( std::size_t s = 0; s < ts.ids.size(); ++s )
                if ( from[ s ] && f.p.eval( ts.labels[ s ] ) )
                    return true;
            return false;
        } );
    case Formula::op::au:
        return std::all_of( ts.initial.begin(), ts.initial.end(),
                            [ & ]( std::size_t s ) { return all_paths_until( ts, s, f.p, f.q ); } );
    case Formula::op::ag_implies_au:
        for ( std::size_t s = 0; s < ts.ids.size(); ++s )
            if ( reach[ s ] && f.p.eval( ts.labels[ s ] ) && !all_paths_until( ts, s, f.q, f.r ) )
                return false;
        return true;
    }
    return false;
}

bool glob( const std::string& pattern, const std::string& text )
{
    if ( pattern.empty() )
        return text.empty();
    if ( pattern[ 0 ] == '*' )
    {
        for ( std::size_t skip = 0; skip <= text.size(); ++skip )
            if ( glob( pattern.substr( 1 ), text.substr( skip ) ) )
                return true;
        return false;
    }
    return !text.empty() && text[ 0 ] == pattern[ 0 ] && glob( pattern.substr( 1 ), text.substr( 1 ) );
}

std::vector< std::string > query( const Ts& ts, const std::string& pattern )
{
    std::vector< std::string > out;
    for ( std::size_t s = 0; s < ts.ids.size(); ++s )
        if ( std::any_of( ts.labels[ s ].begin(), ts.labels[ s ].end(),
                          [ & ]( const std::string& l ) { return glob( pattern, l ); } ) )
            out.push_back( ts.ids[ s ] );
    std::sort( out.begin(), out.end() );
    return out;
}

// --- Featured transition systems ---

Ts derive( const Fts& fts, std::uint32_t mask )
{
    Ts ts;
    std::vector< std::size_t > index( fts.states.size(), SIZE_MAX );
    for ( std::size_t s = 0; s < fts.states.size(); ++s )
        if ( fts.states[ s ].pc.eval( mask ) )
        {
            index[ s ] = ts.ids.size();
            ts.ids.push_back( fts.states[ s ].id );
            ts.labels.push_back( fts.states[ s ].labels );
        }
    ts.succ.resize( ts.ids.size() );
    for ( const auto& t : fts.transitions )
        if ( t.pc.eval( mask ) && index[ t.src ] != SIZE_MAX && index[ t.dst ] != SIZE_MAX )
            ts.succ[ index[ t.src ] ].push_back( index[ t.dst ] );
    for ( const auto i : fts.initial )
        if ( index[ i ] != SIZE_MAX )
            ts.initial.push_back( index[ i ] );
    return ts;
}

// --- Annotated sets ---

std::set< std::string > derive( const std::vector< Element >& set, std::uint32_t mask )
{
    std::set< std::string > out;
    for ( const auto& e : set )
        if ( e.pc.eval( mask ) )
            out.insert( e.value );
    return out;
}

std::vector< std::set< std::string > > derive( const std::vector< Member >& family, std::uint32_t mask )
{
    std::vector< std::set< std::string > > out;
    for ( const auto& m : family )
        if ( m.pc.eval( mask ) )
            out.push_back( m.values );
    return out;
}

std::vector< Member > explode( const std::vector< Element >& set )
{
    std::vector< Member > out;
    for ( const auto& e : set )
        out.push_back( { { e.value }, e.pc } );
    return out;
}

std::vector< std::set< std::string > > aggregate_groups( const std::vector< Element >& set, std::size_t features )
{
    std::vector< std::vector< bool > > tables;
    std::vector< std::set< std::string > > groups;
    for ( const auto& e : set )
    {
        std::vector< bool > table;
        for ( std::uint32_t mask = 0; mask < ( 1U << features ); ++mask )
            table.push_back( e.pc.eval( mask ) );
        const auto it = std::find( tables.begin(), tables.end(), table );
        if ( it == tables.end() )
        {
            tables.push_back( std::move( table ) );
            groups.push_back( { e.value } );
        }
        else
            groups[ static_cast< std::size_t >( it - tables.begin() ) ].insert( e.value );
    }
    return groups;
}

} // namespace oracle
