#include "placidus/featexpr.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <unordered_set>

namespace placidus
{

std::size_t enumeration_bound()
{
    const char* env = std::getenv( "PLACIDUS_MAX_FEATURES" );
    if ( env == nullptr || *env == '\0' )
        return max_universe_size;

    char* end = nullptr;
    const long value = std::strtol( env, &end, 10 );
    if ( end == env || *end != '\0' || value < 0 )
        return max_universe_size;
    return std::min( static_cast< std::size_t >( value ), max_universe_size );
}

namespace
{

bool is_identifier( std::string_view name )
{
    if ( name.empty() || !( std::isalpha( static_cast< unsigned char >( name[ 0 ] ) ) || name[ 0 ] == '_' ) )
        return false;
    return std::all_of( name.begin(), name.end(),
                        []( char ch ) { return std::isalnum( static_cast< unsigned char >( ch ) ) || ch == '_'; } );
}

bool is_keyword( std::string_view name )
{
    return name == "true" || name == "false" || name == "xor";
}

} // namespace

// --- FeatureUniverse --------------------------------------------------------

FeatureUniverse::FeatureUniverse() : _features{ std::make_shared< const std::vector< std::string > >() } {}

FeatureUniverse::FeatureUniverse( std::vector< std::string > features )
{
    if ( features.size() > max_universe_size )
        throw bound_exceeded{ "feature universe has " + std::to_string( features.size() ) +
                              " features; at most " + std::to_string( max_universe_size ) + " are supported" };

    std::unordered_set< std::string_view > seen;
    for ( const auto& name : features )
    {
        if ( !is_identifier( name ) || is_keyword( name ) )
            throw error{ "invalid feature name '" + name + "'" };
        if ( !seen.insert( name ).second )
            throw error{ "duplicate feature name '" + name + "'" };
    }
    _features = std::make_shared< const std::vector< std::string > >( std::move( features ) );
}

std::optional< std::size_t > FeatureUniverse::index_of( std::string_view name ) const
{
    const auto it = std::find( _features->begin(), _features->end(), name );
    if ( it == _features->end() )
        return std::nullopt;
    return static_cast< std::size_t >( it - _features->begin() );
}

bool FeatureUniverse::operator==( const FeatureUniverse& other ) const
{
    return _features == other._features || *_features == *other._features;
}

// --- Configuration ----------------------------------------------------------

Configuration::Configuration( FeatureUniverse universe, std::uint32_t mask )
    : _universe{ std::move( universe ) }, _mask{ mask }
{
    if ( _universe.size() < 32 && ( mask >> _universe.size() ) != 0 )
        throw error{ "configuration mask selects features outside the universe" };
}

Configuration Configuration::from_names( const FeatureUniverse& universe, const std::vector< std::string >& names )
{
    std::uint32_t mask = 0;
    for ( const auto& name : names )
    {
        const auto index = universe.index_of( name );
        if ( !index )
            throw dangling_reference{ "unknown feature '" + name + "'" };
        mask |= std::uint32_t{ 1 } << *index;
    }
    return { universe, mask };
}

Configuration Configuration::parse( const FeatureUniverse& universe, std::string_view text )
{
    std::vector< std::string > names;
    std::string current;
    auto flush = [ & ]
    {
        while ( !current.empty() && std::isspace( static_cast< unsigned char >( current.back() ) ) )
            current.pop_back();
        if ( !current.empty() )
            names.push_back( current );
        current.clear();
    };
    for ( char ch : text )
    {
        if ( ch == ',' )
            flush();
        else if ( ch == '{' || ch == '}' || ( current.empty() && std::isspace( static_cast< unsigned char >( ch ) ) ) )
            continue;
        else
            current.push_back( ch );
    }
    flush();
    return from_names( universe, names );
}

bool Configuration::contains( std::string_view feature ) const
{
    const auto index = _universe.index_of( feature );
    return index && contains( *index );
}

std::vector< std::string > Configuration::members() const
{
    std::vector< std::string > result;
    for ( std::size_t i = 0; i < _universe.size(); ++i )
        if ( contains( i ) )
            result.push_back( _universe.name( i ) );
    return result;
}

std::string Configuration::to_string() const
{
    if ( _mask == 0 )
        return "{}";
    std::string out;
    for ( const auto& name : members() )
    {
        if ( !out.empty() )
            out += ',';
        out += name;
    }
    return out;
}

// --- ConfigSet --------------------------------------------------------------

ConfigSet::ConfigSet( FeatureUniverse universe )
    : _universe{ std::move( universe ) },
      _words( static_cast< std::size_t >( ( _universe.configuration_count() + 63 ) / 64 ), 0 ) {}

ConfigSet ConfigSet::universal( const FeatureUniverse& universe )
{
    ConfigSet result{ universe };
    std::fill( result._words.begin(), result._words.end(), ~std::uint64_t{ 0 } );
    result.trim();
    return result;
}

ConfigSet ConfigSet::of( const FeatureUniverse& universe, const std::vector< Configuration >& configs )
{
    ConfigSet result{ universe };
    for ( const auto& config : configs )
        result.insert( config );
    return result;
}

void ConfigSet::trim()
{
    const auto count = _universe.configuration_count();
    if ( count < 64 )
        _words[ 0 ] &= ( std::uint64_t{ 1 } << count ) - 1;
}

void ConfigSet::require_same( const ConfigSet& other ) const
{
    if ( !( _universe == other._universe ) )
        throw universe_mismatch{};
}

bool ConfigSet::contains( const Configuration& config ) const
{
    if ( !( config.universe() == _universe ) )
        throw universe_mismatch{};
    return contains( config.mask() );
}

void ConfigSet::insert( const Configuration& config )
{
    if ( !( config.universe() == _universe ) )
        throw universe_mismatch{};
    insert( config.mask() );
}

bool ConfigSet::is_empty() const
{
    return std::all_of( _words.begin(), _words.end(), []( std::uint64_t w ) { return w == 0; } );
}

std::size_t ConfigSet::count() const
{
    std::size_t total = 0;
    for ( auto word : _words )
        total += static_cast< std::size_t >( std::popcount( word ) );
    return total;
}

bool ConfigSet::subset_of( const ConfigSet& other ) const
{
    require_same( other );
    for ( std::size_t i = 0; i < _words.size(); ++i )
        if ( ( _words[ i ] & ~other._words[ i ] ) != 0 )
            return false;
    return true;
}

std::vector< Configuration > ConfigSet::configurations() const
{
    std::vector< Configuration > result;
    for ( std::size_t w = 0; w < _words.size(); ++w )
    {
        auto word = _words[ w ];
        while ( word != 0 )
        {
            const auto bit = static_cast< std::uint32_t >( std::countr_zero( word ) );
            result.emplace_back( _universe, static_cast< std::uint32_t >( w * 64 ) + bit );
            word &= word - 1;
        }
    }
    return result;
}

std::string ConfigSet::to_string() const
{
    std::string out;
    for ( const auto& config : configurations() )
    {
        if ( !out.empty() )
            out += ' ';
        out += config.mask() == 0 ? "{}" : "{" + config.to_string() + "}";
    }
    return out.empty() ? "(none)" : out;
}

ConfigSet ConfigSet::operator~() const
{
    ConfigSet result = *this;
    for ( auto& word : result._words )
        word = ~word;
    result.trim();
    return result;
}

ConfigSet& ConfigSet::operator&=( const ConfigSet& other )
{
    require_same( other );
    for ( std::size_t i = 0; i < _words.size(); ++i )
        _words[ i ] &= other._words[ i ];
    return *this;
}

ConfigSet& ConfigSet::operator|=( const ConfigSet& other )
{
    require_same( other );
    for ( std::size_t i = 0; i < _words.size(); ++i )
        _words[ i ] |= other._words[ i ];
    return *this;
}

ConfigSet ConfigSet::operator&( const ConfigSet& other ) const
{
    ConfigSet result = *this;
    return result &= other;
}

ConfigSet ConfigSet::operator|( const ConfigSet& other ) const
{
    ConfigSet result = *this;
    return result |= other;
}

ConfigSet ConfigSet::operator-( const ConfigSet& other ) const
{
    return *this & ~other;
}

// --- FeatExpr ---------------------------------------------------------------

struct FeatExpr::node
{
    FeatExpr::kind k;
    std::size_t feature = 0;
    std::shared_ptr< const node > lhs = {};
    std::shared_ptr< const node > rhs = {};
};

FeatExpr::FeatExpr() : FeatExpr{ all( FeatureUniverse{} ) } {}

FeatExpr FeatExpr::all( const FeatureUniverse& universe )
{
    static const auto shared = std::make_shared< const node >( node{ kind::all } );
    return { shared, universe };
}

FeatExpr FeatExpr::none( const FeatureUniverse& universe )
{
    static const auto shared = std::make_shared< const node >( node{ kind::none } );
    return { shared, universe };
}

FeatExpr FeatExpr::atom( const FeatureUniverse& universe, std::size_t feature )
{
    if ( feature >= universe.size() )
        throw dangling_reference{ "feature index " + std::to_string( feature ) + " outside the universe" };
    return { std::make_shared< const node >( node{ kind::atom, feature } ), universe };
}

FeatExpr FeatExpr::atom( const FeatureUniverse& universe, std::string_view feature )
{
    const auto index = universe.index_of( feature );
    if ( !index )
        throw dangling_reference{ "unknown feature '" + std::string{ feature } + "'" };
    return atom( universe, *index );
}

FeatExpr operator!( const FeatExpr& operand )
{
    return { std::make_shared< const FeatExpr::node >( FeatExpr::node{ FeatExpr::kind::negation, 0, operand._node } ),
             operand._universe };
}

FeatExpr operator&( const FeatExpr& lhs, const FeatExpr& rhs )
{
    if ( !( lhs._universe == rhs._universe ) )
        throw universe_mismatch{};
    return { std::make_shared< const FeatExpr::node >(
                 FeatExpr::node{ FeatExpr::kind::conjunction, 0, lhs._node, rhs._node } ),
             lhs._universe };
}

FeatExpr operator|( const FeatExpr& lhs, const FeatExpr& rhs )
{
    if ( !( lhs._universe == rhs._universe ) )
        throw universe_mismatch{};
    return { std::make_shared< const FeatExpr::node >(
                 FeatExpr::node{ FeatExpr::kind::disjunction, 0, lhs._node, rhs._node } ),
             lhs._universe };
}

FeatExpr::kind FeatExpr::get_kind() const { return _node->k; }

std::size_t FeatExpr::feature() const
{
    if ( _node->k != kind::atom )
        throw error{ "feature() on a non-atom expression" };
    return _node->feature;
}

FeatExpr FeatExpr::operand() const
{
    if ( _node->k != kind::negation )
        throw error{ "operand() on a non-negation expression" };
    return { _node->lhs, _universe };
}

FeatExpr FeatExpr::lhs() const
{
    if ( _node->k != kind::conjunction && _node->k != kind::disjunction )
        throw error{ "lhs() on a non-binary expression" };
    return { _node->lhs, _universe };
}

FeatExpr FeatExpr::rhs() const
{
    if ( _node->k != kind::conjunction && _node->k != kind::disjunction )
        throw error{ "rhs() on a non-binary expression" };
    return { _node->rhs, _universe };
}

namespace
{

int precedence( FeatExpr::kind k )
{
    switch ( k )
    {
    case FeatExpr::kind::disjunction: return 1;
    case FeatExpr::kind::conjunction: return 2;
    case FeatExpr::kind::negation: return 3;
    default: return 4;
    }
}

void print( const FeatExpr& e, std::string& out )
{
    auto child = [ &out ]( const FeatExpr& sub, int required )
    {
        const bool parens = precedence( sub.get_kind() ) < required;
        if ( parens )
            out += '(';
        print( sub, out );
        if ( parens )
            out += ')';
    };

    switch ( e.get_kind() )
    {
    case FeatExpr::kind::all: out += "true"; break;
    case FeatExpr::kind::none: out += "false"; break;
    case FeatExpr::kind::atom: out += e.universe().name( e.feature() ); break;
    case FeatExpr::kind::negation:
        out += '!';
        child( e.operand(), 3 );
        break;
    case FeatExpr::kind::conjunction:
    case FeatExpr::kind::disjunction:
    {
        const int level = precedence( e.get_kind() );
        child( e.lhs(), level );
        out += e.get_kind() == FeatExpr::kind::conjunction ? " & " : " | ";
        // Right operands of equal precedence keep their parentheses so the
        // printed text re-parses to the same (left-associated) tree.
        child( e.rhs(), level + 1 );
        break;
    }
    }
}

} // namespace

std::string FeatExpr::to_string() const
{
    std::string out;
    print( *this, out );
    return out;
}

bool FeatExpr::operator==( const FeatExpr& other ) const
{
    if ( !( _universe == other._universe ) )
        return false;

    struct cmp
    {
        static bool eq( const node* a, const node* b )
        {
            if ( a == b )
                return true;
            if ( a->k != b->k )
                return false;
            switch ( a->k )
            {
            case kind::all:
            case kind::none: return true;
            case kind::atom: return a->feature == b->feature;
            case kind::negation: return eq( a->lhs.get(), b->lhs.get() );
            default: return eq( a->lhs.get(), b->lhs.get() ) && eq( a->rhs.get(), b->rhs.get() );
            }
        }
    };
    return cmp::eq( _node.get(), other._node.get() );
}

// --- Parser -----------------------------------------------------------------

namespace
{

class featexpr_parser
{
    std::string_view _text;
    const FeatureUniverse& _universe;
    std::size_t _pos = 0;

    void skip_ws()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
    }

    bool at_word( std::string_view word )
    {
        skip_ws();
        if ( _text.substr( _pos, word.size() ) != word )
            return false;
        const auto after = _pos + word.size();
        return after >= _text.size() ||
               !( std::isalnum( static_cast< unsigned char >( _text[ after ] ) ) || _text[ after ] == '_' );
    }

    bool accept( std::string_view token )
    {
        skip_ws();
        if ( _text.substr( _pos, token.size() ) != token )
            return false;
        _pos += token.size();
        return true;
    }

    bool accept_word( std::string_view word )
    {
        if ( !at_word( word ) )
            return false;
        _pos += word.size();
        return true;
    }

    FeatExpr implication()
    {
        auto lhs = exclusive();
        while ( accept( "->" ) )
        {
            auto rhs = exclusive();
            lhs = ( !lhs ) | rhs;
        }
        return lhs;
    }

    FeatExpr exclusive()
    {
        auto lhs = disjunction();
        while ( accept_word( "xor" ) )
        {
            auto rhs = disjunction();
            lhs = ( lhs | rhs ) & !( lhs & rhs );
        }
        return lhs;
    }

    FeatExpr disjunction()
    {
        auto lhs = conjunction();
        while ( accept( "|" ) )
            lhs = lhs | conjunction();
        return lhs;
    }

    FeatExpr conjunction()
    {
        auto lhs = unary();
        while ( accept( "&" ) )
            lhs = lhs & unary();
        return lhs;
    }

    FeatExpr unary()
    {
        if ( accept( "!" ) )
            return !unary();
        return primary();
    }

    FeatExpr primary()
    {
        skip_ws();
        if ( _pos >= _text.size() )
            throw parse_error{ "unexpected end of feature expression", _pos };

        if ( accept( "(" ) )
        {
            auto inner = implication();
            if ( !accept( ")" ) )
                throw parse_error{ "expected ')'", _pos };
            return inner;
        }

        const auto start = _pos;
        while ( _pos < _text.size() &&
                ( std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) || _text[ _pos ] == '_' ) )
            ++_pos;
        const auto word = _text.substr( start, _pos - start );
        if ( word.empty() )
            throw parse_error{ "unexpected character '" + std::string( 1, _text[ start ] ) + "'", start };
        if ( word == "true" )
            return FeatExpr::all( _universe );
        if ( word == "false" )
            return FeatExpr::none( _universe );
        if ( word == "xor" )
            throw parse_error{ "unexpected 'xor'", start };

        const auto index = _universe.index_of( word );
        if ( !index )
            throw parse_error{ "unknown feature '" + std::string{ word } + "'", start };
        return FeatExpr::atom( _universe, *index );
    }

public:
    featexpr_parser( std::string_view text, const FeatureUniverse& universe ) : _text{ text }, _universe{ universe } {}

    FeatExpr parse()
    {
        auto result = implication();
        skip_ws();
        if ( _pos != _text.size() )
            throw parse_error{ "unexpected trailing input", _pos };
        return result;
    }
};

} // namespace

FeatExpr parse_featexpr( std::string_view text, const FeatureUniverse& universe )
{
    return featexpr_parser{ text, universe }.parse();
}

// --- Semantics --------------------------------------------------------------

ConfigSet semantics( const FeatExpr& expr )
{
    const auto& universe = expr.universe();
    switch ( expr.get_kind() )
    {
    case FeatExpr::kind::all: return ConfigSet::universal( universe );
    case FeatExpr::kind::none: return ConfigSet::empty( universe );
    case FeatExpr::kind::atom:
    {
        ConfigSet result{ universe };
        const auto bit = std::uint32_t{ 1 } << expr.feature();
        const auto count = universe.configuration_count();
        for ( std::uint64_t mask = 0; mask < count; ++mask )
            if ( ( mask & bit ) != 0 )
                result.insert( static_cast< std::uint32_t >( mask ) );
        return result;
    }
    case FeatExpr::kind::negation: return ~semantics( expr.operand() );
    case FeatExpr::kind::conjunction: return semantics( expr.lhs() ) & semantics( expr.rhs() );
    case FeatExpr::kind::disjunction: return semantics( expr.lhs() ) | semantics( expr.rhs() );
    }
    return ConfigSet{ universe };
}

ConfigSet semantics( const FeatExpr& expr, const FeatureUniverse& universe )
{
    if ( !( expr.universe() == universe ) )
        throw universe_mismatch{};
    return semantics( expr );
}

namespace
{

bool evaluate( std::uint32_t mask, const FeatExpr& expr )
{
    switch ( expr.get_kind() )
    {
    case FeatExpr::kind::all: return true;
    case FeatExpr::kind::none: return false;
    case FeatExpr::kind::atom: return ( ( mask >> expr.feature() ) & 1U ) != 0;
    case FeatExpr::kind::negation: return !evaluate( mask, expr.operand() );
    case FeatExpr::kind::conjunction: return evaluate( mask, expr.lhs() ) && evaluate( mask, expr.rhs() );
    case FeatExpr::kind::disjunction: return evaluate( mask, expr.lhs() ) || evaluate( mask, expr.rhs() );
    }
    return false;
}

} // namespace

bool sat( const Configuration& config, const FeatExpr& expr )
{
    if ( !( config.universe() == expr.universe() ) )
        throw universe_mismatch{};
    return evaluate( config.mask(), expr );
}

bool equivalent( const FeatExpr& lhs, const FeatExpr& rhs )
{
    return semantics( lhs ) == semantics( rhs );
}

std::vector< Configuration > valid_configs( const FeatExpr& model )
{
    const auto& universe = model.universe();
    const auto bound = enumeration_bound();
    if ( universe.size() > bound )
        throw bound_exceeded{ "universe of " + std::to_string( universe.size() ) +
                              " features exceeds the enumeration bound of " + std::to_string( bound ) };

    std::vector< Configuration > result;
    const auto count = universe.configuration_count();
    for ( std::uint64_t mask = 0; mask < count; ++mask )
        if ( evaluate( static_cast< std::uint32_t >( mask ), model ) )
            result.emplace_back( universe, static_cast< std::uint32_t >( mask ) );
    return result;
}

std::vector< Configuration > valid_configs( const FeatExpr& model, const FeatureUniverse& universe )
{
    if ( !( model.universe() == universe ) )
        throw universe_mismatch{};
    return valid_configs( model );
}

} // namespace placidus
