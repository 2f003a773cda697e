#include "placidus/value.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <memory>

namespace placidus
{

std::string digest( const Value& value )
{
    const auto text = value.dump();

    std::unique_ptr< EVP_MD_CTX, decltype( &EVP_MD_CTX_free ) > ctx{ EVP_MD_CTX_new(), &EVP_MD_CTX_free };
    std::array< unsigned char, EVP_MAX_MD_SIZE > hash{};
    unsigned int length = 0;
    if ( !ctx || EVP_DigestInit_ex( ctx.get(), EVP_sha256(), nullptr ) != 1 ||
         EVP_DigestUpdate( ctx.get(), text.data(), text.size() ) != 1 ||
         EVP_DigestFinal_ex( ctx.get(), hash.data(), &length ) != 1 )
        throw error{ "sha256 digest failed" };

    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve( length * 2 );
    for ( unsigned int i = 0; i < length; ++i )
    {
        out += hex[ hash[ i ] >> 4U ];
        out += hex[ hash[ i ] & 15U ];
    }
    return out;
}

Value canonical_set( Value array )
{
    if ( !array.is_array() )
        throw error{ "expected a JSON array for a set" };
    auto& items = array.get_ref< Value::array_t& >();
    std::sort( items.begin(), items.end() );
    items.erase( std::unique( items.begin(), items.end() ), items.end() );
    return array;
}

void DerivationRegistry::add( std::string tag, std::string product_type, derive_fn derive )
{
    _entries.insert_or_assign( std::move( tag ), entry{ std::move( product_type ), std::move( derive ) } );
}

std::optional< std::string > DerivationRegistry::product_type( std::string_view tag ) const
{
    const auto it = _entries.find( tag );
    if ( it == _entries.end() )
        return std::nullopt;
    return it->second.product_type;
}

const DerivationRegistry::derive_fn* DerivationRegistry::find_tag( const Value& value, std::string* tag ) const
{
    if ( !value.is_object() )
        return nullptr;
    for ( const auto& [ name, e ] : _entries )
    {
        if ( value.contains( name ) )
        {
            if ( tag != nullptr )
                *tag = name;
            return &e.derive;
        }
    }
    return nullptr;
}

Value DerivationRegistry::derive( const Value& value, const Configuration& config ) const
{
    if ( const auto* fn = find_tag( value ) )
        return ( *fn )( value, config, *this );

    if ( value.is_object() )
    {
        Value out = Value::object();
        for ( const auto& [ key, member ] : value.items() )
            out[ key ] = derive( member, config );
        return out;
    }
    if ( value.is_array() )
    {
        Value out = Value::array();
        for ( const auto& member : value )
            out.push_back( derive( member, config ) );
        return out;
    }
    return value;
}

namespace
{

FeatExpr pc_of( const Value& item, const Configuration& config )
{
    if ( !item.contains( "pc" ) )
        return FeatExpr::all( config.universe() );
    return parse_featexpr( item.at( "pc" ).get< std::string >(), config.universe() );
}

} // namespace

DerivationRegistry DerivationRegistry::builtin()
{
    DerivationRegistry registry;

    registry.add( "vset", "set",
                  []( const Value& tagged, const Configuration& config, const DerivationRegistry& )
                  {
                      Value out = Value::array();
                      for ( const auto& item : tagged.at( "vset" ) )
                          if ( sat( config, pc_of( item, config ) ) )
                              out.push_back( item.at( "value" ) );
                      return canonical_set( std::move( out ) );
                  } );

    registry.add( "vfamily", "family",
                  []( const Value& tagged, const Configuration& config, const DerivationRegistry& )
                  {
                      Value out = Value::array();
                      for ( const auto& member : tagged.at( "vfamily" ) )
                          if ( sat( config, pc_of( member, config ) ) )
                              out.push_back( canonical_set( member.at( "set" ) ) );
                      return out;
                  } );

    registry.add( "ref", "ref",
                  []( const Value& tagged, const Configuration& config, const DerivationRegistry& )
                  {
                      if ( tagged.contains( "config" ) )
                          return tagged;
                      Value out = tagged;
                      out[ "config" ] = config.members();
                      return out;
                  } );

    return registry;
}

bool is_product_value( const Value& value, const DerivationRegistry& registry )
{
    std::string tag;
    if ( registry.find_tag( value, &tag ) )
        return tag == "ref" && value.contains( "config" );
    if ( value.is_object() || value.is_array() )
        return std::all_of( value.begin(), value.end(),
                            [ & ]( const Value& member ) { return is_product_value( member, registry ); } );
    return true;
}

Value make_ref( const std::string& artifact )
{
    return Value{ { "ref", artifact } };
}

bool is_ref( const Value& value )
{
    return value.is_object() && value.contains( "ref" ) && value.at( "ref" ).is_string();
}

} // namespace placidus
