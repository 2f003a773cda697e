#include "placidus/context.hpp"

#include "placidus/error.hpp"
#include "placidus/registry.hpp"

namespace placidus
{

const Registry& Context::reg() const
{
    return registry != nullptr ? *registry : Registry::builtin();
}

Value Context::resolve_top( const Value& value ) const
{
    if ( !is_ref( value ) )
        return value;
    if ( resolver == nullptr )
        throw dangling_reference{ "no artifact resolver available for reference '" +
                                  value.at( "ref" ).get< std::string >() + "'" };
    auto content = resolver->resolve( value );
    if ( !content )
        throw dangling_reference{ "unresolved artifact reference '" + value.at( "ref" ).get< std::string >() + "'" };
    return std::move( *content );
}

Value Context::resolve( const Value& value ) const
{
    if ( is_ref( value ) )
        return resolve( resolve_top( value ) );
    if ( value.is_object() )
    {
        Value out = Value::object();
        for ( const auto& [ key, member ] : value.items() )
            out[ key ] = resolve( member );
        return out;
    }
    if ( value.is_array() )
    {
        Value out = Value::array();
        for ( const auto& member : value )
            out.push_back( resolve( member ) );
        return out;
    }
    return value;
}

Value Context::derive( const Value& value, const Configuration& config ) const
{
    return reg().derivations.derive( value, config );
}

const Context& default_context()
{
    static const Context ctx{ &Registry::builtin(), nullptr };
    return ctx;
}

} // namespace placidus
