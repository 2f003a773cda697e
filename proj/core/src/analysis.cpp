#include "placidus/analysis.hpp"

#include "placidus/error.hpp"

namespace placidus
{

const char* to_string( lift_mode mode )
{
    return mode == lift_mode::exact ? "exact" : "quasi";
}

void AnalysisRegistry::add( ProductAnalysis analysis )
{
    auto id = analysis.id;
    _product.insert_or_assign( std::move( id ), std::move( analysis ) );
}

void AnalysisRegistry::add( FamilyAnalysis analysis )
{
    auto id = analysis.id;
    _family.insert_or_assign( std::move( id ), std::move( analysis ) );
}

const ProductAnalysis* AnalysisRegistry::product( std::string_view id ) const
{
    const auto it = _product.find( id );
    return it == _product.end() ? nullptr : &it->second;
}

const FamilyAnalysis* AnalysisRegistry::family( std::string_view id ) const
{
    const auto it = _family.find( id );
    return it == _family.end() ? nullptr : &it->second;
}

const ProductAnalysis& AnalysisRegistry::require_product( std::string_view id ) const
{
    if ( const auto* found = product( id ) )
        return *found;
    throw dangling_reference{ "unknown product analysis '" + std::string{ id } + "'" };
}

const FamilyAnalysis& AnalysisRegistry::require_family( std::string_view id ) const
{
    if ( const auto* found = family( id ) )
        return *found;
    throw dangling_reference{ "unknown family analysis '" + std::string{ id } + "'" };
}

std::vector< std::string > AnalysisRegistry::product_ids() const
{
    std::vector< std::string > ids;
    for ( const auto& [ id, analysis ] : _product )
        ids.push_back( id );
    return ids;
}

std::vector< std::string > AnalysisRegistry::family_ids() const
{
    std::vector< std::string > ids;
    for ( const auto& [ id, analysis ] : _family )
        ids.push_back( id );
    return ids;
}

bool passed( const Value& output )
{
    return output.is_object() && output.value( "verdict", "" ) == "pass";
}

} // namespace placidus
