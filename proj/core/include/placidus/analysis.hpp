#pragma once

#include "context.hpp"
#include "featexpr.hpp"
#include "value.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace placidus
{

// Outputs of every analysis carry a "verdict" member ("pass" | "fail"); other
// members (counterexample, result, classes) are analysis specific.

struct ProductAnalysis
{
    std::string id;
    std::string description;
    // Runs on fully resolved product input.
    std::function< Value( const Value& input, const Context& ) > run;
};

enum class lift_mode : std::uint8_t { exact, quasi };

[[nodiscard]] const char* to_string( lift_mode mode );

// A family-level analysis registered against a product analysis. Exact ones
// must satisfy derive_output(run(x), c) == product.run(x|c); quasi ones only
// promise that a clean family output implies clean products.
struct FamilyAnalysis
{
    std::string id;
    std::string product;
    lift_mode mode = lift_mode::exact;
    std::string description;
    // Runs on fully resolved variational input.
    std::function< Value( const Value& input, const Context& ) > run;
    // Exact mode: the product-level output at a configuration.
    std::function< Value( const Value& output, const Configuration&, const Context& ) > derive_output;
    // Quasi mode: the family output reports no violation.
    std::function< bool( const Value& output ) > clean;
};

class AnalysisRegistry
{
    std::map< std::string, ProductAnalysis, std::less<> > _product;
    std::map< std::string, FamilyAnalysis, std::less<> > _family;

public:
    void add( ProductAnalysis analysis );
    void add( FamilyAnalysis analysis );

    [[nodiscard]] const ProductAnalysis* product( std::string_view id ) const;
    [[nodiscard]] const FamilyAnalysis* family( std::string_view id ) const;
    // Throws dangling_reference when absent.
    [[nodiscard]] const ProductAnalysis& require_product( std::string_view id ) const;
    [[nodiscard]] const FamilyAnalysis& require_family( std::string_view id ) const;

    [[nodiscard]] std::vector< std::string > product_ids() const;
    [[nodiscard]] std::vector< std::string > family_ids() const;
};

[[nodiscard]] bool passed( const Value& output );

} // namespace placidus
