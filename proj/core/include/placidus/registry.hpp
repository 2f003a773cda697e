#pragma once

#include "analysis.hpp"
#include "context.hpp"
#include "gsn.hpp"
#include "value.hpp"
#include "vgsn.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace placidus
{

struct Predicate
{
    std::string id;
    std::string description;
    // Machine check on product data; empty for predicates that can only be
    // attested (external claims, fidelity of models, soundness of tools).
    std::function< bool( const Value& data, const Context& ) > check;

    [[nodiscard]] bool machine_checkable() const { return static_cast< bool >( check ); }
};

class PredicateRegistry
{
    std::map< std::string, Predicate, std::less<> > _predicates;

public:
    void add( Predicate predicate );
    // Registers an id with no machine check.
    void declare_external( const std::string& id, std::string description = {} );
    [[nodiscard]] const Predicate* find( std::string_view id ) const;
    [[nodiscard]] bool has( std::string_view id ) const { return find( id ) != nullptr; }
    [[nodiscard]] std::vector< std::string > ids() const;
};

struct Registry
{
    DerivationRegistry derivations;
    PredicateRegistry predicates;
    AnalysisRegistry analyses;
    TemplateRegistry templates;
    VTemplateRegistry vtemplates;

    // Built-in derivations, predicates, analyses and (lifted) templates.
    static Registry make_builtin();
    static const Registry& builtin();
};

// Registration of the built-in pieces, usable on a custom registry.
void register_builtin_predicates( Registry& registry );
void register_builtin_analyses( Registry& registry );
void register_builtin_templates( Registry& registry );
void register_builtin_vtemplates( Registry& registry );

} // namespace placidus
