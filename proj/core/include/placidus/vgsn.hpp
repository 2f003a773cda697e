#pragma once

#include "context.hpp"
#include "evidence.hpp"
#include "featexpr.hpp"
#include "gsn.hpp"
#include "variability.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace placidus
{

// A goal with a presence condition; its data may be variational.
struct VGoal
{
    FeatExpr pc;
    Goal body;
};

struct VTemplateInstance
{
    std::string template_id;
    Value aux;
    std::optional< VariationalEvidence > precondition;
    std::size_t extra_premises = 0;
};

using VStrategyJustification = std::variant< VTemplateInstance, Axiomatic >;

struct VGsnNode
{
    enum class kind : std::uint8_t { evidence, strategy };

    kind k = kind::strategy;
    std::string id;
    std::string description;
    VGoal goal;
    std::optional< VariationalEvidence > evidence;
    std::optional< VStrategyJustification > justification;
    std::vector< VGsnNode > children;

    static VGsnNode make_evidence( std::string id, VGoal goal, VariationalEvidence evidence );
    static VGsnNode make_strategy( std::string id, VGoal goal, std::optional< VStrategyJustification > justification,
                                   std::vector< VGsnNode > children );
    static VGsnNode undeveloped( std::string id, VGoal goal );

    [[nodiscard]] bool is_evidence() const { return k == kind::evidence; }
    [[nodiscard]] bool is_strategy() const { return k == kind::strategy; }
};

// A product line of assurance cases: a vGSN tree together with its feature model.
struct PlAc
{
    FeatExpr model;
    VGsnNode root;

    [[nodiscard]] const FeatureUniverse& universe() const { return model.universe(); }
};

[[nodiscard]] const VGsnNode* find_node( const VGsnNode& root, const std::string& id );
[[nodiscard]] VGsnNode* find_node( VGsnNode& root, const std::string& id );
[[nodiscard]] std::size_t count_nodes( const VGsnNode& root );

// Conjunction of the pcs from the root down to `id`; nullopt when absent.
[[nodiscard]] std::optional< FeatExpr > effective_pc( const VGsnNode& root, const std::string& id );

// Load-time well-formedness: pcs bound to the model's universe, unique ids,
// evidence scopes equal to the effective pc within the model.
[[nodiscard]] std::vector< std::string > validate_plac( const PlAc& ac );

// --- Derivation -------------------------------------------------------------

[[nodiscard]] Goal derive_goal( const Goal& goal, const Configuration& config, const Context& ctx );

// Product node at `config`; nil when the node's pc fails. Absent children are
// dropped, so no nil appears below a non-nil result.
[[nodiscard]] GsnNode derive_node( const VGsnNode& node, const Configuration& config, const Context& ctx );

// Product AC at a valid configuration of the model.
[[nodiscard]] GsnNode derive_ac( const PlAc& ac, const Configuration& config, const Context& ctx );

// --- Lifted templates -------------------------------------------------------

struct VInstantiationRequest
{
    std::string node_id;
    VGoal parent;
    FeatExpr scope; // effective pc of the node being decomposed
    FeatExpr model;
    Value aux;
};

struct VInstantiation
{
    Value aux; // instantiation data as recorded in the tree (keywords expanded)
    std::optional< VariationalEvidence > precondition;
    std::vector< VGsnNode > children;
    std::size_t extra_premises = 0;
};

// A lifted template over a product template. Every instantiation carries the
// obligation that deriving its children at each valid configuration gives the
// product template's instantiation on the derived data.
struct VTemplate
{
    std::string id;
    std::string product_template;
    std::string description;
    std::function< VInstantiation( const VInstantiationRequest&, const Context& ) > instantiate;
    // Data the precondition predicate of the product template is applied to.
    std::function< Value( const VGoal& parent, const Value& aux, const Context& ) > precondition_data;
};

class VTemplateRegistry
{
    std::map< std::string, VTemplate, std::less<> > _templates;

public:
    void add( VTemplate t );
    [[nodiscard]] const VTemplate* find( std::string_view id ) const;
    [[nodiscard]] std::vector< std::string > ids() const;
};

// Registration helper: pairs `product` with a lifted instantiation. The
// returned template refuses instantiations whose lift obligation fails.
[[nodiscard]] VTemplate lift_template( const Template& product, std::string id,
                                       std::function< VInstantiation( const VInstantiationRequest&, const Context& ) > inst,
                                       std::function< Value( const VGoal&, const Value&, const Context& ) >
                                           precondition_data = {} );

struct LiftObligation
{
    LiftReport report;
    std::vector< std::string > witness_lines;
};

// Checks derivation commutation for one instantiation of `vt`:
// derive(children, c) == T.inst(parent|c, aux|c) for every c in Conf(model & scope).
[[nodiscard]] LiftObligation check_instantiation_lift( const VTemplate& vt, const VInstantiationRequest& request,
                                                       const VInstantiation& inst, const Context& ctx );

// Instantiates `template_id` (lifted) at node `node_id` of `ac`: the node must be
// undeveloped. Throws instantiation_refused on a rejected precondition or a
// failed lift obligation, dangling_reference for unknown ids.
[[nodiscard]] PlAc instantiate( const PlAc& ac, const std::string& node_id, const std::string& template_id,
                                const Value& aux, const Context& ctx );

// Replaces undeveloped node `node_id` by an evidence node with attested
// evidence over its effective pc.
[[nodiscard]] PlAc attest( const PlAc& ac, const std::string& node_id, const std::string& text,
                           const std::string& signer );

// Family of annotated singletons, one per element.
template < class T >
[[nodiscard]] VarFamily< T > explode( const VarSet< T >& set )
{
    VarFamily< T > out{ set.universe() };
    for ( const auto& element : set )
        out.add( { element.value }, element.pc );
    return out;
}

// Groups elements whose pcs are semantically equal, in first-occurrence
// order; each group is annotated with its shortest pc text (ties broken
// lexicographically).
template < class T >
[[nodiscard]] VarFamily< T > aggregate( const VarSet< T >& set )
{
    struct group
    {
        ConfigSet configs;
        FeatExpr pc;
        std::string text;
        std::set< T > members;
    };
    std::vector< group > groups;
    for ( const auto& element : set )
    {
        const auto configs = semantics( element.pc );
        auto text = element.pc.to_string();
        auto it = std::find_if( groups.begin(), groups.end(), [ & ]( const group& g ) { return g.configs == configs; } );
        if ( it == groups.end() )
        {
            groups.push_back( { configs, element.pc, std::move( text ), { element.value } } );
            continue;
        }
        it->members.insert( element.value );
        if ( text.size() < it->text.size() || ( text.size() == it->text.size() && text < it->text ) )
        {
            it->pc = element.pc;
            it->text = std::move( text );
        }
    }
    VarFamily< T > out{ set.universe() };
    for ( auto& g : groups )
        out.add( std::move( g.members ), g.pc );
    return out;
}

// JSON forms over {"vset": [...]} / {"vfamily": [...]} values.
[[nodiscard]] Value explode_value( const Value& vset, const FeatureUniverse& universe );
[[nodiscard]] Value aggregate_value( const Value& vset, const FeatureUniverse& universe );

// One undeveloped subgoal per family member, annotated with the member's pc.
[[nodiscard]] std::vector< VGsnNode > vdomdecomp_instantiate( const std::string& node_id, const Value& vset,
                                                              const Value& vfamily, const std::string& predicate,
                                                              const FeatureUniverse& universe );

// Lifted analytic instantiation: the product subgoals over variational data,
// with G3 backed by analytic evidence from `family_analysis`, and a final
// subgoal asserting the (exact or quasi) lift, backed by an exhaustive table
// of per-configuration lift comparisons. Refused when the lift check fails.
[[nodiscard]] VInstantiation lifted_analytic_instantiate( const AnalyticTemplate& t,
                                                          const std::string& family_analysis,
                                                          const VInstantiationRequest& request, const Context& ctx,
                                                          const AnalyticLabels& labels = {} );

// --- Checks -----------------------------------------------------------------

enum class certification : std::uint8_t {
    shortcut_or_descent, // variational precondition shortcut when it applies, else per-config descent
    descent,             // per-config descent only
};

struct VRefinesResult
{
    node_status status = node_status::certified; // worst status over the scope
    ConfigSet certified;
    ConfigSet assumed;
    ConfigSet broken;
    bool shortcut = false; // certified by the shortcut
    std::string detail;
};

// Soundness of a lifted strategy over Conf(model & scope).
[[nodiscard]] VRefinesResult vrefines_check( const VGsnNode& strategy, const FeatExpr& scope, const FeatExpr& model,
                                             const Context& ctx, certification mode = certification::shortcut_or_descent );

struct VNodeReport
{
    std::string id;
    node_status status = node_status::certified;
    ConfigSet present;
    ConfigSet broken;
    ConfigSet undeveloped;
    ConfigSet assumed;
    std::string detail;

    // Configurations where the node fails (broken or undeveloped).
    [[nodiscard]] ConfigSet failing() const { return broken | undeveloped; }
};

struct VDeductiveReport
{
    std::vector< VNodeReport > nodes; // preorder
    ConfigSet domain;                 // Conf(model & root.pc)
    ConfigSet failing;
    deductive_verdict verdict = deductive_verdict::deductive;
    std::vector< std::string > assumptions; // ids of nodes assumed somewhere

    [[nodiscard]] bool deductive() const { return verdict != deductive_verdict::not_deductive; }
    [[nodiscard]] const VNodeReport* find( const std::string& id ) const;
    // Assumed node ids at `config`, preorder.
    [[nodiscard]] std::vector< std::string > assumptions_at( const Configuration& config ) const;
};

[[nodiscard]] VDeductiveReport vdeductive_check( const PlAc& ac, const Context& ctx,
                                                 certification mode = certification::shortcut_or_descent );

} // namespace placidus
