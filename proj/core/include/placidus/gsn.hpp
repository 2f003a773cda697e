#pragma once

#include "context.hpp"
#include "evidence.hpp"
#include "value.hpp"

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

// --- Goals ------------------------------------------------------------------

struct AtomGoal
{
    std::string claim;

    bool operator==( const AtomGoal& ) const = default;
};

struct PredGoal
{
    std::string predicate;
    Value data;

    bool operator==( const PredGoal& ) const = default;
};

// A claim: an opaque atomic proposition, or a registered predicate applied
// to data. Equality ignores the human-readable text.
struct Goal
{
    std::variant< AtomGoal, PredGoal > body;
    std::string text;

    static Goal atom( std::string claim, std::string text = {} );
    static Goal pred( std::string predicate, Value data, std::string text = {} );

    [[nodiscard]] bool is_atom() const { return std::holds_alternative< AtomGoal >( body ); }
    [[nodiscard]] const PredGoal* as_pred() const { return std::get_if< PredGoal >( &body ); }
    // Predicate id, or the claim id for atoms.
    [[nodiscard]] const std::string& key() const;

    bool operator==( const Goal& other ) const { return body == other.body; }
};

// Predicate id of "every element of data.set satisfies data.pred".
inline constexpr const char* forall_in_set = "forall_in_set";

// --- Trees ------------------------------------------------------------------

struct TemplateInstance
{
    std::string template_id;
    Value aux;
    std::optional< EvidenceRecord > precondition;
    // Trailing children that are extra premises on top of the template's own
    // instantiation (lift-correctness claims carried over from lifted templates).
    std::size_t extra_premises = 0;
};

struct Axiomatic
{
    std::string rationale;
};

using StrategyJustification = std::variant< TemplateInstance, Axiomatic >;

struct GsnNode
{
    enum class kind : std::uint8_t { nil, evidence, strategy };

    kind k = kind::nil;
    std::string id;
    std::string description;
    std::optional< Goal > goal;
    std::optional< EvidenceRecord > evidence;
    std::optional< StrategyJustification > justification;
    std::vector< GsnNode > children;

    static GsnNode nil();
    static GsnNode make_evidence( std::string id, Goal goal, EvidenceRecord record );
    static GsnNode make_strategy( std::string id, Goal goal, std::optional< StrategyJustification > justification,
                                  std::vector< GsnNode > children );
    // A goal with no development yet.
    static GsnNode undeveloped( std::string id, Goal goal );

    [[nodiscard]] bool is_nil() const { return k == kind::nil; }
    [[nodiscard]] bool is_evidence() const { return k == kind::evidence; }
    [[nodiscard]] bool is_strategy() const { return k == kind::strategy; }
};

// Preorder search by node id.
[[nodiscard]] const GsnNode* find_node( const GsnNode& root, const std::string& id );
[[nodiscard]] GsnNode* find_node( GsnNode& root, const std::string& id );
[[nodiscard]] std::size_t count_nodes( const GsnNode& root );

// --- Templates --------------------------------------------------------------

struct InstantiationRequest
{
    std::string node_id;
    Goal parent;
    Value aux;
};

struct Template
{
    std::string id;
    std::string description;
    // Predicate the decomposed goal must use; any goal when absent.
    std::optional< std::string > parent_predicate;
    // Id of the precondition predicate; empty when unconditional.
    std::string precondition_predicate;
    std::function< bool( const Goal& parent, const Value& aux, const Context& ) > precondition;
    std::function< std::vector< GsnNode >( const InstantiationRequest&, const Context& ) > instantiate;

    [[nodiscard]] bool check_precondition( const Goal& parent, const Value& aux, const Context& ctx ) const;
};

class TemplateRegistry
{
    std::map< std::string, Template, std::less<> > _templates;

public:
    void add( Template t );
    [[nodiscard]] const Template* find( std::string_view id ) const;
    [[nodiscard]] std::vector< std::string > ids() const;
};

// Analytic template over a product analysis: the decomposed claim is argued
// by (1) the analysis input represents the subject, (2) the specification
// formalizes the property, (3) the analysis verdict, machine-filled by running
// the analysis, and (4) the analysis is sound. Templates that weave their
// result into the argument add a consequent subgoal built from the output.
struct AnalyticTemplate
{
    std::string id;
    std::string analysis;
    std::string subject_key;       // input member holding the analysed artifact
    std::string specification_key; // input member holding the specification
    bool weave_result = false;     // copy output["result"] into the verdict claim
    std::function< std::optional< Goal >( const Value& input, const Value& output ) > consequent;
};

struct AnalyticLabels
{
    std::string represents;
    std::string formalizes;
    std::string verdict;
    std::string sound;
};

// Subgoal goals shared by the product and lifted constructions.
[[nodiscard]] Goal analytic_represents_goal( const AnalyticTemplate& t, const Value& input, const AnalyticLabels& labels );
[[nodiscard]] Goal analytic_formalizes_goal( const AnalyticTemplate& t, const Value& input, const AnalyticLabels& labels );
[[nodiscard]] Goal analytic_verdict_goal( const AnalyticTemplate& t, const Value& input, const Value& output,
                                          const AnalyticLabels& labels );
[[nodiscard]] Goal analytic_sound_goal( const AnalyticTemplate& t, const AnalyticLabels& labels );

// Runs the analysis on `request.aux` and returns the subgoals. Analysis
// failures abort the instantiation (instantiation_refused), never a partial tree.
[[nodiscard]] std::vector< GsnNode > analytic_instantiate( const AnalyticTemplate& t, const InstantiationRequest& request,
                                                           const Context& ctx, const AnalyticLabels& labels = {} );

// Domain decomposition of "forall x in S. P(x)" by a family F = {X1..Xn}:
// one undeveloped subgoal "forall x in Xi. P(x)" per member, in family order.
// An empty family is refused unless S is empty.
[[nodiscard]] std::vector< GsnNode > domdecomp_instantiate( const std::string& node_id, const Value& set,
                                                            const Value& family, const std::string& predicate );

// S is covered by the union of the family members.
[[nodiscard]] bool domdecomp_check_complete( const Value& set, const Value& family );

template < class T >
[[nodiscard]] bool domdecomp_check_complete( const std::set< T >& set, const std::vector< std::set< T > >& family )
{
    for ( const auto& element : set )
    {
        bool covered = false;
        for ( const auto& member : family )
            covered = covered || member.count( element ) > 0;
        if ( !covered )
            return false;
    }
    return true;
}

// Develops undeveloped node `node_id` of `root` with template `template_id`.
// Throws instantiation_refused when the precondition fails or the node is
// already developed, dangling_reference for unknown ids.
[[nodiscard]] GsnNode instantiate( const GsnNode& root, const std::string& node_id, const std::string& template_id,
                                   const Value& aux, const Context& ctx );

// Replaces undeveloped node `node_id` by an evidence node with an attestation.
[[nodiscard]] GsnNode attest( const GsnNode& root, const std::string& node_id, const std::string& text,
                              const std::string& source );

// --- Checks -----------------------------------------------------------------

enum class node_status : std::uint8_t { certified, evidence_backed, assumed, broken, undeveloped };

[[nodiscard]] const char* to_string( node_status status );

// Higher is better: broken < undeveloped < assumed < certified/evidence_backed.
[[nodiscard]] int rank( node_status status );

struct RefinesResult
{
    node_status status = node_status::broken;
    std::string detail;
};

// Soundness of one strategy: certified when its template precondition
// re-checks and its children match the template's instantiation; assumed for
// axiomatic strategies; broken otherwise. Throws dangling_reference for an
// unknown template id or unresolvable data.
[[nodiscard]] RefinesResult refines_check( const GsnNode& strategy, const Context& ctx );

// Empty when `children` start with the goals of `expected` (and the machine
// verdicts where `expected` carries evidence) followed by exactly `extra`
// further premises; otherwise a description of the first mismatch.
[[nodiscard]] std::string compare_instantiation( const std::vector< GsnNode >& children,
                                                 const std::vector< GsnNode >& expected, std::size_t extra );

// Status of an evidence node from its goal and record.
[[nodiscard]] node_status evidence_node_status( const Goal& goal, const EvidenceRecord& record );

enum class deductive_verdict : std::uint8_t { deductive, deductive_modulo_assumptions, not_deductive };

[[nodiscard]] const char* to_string( deductive_verdict v );

struct NodeReport
{
    std::string id;
    node_status status;
    std::string detail;
};

struct DeductiveReport
{
    std::vector< NodeReport > nodes; // preorder
    deductive_verdict verdict = deductive_verdict::deductive;
    std::vector< std::string > assumptions; // ids of assumed nodes, preorder
    std::vector< std::string > failures;    // ids of broken or undeveloped nodes

    [[nodiscard]] bool deductive() const { return verdict != deductive_verdict::not_deductive; }
    [[nodiscard]] const NodeReport* find( const std::string& id ) const;
};

[[nodiscard]] DeductiveReport deductive_check( const GsnNode& root, const Context& ctx );

} // namespace placidus
