#pragma once

#include "evidence.hpp"
#include "featexpr.hpp"
#include "gsn.hpp"
#include "value.hpp"
#include "vgsn.hpp"

namespace placidus
{

// JSON encodings of the file formats. Readers throw `error` with the path of
// the offending member.

// --- Feature models ---------------------------------------------------------

// {"features": ["A", ...], "model": "<expr>"}; a missing model means true.
[[nodiscard]] FeatExpr feature_model_from_json( const Value& json );
[[nodiscard]] Value feature_model_to_json( const FeatExpr& model );

// --- Evidence ---------------------------------------------------------------

// {"kind": "machine", "analysis", "input_digest", "output_digest", "verdict", ["counterexample"]}
// {"kind": "attested", "text", "source"}
[[nodiscard]] Value to_json( const EvidenceRecord& record );
[[nodiscard]] EvidenceRecord evidence_record_from_json( const Value& json );

// {"scope": "<expr>", "kind": "exhaustive", "table": [{"config": [...], "record": {...}}]}
// {"scope": "<expr>", "kind": "analytic", "analysis", "input", "output", "input_digest", "output_digest"}
// {"scope": "<expr>", "kind": "attested", "text", "signer"}
[[nodiscard]] Value to_json( const VariationalEvidence& evidence );
[[nodiscard]] VariationalEvidence variational_evidence_from_json( const Value& json, const FeatureUniverse& universe );

// --- Goals and trees --------------------------------------------------------

// {"atom": "<claim>", "text"} or {"pred": "<id>", "data": ..., "text"}
[[nodiscard]] Value to_json( const Goal& goal );
[[nodiscard]] Goal goal_from_json( const Value& json );

// {"id", "kind": "nil"|"evidence"|"strategy", "description", "goal", "evidence",
//  "justification": {"template", "aux", "precondition", "extra_premises"} | {"axiom": "<rationale>"},
//  "children": [...]}
[[nodiscard]] Value to_json( const GsnNode& node );
[[nodiscard]] GsnNode gsn_from_json( const Value& json );

// As above with "pc" on every node and variational evidence.
[[nodiscard]] Value to_json( const VGsnNode& node );
[[nodiscard]] VGsnNode vgsn_from_json( const Value& json, const FeatureUniverse& universe );

// {"feature_model": {"features", "model"}, "root": {...}}
[[nodiscard]] Value to_json( const PlAc& ac );
[[nodiscard]] PlAc plac_from_json( const Value& json );

// True when `json` looks like a PL AC (has feature_model and root).
[[nodiscard]] bool is_plac_json( const Value& json );

} // namespace placidus
