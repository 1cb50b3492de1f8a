#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "msolids/incidence.hpp"
#include "msolids/magic.hpp"
#include "msolids/solver.hpp"

namespace msolids {

// ordered_json keeps insertion order so every emission is deterministic.
using Json = nlohmann::ordered_json;

Json structure_to_json(const IncidenceStructure& s);
Json group_to_json(const SymmetryGroup& g);

// Labeling document: {solid, parameter, labels} with 1-based labels in
// builder vertex order.
struct LabelingDocument {
    std::string solid;
    std::optional<int> parameter;
    Labeling labeling;
};
Json labeling_to_json(const LabelingDocument& doc);
LabelingDocument labeling_from_json(const Json& j);  // throws std::invalid_argument

Json verify_report_to_json(const VerifyReport& r);
Json derived_constants_to_json(const DerivedConstants& d);
Json verdict_to_json(const FeasibilityVerdict& v);

// Hash of the serialized problem + group; guards checkpoint resume.
std::string problem_fingerprint(const MagicProblem& p, const SymmetryGroup& g);

Json checkpoint_to_json(const solver::CheckpointData& c);
solver::CheckpointData checkpoint_from_json(const Json& j);

}  // namespace msolids
