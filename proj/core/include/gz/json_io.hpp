#pragma once

#include <gz/census.hpp>

#include <json.hpp>

namespace gz {

using json = nlohmann::ordered_json;

// Scalars serialize as [re, im] number pairs (float mode) or
// ["p/q", "r/s"] strings (exact mode).
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// Either coefficient or root data is accepted per level; exact-mode
// output carries both whenever the level polynomial splits over the
// Gaussian rationals.
json gzspec_to_json(const GZSpec& c, const ToleranceContext& ctx = {});
GZSpec gzspec_from_json(const json& j, const ToleranceContext& ctx = {});

json solution_point_to_json(const SolutionPoint& p);
SolutionPoint solution_point_from_json(const json& j);

json choice_vector_to_json(const ChoiceVector& v);
ChoiceVector choice_vector_from_json(const json& j);

json sreg_report_to_json(const SregReport& r);
json stabilizer_to_json(const StabilizerPattern& p);
json fiber_class_to_json(const FiberClass& fc);
json permutation_to_json(const Permutation& p);

} // namespace gz
