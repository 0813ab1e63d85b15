#pragma once

#include <json.hpp>

#include "degseq/criteria.hpp"
#include "degseq/realize.hpp"
#include "degseq/thresholds.hpp"

namespace degseq {

// Wire formats:
//   CheckReport     {"criterion": str, "verdict": "accepted"|"rejected",
//                    "witness_index": int|null, "slack": [[k, slack], ...]}
//   ThresholdReport {"predicate": str, "triple": [a,b,n], "holds": bool,
//                    "threshold": int, "lhs": int}
//   Matrix          {"rows": m, "cols": n, "bits": ["0110", ...]}
//   LoopGraph       {"n": int, "edges": [[i,j], ...], "loops": [i, ...]}
//                   with 1-based vertices.

nlohmann::json to_json(const CheckReport& report);
CheckReport check_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ThresholdReport& report);
ThresholdReport threshold_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BiadjacencyMatrix& m);
BiadjacencyMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LoopGraph& g);
LoopGraph loop_graph_from_json(const nlohmann::json& j);

}  // namespace degseq
