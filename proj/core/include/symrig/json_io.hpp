#pragma once

#include <string>

#include "symrig/algebra.hpp"
#include "symrig/colored_graph.hpp"
#include "symrig/decomposition.hpp"
#include "symrig/lift.hpp"
#include "symrig/realization.hpp"
#include "symrig/sparsity.hpp"

namespace symrig {

// colored-graph wire format:
// {"group": {"kind": "rotation"|"reflection", "order": k}, "n": <int>,
//  "edges": [{"tail": i, "head": j, "color": c}, ...]}
std::string graph_to_json(const ColoredGraph& g, bool pretty = true);
ColoredGraph graph_from_json(const std::string& text);

// {"group": {...}, "vertices": N, "action": [...], "edges": [[u, v], ...]}
std::string lifted_framework_to_json(const LiftedFramework& lf, bool pretty = true);
LiftedFramework lifted_framework_from_json(const std::string& text);

std::string lift_to_json(const Lift& lift, bool pretty = true);

std::string verdict_to_json(const SparsityVerdict& v, bool pretty = true);
std::string rank_report_to_json(const RankReport& r, bool pretty = true);
std::string realization_to_json(const Realization& r, bool pretty = true);
std::string nice_decomposition_to_json(const NiceDecomposition& nd, bool pretty = true);
std::string cone_decomposition_to_json(const ConeDecomposition& cd, bool pretty = true);
std::string special_pair_to_json(const SpecialPair& sp, bool pretty = true);
std::string rigidity_decision_to_json(const RigidityDecision& rd, bool pretty = true);
std::string ross_realization_to_json(const RossRealization& rr, bool pretty = true);
std::string reduced_graph_to_json(const ReducedGraph& rg, bool pretty = true);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

ColoredGraph load_graph(const std::string& path);
LiftedFramework load_lifted_framework(const std::string& path);

}  // namespace symrig
