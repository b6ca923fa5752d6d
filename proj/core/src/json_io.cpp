#include "symrig/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symrig {

namespace {

using nlohmann::json;

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump(); }

json group_to_json_obj(const GroupSpec& group) {
    return {{"kind", group.kind == GroupKind::Rotation ? "rotation" : "reflection"},
            {"order", group.order}};
}

GroupSpec group_from_json_obj(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("order"))
        throw std::invalid_argument("group must have kind and order");
    GroupSpec group;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rotation")
        group.kind = GroupKind::Rotation;
    else if (kind == "reflection")
        group.kind = GroupKind::Reflection;
    else
        throw std::invalid_argument("group kind must be rotation or reflection");
    group.order = j.at("order").get<int>();
    return group;
}

json graph_to_json_obj(const ColoredGraph& g) {
    json edges = json::array();
    for (const auto& ed : g.edges)
        edges.push_back({{"tail", ed.tail}, {"head", ed.head}, {"color", ed.color}});
    return {{"group", group_to_json_obj(g.group)}, {"n", g.n}, {"edges", edges}};
}

ColoredGraph graph_from_json_obj(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph must be a JSON object");
    ColoredGraph g;
    g.group = group_from_json_obj(j.at("group"));
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        g.add_edge(e.at("tail").get<int>(), e.at("head").get<int>(), e.at("color").get<int>());
    }
    return g;
}

json number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

json violation_to_json(const ViolatingSubset& v) {
    return {{"type", "violating-subset"}, {"edges", v.edges}, {"n", v.n},
            {"m", v.m},                   {"c", v.c_nontrivial}, {"c0", v.c_trivial},
            {"bound", v.bound}};
}

json rank_report_to_json_obj(const RankReport& r) {
    return {{"rank", r.rank},
            {"nullity", r.nullity},
            {"trials", r.trials},
            {"tolerance", r.tolerance},
            {"gap", number_or_inf(r.gap)},
            {"reliable", r.reliable},
            {"seed", r.seed},
            {"singular_values", r.singular_values}};
}

json realization_to_json_obj(const Realization& r) {
    json points = json::array();
    for (const auto& p : r.points) points.push_back({p.x, p.y});
    json fates = json::array();
    for (const auto f : r.edge_fates)
        fates.push_back(f == EdgeFate::Collapsed ? "collapsed" : "faithful");
    return {{"points", points},
            {"nullity", r.nullity},
            {"classification", to_string(r.classification)},
            {"residual", r.residual},
            {"edge_fates", fates}};
}

json map_component_to_json(const MapComponent& mc) {
    return {{"edges", mc.edges},
            {"vertices", mc.vertices},
            {"cycle_edges", mc.cycle_edges},
            {"cycle_gain", mc.cycle_gain},
            {"base", mc.base_vertex}};
}

json directions_to_json(const DirectionAssignment& d) {
    json dirs = json::array();
    for (const auto& dir : d.dirs) dirs.push_back({dir.x(), dir.y()});
    return {{"dirs", dirs},
            {"provenance", d.provenance == DirectionAssignment::Provenance::Constructed
                               ? "constructed"
                               : "random-generic"}};
}

}  // namespace

std::string graph_to_json(const ColoredGraph& g, bool pretty) {
    return dump(graph_to_json_obj(g), pretty);
}

ColoredGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("malformed JSON: ") + err.what());
    }
    try {
        return graph_from_json_obj(j);
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + err.what());
    }
}

std::string lifted_framework_to_json(const LiftedFramework& lf, bool pretty) {
    json edges = json::array();
    for (const auto& [u, v] : lf.edges) edges.push_back({u, v});
    const json j = {{"group", group_to_json_obj(lf.group)},
                    {"vertices", lf.vertex_count},
                    {"action", lf.action},
                    {"edges", edges}};
    return dump(j, pretty);
}

LiftedFramework lifted_framework_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("malformed JSON: ") + err.what());
    }
    try {
        LiftedFramework lf;
        lf.group = group_from_json_obj(j.at("group"));
        lf.vertex_count = j.at("vertices").get<int>();
        lf.action = j.at("action").get<std::vector<int>>();
        for (const auto& e : j.at("edges"))
            lf.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        return lf;
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("bad lifted framework JSON: ") + err.what());
    }
}

std::string lift_to_json(const Lift& lift, bool pretty) {
    json vertices = json::array();
    for (const auto& lv : lift.vertices) vertices.push_back({lv.base, lv.level});
    json edges = json::array();
    for (const auto& le : lift.edges)
        edges.push_back({{"tail", le.tail}, {"head", le.head}, {"orbit", le.orbit}});
    const json j = {{"base", graph_to_json_obj(lift.base)},
                    {"vertices", vertices},
                    {"edges", edges},
                    {"action", lift.action}};
    return dump(j, pretty);
}

std::string verdict_to_json(const SparsityVerdict& v, bool pretty) {
    json j = {{"class", to_string(v.cls)}, {"member", v.member}, {"sparse", v.sparse}};
    json witness;
    if (v.violation) witness = violation_to_json(*v.violation);
    if (v.certificate) {
        json parts = json::array();
        for (std::size_t i = 0; i < v.certificate->parts.size(); ++i)
            parts.push_back({{"label", v.certificate->labels[i]}, {"edges", v.certificate->parts[i]}});
        witness = {{"type", "decomposition"}, {"parts", parts}};
    }
    if (v.count_mismatch && witness.is_null())
        witness = {{"type", "global-count"},
                   {"expected", v.count_mismatch->expected},
                   {"actual", v.count_mismatch->actual}};
    j["witness"] = witness;
    return dump(j, pretty);
}

std::string rank_report_to_json(const RankReport& r, bool pretty) {
    return dump(rank_report_to_json_obj(r), pretty);
}

std::string realization_to_json(const Realization& r, bool pretty) {
    return dump(realization_to_json_obj(r), pretty);
}

std::string nice_decomposition_to_json(const NiceDecomposition& nd, bool pretty) {
    json parts = json::array();
    for (const auto& mc : nd.map_parts) parts.push_back(map_component_to_json(mc));
    const json j = {{"tree_edges", nd.tree_edges},
                    {"map_components", parts},
                    {"recolored", graph_to_json_obj(nd.recolored)}};
    return dump(j, pretty);
}

std::string cone_decomposition_to_json(const ConeDecomposition& cd, bool pretty) {
    json xp = json::array();
    for (const auto& mc : cd.x_parts) xp.push_back(map_component_to_json(mc));
    json yp = json::array();
    for (const auto& mc : cd.y_parts) yp.push_back(map_component_to_json(mc));
    const json j = {{"x_edges", cd.x_edges},
                    {"y_edges", cd.y_edges},
                    {"x_components", xp},
                    {"y_components", yp}};
    return dump(j, pretty);
}

std::string special_pair_to_json(const SpecialPair& sp, bool pretty) {
    const json j = {{"directions", directions_to_json(sp.directions)},
                    {"realization", realization_to_json_obj(sp.realization)},
                    {"rank_d", rank_report_to_json_obj(sp.rank_d)},
                    {"rank_d_perp", rank_report_to_json_obj(sp.rank_d_perp)},
                    {"circuits", sp.circuit_count},
                    {"attempts", sp.attempts},
                    {"seed", sp.seed}};
    return dump(j, pretty);
}

std::string rigidity_decision_to_json(const RigidityDecision& rd, bool pretty) {
    json j = {{"verdict", to_string(rd.verdict)},
              {"combinatorial", json::parse(verdict_to_json(rd.combinatorial, false))},
              {"rigidity_rank", rd.rigidity_rank},
              {"transfer_ok", rd.transfer_ok},
              {"note", rd.note}};
    if (rd.direction_rank) j["direction_rank"] = rank_report_to_json_obj(*rd.direction_rank);
    if (rd.perp_rank) j["perp_rank"] = rank_report_to_json_obj(*rd.perp_rank);
    if (rd.realization) j["realization"] = realization_to_json_obj(*rd.realization);
    return dump(j, pretty);
}

std::string ross_realization_to_json(const RossRealization& rr, bool pretty) {
    const json j = {{"directions", directions_to_json(rr.directions)},
                    {"realization", realization_to_json_obj(rr.realization)},
                    {"report", rank_report_to_json_obj(rr.report)},
                    {"attempts", rr.attempts}};
    return dump(j, pretty);
}

std::string reduced_graph_to_json(const ReducedGraph& rg, bool pretty) {
    const json j = {{"graph", graph_to_json_obj(rg.graph)},
                    {"vertex_map", rg.vertex_map},
                    {"edge_map", rg.edge_map},
                    {"loop_edges", rg.loop_edges},
                    {"circuits", rg.circuits}};
    return dump(j, pretty);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

ColoredGraph load_graph(const std::string& path) { return graph_from_json(read_text_file(path)); }

LiftedFramework load_lifted_framework(const std::string& path) {
    return lifted_framework_from_json(read_text_file(path));
}

}  // namespace symrig
