#include "symrig/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "symrig/lift.hpp"

namespace symrig {

namespace {

// strip degree-one vertices; what remains of a map component is its cycle
std::vector<int> two_core_edges(const ColoredGraph& g, const std::vector<int>& edges) {
    std::map<int, int> degree;
    std::vector<char> alive(edges.size(), 1);
    for (int e : edges) {
        degree[g.edges[e].tail] += 1;
        degree[g.edges[e].head] += 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!alive[i]) continue;
            const auto& ed = g.edges[edges[i]];
            if (ed.tail == ed.head) continue;
            if (degree[ed.tail] == 1 || degree[ed.head] == 1) {
                alive[i] = 0;
                degree[ed.tail] -= 1;
                degree[ed.head] -= 1;
                changed = true;
            }
        }
    }
    std::vector<int> cycle;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (alive[i]) cycle.push_back(edges[i]);
    return cycle;
}

}  // namespace

std::vector<MapComponent> map_components(const ColoredGraph& g, std::span<const int> edge_subset) {
    std::vector<int> subset(edge_subset.begin(), edge_subset.end());
    if (!gain11_independent(g, subset))
        throw std::invalid_argument("edge set is not gain-(1,1) independent");

    const auto comps = rho_components(g, subset);
    std::vector<MapComponent> out;
    for (const auto& comp : comps) {
        if (comp.edges.size() != comp.vertices.size())
            throw std::invalid_argument("component is not a map-graph (one cycle per component)");
        MapComponent mc;
        mc.edges = comp.edges;
        mc.vertices = comp.vertices;

        const std::vector<int> cycle = two_core_edges(g, comp.edges);
        if (cycle.empty()) throw std::logic_error("map component lost its cycle");

        std::set<int> on_cycle;
        for (int e : cycle) {
            on_cycle.insert(g.edges[e].tail);
            on_cycle.insert(g.edges[e].head);
        }
        mc.base_vertex = *on_cycle.begin();

        // walk the cycle from the base vertex; at each step take the smallest
        // unused cycle edge incident to the current vertex
        const int k = g.group.order;
        std::set<int> unused(cycle.begin(), cycle.end());
        int at = mc.base_vertex;
        int gain = 0;
        while (!unused.empty()) {
            int chosen = -1;
            int sign = 0;
            for (int e : unused) {
                const auto& ed = g.edges[e];
                if (ed.tail == at) {
                    chosen = e;
                    sign = 1;
                    break;
                }
                if (ed.head == at) {
                    chosen = e;
                    sign = -1;
                    break;
                }
            }
            if (chosen < 0) throw std::logic_error("cycle walk got stuck");
            unused.erase(chosen);
            mc.cycle_edges.push_back(chosen);
            mc.cycle_signs.push_back(sign);
            const auto& ed = g.edges[chosen];
            gain += sign * ed.color;
            at = sign > 0 ? ed.head : ed.tail;
        }
        if (at != mc.base_vertex) throw std::logic_error("cycle walk did not close");
        mc.cycle_gain = normalize_color(gain, k);
        if (mc.cycle_gain == 0) throw std::logic_error("map component cycle has trivial gain");
        out.push_back(std::move(mc));
    }
    return out;
}

NiceDecomposition nice_decompose(const ColoredGraph& g) {
    const SparsityVerdict verdict = is_class(g, SparsityClass::Reflection22);
    if (!verdict.member) throw std::invalid_argument("input is not a reflection-(2,2) graph");
    if (!verdict.certificate) throw std::logic_error("missing decomposition certificate");

    NiceDecomposition nd;
    nd.tree_edges = verdict.certificate->parts[0];
    const std::vector<int>& map_edges = verdict.certificate->parts[1];

    nd.recolored = recolor_zero_on(g, nd.tree_edges);
    nd.map_parts = map_components(nd.recolored, map_edges);

    // lift structure: the zero-colored tree lifts to k disjoint copies and
    // every map component lifts connected
    const Lift lift = build_lift(nd.recolored);
    const int k = g.group.order;
    // vacuous for n = 1 where the spanning tree is empty
    if (!nd.tree_edges.empty()) {
        if (lift_component_count(lift, nd.tree_edges) != k)
            throw std::logic_error("tree lift does not split into k copies");
    }
    for (const auto& mc : nd.map_parts) {
        const int comps = lift_component_count(lift, mc.edges);
        if (comps != 1) throw std::logic_error("map component lift is not connected");
    }
    return nd;
}

ConeDecomposition cone_decompose(const ColoredGraph& g) {
    const SparsityVerdict verdict = is_class(g, SparsityClass::Cone22);
    if (!verdict.member) throw std::invalid_argument("input is not a cone-(2,2) graph");
    if (!verdict.certificate) throw std::logic_error("missing decomposition certificate");

    ConeDecomposition cd;
    cd.x_edges = verdict.certificate->parts[0];
    cd.y_edges = verdict.certificate->parts[1];
    cd.x_parts = map_components(g, cd.x_edges);
    cd.y_parts = map_components(g, cd.y_edges);

    for (const auto* parts : {&cd.x_parts, &cd.y_parts}) {
        std::size_t covered = 0;
        for (const auto& mc : *parts) covered += mc.vertices.size();
        if (covered != static_cast<std::size_t>(g.n))
            throw std::logic_error("cone-(1,1) half does not span every vertex");
    }
    return cd;
}

OverlapGraph overlap_graph(const ColoredGraph& g, const ConeDecomposition& decomp) {
    OverlapGraph og;
    std::vector<int> x_comp_of(g.n, -1);
    std::vector<int> y_comp_of(g.n, -1);
    for (std::size_t i = 0; i < decomp.x_parts.size(); ++i)
        for (int v : decomp.x_parts[i].vertices) x_comp_of[v] = static_cast<int>(i);
    for (std::size_t i = 0; i < decomp.y_parts.size(); ++i)
        for (int v : decomp.y_parts[i].vertices) y_comp_of[v] = static_cast<int>(i);
    for (int v = 0; v < g.n; ++v)
        if (x_comp_of[v] < 0 || y_comp_of[v] < 0)
            throw std::invalid_argument("decomposition halves must both span every vertex");

    for (std::size_t i = 0; i < decomp.x_parts.size(); ++i)
        og.nodes.push_back({0, static_cast<int>(i), decomp.x_parts[i].base_vertex});
    const int y_offset = static_cast<int>(og.nodes.size());
    for (std::size_t i = 0; i < decomp.y_parts.size(); ++i)
        og.nodes.push_back({1, static_cast<int>(i), decomp.y_parts[i].base_vertex});

    // x_i -> y_j when the base of Y_j lies in X_i, and symmetrically; hence the
    // unique in-neighbor of a node is the other side's component containing its base
    og.in_source.assign(og.nodes.size(), -1);
    for (std::size_t node = 0; node < og.nodes.size(); ++node) {
        const auto& nd = og.nodes[node];
        const int src = nd.side == 0 ? y_offset + y_comp_of[nd.base_vertex]
                                     : x_comp_of[nd.base_vertex];
        og.in_source[node] = src;
        og.edges.push_back({src, static_cast<int>(node)});
    }
    std::sort(og.edges.begin(), og.edges.end());

    // reversed graph is functional: walk predecessors to find the cycles
    std::vector<int> state(og.nodes.size(), 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> cycle_id(og.nodes.size(), -1);
    for (std::size_t start = 0; start < og.nodes.size(); ++start) {
        if (state[start]) continue;
        std::vector<int> stack;
        int at = static_cast<int>(start);
        while (state[at] == 0) {
            state[at] = 1;
            stack.push_back(at);
            at = og.in_source[at];
        }
        if (state[at] == 1) {
            // new cycle: nodes from `at` to the top of the stack
            std::vector<int> cycle;
            for (auto it = std::find(stack.begin(), stack.end(), at); it != stack.end(); ++it)
                cycle.push_back(*it);
            // orient along the directed edges (in_source points backwards)
            std::reverse(cycle.begin(), cycle.end());
            for (int v : cycle) cycle_id[v] = static_cast<int>(og.cycles.size());
            og.cycles.push_back(std::move(cycle));
        }
        for (int v : stack) state[v] = 2;
    }

    og.path_from_cycle.resize(og.nodes.size());
    for (std::size_t node = 0; node < og.nodes.size(); ++node) {
        std::vector<int> back;
        int at = static_cast<int>(node);
        while (cycle_id[at] < 0) {
            back.push_back(at);
            at = og.in_source[at];
        }
        back.push_back(at);
        std::reverse(back.begin(), back.end());
        og.path_from_cycle[node] = std::move(back);
    }
    return og;
}

}  // namespace symrig
