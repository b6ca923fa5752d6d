#include "symrig/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace symrig {

bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind == b.kind && a.order == b.order;
}

bool operator==(const ColoredEdge& a, const ColoredEdge& b) {
    return a.tail == b.tail && a.head == b.head && a.color == b.color;
}

ColoredGraph& ColoredGraph::add_edge(int tail, int head, int color) {
    edges.push_back({tail, head, color});
    return *this;
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n == b.n && a.group == b.group && a.edges == b.edges;
}

int normalize_color(int c, int k) {
    int r = c % k;
    if (r < 0) r += k;
    return r;
}

std::vector<Diagnostic> validate(const ColoredGraph& g) {
    std::vector<Diagnostic> out;
    const int k = g.group.order;
    if (k < 2) out.push_back({Severity::Error, "group order must be at least 2", -1});
    if (g.group.kind == GroupKind::Reflection && k != 2)
        out.push_back({Severity::Error, "reflection group must have order 2", -1});
    if (g.n < 0) out.push_back({Severity::Error, "negative vertex count", -1});
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        if (ed.tail < 0 || ed.tail >= g.n || ed.head < 0 || ed.head >= g.n)
            out.push_back({Severity::Error, "edge endpoint out of range", e});
        if (k >= 2 && (ed.color < 0 || ed.color >= k))
            out.push_back({Severity::Error, "color out of range", e});
        if (ed.tail == ed.head && ed.color == 0)
            out.push_back({Severity::Warning, "trivial-gain self-loop", e});
    }
    return out;
}

bool is_valid(const ColoredGraph& g) {
    for (const auto& d : validate(g))
        if (d.severity == Severity::Error) return false;
    return true;
}

void require_valid(const ColoredGraph& g) {
    for (const auto& d : validate(g))
        if (d.severity == Severity::Error)
            throw std::invalid_argument("invalid colored graph: " + d.message);
}

GainUnionFind::GainUnionFind(int n, int k) : parent_(n), rank_(n, 0), pot_(n, 0), k_(k) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

GainUnionFind::FindResult GainUnionFind::find(int v) {
    int gain = 0;
    int x = v;
    while (parent_[x] != x) {
        gain += pot_[x];
        x = parent_[x];
    }
    // path compression, re-pointing every node on the path at the root
    int root = x;
    x = v;
    int acc = gain;
    while (parent_[x] != root && parent_[x] != x) {
        const int next = parent_[x];
        const int step = pot_[x];
        parent_[x] = root;
        pot_[x] = normalize_color(acc, k_);
        acc -= step;
        x = next;
    }
    return {root, normalize_color(gain, k_)};
}

bool GainUnionFind::unite(int tail, int head, int color, int* cycle_gain) {
    const FindResult ft = find(tail);
    const FindResult fh = find(head);
    if (ft.root == fh.root) {
        if (cycle_gain) *cycle_gain = normalize_color(color + fh.gain - ft.gain, k_);
        return false;
    }
    // attach so that gain(tail -> head) = color stays consistent
    if (rank_[ft.root] < rank_[fh.root]) {
        parent_[ft.root] = fh.root;
        pot_[ft.root] = normalize_color(-ft.gain + color + fh.gain, k_);
    } else {
        parent_[fh.root] = ft.root;
        pot_[fh.root] = normalize_color(-fh.gain - color + ft.gain, k_);
        if (rank_[ft.root] == rank_[fh.root]) ++rank_[ft.root];
    }
    return true;
}

bool GainUnionFind::same(int a, int b) { return find(a).root == find(b).root; }

CycleGain make_cycle_gain(const ColoredGraph& g, std::span<const int> edges,
                          std::span<const int> signs) {
    if (edges.empty() || edges.size() != signs.size())
        throw std::invalid_argument("cycle needs one sign per edge");
    CycleGain out;
    out.edges.assign(edges.begin(), edges.end());
    out.signs.assign(signs.begin(), signs.end());
    int gain = 0;
    int at = signs[0] > 0 ? g.edges.at(edges[0]).tail : g.edges.at(edges[0]).head;
    const int start = at;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& ed = g.edges.at(edges[i]);
        if (signs[i] > 0) {
            if (ed.tail != at) throw std::invalid_argument("cycle walk is broken");
            at = ed.head;
            gain += ed.color;
        } else {
            if (ed.head != at) throw std::invalid_argument("cycle walk is broken");
            at = ed.tail;
            gain -= ed.color;
        }
    }
    if (at != start) throw std::invalid_argument("cycle walk does not close");
    out.gain = normalize_color(gain, g.group.order);
    return out;
}

std::vector<ComponentRho> rho_components(const ColoredGraph& g, std::span<const int> edge_subset) {
    GainUnionFind uf(g.n, g.group.order);
    std::vector<int> nontrivial_root;  // roots with a nonzero closing gain, resolved later
    for (int e : edge_subset) {
        const auto& ed = g.edges.at(e);
        int cg = 0;
        if (!uf.unite(ed.tail, ed.head, ed.color, &cg)) {
            if (cg != 0) nontrivial_root.push_back(ed.tail);
        }
    }
    std::map<int, ComponentRho> by_root;
    for (int e : edge_subset) {
        const auto& ed = g.edges.at(e);
        const int root = uf.find(ed.tail).root;
        by_root[root].edges.push_back(e);
    }
    std::map<int, int> root_min_vertex;
    for (int v = 0; v < g.n; ++v) {
        const int root = uf.find(v).root;
        if (by_root.count(root) && !root_min_vertex.count(root)) root_min_vertex[root] = v;
    }
    for (int v = 0; v < g.n; ++v) {
        const int root = uf.find(v).root;
        auto it = by_root.find(root);
        if (it != by_root.end()) it->second.vertices.push_back(v);
    }
    for (int v : nontrivial_root) by_root[uf.find(v).root].trivial = false;

    std::vector<ComponentRho> out;
    out.reserve(by_root.size());
    std::vector<std::pair<int, int>> order;  // (min vertex, root)
    for (auto& [root, comp] : by_root) order.push_back({root_min_vertex[root], root});
    std::sort(order.begin(), order.end());
    for (auto& [minv, root] : order) {
        auto& comp = by_root[root];
        std::sort(comp.edges.begin(), comp.edges.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<bool> rho_image_trivial(const ColoredGraph& g, std::span<const int> edge_subset) {
    std::vector<bool> out;
    for (const auto& comp : rho_components(g, edge_subset)) out.push_back(comp.trivial);
    return out;
}

int rho_image_generator(const ColoredGraph& g, std::span<const int> edge_subset) {
    const int k = g.group.order;
    GainUnionFind uf(g.n, k);
    int gen = k;
    for (int e : edge_subset) {
        const auto& ed = g.edges.at(e);
        int cg = 0;
        if (!uf.unite(ed.tail, ed.head, ed.color, &cg)) gen = std::gcd(gen, cg);
    }
    return gen == 0 ? k : gen;
}

ColoredGraph recolor_zero_on(const ColoredGraph& g, std::span<const int> subgraph_edges) {
    const int k = g.group.order;
    for (bool trivial : rho_image_trivial(g, subgraph_edges))
        if (!trivial)
            throw std::invalid_argument("subgraph has nontrivial rho-image, cannot recolor to zero");

    std::vector<char> in_sub(g.edge_count(), 0);
    for (int e : subgraph_edges) in_sub[e] = 1;

    // forest: subgraph edges first, then the remaining edges, ascending index
    GainUnionFind uf(g.n, k);
    std::vector<char> in_forest(g.edge_count(), 0);
    auto grow = [&](bool subgraph_pass) {
        for (int e = 0; e < g.edge_count(); ++e) {
            if (static_cast<bool>(in_sub[e]) != subgraph_pass) continue;
            const auto& ed = g.edges[e];
            if (ed.tail == ed.head) continue;
            if (uf.unite(ed.tail, ed.head, ed.color)) in_forest[e] = 1;
        }
    };
    grow(true);
    grow(false);

    ColoredGraph out = g;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        if (in_forest[e]) {
            out.edges[e].color = 0;
            continue;
        }
        const auto ft = uf.find(ed.tail);
        const auto fh = uf.find(ed.head);
        // fundamental cycle gain of e in the original coloring
        out.edges[e].color = normalize_color(ed.color + fh.gain - ft.gain, k);
    }
    return out;
}

bool equivalent_colorings(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.n != b.n || !(a.group == b.group) || a.edge_count() != b.edge_count()) return false;
    for (int e = 0; e < a.edge_count(); ++e)
        if (a.edges[e].tail != b.edges[e].tail || a.edges[e].head != b.edges[e].head) return false;

    const int k = a.group.order;
    // canonical spanning forest by ascending edge index over the shared structure
    GainUnionFind ufa(a.n, k), ufb(b.n, k);
    for (int e = 0; e < a.edge_count(); ++e) {
        const auto& ea = a.edges[e];
        const auto& eb = b.edges[e];
        int ga = 0, gb = 0;
        const bool joined_a = ufa.unite(ea.tail, ea.head, ea.color, &ga);
        const bool joined_b = ufb.unite(eb.tail, eb.head, eb.color, &gb);
        if (joined_a != joined_b) return false;  // cannot happen on shared structure
        if (!joined_a && ga != gb) return false;
    }
    return true;
}

SubgraphCounts subgraph_counts(const ColoredGraph& g, std::span<const int> edge_subset) {
    SubgraphCounts counts;
    counts.m = static_cast<int>(edge_subset.size());
    const auto comps = rho_components(g, edge_subset);
    for (const auto& comp : comps) {
        counts.n += static_cast<int>(comp.vertices.size());
        if (comp.trivial)
            ++counts.c_trivial;
        else
            ++counts.c_nontrivial;
    }
    return counts;
}

std::vector<int> all_edge_ids(const ColoredGraph& g) {
    std::vector<int> ids(g.edge_count());
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

InducedSubgraph induced_subgraph(const ColoredGraph& g, std::span<const int> edges) {
    InducedSubgraph out;
    out.graph.group = g.group;
    std::map<int, int> vertex_id;
    for (int e : edges) {
        const auto& ed = g.edges.at(e);
        for (int v : {ed.tail, ed.head})
            if (!vertex_id.count(v)) {
                vertex_id[v] = static_cast<int>(out.vertex_of.size());
                out.vertex_of.push_back(v);
            }
        out.graph.add_edge(vertex_id[ed.tail], vertex_id[ed.head], ed.color);
        out.edge_of.push_back(e);
    }
    out.graph.n = static_cast<int>(out.vertex_of.size());
    return out;
}

bool spanning_connected(const ColoredGraph& g) {
    if (g.n <= 1) return true;
    GainUnionFind uf(g.n, g.group.order);
    for (const auto& ed : g.edges) uf.unite(ed.tail, ed.head, ed.color);
    const int root = uf.find(0).root;
    for (int v = 1; v < g.n; ++v)
        if (uf.find(v).root != root) return false;
    return true;
}

}  // namespace symrig
