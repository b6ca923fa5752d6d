#include "symrig/lift.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace symrig {

Lift build_lift(const ColoredGraph& g) {
    require_valid(g);
    const int k = g.group.order;
    Lift lift;
    lift.base = g;
    lift.vertices.reserve(static_cast<std::size_t>(g.n) * k);
    for (int i = 0; i < g.n; ++i)
        for (int gamma = 0; gamma < k; ++gamma) lift.vertices.push_back({i, gamma});

    lift.edges.reserve(static_cast<std::size_t>(g.edge_count()) * k);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        for (int gamma = 0; gamma < k; ++gamma) {
            const int head_level = normalize_color(gamma + ed.color, k);
            lift.edges.push_back({lift.vertex_id(ed.tail, gamma), lift.vertex_id(ed.head, head_level), e});
        }
    }

    lift.action.resize(k);
    for (int gamma = 0; gamma < k; ++gamma) {
        auto& perm = lift.action[gamma];
        perm.resize(lift.vertices.size());
        for (std::size_t v = 0; v < lift.vertices.size(); ++v) {
            const auto& lv = lift.vertices[v];
            perm[v] = lift.vertex_id(lv.base, normalize_color(lv.level + gamma, k));
        }
    }
    return lift;
}

ColoredGraph quotient_of_lift(const Lift& lift) {
    const int k = lift.base.group.order;
    ColoredGraph g;
    g.n = static_cast<int>(lift.vertices.size()) / k;
    g.group = lift.base.group;
    g.edges.resize(lift.base.edge_count());
    std::vector<char> seen(lift.base.edge_count(), 0);
    for (const auto& le : lift.edges) {
        const auto& tv = lift.vertices[le.tail];
        const auto& hv = lift.vertices[le.head];
        if (tv.level != 0) continue;  // one representative per fiber
        g.edges[le.orbit] = {tv.base, hv.base, normalize_color(hv.level - tv.level, k)};
        seen[le.orbit] = 1;
    }
    for (char s : seen)
        if (!s) throw std::invalid_argument("lift is missing a level-0 representative in some fiber");
    return g;
}

// components among the lift vertices touched by the kept edge fibers
int lift_component_count(const Lift& lift, std::span<const int> quotient_edges) {
    GainUnionFind uf(static_cast<int>(lift.vertices.size()), 1);
    std::vector<char> keep(lift.base.edge_count(), 0);
    for (int e : quotient_edges) keep.at(e) = 1;
    std::set<int> touched;
    for (const auto& le : lift.edges) {
        if (!keep[le.orbit]) continue;
        uf.unite(le.tail, le.head, 0);
        touched.insert(le.tail);
        touched.insert(le.head);
    }
    std::set<int> roots;
    for (int v : touched) roots.insert(uf.find(v).root);
    return static_cast<int>(roots.size());
}

bool lift_connected(const Lift& lift) {
    if (lift.vertices.empty()) return true;
    GainUnionFind uf(static_cast<int>(lift.vertices.size()), 1);
    for (const auto& le : lift.edges) uf.unite(le.tail, le.head, 0);
    const int root = uf.find(0).root;
    for (std::size_t v = 1; v < lift.vertices.size(); ++v)
        if (uf.find(static_cast<int>(v)).root != root) return false;
    return true;
}

namespace {

std::vector<int> power_of_permutation(const std::vector<int>& perm, int times) {
    std::vector<int> out(perm.size());
    std::iota(out.begin(), out.end(), 0);
    for (int t = 0; t < times; ++t)
        for (std::size_t v = 0; v < perm.size(); ++v) out[v] = perm[out[v]];
    return out;
}

struct OrbitInfo {
    std::vector<int> orbit_of;    // vertex -> orbit id (by ascending representative)
    std::vector<int> level_of;    // vertex -> power of the generator from the representative
    std::vector<int> rep_of;      // orbit id -> representative vertex
    std::vector<int> orbit_size;
};

OrbitInfo vertex_orbits(const LiftedFramework& lf) {
    const int n = lf.vertex_count;
    OrbitInfo info;
    info.orbit_of.assign(n, -1);
    info.level_of.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (info.orbit_of[v] >= 0) continue;
        const int orbit = static_cast<int>(info.rep_of.size());
        info.rep_of.push_back(v);
        int x = v;
        int level = 0;
        do {
            info.orbit_of[x] = orbit;
            info.level_of[x] = level;
            x = lf.action[x];
            ++level;
        } while (x != v);
        info.orbit_size.push_back(level);
    }
    return info;
}

struct EdgeKey {
    int u, v;
    bool operator<(const EdgeKey& o) const { return std::tie(u, v) < std::tie(o.u, o.v); }
    bool operator==(const EdgeKey& o) const { return u == o.u && v == o.v; }
};

EdgeKey key_of(std::pair<int, int> e) {
    return {std::min(e.first, e.second), std::max(e.first, e.second)};
}

// quotient of an action that is free on the vertices; inverted edge orbits
// become self-loops colored with the swapping group element
ColoredGraph quotient_free(const LiftedFramework& lf) {
    const int k = lf.group.order;
    const OrbitInfo info = vertex_orbits(lf);
    for (int size : info.orbit_size)
        if (size != k) throw std::invalid_argument("group action is not free on the vertices");

    std::multiset<EdgeKey> pool;
    for (const auto& e : lf.edges) pool.insert(key_of(e));

    ColoredGraph g;
    g.n = static_cast<int>(info.rep_of.size());
    g.group = lf.group;

    while (!pool.empty()) {
        const EdgeKey rep = *pool.begin();
        if (rep.u == rep.v) throw std::invalid_argument("degenerate bar from a joint to itself");

        std::vector<EdgeKey> orbit;
        EdgeKey cur = rep;
        for (int t = 0; t < k; ++t) {
            orbit.push_back(cur);
            cur = key_of({lf.action[cur.u], lf.action[cur.v]});
            if (cur == rep) break;
        }
        for (const auto& ek : orbit) {
            auto it = pool.find(ek);
            if (it == pool.end())
                throw std::invalid_argument("edge set is not closed under the group action");
            pool.erase(it);
        }

        const int orbit_len = static_cast<int>(orbit.size());
        const int gamma = normalize_color(info.level_of[rep.v] - info.level_of[rep.u], k);
        if (orbit_len == k) {
            g.add_edge(info.orbit_of[rep.u], info.orbit_of[rep.v], gamma);
        } else {
            // short orbit: some power of the generator swaps the endpoints
            if (info.orbit_of[rep.u] != info.orbit_of[rep.v] || 2 * orbit_len != k ||
                normalize_color(2 * gamma, k) != 0 || gamma == 0)
                throw std::invalid_argument("inconsistent fixed edge orbit");
            g.add_edge(info.orbit_of[rep.u], info.orbit_of[rep.u], gamma);
        }
    }
    return g;
}

void require_valid_framework(const LiftedFramework& lf) {
    for (const auto& d : validate(lf))
        if (d.severity == Severity::Error)
            throw std::invalid_argument("invalid lifted framework: " + d.message);
}

}  // namespace

std::vector<Diagnostic> validate(const LiftedFramework& lf) {
    std::vector<Diagnostic> out;
    const int n = lf.vertex_count;
    const int k = lf.group.order;
    if (k < 2) out.push_back({Severity::Error, "group order must be at least 2", -1});
    if (lf.group.kind == GroupKind::Reflection && k != 2)
        out.push_back({Severity::Error, "reflection group must have order 2", -1});
    if (static_cast<int>(lf.action.size()) != n) {
        out.push_back({Severity::Error, "action permutation has wrong length", -1});
        return out;
    }
    std::vector<char> hit(n, 0);
    for (int v = 0; v < n; ++v) {
        if (lf.action[v] < 0 || lf.action[v] >= n) {
            out.push_back({Severity::Error, "action image out of range", v});
            return out;
        }
        hit[lf.action[v]] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!hit[v]) out.push_back({Severity::Error, "action is not a permutation", v});
    if (out.empty()) {
        const auto identity = power_of_permutation(lf.action, k);
        for (int v = 0; v < n; ++v)
            if (identity[v] != v) {
                out.push_back({Severity::Error, "generator order does not divide the group order", -1});
                break;
            }
    }
    for (std::size_t e = 0; e < lf.edges.size(); ++e) {
        const auto [u, v] = lf.edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n)
            out.push_back({Severity::Error, "edge endpoint out of range", static_cast<int>(e)});
    }
    return out;
}

ColoredGraph reduce_inverted_edges(const LiftedFramework& lf) {
    require_valid_framework(lf);
    const OrbitInfo info = vertex_orbits(lf);
    for (int size : info.orbit_size)
        if (size == 1)
            throw std::invalid_argument("action has a fixed vertex, use reduce_fixed_vertex");
    return quotient_free(lf);
}

ColoredGraph reduce_fixed_vertex(const LiftedFramework& lf) {
    require_valid_framework(lf);
    if (lf.group.kind == GroupKind::Reflection)
        throw std::invalid_argument("reflection-fixed vertices are out of scope");
    const OrbitInfo info = vertex_orbits(lf);

    std::vector<int> fixed;
    for (std::size_t orbit = 0; orbit < info.rep_of.size(); ++orbit)
        if (info.orbit_size[orbit] == 1) fixed.push_back(info.rep_of[orbit]);
    if (fixed.size() > 1) throw std::invalid_argument("more than one fixed vertex");
    if (fixed.empty()) return quotient_free(lf);
    const int hub = fixed.front();

    std::multiset<EdgeKey> spokes;
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : lf.edges) {
        if (e.first == hub && e.second == hub)
            throw std::invalid_argument("self-loop at the fixed vertex");
        if (e.first == hub || e.second == hub)
            spokes.insert(key_of(e));
        else
            kept.push_back(e);
    }

    std::vector<int> new_id(lf.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < lf.vertex_count; ++v)
        if (v != hub) new_id[v] = next++;

    LiftedFramework rest;
    rest.group = lf.group;
    rest.vertex_count = next;
    rest.action.resize(next);
    for (int v = 0; v < lf.vertex_count; ++v)
        if (v != hub) rest.action[new_id[v]] = new_id[lf.action[v]];
    for (const auto& [u, v] : kept) rest.edges.push_back({new_id[u], new_id[v]});

    // one loop colored 1 per deleted spoke orbit, at the neighbor's quotient vertex
    const int k = lf.group.order;
    std::vector<int> loop_at;
    while (!spokes.empty()) {
        const EdgeKey rep = *spokes.begin();
        EdgeKey cur = rep;
        for (int t = 0; t < k; ++t) {
            auto it = spokes.find(cur);
            if (it == spokes.end())
                throw std::invalid_argument("spoke orbit is not closed under the action");
            spokes.erase(it);
            cur = key_of({lf.action[cur.u], lf.action[cur.v]});
        }
        const int neighbor = rep.u == hub ? rep.v : rep.u;
        loop_at.push_back(neighbor);
    }

    ColoredGraph g = reduce_inverted_edges(rest);
    const OrbitInfo rest_info = vertex_orbits(rest);
    for (int neighbor : loop_at) {
        const int qv = rest_info.orbit_of[new_id[neighbor]];
        g.add_edge(qv, qv, 1);
    }
    return g;
}

}  // namespace symrig
