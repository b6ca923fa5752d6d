#include "symrig/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "symrig/rng.hpp"

namespace symrig {

namespace {

using Site = std::pair<int, int>;  // (u, v) with u <= v; u == v is a loop

std::vector<Site> all_sites(int n) {
    std::vector<Site> sites;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) sites.push_back({u, v});
    return sites;
}

bool multiset_connected(int n, const std::vector<Site>& edges) {
    if (n <= 1) return true;
    GainUnionFind uf(n, 1);
    for (const auto& [u, v] : edges)
        if (u != v) uf.unite(u, v, 0);
    const int root = uf.find(0).root;
    for (int v = 1; v < n; ++v)
        if (uf.find(v).root != root) return false;
    return true;
}

// lexicographically least relabeling under vertex permutations
bool is_canonical(int n, const std::vector<Site>& edges) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<Site> mapped;
        mapped.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            const int a = perm[u];
            const int b = perm[v];
            mapped.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped < edges) return false;
    }
    return true;
}

void emit_colorings(const std::vector<Site>& edges, int n, int k, GroupKind kind,
                    std::vector<ColoredGraph>& out) {
    // spanning tree by first-accept; tree edges stay color 0, the rest range
    // over Z/kZ, one representative per equivalent-coloring class
    const int m = static_cast<int>(edges.size());
    GainUnionFind uf(n, 1);
    std::vector<char> in_tree(m, 0);
    std::vector<int> free_edges;
    for (int e = 0; e < m; ++e) {
        const auto& [u, v] = edges[e];
        if (u != v && uf.unite(u, v, 0))
            in_tree[e] = 1;
        else
            free_edges.push_back(e);
    }

    std::vector<int> colors(m, 0);
    const std::size_t combos = [&] {
        std::size_t c = 1;
        for (std::size_t i = 0; i < free_edges.size(); ++i) c *= static_cast<std::size_t>(k);
        return c;
    }();
    for (std::size_t code = 0; code < combos; ++code) {
        std::size_t rest = code;
        for (int e : free_edges) {
            colors[e] = static_cast<int>(rest % k);
            rest /= k;
        }
        ColoredGraph g;
        g.n = n;
        g.group = kind == GroupKind::Rotation ? GroupSpec::rotation(k) : GroupSpec::reflection();
        for (int e = 0; e < m; ++e) g.add_edge(edges[e].first, edges[e].second, colors[e]);
        out.push_back(std::move(g));
    }
}

void enumerate_multisets(const std::vector<Site>& sites, std::size_t from, int remaining,
                         std::vector<Site>& chosen, int n, int k, GroupKind kind,
                         std::vector<ColoredGraph>& out) {
    if (remaining == 0) {
        if (multiset_connected(n, chosen) && is_canonical(n, chosen))
            emit_colorings(chosen, n, k, kind, out);
        return;
    }
    if (from >= sites.size()) return;
    for (int copies = remaining; copies >= 0; --copies) {
        for (int c = 0; c < copies; ++c) chosen.push_back(sites[from]);
        enumerate_multisets(sites, from + 1, remaining - copies, chosen, n, k, kind, out);
        for (int c = 0; c < copies; ++c) chosen.pop_back();
    }
}

}  // namespace

std::vector<ColoredGraph> exhaustive_connected_colored_graphs(int n, int m, int k,
                                                              GroupKind kind) {
    if (n < 1 || m < 0) throw std::invalid_argument("need n >= 1, m >= 0");
    if (kind == GroupKind::Reflection && k != 2)
        throw std::invalid_argument("reflection group must have order 2");
    std::vector<ColoredGraph> out;
    std::vector<Site> chosen;
    const auto sites = all_sites(n);
    enumerate_multisets(sites, 0, m, chosen, n, k, kind, out);
    return out;
}

ColoredGraph random_connected_colored_graph(std::mt19937_64& rng, int n, int m, int k,
                                            GroupKind kind) {
    if (m < n - 1) throw std::invalid_argument("too few edges for a connected graph");
    ColoredGraph g;
    g.n = n;
    g.group = kind == GroupKind::Rotation ? GroupSpec::rotation(k) : GroupSpec::reflection();
    std::vector<Site> edges;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(uniform_int(rng, 0, v - 1));
        edges.push_back({u, v});
    }
    const auto sites = all_sites(n);
    for (int e = n - 1; e < m; ++e)
        edges.push_back(sites[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(sites.size()) - 1))]);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v, static_cast<int>(uniform_int(rng, 0, k - 1)));
    return g;
}

std::optional<ColoredGraph> random_class_member(std::mt19937_64& rng, SparsityClass cls, int n,
                                                int k, GroupKind kind, int max_tries) {
    const long long m = global_count(cls, n);
    if (m < 0) return std::nullopt;
    for (int t = 0; t < max_tries; ++t) {
        ColoredGraph g = random_connected_colored_graph(rng, n, static_cast<int>(m), k, kind);
        if (is_class(g, cls, CrossCheck::Off).member) return g;
    }
    return std::nullopt;
}

}  // namespace symrig
