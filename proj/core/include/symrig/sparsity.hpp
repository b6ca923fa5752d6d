#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symrig/colored_graph.hpp"

namespace symrig {

enum class SparsityClass {
    ConeLaman,
    ReflectionLaman,
    Ross,
    RossCircuit,
    Cone22,
    Reflection22,
    Cone11,
    Reflection11,
    Plain22,
    Laman23,
};

std::string to_string(SparsityClass cls);
SparsityClass sparsity_class_from_string(const std::string& name);

struct ViolatingSubset {
    std::vector<int> edges;  // ascending edge indices
    int n = 0;
    int m = 0;
    int c_nontrivial = 0;
    int c_trivial = 0;
    long long bound = 0;
};

struct DecompositionCertificate {
    std::vector<std::vector<int>> parts;   // edge index lists
    std::vector<std::string> labels;       // e.g. "tree", "map" or "map-x", "map-y"
};

struct GlobalCountMismatch {
    long long expected = 0;
    long long actual = 0;
};

struct SparsityVerdict {
    SparsityClass cls = SparsityClass::ConeLaman;
    bool member = false;
    bool sparse = false;  // all subgraph counts pass, ignoring the global edge count
    std::optional<ViolatingSubset> violation;
    std::optional<DecompositionCertificate> certificate;
    std::optional<GlobalCountMismatch> count_mismatch;
};

// right-hand side of the class's subgraph inequality
long long count_bound(SparsityClass cls, long long n, long long c_nontrivial, long long c_trivial);

bool has_global_count(SparsityClass cls);
long long global_count(SparsityClass cls, long long n);

inline constexpr int kBruteForceEdgeCap = 26;

// checks the class inequality over all nonempty edge-induced subgraphs;
// witness is the inclusion-minimal, lexicographically smallest violator
SparsityVerdict is_sparse_bruteforce(const ColoredGraph& g, SparsityClass cls);

// every nonempty subset of the given edges passes the class count
bool edge_set_sparse(const ColoredGraph& g, std::span<const int> edges, SparsityClass cls);

// frame-matroid independence for the (1,1) gain count: at most one cycle per
// connected component, and that cycle has nonzero gain
bool gain11_independent(const ColoredGraph& g, std::span<const int> edge_subset);

// matroid-union partition into (spanning tree, gain-(1,1)) for Reflection22 or
// (gain-(1,1), gain-(1,1)) for Cone22; failure witness is the union-rank
// deficient reachable set
SparsityVerdict matroid_union_decompose(const ColoredGraph& g, SparsityClass target);

enum class CrossCheck { Off, Auto, On };

SparsityVerdict is_class(const ColoredGraph& g, SparsityClass cls,
                         CrossCheck cross_check = CrossCheck::Auto);

struct RossBasis {
    std::vector<int> basis;                  // maximal Ross-sparse edge set, greedy by index
    std::vector<std::vector<int>> circuits;  // fundamental circuits of the rejected edges
    std::vector<int> rejected;               // the rejected edge per circuit
};

// Ross basis and the vertex-disjoint Ross-circuits of a reflection-Laman graph
RossBasis find_ross_circuits(const ColoredGraph& g);

struct ReducedGraph {
    ColoredGraph graph;
    std::vector<int> vertex_map;             // original vertex -> reduced vertex
    std::vector<int> edge_map;               // original edge -> reduced edge, -1 when contracted away
    std::vector<int> loop_edges;             // reduced edge ids of the added loops, one per contracted circuit
    std::vector<std::vector<int>> circuits;  // as found by find_ross_circuits
};

// contracts each Ross-circuit to a vertex carrying a loop colored 1
ReducedGraph reduced_graph(const ColoredGraph& g);

}  // namespace symrig
