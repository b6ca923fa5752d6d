#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "symrig/colored_graph.hpp"
#include "symrig/sparsity.hpp"

namespace symrig {

// connected colored multigraphs with n vertices and m edges: underlying graphs
// canonical under vertex permutation, colorings canonical per equivalence
// class (spanning tree colored zero, free colors elsewhere)
std::vector<ColoredGraph> exhaustive_connected_colored_graphs(int n, int m, int k, GroupKind kind);

// connected multigraph: random spanning tree plus uniform extra edges, colors
// uniform in [0, k)
ColoredGraph random_connected_colored_graph(std::mt19937_64& rng, int n, int m, int k,
                                            GroupKind kind);

// rejection-sample a member of the class (edge count from the class's global
// count); nullopt after max_tries
std::optional<ColoredGraph> random_class_member(std::mt19937_64& rng, SparsityClass cls, int n,
                                                int k, GroupKind kind, int max_tries = 20000);

}  // namespace symrig
