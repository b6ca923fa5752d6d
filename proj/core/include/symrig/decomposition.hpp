#pragma once

#include <span>
#include <vector>

#include "symrig/colored_graph.hpp"
#include "symrig/sparsity.hpp"

namespace symrig {

// one connected piece of a gain-(1,1) graph: a map-graph component whose
// unique cycle has nonzero gain
struct MapComponent {
    std::vector<int> edges;        // ascending edge indices
    std::vector<int> vertices;     // ascending
    std::vector<int> cycle_edges;  // closed walk starting at the base vertex
    std::vector<int> cycle_signs;  // +1 traversed tail->head, -1 reversed
    int cycle_gain = 0;            // nonzero mod k
    int base_vertex = 0;           // smallest vertex on the cycle
};

// components of a gain-(1,1) edge set; throws when a component has no cycle,
// two independent cycles, or a trivial-gain cycle
std::vector<MapComponent> map_components(const ColoredGraph& g, std::span<const int> edge_subset);

struct NiceDecomposition {
    ColoredGraph recolored;              // equivalent coloring, tree edges all 0
    std::vector<int> tree_edges;
    std::vector<MapComponent> map_parts;
};

// reflection-(2,2) split into a zero-colored spanning tree and a gain-(1,1)
// graph, with the lift structure verified
NiceDecomposition nice_decompose(const ColoredGraph& g);

struct ConeDecomposition {
    std::vector<int> x_edges;
    std::vector<int> y_edges;
    std::vector<MapComponent> x_parts;
    std::vector<MapComponent> y_parts;
};

ConeDecomposition cone_decompose(const ColoredGraph& g);

struct OverlapNode {
    int side = 0;  // 0 = X, 1 = Y
    int comp = 0;  // index into x_parts / y_parts
    int base_vertex = 0;
};

struct OverlapGraph {
    std::vector<OverlapNode> nodes;
    std::vector<std::pair<int, int>> edges;    // directed, node index pairs
    std::vector<int> in_source;                // unique in-neighbor of each node
    std::vector<std::vector<int>> cycles;      // one directed cycle per component
    std::vector<std::vector<int>> path_from_cycle;  // per node: cycle vertex .. node
};

OverlapGraph overlap_graph(const ColoredGraph& g, const ConeDecomposition& decomp);

}  // namespace symrig
