#pragma once

#include <utility>
#include <vector>

#include "symrig/colored_graph.hpp"

namespace symrig {

struct LiftVertex {
    int base = 0;
    int level = 0;  // group element in [0, k)
};

struct LiftEdge {
    int tail = 0;   // lift vertex id
    int head = 0;
    int orbit = 0;  // quotient edge index
};

// symmetric cover of a colored graph; vertex (i, g) has id i*k + g,
// the fiber of quotient edge e occupies lift edge ids e*k .. e*k + k-1
struct Lift {
    ColoredGraph base;
    std::vector<LiftVertex> vertices;
    std::vector<LiftEdge> edges;
    std::vector<std::vector<int>> action;  // one vertex permutation per group element

    int vertex_id(int base_vertex, int level) const { return base_vertex * base.group.order + level; }
};

Lift build_lift(const ColoredGraph& g);

// inverse of build_lift up to nothing at all: reproduces the base graph
ColoredGraph quotient_of_lift(const Lift& lift);

int lift_component_count(const Lift& lift, std::span<const int> quotient_edges);
bool lift_connected(const Lift& lift);

// a symmetric graph given explicitly: vertices, the generator permutation, bars
struct LiftedFramework {
    GroupSpec group;
    int vertex_count = 0;
    std::vector<int> action;                    // image of each vertex under the generator
    std::vector<std::pair<int, int>> edges;     // undirected bars, closed under the action
};

std::vector<Diagnostic> validate(const LiftedFramework& lf);

// quotient of a free action; inverted edge orbits become self-loops with the
// swapping group element as color
ColoredGraph reduce_inverted_edges(const LiftedFramework& lf);

// removes a rotation-fixed hub: each edge orbit to the hub is replaced by the
// regular k-gon on the neighbor orbit, i.e. a self-loop colored 1; then the
// free part is reduced as in reduce_inverted_edges
ColoredGraph reduce_fixed_vertex(const LiftedFramework& lf);

}  // namespace symrig
