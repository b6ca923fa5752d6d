#pragma once

#include <span>
#include <string>
#include <vector>

namespace symrig {

enum class GroupKind { Rotation, Reflection };

// finite symmetry group: rotation of order k, or the reflection (k = 2)
struct GroupSpec {
    GroupKind kind = GroupKind::Rotation;
    int order = 2;

    static GroupSpec rotation(int k) { return {GroupKind::Rotation, k}; }
    static GroupSpec reflection() { return {GroupKind::Reflection, 2}; }
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

struct ColoredEdge {
    int tail = 0;
    int head = 0;
    int color = 0;
};

bool operator==(const ColoredEdge& a, const ColoredEdge& b);

// directed multigraph with Z/kZ edge colors; vertices are dense integer ids,
// edges keep insertion order and carry stable indices
struct ColoredGraph {
    int n = 0;
    std::vector<ColoredEdge> edges;
    GroupSpec group;

    int order() const { return group.order; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    ColoredGraph& add_edge(int tail, int head, int color);
};

bool operator==(const ColoredGraph& a, const ColoredGraph& b);

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    int index = -1;  // offending edge index, or -1
};

std::vector<Diagnostic> validate(const ColoredGraph& g);
bool is_valid(const ColoredGraph& g);  // no error-severity diagnostics
void require_valid(const ColoredGraph& g);

int normalize_color(int c, int k);

// union-find over vertices carrying path gains in Z/kZ
class GainUnionFind {
public:
    GainUnionFind(int n, int k);

    struct FindResult {
        int root;
        int gain;  // gain of the path from the query vertex to the root
    };
    FindResult find(int v);

    // record the constraint gain(tail -> head) = color; returns false when the
    // endpoints were already connected, in which case *cycle_gain receives the
    // gain of the closing cycle
    bool unite(int tail, int head, int color, int* cycle_gain = nullptr);

    bool same(int a, int b);

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<int> pot_;  // gain from vertex to its parent
    int k_;
};

// oriented cycle with its gain; signs are +1 for tail->head traversal
struct CycleGain {
    std::vector<int> edges;
    std::vector<int> signs;
    int gain = 0;
};

// checks that the oriented edges close up into a cycle and sums the colors
CycleGain make_cycle_gain(const ColoredGraph& g, std::span<const int> edges,
                          std::span<const int> signs);

struct ComponentRho {
    std::vector<int> vertices;  // ascending
    std::vector<int> edges;     // ascending edge indices
    bool trivial = true;        // rho-image of the component is {0}
};

// connected components of the edge-induced subgraph, ordered by smallest vertex
std::vector<ComponentRho> rho_components(const ColoredGraph& g, std::span<const int> edge_subset);

// one flag per component, same order as rho_components
std::vector<bool> rho_image_trivial(const ColoredGraph& g, std::span<const int> edge_subset);

// generator of the rho-image subgroup of Z/kZ as gcd with k (k when trivial)
int rho_image_generator(const ColoredGraph& g, std::span<const int> edge_subset);

// equivalent coloring with color 0 on every edge of the given subgraph;
// throws std::invalid_argument when a subgraph component has nontrivial rho-image
ColoredGraph recolor_zero_on(const ColoredGraph& g, std::span<const int> subgraph_edges);

// same underlying directed graph and identical induced map H1 -> Z/kZ
bool equivalent_colorings(const ColoredGraph& a, const ColoredGraph& b);

struct SubgraphCounts {
    int n = 0;
    int m = 0;
    int c_nontrivial = 0;
    int c_trivial = 0;
};

SubgraphCounts subgraph_counts(const ColoredGraph& g, std::span<const int> edge_subset);

std::vector<int> all_edge_ids(const ColoredGraph& g);

// all n vertices connected by the edges (colors ignored)
bool spanning_connected(const ColoredGraph& g);

// edge-induced subgraph with vertices renumbered densely
struct InducedSubgraph {
    ColoredGraph graph;
    std::vector<int> vertex_of;  // new vertex -> original vertex
    std::vector<int> edge_of;    // new edge -> original edge
};

InducedSubgraph induced_subgraph(const ColoredGraph& g, std::span<const int> edges);

}  // namespace symrig
