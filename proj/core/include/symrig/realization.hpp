#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "symrig/algebra.hpp"
#include "symrig/decomposition.hpp"
#include "symrig/sparsity.hpp"

namespace symrig {

enum class EdgeFate { Faithful, Collapsed };

enum class RealizationClass { StronglyFaithful, Faithful, Mixed, Collapsed };

std::string to_string(RealizationClass c);

// collapse tolerance on unit-normalized realizations (max point norm 1)
inline constexpr double kCollapseTol = 1e-9;

struct Realization {
    std::vector<Vec2> points;  // one per quotient vertex, max norm scaled to 1
    double residual = 0.0;     // max row residual of the direction system
    int nullity = 0;
    std::vector<EdgeFate> edge_fates;
    RealizationClass classification = RealizationClass::Collapsed;
};

// classify a solution vector of the direction system
Realization realization_from_vector(const ColoredGraph& g, const LinearSystem& sys,
                                    Eigen::VectorXd vec, int nullity);

// nullspace pick: project out the known trivial directions (vertical
// translation for reflections), keep the largest remainder
Realization solve_direction_network(const ColoredGraph& g, const DirectionAssignment& d);

// fiber level of every vertex in the forest copy through (component root, 0)
std::vector<int> forest_levels(const ColoredGraph& g, std::span<const int> forest_edges);

// direction assignment collapsing every realization of a cone-(2,2) graph to
// the origin; sampled per overlap component, verified by rank
DirectionAssignment cone_collapse_directions(const ColoredGraph& g, std::uint64_t seed = 0,
                                             int max_attempts = 100);

// deterministic assignment collapsing a reflection-(2,2) graph to a point on
// the reflection axis (nullity 1)
DirectionAssignment reflection_collapse_directions(const ColoredGraph& g);

struct RossRealization {
    DirectionAssignment directions;
    Realization realization;
    RankReport report;
    int attempts = 0;
};

// generic directions with a strongly faithful two-parameter realization space
RossRealization ross_realize(const ColoredGraph& g, std::uint64_t seed = 0, int max_attempts = 100);

struct SpecialPair {
    DirectionAssignment directions;
    Realization realization;   // faithful solution of (g, d)
    RankReport rank_d;         // nullity = number of Ross circuits + 1
    RankReport rank_d_perp;    // nullity = 1, collapsed on the axis
    int circuit_count = 0;
    int attempts = 0;
    std::uint64_t seed = 0;
};

// directions whose direction network has faithful realizations while the
// perpendicular network only collapses; exists exactly for reflection-Laman
SpecialPair construct_special_pair(const ColoredGraph& g, std::uint64_t seed = 0,
                                   int max_attempts = 100);

// detector used for necessity spot-checks
bool forms_special_pair(const ColoredGraph& g, const DirectionAssignment& d);

bool axis_translation_nullspace(const ColoredGraph& g, const LinearSystem& sys,
                                double tol = 1e-8);

enum class RigidityVerdict { MinimallyRigid, Flexible, Overbraced };

std::string to_string(RigidityVerdict v);

struct RigidityOptions {
    int trials = 3;
    std::uint64_t seed = 0;
    int spot_samples = 5;
    CrossCheck cross_check = CrossCheck::Auto;
};

struct RigidityDecision {
    RigidityVerdict verdict = RigidityVerdict::Flexible;
    SparsityVerdict combinatorial;
    std::optional<RankReport> direction_rank;
    std::optional<RankReport> perp_rank;
    int rigidity_rank = -1;
    bool transfer_ok = false;
    std::optional<Realization> realization;
    std::string note;
};

// combinatorial and algebraic routes must agree
struct internal_disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RigidityDecision decide_rigidity(const ColoredGraph& g, const RigidityOptions& opts = {});

// deterministic SVG of the lifted framework, collapsed edges highlighted
std::string render_svg(const ColoredGraph& g, const Realization& r);
void emit_svg(const ColoredGraph& g, const Realization& r, const std::string& path);

}  // namespace symrig
