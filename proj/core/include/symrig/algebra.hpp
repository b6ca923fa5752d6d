#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symrig/colored_graph.hpp"
#include "symrig/geometry.hpp"

namespace symrig {

enum class SystemKind { DirectionNet, ConeRigidity, ReflectionRigidity };

std::string to_string(SystemKind kind);
SystemKind system_kind_from_string(const std::string& name);

// rows are quotient edges, columns are the 2n unknowns (x_i, y_i per vertex)
struct LinearSystem {
    SystemKind kind = SystemKind::DirectionNet;
    int rows = 0;
    int cols = 0;
    Eigen::MatrixXd mat;
};

struct DirectionAssignment {
    enum class Provenance { RandomGeneric, Constructed };
    std::vector<DirectionVec> dirs;  // one per quotient edge
    Provenance provenance = Provenance::RandomGeneric;
};

DirectionAssignment perp(const DirectionAssignment& d);

// rotation power R_k^gamma or reflection power sigma^gamma
Mat2 group_power(const GroupSpec& group, int gamma);

// <g^c p_head - p_tail, d_e> = 0 per edge
LinearSystem build_direction_system(const ColoredGraph& g, const DirectionAssignment& d);

// ConeRigidity:       <R^c v_head - v_tail, R^c p_head - p_tail> = 0
// ReflectionRigidity: <s^c v_head - v_tail, s^c p_head - p_tail> = 0
LinearSystem build_rigidity_system(const ColoredGraph& g, std::span<const Vec2> points,
                                   SystemKind kind);

struct RankReport {
    int rank = 0;
    int nullity = 0;
    int trials = 0;
    double tolerance = 0.0;  // absolute singular value threshold used
    double gap = 0.0;        // sv[rank-1] / sv[rank], inf at full or zero rank
    bool reliable = true;    // gap at least 1e3
    std::uint64_t seed = 0;
    std::vector<double> singular_values;
};

inline constexpr double kRankTol = 1e-8;

int numeric_rank(const Eigen::MatrixXd& mat, double rel_tol = kRankTol, double* gap = nullptr,
                 std::vector<double>* singular_values = nullptr);

// rows rescaled to unit length (zero rows untouched)
Eigen::MatrixXd row_normalized(const Eigen::MatrixXd& mat);

// orthonormal basis of the right nullspace, one column per null direction
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& mat, double rel_tol = kRankTol);

RankReport rank_report(const LinearSystem& sys, double rel_tol = kRankTol, std::uint64_t seed = 0,
                       int trials = 1);

// integer vectors with entries in [-1e6, 1e6], never zero
std::vector<std::pair<long long, long long>> sample_int_vectors(int count, std::uint64_t seed,
                                                                long long box = 1000000);

DirectionAssignment sample_directions(const ColoredGraph& g, std::uint64_t seed);
std::vector<Vec2> sample_points(int n, std::uint64_t seed);

// max rank over seeded random rational assignments
RankReport generic_rank(const ColoredGraph& g, SystemKind kind, int trials = 3,
                        std::uint64_t seed = 0, double rel_tol = kRankTol);

// rigidity rank at a faithful direction-network solution matches the rank of
// the direction system (rotations) or of the perpendicular system (reflections)
bool rank_transfer_check(const ColoredGraph& g, const DirectionAssignment& d,
                         std::span<const Vec2> points);

// rank over the rationals by fraction-free elimination; reflection groups and
// rotations of order 2 or 4 only (integer symmetry matrices)
int exact_rank(const ColoredGraph& g, SystemKind kind,
               std::span<const std::pair<long long, long long>> assignment);

}  // namespace symrig
