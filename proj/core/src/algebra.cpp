#include "symrig/algebra.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "symrig/rng.hpp"

namespace symrig {

std::string to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::DirectionNet: return "direction-net";
        case SystemKind::ConeRigidity: return "cone-rigidity";
        case SystemKind::ReflectionRigidity: return "reflection-rigidity";
    }
    throw std::invalid_argument("unknown system kind");
}

SystemKind system_kind_from_string(const std::string& name) {
    if (name == "direction-net") return SystemKind::DirectionNet;
    if (name == "cone-rigidity") return SystemKind::ConeRigidity;
    if (name == "reflection-rigidity") return SystemKind::ReflectionRigidity;
    throw std::invalid_argument("unknown system kind: " + name);
}

DirectionAssignment perp(const DirectionAssignment& d) {
    DirectionAssignment out;
    out.provenance = d.provenance;
    out.dirs.reserve(d.dirs.size());
    for (const auto& dir : d.dirs) out.dirs.push_back(dir.rotated_perp());
    return out;
}

Mat2 group_power(const GroupSpec& group, int gamma) {
    const int g = normalize_color(gamma, group.order);
    if (group.kind == GroupKind::Rotation) return RotationPower{group.order, g}.matrix();
    return g == 0 ? identity2() : reflection_y();
}

LinearSystem build_direction_system(const ColoredGraph& g, const DirectionAssignment& d) {
    require_valid(g);
    if (static_cast<int>(d.dirs.size()) != g.edge_count())
        throw std::invalid_argument("one direction per edge required");
    LinearSystem sys;
    sys.kind = SystemKind::DirectionNet;
    sys.rows = g.edge_count();
    sys.cols = 2 * g.n;
    sys.mat = Eigen::MatrixXd::Zero(sys.rows, sys.cols);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        const Vec2 dir = d.dirs[e].vec();
        const Vec2 head_coeff = group_power(g.group, ed.color).transpose().apply(dir);
        sys.mat(e, 2 * ed.head) += head_coeff.x;
        sys.mat(e, 2 * ed.head + 1) += head_coeff.y;
        sys.mat(e, 2 * ed.tail) -= dir.x;
        sys.mat(e, 2 * ed.tail + 1) -= dir.y;
    }
    return sys;
}

LinearSystem build_rigidity_system(const ColoredGraph& g, std::span<const Vec2> points,
                                   SystemKind kind) {
    require_valid(g);
    if (kind == SystemKind::DirectionNet)
        throw std::invalid_argument("rigidity system kind required");
    if (static_cast<int>(points.size()) != g.n)
        throw std::invalid_argument("one point per vertex required");
    LinearSystem sys;
    sys.kind = kind;
    sys.rows = g.edge_count();
    sys.cols = 2 * g.n;
    sys.mat = Eigen::MatrixXd::Zero(sys.rows, sys.cols);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        const Mat2 gp = group_power(g.group, ed.color);
        const Vec2 delta = gp.apply(points[ed.head]) - points[ed.tail];
        const Vec2 head_coeff = gp.transpose().apply(delta);
        sys.mat(e, 2 * ed.head) += head_coeff.x;
        sys.mat(e, 2 * ed.head + 1) += head_coeff.y;
        sys.mat(e, 2 * ed.tail) -= delta.x;
        sys.mat(e, 2 * ed.tail + 1) -= delta.y;
    }
    return sys;
}

Eigen::MatrixXd row_normalized(const Eigen::MatrixXd& mat) {
    Eigen::MatrixXd out = mat;
    for (int r = 0; r < out.rows(); ++r) {
        const double len = out.row(r).norm();
        if (len > 0.0) out.row(r) /= len;
    }
    return out;
}

int numeric_rank(const Eigen::MatrixXd& mat, double rel_tol, double* gap,
                 std::vector<double>* singular_values) {
    if (mat.rows() == 0 || mat.cols() == 0) {
        if (gap) *gap = std::numeric_limits<double>::infinity();
        if (singular_values) singular_values->clear();
        return 0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
    const auto& sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    const double threshold = rel_tol * largest;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    if (singular_values) singular_values->assign(sv.data(), sv.data() + sv.size());
    if (gap) {
        if (rank == 0 || rank == sv.size() || sv(rank) == 0.0)
            *gap = std::numeric_limits<double>::infinity();
        else
            *gap = sv(rank - 1) / sv(rank);
    }
    return rank;
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& mat, double rel_tol) {
    if (mat.rows() == 0) return Eigen::MatrixXd::Identity(mat.cols(), mat.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    const double threshold = rel_tol * largest;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++rank;
    return svd.matrixV().rightCols(mat.cols() - rank);
}

RankReport rank_report(const LinearSystem& sys, double rel_tol, std::uint64_t seed, int trials) {
    RankReport report;
    report.trials = trials;
    report.seed = seed;
    report.rank = numeric_rank(sys.mat, rel_tol, &report.gap, &report.singular_values);
    report.nullity = sys.cols - report.rank;
    report.tolerance =
        rel_tol * (report.singular_values.empty() ? 0.0 : report.singular_values.front());
    report.reliable = !std::isfinite(report.gap) || report.gap >= 1e3;
    return report;
}

std::vector<std::pair<long long, long long>> sample_int_vectors(int count, std::uint64_t seed,
                                                                long long box) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<long long, long long>> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        const long long a = uniform_int(rng, -box, box);
        const long long b = uniform_int(rng, -box, box);
        if (a == 0 && b == 0) continue;
        out.push_back({a, b});
    }
    return out;
}

DirectionAssignment sample_directions(const ColoredGraph& g, std::uint64_t seed) {
    DirectionAssignment d;
    d.provenance = DirectionAssignment::Provenance::RandomGeneric;
    for (const auto& [a, b] : sample_int_vectors(g.edge_count(), seed))
        d.dirs.push_back(DirectionVec(static_cast<double>(a), static_cast<double>(b)));
    return d;
}

std::vector<Vec2> sample_points(int n, std::uint64_t seed) {
    std::vector<Vec2> out;
    out.reserve(n);
    for (const auto& [a, b] : sample_int_vectors(n, seed))
        out.push_back({static_cast<double>(a), static_cast<double>(b)});
    return out;
}

RankReport generic_rank(const ColoredGraph& g, SystemKind kind, int trials, std::uint64_t seed,
                        double rel_tol) {
    require_valid(g);
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    RankReport best;
    bool have = false;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = mix_seed(seed, t);
        LinearSystem sys;
        if (kind == SystemKind::DirectionNet) {
            sys = build_direction_system(g, sample_directions(g, trial_seed));
        } else {
            sys = build_rigidity_system(g, sample_points(g.n, trial_seed), kind);
        }
        RankReport report = rank_report(sys, rel_tol, seed, trials);
        if (!have || report.rank > best.rank) {
            best = std::move(report);
            have = true;
        }
    }
    return best;
}

bool rank_transfer_check(const ColoredGraph& g, const DirectionAssignment& d,
                         std::span<const Vec2> points) {
    const LinearSystem sys = build_direction_system(g, d);

    double scale = 1.0;
    for (const auto& p : points) scale = std::max(scale, norm(p));
    Eigen::VectorXd x(2 * g.n);
    for (int i = 0; i < g.n; ++i) {
        x(2 * i) = points[i].x;
        x(2 * i + 1) = points[i].y;
    }
    if (sys.rows > 0 && (sys.mat * x).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw std::invalid_argument("points do not solve the direction network");
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        const Vec2 delta = group_power(g.group, ed.color).apply(points[ed.head]) - points[ed.tail];
        if (norm(delta) < 1e-9 * scale)
            throw std::invalid_argument("realization has a collapsed edge");
    }

    // ranks compared after row normalization: the rigidity rows carry the
    // edge lengths as scale factors
    const int direction_rank = numeric_rank(sys.mat);
    if (g.group.kind == GroupKind::Rotation) {
        const LinearSystem rig = build_rigidity_system(g, points, SystemKind::ConeRigidity);
        return numeric_rank(row_normalized(rig.mat)) == direction_rank;
    }
    const LinearSystem rig = build_rigidity_system(g, points, SystemKind::ReflectionRigidity);
    const LinearSystem perp_sys = build_direction_system(g, perp(d));
    return numeric_rank(row_normalized(rig.mat)) == numeric_rank(perp_sys.mat);
}

namespace {

using Wide = __int128;

struct WideMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Wide> a;
    Wide& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
};

Wide checked_mul(Wide x, Wide y) {
    Wide out;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("exact rank: integer overflow, use smaller entries");
    return out;
}

// fraction-free Gaussian elimination (Bareiss) with full pivoting
int bareiss_rank(WideMatrix m) {
    int rank = 0;
    Wide prev = 1;
    for (int col = 0, row = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1, pc = -1;
        for (int c = col; c < m.cols && pr < 0; ++c)
            for (int r = row; r < m.rows; ++r)
                if (m.at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        if (pc != col)
            for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, col), m.at(r, pc));
        if (pr != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        for (int r = row + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                const Wide num = checked_mul(m.at(r, c), m.at(row, col)) -
                                 checked_mul(m.at(r, col), m.at(row, c));
                m.at(r, c) = num / prev;  // divides exactly
            }
            m.at(r, col) = 0;
        }
        prev = m.at(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

struct IntMat2 {
    long long a, b, c, d;
    IntMat2 transpose() const { return {a, c, b, d}; }
    std::pair<long long, long long> apply(long long x, long long y) const {
        return {a * x + b * y, c * x + d * y};
    }
};

IntMat2 integer_group_power(const GroupSpec& group, int gamma) {
    const int g = normalize_color(gamma, group.order);
    if (group.kind == GroupKind::Reflection) return g == 0 ? IntMat2{1, 0, 0, 1} : IntMat2{-1, 0, 0, 1};
    if (group.order == 2) return g == 0 ? IntMat2{1, 0, 0, 1} : IntMat2{-1, 0, 0, -1};
    if (group.order == 4) {
        switch (g) {
            case 0: return {1, 0, 0, 1};
            case 1: return {0, -1, 1, 0};
            case 2: return {-1, 0, 0, -1};
            case 3: return {0, 1, -1, 0};
        }
    }
    throw std::invalid_argument("exact rank supports reflections and rotations of order 2 or 4");
}

}  // namespace

int exact_rank(const ColoredGraph& g, SystemKind kind,
               std::span<const std::pair<long long, long long>> assignment) {
    require_valid(g);
    if (g.group.kind == GroupKind::Rotation && g.group.order != 2 && g.group.order != 4)
        throw std::invalid_argument("exact rank supports reflections and rotations of order 2 or 4");

    WideMatrix m;
    m.rows = g.edge_count();
    m.cols = 2 * g.n;
    m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);

    if (kind == SystemKind::DirectionNet) {
        if (assignment.size() != static_cast<std::size_t>(g.edge_count()))
            throw std::invalid_argument("one integer direction per edge required");
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edges[e];
            const auto [dx, dy] = assignment[e];
            const auto [hx, hy] = integer_group_power(g.group, ed.color).transpose().apply(dx, dy);
            m.at(e, 2 * ed.head) += hx;
            m.at(e, 2 * ed.head + 1) += hy;
            m.at(e, 2 * ed.tail) -= dx;
            m.at(e, 2 * ed.tail + 1) -= dy;
        }
    } else {
        if (assignment.size() != static_cast<std::size_t>(g.n))
            throw std::invalid_argument("one integer point per vertex required");
        if ((kind == SystemKind::ConeRigidity) != (g.group.kind == GroupKind::Rotation))
            throw std::invalid_argument("rigidity kind does not match the group");
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edges[e];
            const IntMat2 gp = integer_group_power(g.group, ed.color);
            const auto [qx, qy] = gp.apply(assignment[ed.head].first, assignment[ed.head].second);
            const long long ddx = qx - assignment[ed.tail].first;
            const long long ddy = qy - assignment[ed.tail].second;
            const auto [hx, hy] = gp.transpose().apply(ddx, ddy);
            m.at(e, 2 * ed.head) += hx;
            m.at(e, 2 * ed.head + 1) += hy;
            m.at(e, 2 * ed.tail) -= ddx;
            m.at(e, 2 * ed.tail + 1) -= ddy;
        }
    }
    return bareiss_rank(std::move(m));
}

}  // namespace symrig
