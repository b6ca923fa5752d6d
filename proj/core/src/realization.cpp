#include "symrig/realization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "symrig/rng.hpp"

namespace symrig {

std::string to_string(RealizationClass c) {
    switch (c) {
        case RealizationClass::StronglyFaithful: return "strongly-faithful";
        case RealizationClass::Faithful: return "faithful";
        case RealizationClass::Mixed: return "mixed";
        case RealizationClass::Collapsed: return "collapsed";
    }
    throw std::invalid_argument("unknown realization class");
}

std::string to_string(RigidityVerdict v) {
    switch (v) {
        case RigidityVerdict::MinimallyRigid: return "minimally-rigid";
        case RigidityVerdict::Flexible: return "flexible";
        case RigidityVerdict::Overbraced: return "overbraced";
    }
    throw std::invalid_argument("unknown rigidity verdict");
}

namespace {

std::vector<Vec2> lifted_points(const GroupSpec& group, std::span<const Vec2> points) {
    std::vector<Vec2> out;
    out.reserve(points.size() * group.order);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (int gamma = 0; gamma < group.order; ++gamma)
            out.push_back(group_power(group, gamma).apply(points[i]));
    return out;
}

bool strongly_faithful_points(const GroupSpec& group, std::span<const Vec2> points) {
    const auto lifted = lifted_points(group, points);
    for (std::size_t a = 0; a < lifted.size(); ++a)
        for (std::size_t b = a + 1; b < lifted.size(); ++b)
            if (norm(lifted[a] - lifted[b]) < kCollapseTol) return false;
    return true;
}

Eigen::VectorXd axis_vector(int n) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(2 * n);
    for (int i = 0; i < n; ++i) v(2 * i + 1) = 1.0;
    if (n > 0) v /= v.norm();
    return v;
}

Vec2 sigma_pow(Vec2 v, int p) {
    return normalize_color(p, 2) == 0 ? v : reflection_y().apply(v);
}

}  // namespace

Realization realization_from_vector(const ColoredGraph& g, const LinearSystem& sys,
                                    Eigen::VectorXd vec, int nullity) {
    Realization r;
    r.nullity = nullity;
    const double scale = vec.size() > 0 ? vec.cwiseAbs().maxCoeff() : 0.0;
    if (scale > 0.0) {
        // scale the largest point norm to 1
        double max_norm = 0.0;
        for (int i = 0; i < g.n; ++i)
            max_norm = std::max(max_norm, std::hypot(vec(2 * i), vec(2 * i + 1)));
        if (max_norm > 0.0) vec /= max_norm;
    }
    r.points.resize(g.n);
    for (int i = 0; i < g.n; ++i) r.points[i] = {vec(2 * i), vec(2 * i + 1)};
    r.residual = sys.rows > 0 && vec.size() > 0 ? (sys.mat * vec).cwiseAbs().maxCoeff() : 0.0;

    int collapsed_count = 0;
    r.edge_fates.reserve(g.edge_count());
    for (const auto& ed : g.edges) {
        const Vec2 delta =
            group_power(g.group, ed.color).apply(r.points[ed.head]) - r.points[ed.tail];
        const bool collapsed = norm(delta) < kCollapseTol;
        collapsed_count += collapsed ? 1 : 0;
        r.edge_fates.push_back(collapsed ? EdgeFate::Collapsed : EdgeFate::Faithful);
    }
    if (g.edge_count() > 0 && collapsed_count == g.edge_count()) {
        r.classification = RealizationClass::Collapsed;
    } else if (collapsed_count > 0) {
        r.classification = RealizationClass::Mixed;
    } else {
        r.classification = strongly_faithful_points(g.group, r.points)
                               ? RealizationClass::StronglyFaithful
                               : RealizationClass::Faithful;
    }
    return r;
}

Realization solve_direction_network(const ColoredGraph& g, const DirectionAssignment& d) {
    const LinearSystem sys = build_direction_system(g, d);
    const Eigen::MatrixXd null = nullspace(sys.mat);
    const int nullity = static_cast<int>(null.cols());
    if (nullity == 0) {
        Realization r;
        r.nullity = 0;
        r.points.assign(g.n, Vec2{0.0, 0.0});
        r.edge_fates.assign(g.edge_count(), EdgeFate::Collapsed);
        r.classification = RealizationClass::Collapsed;
        return r;
    }

    Eigen::VectorXd pick;
    if (g.group.kind == GroupKind::Reflection) {
        const Eigen::VectorXd axis = axis_vector(g.n);
        double best = -1.0;
        for (int c = 0; c < null.cols(); ++c) {
            Eigen::VectorXd cand = null.col(c) - axis.dot(null.col(c)) * axis;
            if (cand.norm() > best) {
                best = cand.norm();
                pick = cand;
            }
        }
        if (best < kCollapseTol) pick = axis;  // translation-only solution space
    } else {
        pick = null.col(null.cols() - 1);
    }
    return realization_from_vector(g, sys, pick, nullity);
}

std::vector<int> forest_levels(const ColoredGraph& g, std::span<const int> forest_edges) {
    const int k = g.group.order;
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, signed color)
    for (int e : forest_edges) {
        const auto& ed = g.edges.at(e);
        adj[ed.tail].push_back({ed.head, ed.color});
        adj[ed.head].push_back({ed.tail, -ed.color});
    }
    std::vector<int> level(g.n, -1);
    for (int root = 0; root < g.n; ++root) {
        if (level[root] >= 0) continue;
        level[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, c] : adj[v]) {
                if (level[w] >= 0) continue;
                level[w] = normalize_color(level[v] + c, k);
                stack.push_back(w);
            }
        }
    }
    return level;
}

namespace {

struct ComponentDirections {
    RotationPower cycle_rotation;
    DirectionVec sampled{1.0, 0.0};
};

// directions per the connected map-graph gadget: the tree copy through the
// base gets v*, pulled back to the quotient by the fiber level
void assign_component_directions(const ColoredGraph& g, const MapComponent& mc,
                                 const DirectionVec& v, std::vector<DirectionVec>& dirs) {
    const int k = g.group.order;
    const RotationPower cycle_rot{k, mc.cycle_gain};
    const DirectionVec vs = vstar(v, cycle_rot);

    const int closing = mc.cycle_edges.front();
    std::vector<int> tree;
    for (int e : mc.edges)
        if (e != closing) tree.push_back(e);
    const std::vector<int> level = forest_levels(g, tree);

    auto quotient_dir = [&](int tail_level) {
        const Mat2 undo = RotationPower{k, -tail_level}.matrix();
        return DirectionVec(undo.apply(perp(vs.vec())));
    };

    for (int e : tree) dirs[e] = quotient_dir(level[g.edges[e].tail]);

    const auto& ce = g.edges[closing];
    const int base = mc.base_vertex;
    int tail_level = 0;
    if (ce.tail == ce.head) {
        tail_level = level[base];
    } else {
        const int other = ce.tail == base ? ce.head : ce.tail;
        tail_level = ce.head == other ? normalize_color(level[other] - ce.color, k) : level[other];
    }
    dirs[closing] = quotient_dir(tail_level);
}

}  // namespace

DirectionAssignment cone_collapse_directions(const ColoredGraph& g, std::uint64_t seed,
                                             int max_attempts) {
    if (g.group.kind != GroupKind::Rotation)
        throw std::invalid_argument("rotation group required");
    const ConeDecomposition cd = cone_decompose(g);
    const OverlapGraph og = overlap_graph(g, cd);
    const int k = g.group.order;

    std::vector<const MapComponent*> comps;
    for (const auto& mc : cd.x_parts) comps.push_back(&mc);
    for (const auto& mc : cd.y_parts) comps.push_back(&mc);
    const int s = static_cast<int>(comps.size());

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, attempt));
        std::vector<DirectionVec> v;
        for (int i = 0; i < s; ++i) {
            const double angle = 2.0 * std::numbers::pi * uniform_unit(rng);
            v.push_back(DirectionVec(std::cos(angle), std::sin(angle)));
        }

        // sampled vectors must lie on pairwise distinct rotation-orbit lines
        bool ok = true;
        for (int i = 0; i < s && ok; ++i)
            for (int j = i + 1; j < s && ok; ++j)
                for (int gamma = 0; gamma < k && ok; ++gamma) {
                    const Vec2 rot = RotationPower{k, gamma}.matrix().apply(v[i].vec());
                    if (std::abs(cross(rot, v[j].vec())) < 1e-6) ok = false;
                }
        if (!ok) continue;

        // projections along every overlap edge must be defined, and the
        // composite scale along every overlap cycle must stay away from 1
        try {
            for (const auto& [from, to] : og.edges) {
                const RotationPower rot{k, comps[from]->cycle_gain};
                for (int shift = 0; shift < k && ok; ++shift) {
                    const Vec2 shifted = RotationPower{k, shift}.matrix().apply(v[to].vec());
                    (void)scale_factor(v[from], DirectionVec(shifted), rot);
                }
            }
            for (const auto& cycle : og.cycles) {
                const int len = static_cast<int>(cycle.size());
                const auto product_for = [&](const std::vector<int>& shift) {
                    double product = 1.0;
                    for (int t = 0; t < len; ++t) {
                        const int from = cycle[t];
                        const int to = cycle[(t + 1) % len];
                        const Vec2 shifted =
                            RotationPower{k, shift[t]}.matrix().apply(v[to].vec());
                        product *= scale_factor(v[from], DirectionVec(shifted),
                                                RotationPower{k, comps[from]->cycle_gain});
                    }
                    return product;
                };
                double combos = 1.0;
                for (int t = 0; t < len; ++t) combos *= k;
                if (combos <= 20000.0) {
                    std::vector<int> shift(len, 0);
                    while (ok) {
                        if (std::abs(std::abs(product_for(shift)) - 1.0) < 1e-6) ok = false;
                        int pos = 0;
                        while (pos < len && ++shift[pos] == k) shift[pos++] = 0;
                        if (pos == len) break;
                    }
                } else {
                    // too many shift tuples to enumerate; screen a sample and
                    // let the final rank verification arbitrate
                    std::vector<int> shift(len, 0);
                    for (int probe = 0; probe < 20000 && ok; ++probe) {
                        for (int t = 0; t < len; ++t)
                            shift[t] = static_cast<int>(uniform_int(rng, 0, k - 1));
                        if (std::abs(std::abs(product_for(shift)) - 1.0) < 1e-6) ok = false;
                    }
                }
                if (!ok) break;
            }
        } catch (const std::domain_error&) {
            ok = false;
        }
        if (!ok) continue;

        DirectionAssignment d;
        d.provenance = DirectionAssignment::Provenance::Constructed;
        d.dirs.assign(g.edge_count(), DirectionVec());
        for (int i = 0; i < s; ++i) assign_component_directions(g, *comps[i], v[i], d.dirs);

        const LinearSystem sys = build_direction_system(g, d);
        if (numeric_rank(sys.mat) == 2 * g.n) return d;
    }
    throw std::runtime_error("cone collapse direction sampling failed after " +
                             std::to_string(max_attempts) + " attempts (seed " +
                             std::to_string(seed) + ")");
}

DirectionAssignment reflection_collapse_directions(const ColoredGraph& g) {
    if (g.group.kind != GroupKind::Reflection)
        throw std::invalid_argument("reflection group required");
    const NiceDecomposition nd = nice_decompose(g);
    const std::vector<int> level = forest_levels(g, nd.tree_edges);

    const double s5 = std::sqrt(5.0);
    const Vec2 tree_normal{2.0 / s5, 1.0 / s5};

    DirectionAssignment d;
    d.provenance = DirectionAssignment::Provenance::Constructed;
    d.dirs.assign(g.edge_count(), DirectionVec());
    for (int e : nd.tree_edges)
        d.dirs[e] = DirectionVec(sigma_pow(tree_normal, level[g.edges[e].tail]));
    for (const auto& mc : nd.map_parts)
        for (int e : mc.edges) d.dirs[e] = DirectionVec(1.0, 0.0);

    const LinearSystem sys = build_direction_system(g, d);
    if (numeric_rank(sys.mat) != 2 * g.n - 1 || !axis_translation_nullspace(g, sys))
        throw std::logic_error("reflection collapse directions failed verification");
    return d;
}

RossRealization ross_realize(const ColoredGraph& g, std::uint64_t seed, int max_attempts) {
    if (g.group.kind != GroupKind::Reflection)
        throw std::invalid_argument("reflection group required");
    if (!is_class(g, SparsityClass::Ross).member)
        throw std::invalid_argument("input is not a Ross graph");

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const DirectionAssignment d = sample_directions(g, mix_seed(seed, attempt));
        const Realization r = solve_direction_network(g, d);
        if (r.nullity == 2 && r.classification == RealizationClass::StronglyFaithful) {
            const LinearSystem sys = build_direction_system(g, d);
            return {d, r, rank_report(sys, kRankTol, mix_seed(seed, attempt), 1), attempt + 1};
        }
    }
    throw std::runtime_error("no strongly faithful Ross realization after " +
                             std::to_string(max_attempts) + " attempts (seed " +
                             std::to_string(seed) + ")");
}

bool axis_translation_nullspace(const ColoredGraph& g, const LinearSystem& sys, double tol) {
    const Eigen::MatrixXd null = nullspace(sys.mat);
    if (null.cols() != 1 || g.n == 0) return false;
    Eigen::VectorXd u = null.col(0);
    const double scale = u.cwiseAbs().maxCoeff();
    if (scale <= 0.0) return false;
    u /= scale;
    const double y0 = u(1);
    for (int i = 0; i < g.n; ++i) {
        if (std::abs(u(2 * i)) > tol) return false;
        if (std::abs(u(2 * i + 1) - y0) > tol) return false;
    }
    return true;
}

bool forms_special_pair(const ColoredGraph& g, const DirectionAssignment& d) {
    const Realization r = solve_direction_network(g, d);
    if (r.classification != RealizationClass::Faithful &&
        r.classification != RealizationClass::StronglyFaithful)
        return false;
    const LinearSystem perp_sys = build_direction_system(g, perp(d));
    if (numeric_rank(perp_sys.mat) != 2 * g.n - 1) return false;
    return axis_translation_nullspace(g, perp_sys);
}

SpecialPair construct_special_pair(const ColoredGraph& g, std::uint64_t seed, int max_attempts) {
    if (g.group.kind != GroupKind::Reflection)
        throw std::invalid_argument("reflection group required");
    if (!is_class(g, SparsityClass::ReflectionLaman).member)
        throw std::invalid_argument("input is not reflection-Laman");

    const int n = g.n;
    const int m = g.edge_count();
    const RossBasis rb = find_ross_circuits(g);
    const int t = static_cast<int>(rb.circuits.size());
    if (t == 0) throw std::logic_error("reflection-Laman graph without Ross circuits");

    std::vector<char> in_basis(m, 0);
    for (int e : rb.basis) in_basis[e] = 1;

    struct Plan {
        int designated = -1;  // non-basis edge, on a map cycle with nonzero gain
    };
    std::vector<Plan> plans;

    for (std::size_t ci = 0; ci < rb.circuits.size(); ++ci) {
        const auto& circuit = rb.circuits[ci];
        const InducedSubgraph sub = induced_subgraph(g, circuit);
        const NiceDecomposition nd = nice_decompose(sub.graph);

        std::vector<int> tree_edges;
        for (int le : nd.tree_edges) tree_edges.push_back(sub.edge_of[le]);
        const std::vector<int> levels = forest_levels(g, tree_edges);

        // color in the equivalent coloring that zeroes the circuit's tree
        const auto eta = [&](int orig_e) {
            const auto& ed = g.edges[orig_e];
            return normalize_color(ed.color + levels[ed.tail] - levels[ed.head], 2);
        };

        Plan plan;
        for (const auto& mp : nd.map_parts) {
            for (int ce : mp.cycle_edges) {
                const int orig = sub.edge_of[ce];
                if (eta(orig) != 0 && (plan.designated < 0 || orig < plan.designated))
                    plan.designated = orig;
            }
        }
        if (plan.designated < 0) throw std::logic_error("map cycle without a nonzero color");

        // swap so the designated edge is the one outside the basis
        const int rejected = rb.rejected[ci];
        if (plan.designated != rejected) {
            in_basis[rejected] = 1;
            in_basis[plan.designated] = 0;
        }
        plans.push_back(plan);
    }

    std::vector<int> basis_edges;
    for (int e = 0; e < m; ++e)
        if (in_basis[e]) basis_edges.push_back(e);
    if (!edge_set_sparse(g, basis_edges, SparsityClass::Ross))
        throw std::logic_error("basis lost independence after edge swaps");

    ColoredGraph basis_graph;
    basis_graph.n = n;
    basis_graph.group = g.group;
    for (int e : basis_edges) basis_graph.edges.push_back(g.edges[e]);

    const Eigen::VectorXd axis = axis_vector(n);
    const int basis_size = static_cast<int>(basis_edges.size());
    constexpr double kSeparation = 1e-6;
    std::string last_diag = "no attempt completed";

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::mt19937_64 rng(mix_seed(seed, attempt));
        const DirectionAssignment basis_dirs =
            sample_directions(basis_graph, mix_seed(seed, attempt));

        const LinearSystem basis_sys = build_direction_system(basis_graph, basis_dirs);
        if (numeric_rank(basis_sys.mat) != basis_size) {
            last_diag = "basis rows dependent";
            continue;
        }

        // a generic point of the solution space, vertical translation removed
        Eigen::MatrixXd null = nullspace(basis_sys.mat);
        Eigen::VectorXd w = Eigen::VectorXd::Zero(2 * n);
        for (int c = 0; c < null.cols(); ++c) {
            Eigen::VectorXd col = null.col(c) - axis.dot(null.col(c)) * axis;
            w += (1.0 + uniform_unit(rng)) * col;
        }
        if (w.norm() < 1e-9) continue;

        std::vector<Vec2> points(n);
        double max_norm = 0.0;
        for (int i = 0; i < n; ++i) {
            points[i] = {w(2 * i), w(2 * i + 1)};
            max_norm = std::max(max_norm, norm(points[i]));
        }
        if (max_norm <= 0.0) continue;
        for (auto& p : points) p = (1.0 / max_norm) * p;

        // faithful with margin: no edge of g close to collapsing
        DirectionAssignment full;
        full.provenance = DirectionAssignment::Provenance::Constructed;
        full.dirs.assign(m, DirectionVec());
        for (int i = 0; i < basis_size; ++i) full.dirs[basis_edges[i]] = basis_dirs.dirs[i];
        bool separated = true;
        for (const auto& ed : g.edges) {
            const Vec2 delta_e =
                group_power(g.group, ed.color).apply(points[ed.head]) - points[ed.tail];
            if (norm(delta_e) < kSeparation) {
                separated = false;
                break;
            }
        }
        if (!separated) {
            last_diag = "an edge nearly collapsed in the sampled realization";
            continue;
        }
        for (const auto& plan : plans) {
            const auto& ed = g.edges[plan.designated];
            const Vec2 delta_e =
                group_power(g.group, ed.color).apply(points[ed.head]) - points[ed.tail];
            full.dirs[plan.designated] = DirectionVec(perp(delta_e));
        }

        // the realization solves the full network; beyond it and the vertical
        // translation, only loop circuits contribute free directions
        const LinearSystem sys_d = build_direction_system(g, full);
        const int rank_d = numeric_rank(sys_d.mat);
        if (rank_d > 2 * n - 2) {
            last_diag = "free side rank " + std::to_string(rank_d) + " leaves no scale motion";
            continue;
        }

        const LinearSystem sys_perp = build_direction_system(g, perp(full));
        const int rank_perp = numeric_rank(sys_perp.mat);
        if (rank_perp != 2 * n - 1) {
            last_diag = "perpendicular side rank " + std::to_string(rank_perp) + ", expected " +
                        std::to_string(2 * n - 1);
            continue;
        }
        if (!axis_translation_nullspace(g, sys_perp)) {
            last_diag = "perpendicular nullspace is not the on-axis translation";
            continue;
        }

        Eigen::VectorXd wv(2 * n);
        for (int i = 0; i < n; ++i) {
            wv(2 * i) = points[i].x;
            wv(2 * i + 1) = points[i].y;
        }
        Realization r = realization_from_vector(g, sys_d, wv, 2 * n - rank_d);
        if (r.classification != RealizationClass::StronglyFaithful &&
            r.classification != RealizationClass::Faithful)
            continue;

        SpecialPair sp;
        sp.directions = std::move(full);
        sp.realization = std::move(r);
        sp.rank_d = rank_report(sys_d, kRankTol, seed, attempt + 1);
        sp.rank_d_perp = rank_report(sys_perp, kRankTol, seed, attempt + 1);
        sp.circuit_count = t;
        sp.attempts = attempt + 1;
        sp.seed = seed;
        return sp;
    }
    throw std::runtime_error("special pair construction failed after " +
                             std::to_string(max_attempts) + " attempts (seed " +
                             std::to_string(seed) + "; last: " + last_diag + ")");
}

namespace {

RigidityDecision count_shortcut(const SparsityVerdict& comb, int m, long long want) {
    RigidityDecision out;
    out.combinatorial = comb;
    if (m < want) {
        out.verdict = RigidityVerdict::Flexible;
        out.note = "fewer than 2n-1 edges";
    } else {
        out.verdict = RigidityVerdict::Overbraced;
        out.note = "more than 2n-1 edges";
    }
    return out;
}

}  // namespace

RigidityDecision decide_rigidity(const ColoredGraph& g, const RigidityOptions& opts) {
    require_valid(g);
    const int n = g.n;
    const int m = g.edge_count();
    const long long want = 2LL * n - 1;
    const bool rotation = g.group.kind == GroupKind::Rotation;
    const SparsityClass cls =
        rotation ? SparsityClass::ConeLaman : SparsityClass::ReflectionLaman;
    const SparsityVerdict comb = is_class(g, cls, opts.cross_check);

    if (m != want) return count_shortcut(comb, m, want);

    RigidityDecision out;
    out.combinatorial = comb;

    if (rotation) {
        const RankReport rep = generic_rank(g, SystemKind::DirectionNet, opts.trials, opts.seed);
        out.direction_rank = rep;
        bool algebraic = false;
        if (rep.rank == 2 * n - 1) {
            for (int a = 0; a < opts.trials + 2 && !algebraic; ++a) {
                const DirectionAssignment d = sample_directions(g, mix_seed(opts.seed, a));
                const LinearSystem sys = build_direction_system(g, d);
                if (numeric_rank(sys.mat) != rep.rank) continue;
                const Realization r = solve_direction_network(g, d);
                if (r.classification != RealizationClass::Faithful &&
                    r.classification != RealizationClass::StronglyFaithful)
                    continue;
                out.realization = r;
                out.transfer_ok = rank_transfer_check(g, d, r.points);
                const LinearSystem rig =
                    build_rigidity_system(g, r.points, SystemKind::ConeRigidity);
                out.rigidity_rank = numeric_rank(row_normalized(rig.mat));
                algebraic = out.transfer_ok && out.rigidity_rank == 2 * n - 1;
            }
        }
        if (comb.member != algebraic)
            throw internal_disagreement(
                "cone rigidity: combinatorial and algebraic answers disagree");
        out.verdict = comb.member ? RigidityVerdict::MinimallyRigid : RigidityVerdict::Flexible;
        return out;
    }

    if (comb.member) {
        SpecialPair sp;
        try {
            sp = construct_special_pair(g, opts.seed);
        } catch (const std::runtime_error& err) {
            throw internal_disagreement(
                std::string("reflection rigidity: special pair construction failed for a "
                            "reflection-Laman graph: ") +
                err.what());
        }
        out.direction_rank = sp.rank_d;
        out.perp_rank = sp.rank_d_perp;
        out.realization = sp.realization;
        out.transfer_ok = rank_transfer_check(g, sp.directions, sp.realization.points);
        const LinearSystem rig =
            build_rigidity_system(g, sp.realization.points, SystemKind::ReflectionRigidity);
        out.rigidity_rank = numeric_rank(row_normalized(rig.mat));
        if (!out.transfer_ok || out.rigidity_rank != 2 * n - 1)
            throw internal_disagreement(
                "reflection rigidity: rank transfer failed at the special pair realization");
        out.verdict = RigidityVerdict::MinimallyRigid;
        return out;
    }

    for (int a = 0; a < opts.spot_samples; ++a) {
        const DirectionAssignment d = sample_directions(g, mix_seed(opts.seed, 1000 + a));
        if (forms_special_pair(g, d))
            throw internal_disagreement(
                "reflection rigidity: special pair found for a non-reflection-Laman graph");
    }
    out.verdict = RigidityVerdict::Flexible;
    out.note = "no special pair among random samples";
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v + 0.0);  // avoid -0.0000
    return buf;
}

}  // namespace

std::string render_svg(const ColoredGraph& g, const Realization& r) {
    const int k = g.group.order;
    const auto lifted = lifted_points(g.group, r.points);

    double min_x = -1.0, max_x = 1.0, min_y = -1.0, max_y = 1.0;
    for (const auto& p : lifted) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
    const double canvas = 500.0;
    const double margin = 50.0;
    const auto px = [&](const Vec2& p) {
        return Vec2{margin + (p.x - min_x) / span * (canvas - 2 * margin),
                    canvas - (margin + (p.y - min_y) / span * (canvas - 2 * margin))};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"500\" "
           "height=\"500\" viewBox=\"0 0 500 500\">\n";
    svg << "<rect width=\"500\" height=\"500\" fill=\"white\"/>\n";

    if (g.group.kind == GroupKind::Reflection) {
        const Vec2 top = px({0.0, max_y + 0.1 * span});
        const Vec2 bot = px({0.0, min_y - 0.1 * span});
        svg << "<line x1=\"" << fmt(top.x) << "\" y1=\"" << fmt(top.y) << "\" x2=\"" << fmt(bot.x)
            << "\" y2=\"" << fmt(bot.y)
            << "\" stroke=\"#999999\" stroke-dasharray=\"6 4\" stroke-width=\"1\"/>\n";
    } else {
        const Vec2 c = px({0.0, 0.0});
        svg << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
            << "\" r=\"4\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        const bool collapsed =
            e < static_cast<int>(r.edge_fates.size()) && r.edge_fates[e] == EdgeFate::Collapsed;
        for (int gamma = 0; gamma < k; ++gamma) {
            const Vec2 a = px(lifted[ed.tail * k + gamma]);
            const Vec2 b = px(lifted[ed.head * k + normalize_color(gamma + ed.color, k)]);
            svg << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y) << "\" x2=\"" << fmt(b.x)
                << "\" y2=\"" << fmt(b.y) << "\" stroke=\"" << (collapsed ? "#cc2222" : "#222222")
                << "\"" << (collapsed ? " stroke-dasharray=\"3 3\"" : "")
                << " stroke-width=\"1.5\"/>\n";
        }
    }
    for (const auto& p : lifted) {
        const Vec2 c = px(p);
        svg << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y)
            << "\" r=\"3\" fill=\"#3366cc\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_svg(const ColoredGraph& g, const Realization& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << render_svg(g, r);
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace symrig
