#include "cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symrig/enumeration.hpp"
#include "symrig/json_io.hpp"
#include "symrig/lift.hpp"
#include "symrig/realization.hpp"
#include "symrig/rng.hpp"

namespace symrig::cli {

namespace {

struct Common {
    std::string input;
    std::uint64_t seed = 0;
    int trials = 3;
    double tol = kRankTol;
};

int cmd_check(const Common& c, const std::string& cls_name, bool no_crosscheck,
              std::ostream& out) {
    const ColoredGraph g = load_graph(c.input);
    const SparsityClass cls = sparsity_class_from_string(cls_name);
    const SparsityVerdict verdict =
        is_class(g, cls, no_crosscheck ? CrossCheck::Off : CrossCheck::Auto);
    out << verdict_to_json(verdict);
    return verdict.member ? 0 : 1;
}

int cmd_rank(const Common& c, const std::string& kind_name, std::ostream& out) {
    const ColoredGraph g = load_graph(c.input);
    const SystemKind kind = system_kind_from_string(kind_name);
    out << rank_report_to_json(generic_rank(g, kind, c.trials, c.seed, c.tol));
    return 0;
}

int cmd_realize(const Common& c, const std::string& svg_path, std::ostream& out) {
    const ColoredGraph g = load_graph(c.input);
    const DirectionAssignment d = sample_directions(g, c.seed);
    const Realization r = solve_direction_network(g, d);
    out << realization_to_json(r);
    if (!svg_path.empty()) emit_svg(g, r, svg_path);
    return 0;
}

int cmd_decompose(const Common& c, const std::string& cls_name, std::ostream& out) {
    const ColoredGraph g = load_graph(c.input);
    const SparsityClass cls = sparsity_class_from_string(cls_name);
    if (cls == SparsityClass::Reflection22) {
        out << nice_decomposition_to_json(nice_decompose(g));
        return 0;
    }
    if (cls == SparsityClass::Cone22) {
        out << cone_decomposition_to_json(cone_decompose(g));
        return 0;
    }
    throw std::invalid_argument("decompose supports reflection-22 and cone-22");
}

int cmd_reduce(const Common& c, std::ostream& out) {
    const LiftedFramework lf = load_lifted_framework(c.input);
    bool has_fixed = false;
    for (int v = 0; v < lf.vertex_count; ++v)
        if (lf.action.at(v) == v) has_fixed = true;
    const ColoredGraph q = has_fixed ? reduce_fixed_vertex(lf) : reduce_inverted_edges(lf);
    out << graph_to_json(q);
    return 0;
}

int cmd_lift(const Common& c, std::ostream& out) {
    out << lift_to_json(build_lift(load_graph(c.input)));
    return 0;
}

int cmd_special_pair(const Common& c, std::ostream& out) {
    const ColoredGraph g = load_graph(c.input);
    out << special_pair_to_json(construct_special_pair(g, c.seed));
    return 0;
}

int cmd_rigid(const Common& c, std::ostream& out) {
    const ColoredGraph g = load_graph(c.input);
    RigidityOptions opts;
    opts.seed = c.seed;
    opts.trials = c.trials;
    const RigidityDecision decision = decide_rigidity(g, opts);
    out << rigidity_decision_to_json(decision);
    return decision.verdict == RigidityVerdict::MinimallyRigid ? 0 : 1;
}

struct XValidateConfig {
    std::string group = "both";
    std::vector<int> ks{2, 3, 4};
    int n_max = 3;
    bool exhaustive = false;
    int samples = 0;
    std::uint64_t seed = 0;
};

int cmd_xvalidate(const XValidateConfig& cfg, std::ostream& out) {
    if (cfg.exhaustive && cfg.n_max > 4)
        throw std::invalid_argument("exhaustive mode supports n_max <= 4");
    if (!cfg.exhaustive && cfg.n_max > 6)
        throw std::invalid_argument("random mode supports n_max <= 6");
    if (!cfg.exhaustive && cfg.samples < 1)
        throw std::invalid_argument("random mode needs --samples");

    struct Run {
        GroupKind kind;
        int k;
    };
    std::vector<Run> runs;
    if (cfg.group == "rotation" || cfg.group == "both")
        for (int k : cfg.ks) runs.push_back({GroupKind::Rotation, k});
    if (cfg.group == "reflection" || cfg.group == "both")
        runs.push_back({GroupKind::Reflection, 2});
    if (runs.empty()) throw std::invalid_argument("group must be rotation, reflection or both");

    nlohmann::json disagreements = nlohmann::json::array();
    long long instances = 0;
    long long rigid_count = 0;
    long long flexible_count = 0;

    const auto examine = [&](const ColoredGraph& g, long long id) {
        ++instances;
        RigidityOptions opts;
        opts.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(id));
        opts.cross_check = CrossCheck::Auto;
        try {
            const RigidityDecision decision = decide_rigidity(g, opts);
            if (decision.verdict == RigidityVerdict::MinimallyRigid)
                ++rigid_count;
            else
                ++flexible_count;
        } catch (const internal_disagreement& err) {
            disagreements.push_back({{"instance", id},
                                     {"graph", nlohmann::json::parse(graph_to_json(g, false))},
                                     {"error", err.what()}});
        }
    };

    long long id = 0;
    for (const auto& run : runs) {
        if (cfg.exhaustive) {
            for (int n = 1; n <= cfg.n_max; ++n)
                for (const auto& g :
                     exhaustive_connected_colored_graphs(n, 2 * n - 1, run.k, run.kind))
                    examine(g, id++);
        } else {
            std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(run.k) +
                                                       (run.kind == GroupKind::Reflection ? 100 : 0)));
            for (int s = 0; s < cfg.samples; ++s) {
                const int n = 1 + static_cast<int>(uniform_int(rng, 0, cfg.n_max - 1));
                examine(random_connected_colored_graph(rng, n, 2 * n - 1, run.k, run.kind), id++);
            }
        }
    }

    const nlohmann::json report = {{"instances", instances},
                                   {"minimally_rigid", rigid_count},
                                   {"not_rigid", flexible_count},
                                   {"disagreements", disagreements}};
    out << report.dump(2) << "\n";
    return disagreements.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symmetry-forced planar rigidity from colored quotient graphs"};
    app.require_subcommand(1);

    Common common;
    std::string cls_name;
    std::string kind_name = "direction-net";
    std::string svg_path;
    bool no_crosscheck = false;
    XValidateConfig xcfg;

    const auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input) sub->add_option("input", common.input, "graph JSON file")->required();
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--trials", common.trials, "rank trials");
        sub->add_option("--tol", common.tol, "relative rank tolerance");
    };

    auto* check = app.add_subcommand("check", "decide sparsity class membership");
    add_common(check);
    check->add_option("--class", cls_name, "sparsity class")->required();
    check->add_flag("--no-crosscheck", no_crosscheck, "skip the brute-force cross-check");

    auto* rank = app.add_subcommand("rank", "generic rank of a linear system");
    add_common(rank);
    rank->add_option("--kind", kind_name, "direction-net | cone-rigidity | reflection-rigidity");

    auto* realize = app.add_subcommand("realize", "solve a sampled direction network");
    add_common(realize);
    realize->add_option("--svg", svg_path, "write the lifted framework as SVG");

    auto* decompose = app.add_subcommand("decompose", "matroid decomposition certificate");
    add_common(decompose);
    decompose->add_option("--class", cls_name, "reflection-22 | cone-22")->required();

    auto* reduce = app.add_subcommand("reduce", "quotient a lifted framework");
    add_common(reduce);

    auto* lift = app.add_subcommand("lift", "symmetric cover of a colored graph");
    add_common(lift);

    auto* special = app.add_subcommand("special-pair", "construct a special pair of networks");
    add_common(special);

    auto* rigid = app.add_subcommand("rigid", "decide generic minimal rigidity");
    add_common(rigid);

    auto* xvalidate = app.add_subcommand("xvalidate", "sweep instances and cross-validate");
    xvalidate->add_option("--group", xcfg.group, "rotation | reflection | both");
    xvalidate->add_option("--k", xcfg.ks, "rotation orders")->delimiter(',');
    xvalidate->add_option("--n-max", xcfg.n_max, "largest vertex count");
    xvalidate->add_flag("--exhaustive", xcfg.exhaustive, "enumerate all instances");
    xvalidate->add_option("--samples", xcfg.samples, "random instances per group/order");
    xvalidate->add_option("--seed", xcfg.seed, "random seed");

    std::vector<const char*> argv;
    argv.push_back("symrig");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(common, cls_name, no_crosscheck, out);
        if (rank->parsed()) return cmd_rank(common, kind_name, out);
        if (realize->parsed()) return cmd_realize(common, svg_path, out);
        if (decompose->parsed()) return cmd_decompose(common, cls_name, out);
        if (reduce->parsed()) return cmd_reduce(common, out);
        if (lift->parsed()) return cmd_lift(common, out);
        if (special->parsed()) return cmd_special_pair(common, out);
        if (rigid->parsed()) return cmd_rigid(common, out);
        if (xvalidate->parsed()) return cmd_xvalidate(xcfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace symrig::cli
