#include <random>

#include "doctest.h"
#include "json.hpp"
#include "symrig/enumeration.hpp"
#include "symrig/json_io.hpp"
#include "symrig/realization.hpp"
#include "symrig/rng.hpp"
#include "test_helpers.hpp"

using namespace symrig;
using namespace symrig::testing;

TEST_CASE("graph json uses the wire field names") {
    const auto g = ref_graph(2, {{0, 1, 0}, {0, 0, 1}});
    const auto j = nlohmann::json::parse(graph_to_json(g));
    CHECK(j["group"]["kind"] == "reflection");
    CHECK(j["group"]["order"] == 2);
    CHECK(j["n"] == 2);
    CHECK(j["edges"][0]["tail"] == 0);
    CHECK(j["edges"][0]["head"] == 1);
    CHECK(j["edges"][0]["color"] == 0);
    CHECK(j["edges"][1]["tail"] == 0);
}

TEST_CASE("graph json round trips") {
    std::mt19937_64 rng(811);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 4));
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 4));
        const ColoredGraph g = random_connected_colored_graph(
            rng, n, n + static_cast<int>(uniform_int(rng, 0, 4)), k, GroupKind::Rotation);
        CHECK(graph_from_json(graph_to_json(g)) == g);
        CHECK(graph_from_json(graph_to_json(g, false)) == g);
    }
}

TEST_CASE("malformed graph json raises invalid_argument") {
    CHECK_THROWS_AS(graph_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(R"({"group":{"kind":"dihedral","order":2},"n":1,"edges":[]})"),
                    std::invalid_argument);
}

TEST_CASE("lifted framework json round trips") {
    LiftedFramework lf;
    lf.group = GroupSpec::rotation(4);
    lf.vertex_count = 5;
    lf.action = {0, 2, 3, 4, 1};
    lf.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    const LiftedFramework back = lifted_framework_from_json(lifted_framework_to_json(lf));
    CHECK(back.vertex_count == lf.vertex_count);
    CHECK(back.action == lf.action);
    CHECK(back.edges == lf.edges);
    CHECK(back.group == lf.group);
}

TEST_CASE("verdict and report json parse back") {
    const auto g = ref_graph(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    const auto verdict = is_class(g, SparsityClass::Reflection22);
    const auto vj = nlohmann::json::parse(verdict_to_json(verdict));
    CHECK(vj["class"] == "reflection-22");
    CHECK(vj["member"] == true);
    CHECK(vj["witness"]["type"] == "decomposition");

    const auto rep = generic_rank(g, SystemKind::DirectionNet, 3, 9);
    const auto rj = nlohmann::json::parse(rank_report_to_json(rep));
    CHECK(rj["rank"] == rep.rank);
    CHECK(rj["seed"] == 9);
    CHECK(rj["singular_values"].size() == rep.singular_values.size());

    const auto sp = construct_special_pair(g, 0);
    const auto sj = nlohmann::json::parse(special_pair_to_json(sp));
    CHECK(sj["circuits"] == 2);
    CHECK(sj["rank_d"]["nullity"] == 3);

    const auto decision = decide_rigidity(g);
    const auto dj = nlohmann::json::parse(rigidity_decision_to_json(decision));
    CHECK(dj["verdict"] == "minimally-rigid");
}
