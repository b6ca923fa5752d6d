#include <random>

#include "doctest.h"
#include "symrig/enumeration.hpp"
#include "symrig/rng.hpp"
#include "symrig/sparsity.hpp"
#include "test_helpers.hpp"

using namespace symrig;
using namespace symrig::testing;

TEST_CASE("count bounds per class") {
    CHECK(count_bound(SparsityClass::ConeLaman, 1, 1, 0) == 1);
    CHECK(count_bound(SparsityClass::Reflection22, 3, 0, 1) == 4);
    CHECK(count_bound(SparsityClass::Reflection11, 1, 0, 1) == 0);
    CHECK(count_bound(SparsityClass::Ross, 2, 1, 0) == 2);
    CHECK(count_bound(SparsityClass::Cone22, 2, 0, 1) == 2);
    CHECK(count_bound(SparsityClass::Cone11, 3, 1, 0) == 3);
    CHECK(count_bound(SparsityClass::Plain22, 4, 1, 1) == 4);
    CHECK(count_bound(SparsityClass::Laman23, 4, 0, 1) == 5);
}

TEST_CASE("brute force: loop colored 1 is cone-Laman") {
    const auto g = rot_graph(1, 2, {{0, 0, 1}});
    const auto verdict = is_sparse_bruteforce(g, SparsityClass::ConeLaman);
    CHECK(verdict.member);
    CHECK(verdict.sparse);
}

TEST_CASE("brute force: zero triangle with a doubled edge is not reflection-Laman") {
    // edges: 0-1, 1-2, 0-2, and a copy of 0-1; witness is the trivial parallel pair
    const auto g = ref_graph(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {0, 1, 0}});
    const auto verdict = is_sparse_bruteforce(g, SparsityClass::ReflectionLaman);
    CHECK_FALSE(verdict.member);
    CHECK_FALSE(verdict.sparse);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->edges == std::vector<int>{0, 3});
    CHECK(verdict.violation->m == 2);
    CHECK(verdict.violation->bound == 1);
}

TEST_CASE("brute force: two loops at one vertex form a cone-(2,2) graph") {
    const auto g = rot_graph(1, 2, {{0, 0, 1}, {0, 0, 1}});
    const auto verdict = is_sparse_bruteforce(g, SparsityClass::Cone22);
    CHECK(verdict.member);
}

TEST_CASE("brute force: Ross circuits") {
    // a single loop colored 1 violates the Ross count minimally
    CHECK(is_sparse_bruteforce(rot_graph(1, 2, {{0, 0, 1}}), SparsityClass::RossCircuit).member);
    // a Ross graph is not a circuit
    CHECK_FALSE(
        is_sparse_bruteforce(ref_graph(2, {{0, 1, 0}, {0, 1, 1}}), SparsityClass::RossCircuit)
            .member);
    // the all-zero K4 is edge-minimal for the Ross count but has the wrong
    // edge count for a Ross circuit (its deletions are not Ross graphs)
    const auto k4 = ref_graph(
        4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}});
    CHECK_FALSE(is_sparse_bruteforce(k4, SparsityClass::RossCircuit).member);
}

TEST_CASE("gain-(1,1) independence oracle") {
    const auto loop1 = ref_graph(1, {{0, 0, 1}});
    CHECK(gain11_independent(loop1, all_edge_ids(loop1)));

    const auto loop0 = ref_graph(1, {{0, 0, 0}});
    CHECK_FALSE(gain11_independent(loop0, all_edge_ids(loop0)));

    const auto pair = ref_graph(2, {{0, 1, 0}, {0, 1, 1}});
    CHECK(gain11_independent(pair, all_edge_ids(pair)));

    const auto triple = ref_graph(2, {{0, 1, 0}, {0, 1, 1}, {0, 1, 1}});
    CHECK_FALSE(gain11_independent(triple, all_edge_ids(triple)));
}

TEST_CASE("gain-(1,1) equals the brute-force sparsity predicate on all subsets") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 3));
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 2));
        const int m = static_cast<int>(uniform_int(rng, 0, 7));
        ColoredGraph g;
        g.n = n;
        g.group = GroupSpec::rotation(k);
        for (int e = 0; e < m; ++e)
            g.add_edge(static_cast<int>(uniform_int(rng, 0, n - 1)),
                       static_cast<int>(uniform_int(rng, 0, n - 1)),
                       static_cast<int>(uniform_int(rng, 0, k - 1)));
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> subset;
            for (int b = 0; b < m; ++b)
                if (mask & (1u << b)) subset.push_back(b);
            const bool fast = gain11_independent(g, subset);
            const bool slow = edge_set_sparse(g, subset, SparsityClass::Cone11);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("matroid union: two loops at one vertex split into the two halves") {
    const auto g = rot_graph(1, 2, {{0, 0, 1}, {0, 0, 1}});
    const auto verdict = matroid_union_decompose(g, SparsityClass::Cone22);
    REQUIRE(verdict.member);
    REQUIRE(verdict.certificate.has_value());
    CHECK(verdict.certificate->parts[0] == std::vector<int>{0});
    CHECK(verdict.certificate->parts[1] == std::vector<int>{1});
}

TEST_CASE("matroid union: tree plus loops splits as tree and map") {
    const auto g = ref_graph(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    const auto verdict = matroid_union_decompose(g, SparsityClass::Reflection22);
    REQUIRE(verdict.member);
    REQUIRE(verdict.certificate.has_value());
    CHECK(verdict.certificate->labels[0] == "tree");
    CHECK(verdict.certificate->parts[0] == std::vector<int>{0});
    CHECK(verdict.certificate->parts[1] == std::vector<int>{1, 2});
}

TEST_CASE("matroid union rejects a count mismatch") {
    const auto g = ref_graph(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(matroid_union_decompose(g, SparsityClass::Reflection22),
                    std::invalid_argument);
}

TEST_CASE("matroid union failure carries a count-violating witness") {
    const auto g = ref_graph(2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 1}});
    const auto verdict = matroid_union_decompose(g, SparsityClass::Reflection22);
    CHECK_FALSE(verdict.member);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->m > verdict.violation->bound);
}

TEST_CASE("is_class: dispatch examples") {
    CHECK(is_class(rot_graph(1, 2, {{0, 0, 1}}), SparsityClass::ConeLaman, CrossCheck::On).member);

    // all-zero K4 plus a loop: right count, reflection-Laman fails on the K4
    const auto k4loop = ref_graph(4, {{0, 1, 0},
                                      {0, 2, 0},
                                      {0, 3, 0},
                                      {1, 2, 0},
                                      {1, 3, 0},
                                      {2, 3, 0},
                                      {0, 0, 1}});
    const auto verdict = is_class(k4loop, SparsityClass::ReflectionLaman, CrossCheck::On);
    CHECK_FALSE(verdict.member);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->edges == std::vector<int>{0, 1, 2, 3, 4, 5});

    // wrong global count is an immediate non-member
    CHECK_FALSE(is_class(rot_graph(2, 2, {{0, 1, 0}}), SparsityClass::ConeLaman).member);
}

TEST_CASE("find_ross_circuits on the documented examples") {
    const auto loop = ref_graph(1, {{0, 0, 1}});
    const auto rb1 = find_ross_circuits(loop);
    REQUIRE(rb1.circuits.size() == 1);
    CHECK(rb1.circuits[0] == std::vector<int>{0});
    CHECK(rb1.basis.empty());

    const auto two = ref_graph(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    const auto rb2 = find_ross_circuits(two);
    REQUIRE(rb2.circuits.size() == 2);
    CHECK(rb2.circuits[0] == std::vector<int>{1});
    CHECK(rb2.circuits[1] == std::vector<int>{2});
    CHECK(rb2.basis == std::vector<int>{0});

    // a Ross graph itself is not reflection-Laman input (wrong count)
    CHECK_THROWS_AS(find_ross_circuits(ref_graph(2, {{0, 1, 0}, {0, 1, 1}})),
                    std::invalid_argument);
}

TEST_CASE("every Ross circuit is reflection-Laman standalone") {
    std::mt19937_64 rng(101);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 25; ++trial) {
        const int n = 2 + static_cast<int>(uniform_int(rng, 0, 3));
        const auto g =
            random_class_member(rng, SparsityClass::ReflectionLaman, n, 2, GroupKind::Reflection, 200);
        if (!g) continue;
        for (const auto& circuit : find_ross_circuits(*g).circuits) {
            const auto sub = induced_subgraph(*g, circuit);
            CHECK(is_class(sub.graph, SparsityClass::ReflectionLaman, CrossCheck::On).member);
            ++found;
        }
    }
    CHECK(found > 0);
}

TEST_CASE("reduced graph leaves single-vertex loop circuits intact") {
    const auto loop = ref_graph(1, {{0, 0, 1}});
    CHECK(reduced_graph(loop).graph == loop);

    const auto two = ref_graph(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    const auto red = reduced_graph(two);
    CHECK(red.graph == two);
    CHECK(is_class(red.graph, SparsityClass::Reflection22, CrossCheck::On).member);
}

TEST_CASE("reduced graph contracts a five-edge Ross circuit to a loop") {
    // doubled 0-1, doubled 1-2, single 0-2 on {0,1,2}, plus a doubled
    // pendant edge to vertex 3: one Ross circuit on {0,1,2}
    const auto g = ref_graph(4, {{0, 1, 0},
                                 {0, 1, 1},
                                 {1, 2, 0},
                                 {1, 2, 1},
                                 {0, 2, 0},
                                 {0, 3, 0},
                                 {0, 3, 1}});
    REQUIRE(is_class(g, SparsityClass::ReflectionLaman, CrossCheck::On).member);
    const auto rb = find_ross_circuits(g);
    REQUIRE(rb.circuits.size() == 1);
    CHECK(rb.circuits[0] == std::vector<int>{0, 1, 2, 3, 4});

    const auto red = reduced_graph(g);
    CHECK(red.graph.n == 2);
    REQUIRE(red.graph.edge_count() == 3);
    CHECK(red.loop_edges == std::vector<int>{2});
    CHECK(red.graph.edges[2].tail == red.graph.edges[2].head);
    CHECK(red.graph.edges[2].color == 1);
    CHECK(is_class(red.graph, SparsityClass::Reflection22, CrossCheck::On).member);
    // the five circuit edges vanish, the pendant pair survives
    for (int e = 0; e < 5; ++e) CHECK(red.edge_map[e] == -1);
    CHECK(red.edge_map[5] == 0);
    CHECK(red.edge_map[6] == 1);
}

TEST_CASE("sparsity is monotone under taking subsets") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 3));
        const auto g = random_class_member(rng, SparsityClass::Cone22, n,
                                           2 + static_cast<int>(uniform_int(rng, 0, 2)),
                                           GroupKind::Rotation, 200);
        if (!g) continue;
        std::vector<int> subset;
        for (int e = 0; e < g->edge_count(); ++e)
            if (uniform_int(rng, 0, 1)) subset.push_back(e);
        CHECK(edge_set_sparse(*g, subset, SparsityClass::Cone22));
        const auto sub = induced_subgraph(*g, subset);
        if (sub.graph.edge_count() > 0)
            CHECK(is_sparse_bruteforce(sub.graph, SparsityClass::Cone22).sparse);
    }
}

TEST_CASE("cone-Laman doubling invariance") {
    std::mt19937_64 rng(107);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 20; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 2));
        const int k = 2 + static_cast<int>(uniform_int(rng, 0, 2));
        const auto g =
            random_class_member(rng, SparsityClass::ConeLaman, n, k, GroupKind::Rotation, 200);
        if (!g) continue;
        ++found;
        for (int e = 0; e < g->edge_count(); ++e) {
            ColoredGraph doubled = *g;
            doubled.edges.push_back(g->edges[e]);
            CHECK(is_sparse_bruteforce(doubled, SparsityClass::Cone22).member);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("brute force rejects oversized instances") {
    ColoredGraph g;
    g.n = 14;
    g.group = GroupSpec::rotation(2);
    for (int e = 0; e < 27; ++e) g.add_edge(e % 14, (e + 1) % 14, 1);
    CHECK_THROWS_AS(is_sparse_bruteforce(g, SparsityClass::ConeLaman), std::invalid_argument);
}
