#include <random>
#include <set>

#include "doctest.h"
#include "symrig/enumeration.hpp"
#include "symrig/rng.hpp"
#include "test_helpers.hpp"

using namespace symrig;
using namespace symrig::testing;

TEST_CASE("exhaustive enumeration counts for tiny parameters") {
    const auto one = exhaustive_connected_colored_graphs(1, 1, 2, GroupKind::Rotation);
    CHECK(one.size() == 2);  // the loop, colored 0 or 1

    // n=2, m=3: four canonical connected multigraphs, each with k^2 colorings
    const auto two = exhaustive_connected_colored_graphs(2, 3, 2, GroupKind::Reflection);
    CHECK(two.size() == 16);

    std::set<std::string> distinct;
    for (const auto& g : two) {
        CHECK(is_valid(g));  // loops colored 0 only warn
        CHECK(spanning_connected(g));
        CHECK(g.edge_count() == 3);
        std::string key;
        for (const auto& e : g.edges)
            key += std::to_string(e.tail) + "," + std::to_string(e.head) + "," +
                   std::to_string(e.color) + ";";
        CHECK(distinct.insert(key).second);
    }
}

TEST_CASE("exhaustive enumeration emits tree-zero colorings only") {
    for (const auto& g : exhaustive_connected_colored_graphs(3, 5, 3, GroupKind::Rotation)) {
        GainUnionFind uf(g.n, 1);
        for (const auto& e : g.edges) {
            if (e.tail == e.head) continue;
            if (uf.unite(e.tail, e.head, 0)) CHECK(e.color == 0);
        }
    }
}

TEST_CASE("random connected graphs are connected with the right counts") {
    std::mt19937_64 rng(733);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 5));
        const int m = n - 1 + static_cast<int>(uniform_int(rng, 0, 5));
        const ColoredGraph g = random_connected_colored_graph(rng, n, m, 3, GroupKind::Rotation);
        CHECK(g.n == n);
        CHECK(g.edge_count() == m);
        CHECK(spanning_connected(g));
        for (const auto& e : g.edges) {
            CHECK(e.color >= 0);
            CHECK(e.color < 3);
        }
    }
}

TEST_CASE("random class members satisfy the class") {
    std::mt19937_64 rng(739);
    int found = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(uniform_int(rng, 0, 3));
        const auto g =
            random_class_member(rng, SparsityClass::Cone22, n, 3, GroupKind::Rotation, 500);
        if (!g) continue;
        ++found;
        CHECK(is_class(*g, SparsityClass::Cone22, CrossCheck::On).member);
    }
    CHECK(found > 0);
}
