// test_graph.cpp — Parsing, serialization, generators, k-shell.
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "rolesim/graph.hpp"

using namespace rolesim;

TEST_CASE("from_edges builds sorted deduplicated adjacency") {
    const Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {1, 0}, {3, 3}, {0, 2}});
    g.check_invariants();
    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 2);  // duplicate (0,1)/(1,0)/(0,2) collapse, loop dropped
    CHECK(g.neighbors(0) == std::vector<int>{1, 2});
    CHECK(g.degree(3) == 0);
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(1, 2));
}

TEST_CASE("neighbor_degrees are ascending") {
    const Graph g = fixtures::family_graph();
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto& degs = g.neighbor_degrees(v);
        CHECK(std::is_sorted(degs.begin(), degs.end()));
        CHECK(static_cast<int>(degs.size()) == g.degree(v));
    }
    // S1's neighbors are J1(5), L1(6), S2(3), S3(2), S4(2).
    CHECK(g.neighbor_degrees(fixtures::kS1) == std::vector<int>{2, 2, 3, 5, 6});
}

TEST_CASE("family graph has the documented shape") {
    const Graph g = fixtures::family_graph();
    g.check_invariants();
    CHECK(g.num_nodes() == 13);
    CHECK(g.num_edges() == 20);
    CHECK(g.degree(fixtures::kL1) == 6);
    CHECK(g.degree(fixtures::kS1) == 5);
    CHECK(g.degree(fixtures::kJ1) == 5);
    CHECK(g.degree(fixtures::kL2) == 4);
    CHECK(g.degree(fixtures::kS2) == 3);
    CHECK(g.degree(fixtures::kJ2) == 3);
    for (const int child : {fixtures::kS3, fixtures::kS4, fixtures::kJ3, fixtures::kJ4,
                            fixtures::kL3, fixtures::kL4, fixtures::kL5})
        CHECK(g.degree(child) == 2);
}

TEST_CASE("edge-list parsing compacts labels in ascending order") {
    std::istringstream in("# comment\n5 9\n\n9 7\n");
    ParseStats stats;
    const Graph g = parse_edge_list(in, &stats);
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 2);
    // Labels 5,7,9 -> ids 0,1,2; edges (5,9)->(0,2), (9,7)->(2,1).
    CHECK(g.labels() == std::vector<std::int64_t>{5, 7, 9});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 1));
    CHECK(stats.duplicate_edges == 0);
    CHECK(stats.self_loops == 0);
}

TEST_CASE("parser counts duplicates and self-loops") {
    std::istringstream in("1 2\n2 1\n3 3\n1 2\n2 3\n");
    ParseStats stats;
    const Graph g = parse_edge_list(in, &stats);
    CHECK(g.num_edges() == 2);
    CHECK(stats.duplicate_edges == 2);
    CHECK(stats.self_loops == 1);
}

TEST_CASE("parser rejects malformed input with the line number") {
    auto expect_error = [](const char* text, const char* needle) {
        std::istringstream in(text);
        try {
            parse_edge_list(in);
            FAIL("expected a parse error for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("0 1\nnot numbers\n", "line 2");
    expect_error("0 1\n2\n", "line 2");
    expect_error("0 1 extra\n", "line 1");
    expect_error("0 -1\n", "line 1");
    expect_error("# only comments\n", "no edges");
    expect_error("", "no edges");
}

TEST_CASE("serialize then parse round-trips the graph") {
    std::istringstream in("10 30\n20 30\n10 40\n");
    const Graph g = parse_edge_list(in);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream back(out.str());
    const Graph h = parse_edge_list(back);
    CHECK(h.num_nodes() == g.num_nodes());
    CHECK(h.num_edges() == g.num_edges());
    CHECK(h.labels() == g.labels());
    for (int u = 0; u < g.num_nodes(); ++u) CHECK(h.neighbors(u) == g.neighbors(u));
}

TEST_CASE("id map lists label,id pairs") {
    std::istringstream in("7 3\n");
    const Graph g = parse_edge_list(in);
    std::ostringstream out;
    write_id_map(g, out);
    CHECK(out.str() == "label,id\n3,0\n7,1\n");
}

TEST_CASE("block model respects sizes, probabilities, and the seed") {
    BlockSpec spec;
    spec.sizes = {10, 15};
    spec.probs = {{1.0, 0.0}, {0.0, 1.0}};
    spec.seed = 5;
    Partition planted;
    const Graph g = generate_block_model(spec, &planted);
    g.check_invariants();
    CHECK(g.num_nodes() == 25);
    // Within-probability 1, cross 0: two disjoint cliques.
    CHECK(g.num_edges() == 45 + 105);
    CHECK(planted.k == 2);
    CHECK(class_sizes(planted) == std::vector<int>{10, 15});
    CHECK(planted.labels[0] == planted.labels[9]);
    CHECK(planted.labels[0] != planted.labels[10]);

    spec.probs = {{0.3, 0.05}, {0.05, 0.3}};
    const Graph a = generate_block_model(spec);
    const Graph b = generate_block_model(spec);
    for (int u = 0; u < a.num_nodes(); ++u) CHECK(a.neighbors(u) == b.neighbors(u));
    spec.seed = 6;
    const Graph c = generate_block_model(spec);
    bool any_difference = false;
    for (int u = 0; u < a.num_nodes() && !any_difference; ++u)
        any_difference = a.neighbors(u) != c.neighbors(u);
    CHECK(any_difference);
}

TEST_CASE("block model validates its spec") {
    BlockSpec spec;
    spec.sizes = {3, -1};
    spec.probs = {{0.5, 0.5}, {0.5, 0.5}};
    CHECK_THROWS_AS(generate_block_model(spec), std::invalid_argument);
    spec.sizes = {3, 3};
    spec.probs = {{0.5, 1.5}, {1.5, 0.5}};
    CHECK_THROWS_AS(generate_block_model(spec), std::invalid_argument);
    spec.probs = {{0.5, 0.1}, {0.2, 0.5}};  // asymmetric
    CHECK_THROWS_AS(generate_block_model(spec), std::invalid_argument);
    spec.probs = {{0.5, 0.1}};  // wrong shape
    CHECK_THROWS_AS(generate_block_model(spec), std::invalid_argument);
}

TEST_CASE("scale-free generator normally has 2n-3 edges at m=2 and n-1 at m=1") {
    const Graph g = generate_scale_free(50, 2, 9);
    g.check_invariants();
    CHECK(g.num_nodes() == 50);
    CHECK(g.num_edges() == 2 * 50 - 3);  // triangle seed, then 2 per node
    int min_degree = 50;
    for (int v = 0; v < 50; ++v) min_degree = std::min(min_degree, g.degree(v));
    CHECK(min_degree >= 2);

    const Graph tree = generate_scale_free(40, 1, 9);
    CHECK(tree.num_edges() == 39);

    const Graph again = generate_scale_free(50, 2, 9);
    for (int u = 0; u < 50; ++u) CHECK(again.neighbors(u) == g.neighbors(u));

    CHECK_THROWS_AS(generate_scale_free(3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_scale_free(10, 0, 1), std::invalid_argument);
}

TEST_CASE("scale-free degrees are skewed toward early nodes") {
    const Graph g = generate_scale_free(400, 2, 21);
    int max_degree = 0;
    for (int v = 0; v < g.num_nodes(); ++v) max_degree = std::max(max_degree, g.degree(v));
    // Preferential attachment produces hubs far above the average degree of ~4.
    CHECK(max_degree >= 20);
}

namespace {

// Oracle: core number by repeated removal, quadratic and obviously correct.
std::vector<int> naive_core_numbers(const Graph& g) {
    const int n = g.num_nodes();
    std::vector<int> core(n, 0);
    for (int k = 1; k <= n; ++k) {
        // Peel everything of degree < k; whoever survives has core >= k.
        std::vector<bool> alive(n, true);
        std::vector<int> deg(n);
        for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!alive[v] || deg[v] >= k) continue;
                alive[v] = false;
                changed = true;
                for (int w : g.neighbors(v))
                    if (alive[w]) --deg[w];
            }
        }
        for (int v = 0; v < n; ++v)
            if (alive[v]) core[v] = k;
    }
    return core;
}

}  // namespace

TEST_CASE("k-shell pinned shapes") {
    // Triangle with a tail: 0-1-2 triangle, 2-3 pendant.
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(k_shell_decomposition(g) == std::vector<int>{2, 2, 2, 1});

    CHECK(k_shell_decomposition(fixtures::star4()) == std::vector<int>{1, 1, 1, 1});

    const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k_shell_decomposition(k4) == std::vector<int>{3, 3, 3, 3});

    // Isolated node has core 0.
    const Graph iso = Graph::from_edges(3, {{0, 1}});
    CHECK(k_shell_decomposition(iso) == std::vector<int>{1, 1, 0});

    // Every family member is in the 2-core and nobody is in a 3-core.
    const std::vector<int> family = k_shell_decomposition(fixtures::family_graph());
    CHECK(std::all_of(family.begin(), family.end(), [](int c) { return c == 2; }));
}

TEST_CASE("k-shell agrees with the naive peeling oracle on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 10 + static_cast<int>(seed) * 2;
        const Graph g = fixtures::random_graph(n, 0.05 + 0.04 * (seed % 5), seed);
        CHECK(k_shell_decomposition(g) == naive_core_numbers(g));
    }
}
