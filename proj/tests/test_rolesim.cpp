// test_rolesim.cpp — Initialization schemes, the pair update, convergence.
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fixtures.hpp"
#include "rolesim/rolesim.hpp"

using namespace rolesim;

namespace {

RoleSimConfig exact_tight() {
    RoleSimConfig cfg;
    cfg.matching = MatchMode::Exact;
    cfg.rel_tol = 1e-12;
    cfg.max_iters = 400;
    return cfg;
}

}  // namespace

TEST_CASE("generalized jaccard") {
    CHECK(generalized_jaccard(3, 2, 1.6, 2) == doctest::Approx(1.6 / 3.0).epsilon(1e-15));
    CHECK(generalized_jaccard(0, 0, 0.0, 0) == 1.0);
    CHECK(generalized_jaccard(2, 2, 2.0, 2) == 1.0);
    CHECK_THROWS_AS(generalized_jaccard(-1, 2, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(generalized_jaccard(1, 1, 1.0, 3), std::invalid_argument);
}

TEST_CASE("score_from_ratio maps [0,1] onto [beta,1] hitting both ends exactly") {
    // Ratio 1 must land bitwise on 1.0 and ratio 0 bitwise on beta: the
    // fixed-point and one-sweep identities depend on those being exact.
    for (const double beta : {0.05, 0.1, 0.15, 0.3, 0.5, 0.9}) {
        CHECK(score_from_ratio(beta, 1.0) == 1.0);
        CHECK(score_from_ratio(beta, 0.0) == beta);
    }
    CHECK(score_from_ratio(0.1, 2.0 / 3.0) == doctest::Approx(0.7).epsilon(1e-15));
    // Out-of-range ratios are clamped defensively.
    CHECK(score_from_ratio(0.1, 1.5) == 1.0);
    CHECK(score_from_ratio(0.1, -0.5) == 0.0);
}

TEST_CASE("initialization schemes") {
    const Graph g = fixtures::path3();  // degrees 1, 2, 1

    const SimilarityMatrix ones = initialize(g, InitScheme::AllOne, 0.1);
    CHECK(ones.at(0, 1) == 1.0);
    CHECK(ones.at(0, 2) == 1.0);

    const SimilarityMatrix binary = initialize(g, InitScheme::DegreeBinary, 0.1);
    CHECK(binary.at(0, 2) == 1.0);  // equal degrees
    CHECK(binary.at(0, 1) == 0.0);

    const SimilarityMatrix ratio = initialize(g, InitScheme::DegreeRatio, 0.1);
    CHECK(ratio.at(0, 2) == 1.0);
    CHECK(ratio.at(0, 1) == doctest::Approx(0.9 * 0.5 + 0.1).epsilon(1e-15));

    CHECK_THROWS_AS(initialize(g, InitScheme::AllOne, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(initialize(g, InitScheme::AllOne, 1.0), std::invalid_argument);
}

TEST_CASE("degree-ratio pinned value: degrees 2 and 3 at beta 0.1 give 0.7") {
    // Node 0 has degree 2, node 3 has degree 3.
    const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {3, 1}, {3, 2}, {3, 4}, {4, 5}});
    const SimilarityMatrix m = initialize(g, InitScheme::DegreeRatio, 0.1);
    CHECK(m.at(0, 3) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("pair update handles isolated nodes and the diagonal") {
    const Graph g = Graph::from_edges(4, {{0, 1}});  // 2 and 3 isolated
    const SimilarityMatrix prev(4, 0.5);
    CHECK(pair_update(g, prev, 2, 2, 0.1, MatchMode::Exact) == 1.0);
    CHECK(pair_update(g, prev, 2, 3, 0.1, MatchMode::Exact) == 1.0);
    CHECK(pair_update(g, prev, 0, 2, 0.1, MatchMode::Exact) == 0.1);  // exactly beta
}

TEST_CASE("one all-one sweep is bitwise the degree-ratio initialization") {
    std::vector<Graph> graphs;
    graphs.push_back(fixtures::family_graph());
    graphs.push_back(fixtures::star4());
    graphs.push_back(Graph::from_edges(5, {{0, 1}}));  // isolated nodes included
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        graphs.push_back(fixtures::random_graph(8, 0.15 + 0.08 * static_cast<double>(seed), seed));

    for (const Graph& g : graphs) {
        for (const MatchMode mode : {MatchMode::Exact, MatchMode::Greedy}) {
            RoleSimConfig cfg;
            cfg.init = InitScheme::AllOne;
            cfg.matching = mode;
            cfg.max_iters = 1;
            const SimilarityMatrix one_sweep = compute_rolesim(g, cfg);
            const SimilarityMatrix ratio_init = initialize(g, InitScheme::DegreeRatio, cfg.beta);
            CHECK(one_sweep.data() == ratio_init.data());  // bitwise, not approx
        }
    }
}

TEST_CASE("path endpoints are automorphic; the adjacent pair hits 2/11") {
    IterationReport report;
    const SimilarityMatrix m = compute_rolesim(fixtures::path3(), exact_tight(), &report);
    CHECK(report.converged);
    CHECK(m.at(0, 2) == 1.0);
    CHECK(m.at(0, 1) == doctest::Approx(2.0 / 11.0).epsilon(1e-9));
    CHECK(m.at(1, 2) == doctest::Approx(2.0 / 11.0).epsilon(1e-9));
}

TEST_CASE("star hub-to-leaf score converges to 1/7") {
    const SimilarityMatrix m = compute_rolesim(fixtures::star4(), exact_tight());
    CHECK(m.at(0, 1) == doctest::Approx(1.0 / 7.0).epsilon(1e-9));
    CHECK(m.at(1, 2) == 1.0);  // leaves are automorphic
}

TEST_CASE("complete graphs score 1 everywhere") {
    const SimilarityMatrix k2 = compute_rolesim(fixtures::k2(), exact_tight());
    CHECK(k2.at(0, 1) == 1.0);
    const SimilarityMatrix k3 = compute_rolesim(fixtures::triangle(), exact_tight());
    CHECK(k3.at(0, 1) == 1.0);
    CHECK(k3.at(0, 2) == 1.0);
    CHECK(k3.at(1, 2) == 1.0);
}

TEST_CASE("family orbit pairs stay exactly 1 under every initialization") {
    const Graph g = fixtures::family_graph();
    for (const InitScheme init :
         {InitScheme::AllOne, InitScheme::DegreeBinary, InitScheme::DegreeRatio}) {
        RoleSimConfig cfg = exact_tight();
        cfg.init = init;
        const SimilarityMatrix m = compute_rolesim(g, cfg);
        for (const auto& [u, v] : fixtures::family_orbit_pairs()) CHECK(m.at(u, v) == 1.0);
    }
}

TEST_CASE("scores stay within [beta, 1] and the matrix is symmetric by construction") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = fixtures::random_graph(12, 0.3, seed ^ 0xabc);
        RoleSimConfig cfg;  // greedy defaults
        const SimilarityMatrix m = compute_rolesim(g, cfg);
        for (int u = 0; u < 12; ++u) {
            for (int v = u + 1; v < 12; ++v) {
                CHECK(m.at(u, v) >= 0.1);
                CHECK(m.at(u, v) <= 1.0);
                CHECK(m.at(u, v) == m.at(v, u));
            }
        }
    }
}

TEST_CASE("results are bitwise independent of the worker count") {
    const Graph g = fixtures::random_graph(30, 0.2, 77);
    RoleSimConfig one;
    one.threads = 1;
    RoleSimConfig four;
    four.threads = 4;
    CHECK(compute_rolesim(g, one).data() == compute_rolesim(g, four).data());
}

TEST_CASE("iteration report honors the cap and absolute mode") {
    const Graph g = fixtures::family_graph();
    RoleSimConfig cfg;
    cfg.init = InitScheme::AllOne;
    cfg.max_iters = 3;
    cfg.rel_tol = 1e-15;
    IterationReport report;
    compute_rolesim(g, cfg, &report);
    CHECK(report.iterations == 3);
    CHECK(!report.converged);
    CHECK(report.deltas.size() == 3);

    cfg.max_iters = 200;
    cfg.absolute_tol = true;
    cfg.rel_tol = 1e-6;
    compute_rolesim(g, cfg, &report);
    CHECK(report.converged);
    CHECK(report.deltas.back() < 1e-6);
}

TEST_CASE("config validation") {
    const Graph g = fixtures::k2();
    RoleSimConfig cfg;
    cfg.beta = 0.0;
    CHECK_THROWS_AS(compute_rolesim(g, cfg), std::invalid_argument);
    cfg = RoleSimConfig{};
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(compute_rolesim(g, cfg), std::invalid_argument);
    cfg = RoleSimConfig{};
    cfg.max_iters = 0;
    CHECK_THROWS_AS(compute_rolesim(g, cfg), std::invalid_argument);
}

TEST_CASE("dense capacity is enforced") {
    const Graph g = fixtures::random_graph(31, 0.1, 1);
    RoleSimConfig cfg;
    cfg.dense_cap = 30;
    CHECK_THROWS_AS(compute_rolesim(g, cfg), std::runtime_error);
}
