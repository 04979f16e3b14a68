// cli.cpp — Subcommand wiring: generators, similarity measures, equivalence,
// evaluation. Each run that produces files also writes
// "<primary-output>.manifest.json" recording every resolved parameter, so any
// output can be reproduced bit-identically.
#include "rolesim/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rolesim/baselines.hpp"
#include "rolesim/equivalence.hpp"
#include "rolesim/eval.hpp"
#include "rolesim/graph.hpp"
#include "rolesim/iceberg.hpp"
#include "rolesim/io.hpp"
#include "rolesim/parallel.hpp"
#include "rolesim/rolesim.hpp"

namespace rolesim::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

json iteration_json(const IterationReport& report) {
    return json{{"iterations", report.iterations},
                {"converged", report.converged},
                {"final_delta", report.deltas.empty() ? 0.0 : report.deltas.back()}};
}

void write_manifest(const std::string& primary_output, const json& manifest) {
    const std::string path = primary_output + ".manifest.json";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << manifest.dump(2) << '\n';
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::runtime_error("bad --sizes entry \"" + item + "\"");
        }
    }
    if (sizes.empty()) throw std::runtime_error("--sizes needs at least one entry");
    return sizes;
}

InitScheme init_from(const std::string& name) {
    if (name == "all-one") return InitScheme::AllOne;
    if (name == "degree-binary") return InitScheme::DegreeBinary;
    return InitScheme::DegreeRatio;
}

MatchMode matching_from(const std::string& name) {
    return name == "exact" ? MatchMode::Exact : MatchMode::Greedy;
}

// Flags shared by every iterative computation.
struct IterFlags {
    double rel_tol = 0.01;
    int max_iters = 100;
    bool absolute = false;
    int threads = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rel-tol", rel_tol,
                        "convergence threshold on the max per-cell change, relative "
                        "to the previous value unless --absolute");
        cmd->add_option("--max-iters", max_iters, "iteration cap");
        cmd->add_flag("--absolute", absolute, "treat --rel-tol as an absolute threshold");
        cmd->add_option("--threads", threads,
                        "worker threads (0 = ROLESIM_THREADS env, else hardware); "
                        "results never depend on this");
    }

    json to_json() const {
        return json{{"rel_tol", rel_tol},
                    {"max_iters", max_iters},
                    {"absolute", absolute},
                    {"threads_requested", threads},
                    {"threads_resolved", resolve_threads(threads)}};
    }
};

void print_iteration_summary(const IterationReport& report) {
    std::cout << (report.converged ? "converged" : "hit the iteration cap") << " after "
              << report.iterations << " iteration" << (report.iterations == 1 ? "" : "s");
    if (!report.deltas.empty()) std::cout << " (final max delta " << report.deltas.back() << ")";
    std::cout << "\n";
}

int cmd_gen_block(const std::string& out, const std::string& sizes_text, double p_within,
                  double p_cross, std::uint64_t seed, const std::string& blocks_out) {
    const auto start = Clock::now();
    BlockSpec spec;
    spec.sizes = parse_sizes(sizes_text);
    const int k = static_cast<int>(spec.sizes.size());
    spec.probs.assign(k, std::vector<double>(k, p_cross));
    for (int i = 0; i < k; ++i) spec.probs[i][i] = p_within;
    spec.seed = seed;

    Partition planted;
    const Graph g = generate_block_model(spec, &planted);
    save_edge_list(g, out);
    json outputs = json::array({out, out + ".ids.csv"});
    if (!blocks_out.empty()) {
        save_partition_csv(planted, blocks_out);
        outputs.push_back(blocks_out);
    }

    write_manifest(out, json{{"command", "gen-block"},
                             {"parameters",
                              {{"sizes", spec.sizes},
                               {"p_within", p_within},
                               {"p_cross", p_cross},
                               {"seed", seed}}},
                             {"inputs", json::array()},
                             {"outputs", outputs},
                             {"wall_time_seconds", seconds_since(start)}});
    std::cout << "gen-block: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges, "
              << k << " blocks -> " << out << "\n";
    return 0;
}

int cmd_gen_sf(const std::string& out, int n, int m, std::uint64_t seed) {
    const auto start = Clock::now();
    const Graph g = generate_scale_free(n, m, seed);
    save_edge_list(g, out);
    write_manifest(out, json{{"command", "gen-sf"},
                             {"parameters", {{"n", n}, {"m", m}, {"seed", seed}}},
                             {"inputs", json::array()},
                             {"outputs", json::array({out, out + ".ids.csv"})},
                             {"wall_time_seconds", seconds_since(start)}});
    std::cout << "gen-sf: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges -> "
              << out << "\n";
    return 0;
}

int cmd_rolesim(const std::string& graph_path, const std::string& out, double beta,
                const std::string& init, const std::string& matching, int dense_cap,
                const IterFlags& iter) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);

    RoleSimConfig cfg;
    cfg.beta = beta;
    cfg.init = init_from(init);
    cfg.matching = matching_from(matching);
    cfg.rel_tol = iter.rel_tol;
    cfg.max_iters = iter.max_iters;
    cfg.absolute_tol = iter.absolute;
    cfg.threads = iter.threads;
    cfg.dense_cap = dense_cap;

    IterationReport report;
    const SimilarityMatrix m = compute_rolesim(g, cfg, &report);
    save_matrix(m, out);

    json params = iter.to_json();
    params["beta"] = beta;
    params["init"] = init;
    params["matching"] = matching;
    params["dense_cap"] = dense_cap;
    write_manifest(out, json{{"command", "rolesim"},
                             {"parameters", params},
                             {"inputs", json::array({graph_path})},
                             {"outputs", json::array({out})},
                             {"iteration", iteration_json(report)},
                             {"wall_time_seconds", seconds_since(start)}});

    std::cout << "rolesim: " << g.num_nodes() << " nodes, " << g.num_edges() << " edges, init="
              << init << ", matching=" << matching << ", beta=" << beta << "\n";
    print_iteration_summary(report);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_iceberg(const std::string& graph_path, const std::string& out, double theta, double beta,
                double alpha, const std::string& matching, const IterFlags& iter) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);

    IcebergConfig cfg;
    cfg.theta = theta;
    cfg.beta = beta;
    cfg.alpha = alpha;
    cfg.matching = matching_from(matching);
    cfg.rel_tol = iter.rel_tol;
    cfg.max_iters = iter.max_iters;
    cfg.absolute_tol = iter.absolute;
    cfg.threads = iter.threads;

    IterationReport report;
    const IcebergTable table = compute_iceberg(g, cfg, &report);
    save_iceberg_csv(table, IcebergMeta{theta, beta, alpha}, out);

    json params = iter.to_json();
    params["theta"] = theta;
    params["beta"] = beta;
    params["alpha"] = alpha;
    params["matching"] = matching;
    write_manifest(out, json{{"command", "iceberg"},
                             {"parameters", params},
                             {"inputs", json::array({graph_path})},
                             {"outputs", json::array({out})},
                             {"iteration", iteration_json(report)},
                             {"wall_time_seconds", seconds_since(start)}});

    const std::size_t all_pairs = pair_count(g.num_nodes());
    std::cout << "iceberg: " << table.size() << " of " << all_pairs << " pairs stored";
    if (all_pairs)
        std::cout << " (" << 100.0 * static_cast<double>(table.size()) / all_pairs << "%)";
    std::cout << ", theta=" << theta << ", beta=" << beta << ", alpha=" << alpha << "\n";
    print_iteration_summary(report);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_baseline(const std::string& name, const std::string& graph_path, const std::string& out,
                 double decay, int dense_cap, const IterFlags& iter) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);

    BaselineConfig cfg;
    cfg.decay = decay;
    cfg.rel_tol = iter.rel_tol;
    cfg.max_iters = iter.max_iters;
    cfg.absolute_tol = iter.absolute;
    cfg.threads = iter.threads;
    cfg.dense_cap = dense_cap;

    IterationReport report;
    SimilarityMatrix m;
    if (name == "simrank")
        m = simrank(g, cfg, &report);
    else if (name == "simrankpp")
        m = simrank_pp(g, cfg, &report);
    else
        m = psimrank(g, cfg, &report);
    save_matrix(m, out);

    json params = iter.to_json();
    params["decay"] = decay;
    params["dense_cap"] = dense_cap;
    write_manifest(out, json{{"command", name},
                             {"parameters", params},
                             {"inputs", json::array({graph_path})},
                             {"outputs", json::array({out})},
                             {"iteration", iteration_json(report)},
                             {"wall_time_seconds", seconds_since(start)}});

    std::cout << name << ": " << g.num_nodes() << " nodes, " << g.num_edges()
              << " edges, decay=" << decay << "\n";
    print_iteration_summary(report);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_equiv_structural(const std::string& graph_path, const std::string& out) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);
    const Partition p = structural_classes(g);
    save_partition_csv(p, out);
    write_manifest(out, json{{"command", "equiv structural"},
                             {"parameters", json::object()},
                             {"inputs", json::array({graph_path})},
                             {"outputs", json::array({out})},
                             {"wall_time_seconds", seconds_since(start)}});
    std::cout << "equiv structural: " << p.k << " classes over " << g.num_nodes()
              << " nodes\nwrote " << out << "\n";
    return 0;
}

int cmd_equiv_refine(const std::string& graph_path, const std::string& out,
                     const std::string& seed_path, const std::string& spectrum) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);
    const Partition seed =
        seed_path.empty() ? all_one_partition(g.num_nodes()) : load_partition_csv(seed_path);
    const SpectrumMode mode =
        spectrum == "binary" ? SpectrumMode::Binary : SpectrumMode::Counted;
    const Partition p = refine_partition(g, seed, mode);
    save_partition_csv(p, out);

    json inputs = json::array({graph_path});
    if (!seed_path.empty()) inputs.push_back(seed_path);
    write_manifest(out, json{{"command", "equiv refine"},
                             {"parameters",
                              {{"spectrum", spectrum},
                               {"seed", seed_path.empty() ? "all-one" : seed_path}}},
                             {"inputs", inputs},
                             {"outputs", json::array({out})},
                             {"wall_time_seconds", seconds_since(start)}});
    std::cout << "equiv refine (" << spectrum << "): " << p.k << " classes over "
              << g.num_nodes() << " nodes\nwrote " << out << "\n";
    return 0;
}

int cmd_equiv_orbits(const std::string& graph_path, const std::string& out, int cap) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);
    const Partition p = automorphism_orbits_bruteforce(g, cap);
    save_partition_csv(p, out);
    write_manifest(out, json{{"command", "equiv orbits"},
                             {"parameters", {{"cap", cap}}},
                             {"inputs", json::array({graph_path})},
                             {"outputs", json::array({out})},
                             {"wall_time_seconds", seconds_since(start)}});
    std::cout << "equiv orbits: " << p.k << " orbits over " << g.num_nodes()
              << " nodes\nwrote " << out << "\n";
    return 0;
}

int cmd_equiv_verify(const std::string& graph_path, const std::string& partition_path,
                     const std::string& spectrum) {
    const Graph g = load_edge_list(graph_path);
    const Partition p = load_partition_csv(partition_path);
    const bool ok = spectrum == "binary" ? is_regular(g, p) : is_equitable(g, p);
    std::cout << "partition is " << (ok ? "" : "NOT ")
              << (spectrum == "binary" ? "regular (binary spectra)" : "equitable (counted spectra)")
              << "\n";
    return ok ? 0 : 1;
}

int cmd_kshell(const std::string& graph_path, const std::string& out) {
    const auto start = Clock::now();
    const Graph g = load_edge_list(graph_path);
    const std::vector<int> core = k_shell_decomposition(g);

    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open " + out + " for writing");
    file << "node,core\n";
    for (std::size_t v = 0; v < core.size(); ++v) file << v << ',' << core[v] << '\n';
    if (!file) throw std::runtime_error("write to " + out + " failed");
    file.close();

    write_manifest(out, json{{"command", "kshell"},
                             {"parameters", json::object()},
                             {"inputs", json::array({graph_path})},
                             {"outputs", json::array({out})},
                             {"wall_time_seconds", seconds_since(start)}});

    int max_core = 0;
    for (const int c : core) max_core = std::max(max_core, c);
    std::cout << "kshell: max core " << max_core << " over " << g.num_nodes()
              << " nodes\nwrote " << out << "\n";
    return 0;
}

int cmd_axioms(const std::string& matrix_path, const std::string& orbits_path, double tol) {
    const SimilarityMatrix m = load_matrix(matrix_path);
    Partition orbits;
    const bool have_orbits = !orbits_path.empty();
    if (have_orbits) orbits = load_partition_csv(orbits_path);
    const AxiomReport report = check_axioms(m, have_orbits ? &orbits : nullptr, tol);

    const auto line = [](const char* name, bool pass, double violation) {
        std::cout << name << ": " << (pass ? "PASS" : "FAIL") << " (violation " << violation
                  << ")\n";
    };
    line("P1 range", report.p1_pass, report.p1_violation);
    line("P2 symmetry", report.p2_pass, report.p2_violation);
    line("P3 automorphism confirmation", report.p3_pass, report.p3_violation);
    line("P4 transitive similarity", report.p4_pass, report.p4_violation);
    if (report.p5_checked)
        line("P5 triangle inequality", report.p5_pass, report.p5_violation);
    else
        std::cout << "P5 triangle inequality: SKIPPED (more than " << kTriangleCheckMaxNodes
                  << " nodes)\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_eval_blocks(const std::string& matrix_path, const std::string& blocks_path,
                    const std::string& csv_out) {
    const auto start = Clock::now();
    const SimilarityMatrix m = load_matrix(matrix_path);
    const Partition blocks = load_partition_csv(blocks_path);
    const BlockRankReport report = within_block_avg_rank(m, blocks);

    std::cout << "eval-blocks: " << report.within_pairs
              << " within-block pairs, overall average percentile " << report.overall << "\n";
    for (std::size_t b = 0; b < report.per_block.size(); ++b)
        std::cout << "  block " << b << ": " << report.per_block[b] << "\n";

    if (!csv_out.empty()) {
        std::ofstream file(csv_out);
        if (!file) throw std::runtime_error("cannot open " + csv_out + " for writing");
        file << "block,avg_percentile\n";
        for (std::size_t b = 0; b < report.per_block.size(); ++b)
            file << b << ',' << report.per_block[b] << '\n';
        file << "overall," << report.overall << '\n';
        if (!file) throw std::runtime_error("write to " + csv_out + " failed");
        file.close();
        write_manifest(csv_out, json{{"command", "eval-blocks"},
                                     {"parameters", json::object()},
                                     {"inputs", json::array({matrix_path, blocks_path})},
                                     {"outputs", json::array({csv_out})},
                                     {"wall_time_seconds", seconds_since(start)}});
        std::cout << "wrote " << csv_out << "\n";
    }
    return 0;
}

int cmd_rank_compare(const std::string& path_a, const std::string& path_b) {
    const SimilarityMatrix a = load_matrix(path_a);
    const SimilarityMatrix b = load_matrix(path_b);
    if (a.size() != b.size())
        throw std::runtime_error("matrices disagree on node count: " + std::to_string(a.size()) +
                                 " vs " + std::to_string(b.size()));
    const double raw = pearson(a.data(), b.data());
    const double ranked = pearson(percentile_ranks(a.data()), percentile_ranks(b.data()));
    std::cout << "rank-compare: " << a.data().size() << " pairs\n"
              << "  pearson of scores:           " << raw << "\n"
              << "  pearson of percentile ranks: " << ranked << "\n";
    return 0;
}

int cmd_topk(const std::string& matrix_path, const std::string& iceberg_path, std::size_t k,
             const std::string& out) {
    const auto start = Clock::now();
    if (matrix_path.empty() == iceberg_path.empty())
        throw std::runtime_error("pass exactly one of --matrix or --iceberg");
    std::vector<ScoredPair> top;
    std::string input;
    if (!matrix_path.empty()) {
        top = topk_pairs(load_matrix(matrix_path), k);
        input = matrix_path;
    } else {
        top = topk_pairs(load_iceberg_csv(iceberg_path), k);
        input = iceberg_path;
    }

    std::cout << "topk: best " << top.size() << " pairs of " << input << "\n";
    const std::size_t shown = std::min<std::size_t>(top.size(), 10);
    for (std::size_t i = 0; i < shown; ++i)
        std::cout << "  " << top[i].u << "," << top[i].v << " -> " << top[i].score << "\n";
    if (shown < top.size()) std::cout << "  ... (" << top.size() - shown << " more)\n";

    if (!out.empty()) {
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot open " + out + " for writing");
        file << "u,v,score\n";
        char buf[64];
        for (const ScoredPair& p : top) {
            std::snprintf(buf, sizeof(buf), "%d,%d,%.17g\n", p.u, p.v, p.score);
            file << buf;
        }
        if (!file) throw std::runtime_error("write to " + out + " failed");
        file.close();
        write_manifest(out, json{{"command", "topk"},
                                 {"parameters", {{"k", k}}},
                                 {"inputs", json::array({input})},
                                 {"outputs", json::array({out})},
                                 {"wall_time_seconds", seconds_since(start)}});
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"role-similarity toolkit: RoleSim, iceberg pruning, SimRank-family "
                 "baselines, equivalence partitions, and evaluation"};
    app.require_subcommand(1);
    int status = 0;

    // gen-block
    {
        auto* cmd = app.add_subcommand("gen-block", "generate a planted block-model graph");
        auto out = std::make_shared<std::string>();
        auto sizes = std::make_shared<std::string>();
        auto p_within = std::make_shared<double>(0.0);
        auto p_cross = std::make_shared<double>(0.0);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto blocks_out = std::make_shared<std::string>();
        cmd->add_option("--out", *out, "edge-list output path")->required();
        cmd->add_option("--sizes", *sizes, "comma-separated block sizes, e.g. 300,350,350")
            ->required();
        cmd->add_option("--p-within", *p_within, "edge probability inside a block")->required();
        cmd->add_option("--p-cross", *p_cross, "edge probability across blocks")->required();
        cmd->add_option("--seed", *seed, "generator seed");
        cmd->add_option("--blocks-out", *blocks_out, "write the planted partition CSV here");
        cmd->callback([=, &status] {
            status = cmd_gen_block(*out, *sizes, *p_within, *p_cross, *seed, *blocks_out);
        });
    }

    // gen-sf
    {
        auto* cmd = app.add_subcommand("gen-sf", "generate a preferential-attachment graph");
        auto out = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto m = std::make_shared<int>(2);
        auto seed = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--out", *out, "edge-list output path")->required();
        cmd->add_option("--n", *n, "node count")->required();
        cmd->add_option("--m", *m, "edges added per new node");
        cmd->add_option("--seed", *seed, "generator seed");
        cmd->callback([=, &status] { status = cmd_gen_sf(*out, *n, *m, *seed); });
    }

    // rolesim
    {
        auto* cmd = app.add_subcommand("rolesim", "compute the full RoleSim matrix");
        auto graph = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto beta = std::make_shared<double>(0.1);
        auto init = std::make_shared<std::string>("degree-ratio");
        auto matching = std::make_shared<std::string>("greedy");
        auto dense_cap = std::make_shared<int>(kDefaultDenseCap);
        auto iter = std::make_shared<IterFlags>();
        cmd->add_option("--graph", *graph, "edge-list input")->required();
        cmd->add_option("--out", *out, "matrix output (.csv for text, anything else binary)")
            ->required();
        cmd->add_option("--beta", *beta, "decay / score floor in (0,1)");
        cmd->add_option("--init", *init, "initialization scheme")
            ->check(CLI::IsMember({"all-one", "degree-binary", "degree-ratio"}));
        cmd->add_option("--matching", *matching, "neighbor matching kernel")
            ->check(CLI::IsMember({"greedy", "exact"}));
        cmd->add_option("--dense-cap", *dense_cap, "refuse dense matrices beyond this many nodes");
        iter->attach(cmd);
        cmd->callback([=, &status] {
            status = cmd_rolesim(*graph, *out, *beta, *init, *matching, *dense_cap, *iter);
        });
    }

    // iceberg
    {
        auto* cmd = app.add_subcommand(
            "iceberg", "compute only the RoleSim pairs that can reach a threshold");
        auto graph = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto theta = std::make_shared<double>(0.9);
        auto beta = std::make_shared<double>(0.1);
        auto alpha = std::make_shared<double>(0.5);
        auto matching = std::make_shared<std::string>("greedy");
        auto iter = std::make_shared<IterFlags>();
        cmd->add_option("--graph", *graph, "edge-list input")->required();
        cmd->add_option("--out", *out, "iceberg CSV output")->required();
        cmd->add_option("--theta", *theta, "score threshold in (beta, 1]");
        cmd->add_option("--beta", *beta, "decay / score floor in (0,1)");
        cmd->add_option("--alpha", *alpha, "estimate weight for pairs outside the table");
        cmd->add_option("--matching", *matching, "neighbor matching kernel")
            ->check(CLI::IsMember({"greedy", "exact"}));
        iter->attach(cmd);
        cmd->callback([=, &status] {
            status = cmd_iceberg(*graph, *out, *theta, *beta, *alpha, *matching, *iter);
        });
    }

    // simrank / simrankpp / psimrank
    for (const std::string name : {"simrank", "simrankpp", "psimrank"}) {
        auto* cmd = app.add_subcommand(name, name == "simrank"
                                                 ? "compute the SimRank matrix"
                                                 : name == "simrankpp"
                                                       ? "compute SimRank weighted by evidence"
                                                       : "compute the PSimRank matrix");
        auto graph = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto decay = std::make_shared<double>(0.1);
        auto dense_cap = std::make_shared<int>(kDefaultDenseCap);
        auto iter = std::make_shared<IterFlags>();
        cmd->add_option("--graph", *graph, "edge-list input")->required();
        cmd->add_option("--out", *out, "matrix output (.csv for text, anything else binary)")
            ->required();
        cmd->add_option("--decay", *decay, "decay in (0,1); the update multiplier is 1-decay");
        cmd->add_option("--dense-cap", *dense_cap, "refuse dense matrices beyond this many nodes");
        iter->attach(cmd);
        cmd->callback([=, &status] {
            status = cmd_baseline(name, *graph, *out, *decay, *dense_cap, *iter);
        });
    }

    // equiv
    {
        auto* equiv = app.add_subcommand("equiv", "discrete role-equivalence partitions");
        equiv->require_subcommand(1);

        auto* structural = equiv->add_subcommand("structural", "group identical neighbor sets");
        {
            auto graph = std::make_shared<std::string>();
            auto out = std::make_shared<std::string>();
            structural->add_option("--graph", *graph, "edge-list input")->required();
            structural->add_option("--out", *out, "partition CSV output")->required();
            structural->callback([=, &status] { status = cmd_equiv_structural(*graph, *out); });
        }

        auto* refine = equiv->add_subcommand("refine", "split classes by neighbor spectra");
        {
            auto graph = std::make_shared<std::string>();
            auto out = std::make_shared<std::string>();
            auto seed = std::make_shared<std::string>();
            auto spectrum = std::make_shared<std::string>("counted");
            refine->add_option("--graph", *graph, "edge-list input")->required();
            refine->add_option("--out", *out, "partition CSV output")->required();
            refine->add_option("--seed-partition", *seed,
                               "partition CSV to refine (default: one class of all nodes)");
            refine->add_option("--spectrum", *spectrum, "counted (equitable) or binary (regular)")
                ->check(CLI::IsMember({"counted", "binary"}));
            refine->callback(
                [=, &status] { status = cmd_equiv_refine(*graph, *out, *seed, *spectrum); });
        }

        auto* orbits = equiv->add_subcommand("orbits", "brute-force automorphism orbits");
        {
            auto graph = std::make_shared<std::string>();
            auto out = std::make_shared<std::string>();
            auto cap = std::make_shared<int>(kDefaultOrbitCap);
            orbits->add_option("--graph", *graph, "edge-list input")->required();
            orbits->add_option("--out", *out, "partition CSV output")->required();
            orbits->add_option("--cap", *cap, "refuse graphs with more nodes than this");
            orbits->callback([=, &status] { status = cmd_equiv_orbits(*graph, *out, *cap); });
        }

        auto* verify = equiv->add_subcommand("verify", "check a partition's spectra agreement");
        {
            auto graph = std::make_shared<std::string>();
            auto partition = std::make_shared<std::string>();
            auto spectrum = std::make_shared<std::string>("counted");
            verify->add_option("--graph", *graph, "edge-list input")->required();
            verify->add_option("--partition", *partition, "partition CSV to check")->required();
            verify->add_option("--spectrum", *spectrum, "counted (equitable) or binary (regular)")
                ->check(CLI::IsMember({"counted", "binary"}));
            verify->callback(
                [=, &status] { status = cmd_equiv_verify(*graph, *partition, *spectrum); });
        }
    }

    // kshell
    {
        auto* cmd = app.add_subcommand("kshell", "core number of every node");
        auto graph = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--graph", *graph, "edge-list input")->required();
        cmd->add_option("--out", *out, "node,core CSV output")->required();
        cmd->callback([=, &status] { status = cmd_kshell(*graph, *out); });
    }

    // axioms
    {
        auto* cmd = app.add_subcommand("axioms",
                                       "check the five admissibility axioms of a score matrix");
        auto matrix = std::make_shared<std::string>();
        auto orbits = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(1e-9);
        cmd->add_option("--matrix", *matrix, "score matrix (CSV or binary)")->required();
        cmd->add_option("--orbits", *orbits,
                        "orbit partition CSV (default: derive classes from score-1 pairs)");
        cmd->add_option("--tol", *tol, "violation tolerance");
        cmd->callback([=, &status] { status = cmd_axioms(*matrix, *orbits, *tol); });
    }

    // eval-blocks
    {
        auto* cmd = app.add_subcommand("eval-blocks",
                                       "average within-block percentile of a score matrix");
        auto matrix = std::make_shared<std::string>();
        auto blocks = std::make_shared<std::string>();
        auto csv_out = std::make_shared<std::string>();
        cmd->add_option("--matrix", *matrix, "score matrix (CSV or binary)")->required();
        cmd->add_option("--blocks", *blocks, "block partition CSV")->required();
        cmd->add_option("--csv-out", *csv_out, "write per-block averages as CSV");
        cmd->callback([=, &status] { status = cmd_eval_blocks(*matrix, *blocks, *csv_out); });
    }

    // rank-compare
    {
        auto* cmd = app.add_subcommand("rank-compare",
                                       "Pearson correlation of two matrices' scores and ranks");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("--a", *a, "first score matrix")->required();
        cmd->add_option("--b", *b, "second score matrix")->required();
        cmd->callback([=, &status] { status = cmd_rank_compare(*a, *b); });
    }

    // topk
    {
        auto* cmd = app.add_subcommand("topk", "best-scoring pairs of a matrix or iceberg table");
        auto matrix = std::make_shared<std::string>();
        auto iceberg = std::make_shared<std::string>();
        auto k = std::make_shared<std::size_t>(10);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--matrix", *matrix, "score matrix (CSV or binary)");
        cmd->add_option("--iceberg", *iceberg, "iceberg CSV");
        cmd->add_option("--k", *k, "how many pairs");
        cmd->add_option("--out", *out, "write the pairs as CSV");
        cmd->callback([=, &status] { status = cmd_topk(*matrix, *iceberg, *k, *out); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace rolesim::cli
