// test_cli.cpp — End-to-end runs of the rsim binary through a shell.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "rolesim/graph.hpp"
#include "rolesim/io.hpp"

using namespace rolesim;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CmdResult {
    int code = -1;
    std::string output;  // stdout and stderr combined
};

const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "rsim_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string scratch(const std::string& name) { return (scratch_dir() / name).string(); }

CmdResult run_cli(const std::string& args) {
    static int call = 0;
    const std::string capture = scratch("capture_" + std::to_string(call++) + ".log");
    const std::string cmd = std::string(RSIM_BINARY) + " " + args + " > " + capture + " 2>&1";
    const int raw = std::system(cmd.c_str());
    CmdResult result;
    result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(capture);
    std::stringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

bool mentions(const CmdResult& r, const std::string& needle) {
    return r.output.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file " << path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string& family_edge_file() {
    static const std::string path = [] {
        const std::string p = scratch("family.txt");
        save_edge_list(fixtures::family_graph(), p);
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("generate, score, and axiom-check a block-model graph") {
    const std::string graph = scratch("blk.txt");
    const std::string blocks = scratch("blk_blocks.csv");
    const std::string matrix = scratch("blk_scores.csv");

    const CmdResult gen = run_cli("gen-block --out " + graph +
                                  " --sizes 12,13 --p-within 0.5 --p-cross 0.08 --seed 7"
                                  " --blocks-out " + blocks);
    REQUIRE_MESSAGE(gen.code == 0, gen.output);
    CHECK(mentions(gen, "25 nodes"));
    CHECK(fs::exists(graph));
    CHECK(fs::exists(graph + ".ids.csv"));
    CHECK(fs::exists(blocks));

    const CmdResult score = run_cli("rolesim --graph " + graph + " --out " + matrix +
                                    " --matching exact --rel-tol 1e-10 --max-iters 300");
    REQUIRE_MESSAGE(score.code == 0, score.output);
    CHECK(mentions(score, "converged"));

    const CmdResult axioms = run_cli("axioms --matrix " + matrix);
    REQUIRE_MESSAGE(axioms.code == 0, axioms.output);
    CHECK(mentions(axioms, "P1 range: PASS"));
    CHECK(mentions(axioms, "P5 triangle inequality: PASS"));

    const std::string ranks_csv = scratch("blk_ranks.csv");
    const CmdResult blocks_eval = run_cli("eval-blocks --matrix " + matrix + " --blocks " +
                                          blocks + " --csv-out " + ranks_csv);
    REQUIRE_MESSAGE(blocks_eval.code == 0, blocks_eval.output);
    CHECK(mentions(blocks_eval, "within-block pairs"));
    const std::string ranks_text = slurp(ranks_csv);
    CHECK(ranks_text.rfind("block,avg_percentile\n", 0) == 0);
    CHECK(ranks_text.find("overall,") != std::string::npos);
}

TEST_CASE("every produced file comes with a manifest that parses") {
    const std::string graph = scratch("mani.txt");
    const std::string matrix = scratch("mani_scores.bin");

    REQUIRE(run_cli("gen-block --out " + graph +
                    " --sizes 6,6 --p-within 0.7 --p-cross 0.1 --seed 3")
                .code == 0);
    const json gen = json::parse(std::ifstream(graph + ".manifest.json"));
    CHECK(gen.at("command") == "gen-block");
    CHECK(gen.at("parameters").at("sizes") == json::array({6, 6}));
    CHECK(gen.at("parameters").at("seed") == 3);
    CHECK(gen.at("wall_time_seconds").get<double>() >= 0.0);

    REQUIRE(run_cli("rolesim --graph " + graph + " --out " + matrix + " --matching exact").code ==
            0);
    const json score = json::parse(std::ifstream(matrix + ".manifest.json"));
    CHECK(score.at("command") == "rolesim");
    CHECK(score.at("parameters").at("matching") == "exact");
    CHECK(score.at("parameters").at("threads_resolved").get<int>() >= 1);
    CHECK(score.at("iteration").at("converged") == true);
    CHECK(score.at("inputs") == json::array({graph}));
}

TEST_CASE("scale-free graph through iceberg pruning and topk") {
    const std::string graph = scratch("sf.txt");
    const std::string table = scratch("sf_iceberg.csv");
    const std::string top_csv = scratch("sf_top.csv");

    const CmdResult gen = run_cli("gen-sf --out " + graph + " --n 60 --m 2 --seed 5");
    REQUIRE_MESSAGE(gen.code == 0, gen.output);
    CHECK(mentions(gen, "60 nodes"));

    const CmdResult ice = run_cli("iceberg --graph " + graph + " --out " + table +
                                  " --theta 0.9 --matching exact");
    REQUIRE_MESSAGE(ice.code == 0, ice.output);
    CHECK(mentions(ice, "pairs stored"));

    const CmdResult top = run_cli("topk --iceberg " + table + " --k 5 --out " + top_csv);
    REQUIRE_MESSAGE(top.code == 0, top.output);
    CHECK(mentions(top, "topk: best"));
    CHECK(slurp(top_csv).rfind("u,v,score\n", 0) == 0);
}

TEST_CASE("equivalence subcommands agree with each other") {
    const std::string graph = family_edge_file();
    const std::string orbits = scratch("fam_orbits.csv");

    const CmdResult find = run_cli("equiv orbits --graph " + graph + " --out " + orbits +
                                   " --cap 14");
    REQUIRE_MESSAGE(find.code == 0, find.output);
    CHECK(mentions(find, "6 orbits over 13 nodes"));

    // Orbits are equitable, so verification succeeds...
    const CmdResult good = run_cli("equiv verify --graph " + graph + " --partition " + orbits);
    CHECK(good.code == 0);
    CHECK(mentions(good, "equitable"));

    // ...and refining them changes nothing.
    const std::string refined = scratch("fam_refined.csv");
    const CmdResult refine = run_cli("equiv refine --graph " + graph + " --out " + refined +
                                     " --seed-partition " + orbits);
    REQUIRE_MESSAGE(refine.code == 0, refine.output);
    CHECK(mentions(refine, "6 classes over 13 nodes"));

    // Lumping all nodes together fails verification: degrees differ.
    const std::string all_one = scratch("fam_all_one.csv");
    save_partition_csv(all_one_partition(13), all_one);
    const CmdResult bad = run_cli("equiv verify --graph " + graph + " --partition " + all_one);
    CHECK(bad.code == 1);
    CHECK(mentions(bad, "NOT"));

    const std::string structural = scratch("fam_structural.csv");
    const CmdResult str = run_cli("equiv structural --graph " + graph + " --out " + structural);
    REQUIRE_MESSAGE(str.code == 0, str.output);
    CHECK(mentions(str, "9 classes over 13 nodes"));
}

TEST_CASE("kshell output matches the library") {
    const std::string out = scratch("fam_core.csv");
    const CmdResult r = run_cli("kshell --graph " + family_edge_file() + " --out " + out);
    REQUIRE_MESSAGE(r.code == 0, r.output);

    const std::vector<int> expected = k_shell_decomposition(fixtures::family_graph());
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "node,core");
    for (std::size_t v = 0; v < expected.size(); ++v) {
        REQUIRE(std::getline(in, line));
        CHECK(line == std::to_string(v) + "," + std::to_string(expected[v]));
    }
    CHECK(!std::getline(in, line));
}

TEST_CASE("rank-compare of a matrix with itself reports correlation 1") {
    SimilarityMatrix m(5, 0.0);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) m.set(u, v, 0.1 * (u + 1) + 0.01 * v);
    const std::string path = scratch("self.bin");
    save_matrix(m, path);

    const CmdResult r = run_cli("rank-compare --a " + path + " --b " + path);
    REQUIRE_MESSAGE(r.code == 0, r.output);
    const std::size_t at = r.output.find("pearson of scores:");
    REQUIRE(at != std::string::npos);
    CHECK(std::atof(r.output.c_str() + at + 18) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the worker count does not change the output bytes") {
    const std::string one = scratch("threads1.bin");
    const std::string three = scratch("threads3.bin");
    REQUIRE(run_cli("rolesim --graph " + family_edge_file() + " --out " + one +
                    " --threads 1 --rel-tol 1e-10")
                .code == 0);
    REQUIRE(run_cli("rolesim --graph " + family_edge_file() + " --out " + three +
                    " --threads 3 --rel-tol 1e-10")
                .code == 0);
    CHECK(slurp(one) == slurp(three));
}

TEST_CASE("failures exit nonzero and explain themselves") {
    CHECK(run_cli("").code != 0);  // a subcommand is required
    CHECK(run_cli("rolesim --graph x --out y --bogus-flag").code != 0);
    CHECK(run_cli("rolesim").code != 0);  // missing required options

    const CmdResult missing = run_cli("rolesim --graph " + scratch("no_such_graph.txt") +
                                      " --out " + scratch("unused.bin"));
    CHECK(missing.code == 1);
    CHECK(mentions(missing, "error:"));
    CHECK(mentions(missing, "cannot open"));

    const CmdResult theta = run_cli("iceberg --graph " + family_edge_file() + " --out " +
                                    scratch("unused.csv") + " --theta 0.05");
    CHECK(theta.code == 1);
    CHECK(mentions(theta, "theta"));

    const CmdResult cap = run_cli("rolesim --graph " + family_edge_file() + " --out " +
                                  scratch("unused2.bin") + " --dense-cap 10");
    CHECK(cap.code == 1);
    CHECK(mentions(cap, "iceberg"));

    const CmdResult neither = run_cli("topk --k 3");
    CHECK(neither.code == 1);
    CHECK(mentions(neither, "exactly one"));
}

TEST_CASE("axioms exits 1 when a check fails") {
    // Score-1 pair (0,1) forces a derived class whose members disagree about
    // node 2, breaking transitive similarity.
    SimilarityMatrix m(3, 0.0);
    m.set(0, 1, 1.0);
    m.set(0, 2, 0.9);
    m.set(1, 2, 0.2);
    const std::string path = scratch("bad_axioms.csv");
    save_matrix(m, path);

    const CmdResult r = run_cli("axioms --matrix " + path);
    CHECK(r.code == 1);
    CHECK(mentions(r, "FAIL"));
}
