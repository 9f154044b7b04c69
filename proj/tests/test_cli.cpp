#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "recolor/generators.hpp"
#include "recolor/io.hpp"
#include "test_support.hpp"

using namespace recolor;
using namespace testsupport;

#ifndef RECOLOR_BIN
#error "RECOLOR_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/recolor_cli_stdout.txt";
    std::string cmd = std::string(RECOLOR_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, ss.str()};
}

std::string tmp(const std::string& name) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/recolor_" +
           name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generate emits a parseable graph that round-trips byte for byte") {
    std::string path = tmp("ico.g");
    RunResult res = run("generate icosahedron --out " + path);
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "cmd=generate"));
    CHECK(contains(res.out, "n=12"));

    Graph g = load_graph(path);
    std::string again = tmp("ico2.g");
    save_graph(again, g);
    std::ifstream f1(path), f2(again);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
}

TEST_CASE("transform then verify: exit 0 and matching end coloring") {
    std::string gp = tmp("tree.g"), ap = tmp("a.col"), bp = tmp("b.col"), sp = tmp("seq.txt");
    Graph g = random_degenerate(12, 2, 5);
    save_graph(gp, g);
    save_coloring(ap, random_proper_coloring(g, 4, 1));
    save_coloring(bp, random_proper_coloring(g, 4, 2));

    RunResult t = run("transform --graph " + gp + " --from " + ap + " --to " + bp + " --mode linear --out " + sp);
    CHECK(t.exit_code == 0);
    CHECK(contains(t.out, "mode=linear"));
    CHECK(contains(t.out, "verified=1"));
    CHECK(contains(t.out, "bound_checked=1"));

    RunResult v = run("verify --graph " + gp + " --from " + ap + " --seq " + sp + " --expect " + bp);
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "ok=1"));
}

TEST_CASE("linear mode with k = 2d-1 exits with the precondition code") {
    std::string gp = tmp("edge.g"), ap = tmp("ea.col"), bp = tmp("eb.col");
    save_graph(gp, make_path(2));
    save_coloring(ap, Coloring{3, {1, 2}});
    save_coloring(bp, Coloring{3, {2, 1}});
    RunResult res = run("transform --graph " + gp + " --from " + ap + " --to " + bp + " --mode linear");
    CHECK(res.exit_code == 2);
}

TEST_CASE("a corrupted sequence fails verification with exit 3") {
    std::string gp = tmp("edge2.g"), ap = tmp("e2a.col"), sp = tmp("bad.seq");
    save_graph(gp, make_path(2));
    save_coloring(ap, Coloring{3, {1, 2}});
    save_sequence(sp, {{1, 2, 1}});  // monochromatic move
    RunResult res = run("verify --graph " + gp + " --from " + ap + " --seq " + sp);
    CHECK(res.exit_code == 3);
    CHECK(contains(res.out, "ok=0"));
    CHECK(contains(res.out, "failed_step=0"));
}

TEST_CASE("oracle distance prints the BFS distance") {
    std::string gp = tmp("p2.g"), ap = tmp("p2a.col"), bp = tmp("p2b.col");
    save_graph(gp, make_path(2));
    save_coloring(ap, Coloring{3, {1, 2}});
    save_coloring(bp, Coloring{3, {2, 1}});
    RunResult res = run("oracle distance --graph " + gp + " --k 3 --from " + ap + " --to " + bp);
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "distance=3"));

    save_coloring(ap, Coloring{2, {1, 2}});
    save_coloring(bp, Coloring{2, {2, 1}});
    RunResult inf = run("oracle distance --graph " + gp + " --k 2 --from " + ap + " --to " + bp);
    CHECK(inf.exit_code == 0);
    CHECK(contains(inf.out, "distance=inf"));
}

TEST_CASE("oracle budget exhaustion exits 4") {
    std::string gp = tmp("edgeless.g");
    save_graph(gp, Graph::from_edges(4, {}));
    RunResult res = run("oracle stats --graph " + gp + " --k 3 --budget 10");
    CHECK(res.exit_code == 4);
}

TEST_CASE("malformed inputs exit 1") {
    std::string gp = tmp("broken.g");
    std::ofstream(gp) << "p edge 2 1\ne 1 5\n";
    RunResult res = run("degeneracy --graph " + gp);
    CHECK(res.exit_code == 1);
    RunResult unknown = run("no-such-command");
    CHECK(unknown.exit_code == 1);
}

TEST_CASE("partition subcommand writes either a partition or a witness") {
    std::string gp = tmp("star.g"), pp = tmp("star.part");
    save_graph(gp, make_star(5));
    RunResult ok = run("partition --graph " + gp + " --d 2 --out " + pp);
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "ok=1 t=2"));
    LevelPartition p = load_partition(pp);
    CHECK(p.degree_bound == 1);

    std::string kp = tmp("k4.g");
    save_graph(kp, make_complete(4));
    RunResult fail = run("partition --graph " + kp + " --d 3 --out " + tmp("k4.residual"));
    CHECK(fail.exit_code == 0);
    CHECK(contains(fail.out, "ok=0"));
    CHECK(contains(fail.out, "residual_n=4"));
    Graph residual = load_graph(tmp("k4.residual"));
    CHECK(residual.num_vertices() == 4);
}

TEST_CASE("recolor-vertex and eliminate-color consume partition files") {
    std::string gp = tmp("star2.g"), pp = tmp("star2.part"), cp = tmp("star2.col"),
                sp = tmp("star2.seq");
    Graph g = make_star(2);
    save_graph(gp, g);
    save_partition(pp, LevelPartition::make({2, 1, 1}, 1));
    save_coloring(cp, Coloring{3, {1, 2, 2}});

    RunResult rv = run("recolor-vertex --graph " + gp + " --partition " + pp + " --from " + cp +
                       " --vertex 1 --out " + sp);
    CHECK(rv.exit_code == 0);
    CHECK(contains(rv.out, "seq_len=3"));
    RecolorSequence seq = load_sequence(sp);
    CHECK(seq.size() == 3);

    save_coloring(cp, Coloring{3, {3, 1, 1}});
    RunResult el = run("eliminate-color --graph " + gp + " --partition " + pp + " --from " + cp +
                       " --out " + sp + " --out-coloring " + tmp("star2.out.col"));
    CHECK(el.exit_code == 0);
    Coloring out = load_coloring(tmp("star2.out.col"));
    for (int c : out.colors) CHECK(c != 3);
}

TEST_CASE("auto mode falls back to sparse when k is small") {
    std::string gp = tmp("cyc.g"), ap = tmp("ca.col"), bp = tmp("cb.col");
    Graph g = make_cycle(8);
    save_graph(gp, g);
    save_coloring(ap, random_proper_coloring(g, 4, 3));
    save_coloring(bp, random_proper_coloring(g, 4, 4));
    RunResult res = run("transform --graph " + gp + " --from " + ap + " --to " + bp);
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "mode=sparse"));
    CHECK(contains(res.out, "verified=1"));
}
