// Command-line front end: generation, partitioning, transformations, the
// exhaustive oracle, and certificate verification over the text formats.
//
// Exit codes: 0 success, 1 bad usage or malformed input, 2 precondition
// violation, 3 verification failure, 4 oracle budget exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recolor/errors.hpp"
#include "recolor/generators.hpp"
#include "recolor/io.hpp"
#include "recolor/mad.hpp"
#include "recolor/oracle.hpp"
#include "recolor/partition.hpp"
#include "recolor/recolor_linear.hpp"
#include "recolor/recolor_sparse.hpp"

namespace {

using namespace recolor;

class Stopwatch {
public:
    long long elapsed_ms() const {
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Single-line key=value run report.
class RunReport {
public:
    explicit RunReport(const std::string& command) { add("cmd", command); }

    void add(const std::string& key, const std::string& value) {
        fields_.push_back({key, value});
    }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add_flag(const std::string& key, bool value) { add(key, value ? "1" : "0"); }

    void print() const {
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            std::cout << (i ? " " : "") << fields_[i].first << "=" << fields_[i].second;
        }
        std::cout << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    std::ostringstream hex;
    hex << std::hex << fnv1a64(ss.str());
    return hex.str();
}

int max_recolorings_per_vertex(const RecolorSequence& seq, int n) {
    std::vector<int> counts(n, 0);
    int best = 0;
    for (const RecolorStep& s : seq) best = std::max(best, ++counts[s.vertex]);
    return best;
}

// Smallest d <= k-1 whose greedy partition succeeds.
std::optional<int> smallest_partition_d(const Graph& g, int k) {
    for (int d = 1; d <= k - 1; ++d) {
        if (build_partition(g, d).ok()) return d;
    }
    return std::nullopt;
}

struct TransformArgs {
    std::string graph_file, from_file, to_file, out_file;
    std::string mode = "auto";
    int k_override = 0;
    int d_override = 0;
};

int run_transform(const TransformArgs& args) {
    Stopwatch watch;
    Graph g = load_graph(args.graph_file);
    Coloring alpha = load_coloring(args.from_file);
    Coloring beta = load_coloring(args.to_file);
    if (alpha.k != beta.k) {
        throw std::invalid_argument("transform: colorings disagree on k (" +
                                    std::to_string(alpha.k) + " vs " + std::to_string(beta.k) +
                                    ")");
    }
    const int k = alpha.k;
    if (args.k_override != 0 && args.k_override != k) {
        throw std::invalid_argument("transform: --k disagrees with the coloring files");
    }

    DegeneracyCertificate cert = degeneracy_order(g);
    const int d_linear = cert.degeneracy + 1;

    std::string mode = args.mode;
    int d_sparse = args.d_override;
    if (mode == "auto") {
        if (k >= 2 * d_linear) {
            mode = "linear";
        } else if (auto d = smallest_partition_d(g, k)) {
            mode = "sparse";
            d_sparse = *d;
        } else {
            // peeling success is monotone in d, so the d = k-1 residual
            // witnesses failure for every smaller d as well
            BuildPartitionResult witness = build_partition(g, k - 1);
            throw PreconditionError(
                "transform: no applicable regime; linear needs k >= " +
                    std::to_string(2 * d_linear) + " (degeneracy " +
                    std::to_string(cert.degeneracy) +
                    "), and no degree-bounded partition exists for any d <= " +
                    std::to_string(k - 1) + " (residual witness on " +
                    std::to_string(witness.residual.size()) + " vertices)",
                witness.residual);
        }
    }

    RunReport report("transform");
    report.add("mode", mode);
    report.add("graph_digest", file_digest(args.graph_file));
    report.add("from_digest", file_digest(args.from_file));
    report.add("to_digest", file_digest(args.to_file));
    report.add("n", g.num_vertices());
    report.add("k", k);

    RecolorSequence seq;
    bool bound_checked = false;
    if (mode == "linear") {
        seq = transform_linear(g, alpha, beta, k);
        report.add("d", d_linear);
        bound_checked =
            seq.size() <= static_cast<std::size_t>(d_linear) * g.num_vertices() &&
            max_recolorings_per_vertex(seq, g.num_vertices()) <= d_linear;
    } else if (mode == "sparse") {
        if (d_sparse == 0) {
            auto d = smallest_partition_d(g, k);
            if (!d) {
                throw PreconditionError(
                    "transform: no degree-bounded partition exists for any d <= " +
                    std::to_string(k - 1));
            }
            d_sparse = *d;
        }
        if (k < d_sparse + 1) {
            throw PreconditionError("transform: sparse mode needs k >= d + 1");
        }
        seq = transform_sparse(g, d_sparse, alpha, beta);
        report.add("d", d_sparse);
        Rational m = mad(g);
        report.add("mad", m.str());
        if (m < Rational(d_sparse)) {
            PartitionSpec spec = PartitionSpec::make(d_sparse, Rational(d_sparse) - m);
            double n = g.num_vertices();
            double bound = 2.0 * (d_sparse * (std::pow(n, spec.c) + n) + n);
            report.add("c", std::to_string(spec.c));
            bound_checked = static_cast<double>(seq.size()) <= bound;
        }
    } else {
        throw std::invalid_argument("transform: unknown mode '" + mode + "'");
    }

    VerifyResult check = verify_sequence(g, alpha, seq);
    bool verified = check.ok() && check.final_coloring->colors == beta.colors;
    report.add("seq_len", static_cast<long long>(seq.size()));
    report.add("max_per_vertex", max_recolorings_per_vertex(seq, g.num_vertices()));
    report.add_flag("bound_checked", bound_checked);
    report.add_flag("verified", verified);
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    if (!verified) {
        std::cerr << "transform: emitted sequence failed verification\n";
        return 3;
    }
    if (!args.out_file.empty()) save_sequence(args.out_file, seq);
    return 0;
}

int run_verify(const std::string& graph_file, const std::string& from_file,
               const std::string& seq_file, const std::string& expect_file,
               const std::string& out_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    Coloring start = load_coloring(from_file);
    RecolorSequence seq = load_sequence(seq_file);

    RunReport report("verify");
    report.add("graph_digest", file_digest(graph_file));
    report.add("from_digest", file_digest(from_file));
    report.add("seq_digest", file_digest(seq_file));
    report.add("steps", static_cast<long long>(seq.size()));

    VerifyResult res = verify_sequence(g, start, seq);
    if (!res.ok()) {
        report.add_flag("ok", false);
        report.add("failed_step", static_cast<long long>(res.error->step_index));
        report.add("reason", "'" + res.error->reason + "'");
        report.add("elapsed_ms", watch.elapsed_ms());
        report.print();
        return 3;
    }
    bool end_matches = true;
    if (!expect_file.empty()) {
        Coloring expect = load_coloring(expect_file);
        end_matches = expect.k == res.final_coloring->k &&
                      expect.colors == res.final_coloring->colors;
        report.add_flag("end_matches_expect", end_matches);
    }
    report.add_flag("ok", end_matches);
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    if (!out_file.empty()) save_coloring(out_file, *res.final_coloring);
    return end_matches ? 0 : 3;
}

int run_generate(const std::string& kind, int m, int n, int d, std::uint64_t seed,
                 const std::string& out_file) {
    Stopwatch watch;
    Graph g;
    if (kind == "icosahedron") {
        g = icosahedron();
    } else if (kind == "tri-grid") {
        g = triangulated_grid(m);
    } else if (kind == "grid") {
        g = square_grid(m);
    } else if (kind == "random-degenerate") {
        g = random_degenerate(n, d, seed);
    } else {
        throw std::invalid_argument("generate: unknown kind '" + kind + "'");
    }
    save_graph(out_file, g);
    RunReport report("generate");
    report.add("kind", kind);
    report.add("n", g.num_vertices());
    report.add("m", g.num_edges());
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    return 0;
}

int run_partition(const std::string& graph_file, int d, const std::string& out_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    BuildPartitionResult res = build_partition(g, d);
    RunReport report("partition");
    report.add("graph_digest", file_digest(graph_file));
    report.add("d", d);
    if (res.ok()) {
        report.add_flag("ok", true);
        report.add("t", res.partition->t);
        report.add("degree_bound", res.partition->degree_bound);
        if (!out_file.empty()) save_partition(out_file, *res.partition);
    } else {
        // the residual subgraph certifies mad(g) >= d
        report.add_flag("ok", false);
        report.add("residual_n", static_cast<long long>(res.residual.size()));
        if (!out_file.empty()) {
            auto sub = induced_subgraph(g, res.residual);
            std::ofstream f(out_file);
            f << "c residual subgraph; original 1-based vertex ids:";
            for (int v : res.residual) f << " " << v + 1;
            f << "\n";
            write_graph(f, sub.graph);
        }
    }
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    return 0;
}

int run_recolor_vertex(const std::string& graph_file, const std::string& partition_file,
                       const std::string& from_file, int vertex1, const std::string& out_file,
                       const std::string& out_coloring_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    LevelPartition p = load_partition(partition_file);
    Coloring gamma = load_coloring(from_file);
    if (vertex1 < 1 || vertex1 > g.num_vertices()) {
        throw std::invalid_argument("recolor-vertex: vertex out of range 1.." +
                                    std::to_string(g.num_vertices()));
    }
    auto [seq, out] = recolor_vertex(g, p, gamma, vertex1 - 1);
    RunReport report("recolor-vertex");
    report.add("vertex", vertex1);
    report.add("seq_len", static_cast<long long>(seq.size()));
    report.add("max_per_vertex", max_recolorings_per_vertex(seq, g.num_vertices()));
    report.add_flag("bound_checked", true);  // budget asserted during the run
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    if (!out_file.empty()) save_sequence(out_file, seq);
    if (!out_coloring_file.empty()) save_coloring(out_coloring_file, out);
    return 0;
}

int run_eliminate_color(const std::string& graph_file, const std::string& partition_file,
                        const std::string& from_file, int color, const std::string& out_file,
                        const std::string& out_coloring_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    LevelPartition p = load_partition(partition_file);
    Coloring gamma = load_coloring(from_file);
    if (color == 0) color = gamma.k;
    auto [seq, out] = eliminate_color(g, p, gamma, color);
    RunReport report("eliminate-color");
    report.add("dead_color", color);
    report.add("seq_len", static_cast<long long>(seq.size()));
    report.add_flag("bound_checked", true);  // step bound asserted during the run
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    if (!out_file.empty()) save_sequence(out_file, seq);
    if (!out_coloring_file.empty()) save_coloring(out_coloring_file, out);
    return 0;
}

int run_oracle(const std::string& query, const std::string& graph_file, int k,
               const std::string& from_file, const std::string& to_file, long long budget,
               int threads, const std::string& out_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    RunReport report("oracle");
    report.add("query", query);
    report.add("k", k);
    if (query == "stats") {
        ReconfGraphStats stats = reconf_stats(g, k, budget, threads);
        report.add("colorings", stats.num_colorings);
        report.add("components", stats.num_components);
        report.add("diameter", stats.diameter ? std::to_string(*stats.diameter) : "inf");
        report.add_flag("diameter_lower_bound", stats.diameter_is_lower_bound);
        report.add("frozen", stats.num_frozen);
    } else if (query == "distance") {
        if (from_file.empty() || to_file.empty()) {
            throw std::invalid_argument("oracle distance: needs --from and --to");
        }
        Coloring alpha = load_coloring(from_file);
        Coloring beta = load_coloring(to_file);
        auto dist = shortest_transformation(g, k, alpha, beta, budget);
        report.add("distance", dist ? std::to_string(*dist) : "inf");
    } else if (query == "frozen") {
        std::vector<Coloring> frozen = find_frozen(g, k, budget);
        report.add("count", static_cast<long long>(frozen.size()));
        if (!out_file.empty()) {
            std::ofstream f(out_file);
            f << "k " << k << "\n";
            for (const Coloring& c : frozen) {
                for (std::size_t v = 0; v < c.colors.size(); ++v) f << (v ? " " : "") << c.colors[v];
                f << "\n";
            }
        }
    } else {
        throw std::invalid_argument("oracle: unknown query '" + query + "'");
    }
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    return 0;
}

int run_mad(const std::string& graph_file, const std::string& out_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    DensestSubgraph res = mad_with_witness(g);
    RunReport report("mad");
    report.add("graph_digest", file_digest(graph_file));
    report.add("n", g.num_vertices());
    report.add("m", g.num_edges());
    report.add("mad", res.mad.str());
    report.add("witness_n", static_cast<long long>(res.witness.size()));
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    if (!out_file.empty()) {
        auto sub = induced_subgraph(g, res.witness);
        std::ofstream f(out_file);
        f << "c densest subgraph witness; original 1-based vertex ids:";
        for (int v : res.witness) f << " " << v + 1;
        f << "\n";
        write_graph(f, sub.graph);
    }
    return 0;
}

int run_degeneracy(const std::string& graph_file, const std::string& out_file) {
    Stopwatch watch;
    Graph g = load_graph(graph_file);
    DegeneracyCertificate cert = degeneracy_order(g);
    RunReport report("degeneracy");
    report.add("graph_digest", file_digest(graph_file));
    report.add("n", g.num_vertices());
    report.add("degeneracy", cert.degeneracy);
    report.add("elapsed_ms", watch.elapsed_ms());
    report.print();
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        f << "c peeling order, 1-based\n";
        for (std::size_t i = 0; i < cert.order.size(); ++i) f << (i ? " " : "") << cert.order[i] + 1;
        f << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proper-coloring reconfiguration toolkit"};
    app.require_subcommand(1);

    std::string graph_file, from_file, to_file, seq_file, expect_file, out_file;
    std::string out_coloring_file, partition_file;
    std::string mode = "auto", kind, query;
    int k = 0, d = 0, m_param = 1, n_param = 1, vertex = 1, color = 0, threads = 1;
    std::uint64_t seed = 0;
    long long budget = kDefaultStateBudget;

    auto* gen = app.add_subcommand("generate", "emit a named graph family");
    gen->add_option("kind", kind, "icosahedron|tri-grid|grid|random-degenerate")->required();
    gen->add_option("--m", m_param, "grid half-side");
    gen->add_option("--n", n_param, "vertex count");
    gen->add_option("--d", d, "degeneracy parameter");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--out", out_file, "output graph file")->required();

    auto* part = app.add_subcommand("partition", "greedy degree-bounded level partition");
    part->add_option("--graph", graph_file)->required();
    part->add_option("--d", d, "target density bound")->required();
    part->add_option("--out", out_file, "partition file (or residual witness on failure)");

    auto* tr = app.add_subcommand("transform", "recolor one proper coloring into another");
    tr->add_option("--graph", graph_file)->required();
    tr->add_option("--from", from_file)->required();
    tr->add_option("--to", to_file)->required();
    tr->add_option("--mode", mode, "linear|sparse|auto");
    tr->add_option("--k", k, "cross-check against the coloring files");
    tr->add_option("--d", d, "density bound for sparse mode");
    tr->add_option("--out", out_file, "output sequence file");

    auto* rv = app.add_subcommand("recolor-vertex", "change one vertex color via level descent");
    rv->add_option("--graph", graph_file)->required();
    rv->add_option("--partition", partition_file)->required();
    rv->add_option("--from", from_file, "input coloring")->required();
    rv->add_option("--vertex", vertex, "1-based vertex id")->required();
    rv->add_option("--out", out_file, "output sequence file");
    rv->add_option("--out-coloring", out_coloring_file);

    auto* el = app.add_subcommand("eliminate-color", "remove the top color level by level");
    el->add_option("--graph", graph_file)->required();
    el->add_option("--partition", partition_file)->required();
    el->add_option("--from", from_file, "input coloring")->required();
    el->add_option("--color", color, "dead color (default: the coloring's k)");
    el->add_option("--out", out_file, "output sequence file");
    el->add_option("--out-coloring", out_coloring_file);

    auto* ver = app.add_subcommand("verify", "replay a sequence and check every step");
    ver->add_option("--graph", graph_file)->required();
    ver->add_option("--from", from_file)->required();
    ver->add_option("--seq", seq_file)->required();
    ver->add_option("--expect", expect_file, "coloring the replay must end at");
    ver->add_option("--out", out_file, "write the final coloring");

    auto* orc = app.add_subcommand("oracle", "exhaustive small-instance ground truth");
    orc->add_option("query", query, "stats|distance|frozen")->required();
    orc->add_option("--graph", graph_file)->required();
    orc->add_option("--k", k)->required();
    orc->add_option("--from", from_file);
    orc->add_option("--to", to_file);
    orc->add_option("--budget", budget, "max enumerated proper colorings");
    orc->add_option("--threads", threads, "worker threads for diameter BFS");
    orc->add_option("--out", out_file, "listing output");

    auto* madc = app.add_subcommand("mad", "exact maximum average degree");
    madc->add_option("--graph", graph_file)->required();
    madc->add_option("--out", out_file, "densest-subgraph witness");

    auto* deg = app.add_subcommand("degeneracy", "greedy peeling order and degeneracy");
    deg->add_option("--graph", graph_file)->required();
    deg->add_option("--out", out_file, "peeling order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) return run_generate(kind, m_param, n_param, d, seed, out_file);
        if (part->parsed()) return run_partition(graph_file, d, out_file);
        if (tr->parsed()) {
            TransformArgs args;
            args.graph_file = graph_file;
            args.from_file = from_file;
            args.to_file = to_file;
            args.out_file = out_file;
            args.mode = mode;
            args.k_override = k;
            args.d_override = d;
            return run_transform(args);
        }
        if (rv->parsed()) {
            return run_recolor_vertex(graph_file, partition_file, from_file, vertex, out_file,
                                      out_coloring_file);
        }
        if (el->parsed()) {
            return run_eliminate_color(graph_file, partition_file, from_file, color, out_file,
                                       out_coloring_file);
        }
        if (ver->parsed()) return run_verify(graph_file, from_file, seq_file, expect_file, out_file);
        if (orc->parsed()) {
            return run_oracle(query, graph_file, k, from_file, to_file, budget, threads, out_file);
        }
        if (madc->parsed()) return run_mad(graph_file, out_file);
        if (deg->parsed()) return run_degeneracy(graph_file, out_file);
    } catch (const recolor::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
