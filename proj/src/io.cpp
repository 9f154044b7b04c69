#include "recolor/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

// Reads data lines (skipping blanks and 'c' comments) and tokenizes them.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Returns false at end of input.
    bool next_line(std::vector<Token>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            tokens.clear();
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                if (i > start) {
                    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
                }
            }
            if (tokens.empty()) continue;
            if (tokens[0].text[0] == 'c' && tokens[0].text.size() == 1) continue;
            return true;
        }
        ++line_no_;
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

long long parse_int(const Token& tok, int line, long long lo, long long hi,
                    const char* what) {
    long long value = 0;
    std::size_t pos = 0;
    try {
        value = std::stoll(tok.text, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line,
                         tok.column);
    }
    if (pos != tok.text.size()) {
        throw ParseError(std::string("expected ") + what + ", got '" + tok.text + "'", line,
                         tok.column);
    }
    if (value < lo || value > hi) {
        throw ParseError(std::string(what) + " " + tok.text + " out of range [" +
                             std::to_string(lo) + "," + std::to_string(hi) + "]",
                         line, tok.column);
    }
    return value;
}

void expect_token_count(const std::vector<Token>& tokens, std::size_t count, int line,
                        const char* what) {
    if (tokens.size() != count) {
        int col = tokens.size() > count ? tokens[count].column : 1;
        throw ParseError(std::string("expected ") + what, line, col);
    }
}

}  // namespace

Graph read_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> tok;
    if (!reader.next_line(tok)) throw ParseError("missing 'p edge <n> <m>' header", 1, 1);
    if (tok[0].text != "p" || tok.size() < 2 || tok[1].text != "edge") {
        throw ParseError("expected 'p edge <n> <m>' header", reader.line_no(), tok[0].column);
    }
    expect_token_count(tok, 4, reader.line_no(), "'p edge <n> <m>'");
    int n = static_cast<int>(parse_int(tok[2], reader.line_no(), 0, 1 << 28, "vertex count"));
    long long m = parse_int(tok[3], reader.line_no(), 0, 1LL << 40, "edge count");

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next_line(tok)) {
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(i),
                             reader.line_no(), 1);
        }
        if (tok[0].text != "e") {
            throw ParseError("expected 'e <u> <v>'", reader.line_no(), tok[0].column);
        }
        expect_token_count(tok, 3, reader.line_no(), "'e <u> <v>'");
        int u = static_cast<int>(parse_int(tok[1], reader.line_no(), 1, n, "endpoint"));
        int v = static_cast<int>(parse_int(tok[2], reader.line_no(), 1, n, "endpoint"));
        edges.push_back({u - 1, v - 1});
    }
    if (reader.next_line(tok)) {
        throw ParseError("unexpected content after " + std::to_string(m) + " edges",
                         reader.line_no(), tok[0].column);
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), reader.line_no(), 1);
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

Coloring read_coloring(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> tok;
    if (!reader.next_line(tok)) throw ParseError("missing 'k <k>' header", 1, 1);
    if (tok[0].text != "k") throw ParseError("expected 'k <k>' header", reader.line_no(), tok[0].column);
    expect_token_count(tok, 2, reader.line_no(), "'k <k>'");
    int k = static_cast<int>(parse_int(tok[1], reader.line_no(), 1, 1 << 28, "color count"));

    Coloring c;
    c.k = k;
    if (reader.next_line(tok)) {
        for (const Token& t : tok) {
            c.colors.push_back(
                static_cast<int>(parse_int(t, reader.line_no(), 1, k, "color")));
        }
        if (reader.next_line(tok)) {
            throw ParseError("unexpected content after color line", reader.line_no(),
                             tok[0].column);
        }
    }
    return c;
}

void write_coloring(std::ostream& out, const Coloring& c) {
    out << "k " << c.k << "\n";
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        out << (v ? " " : "") << c.colors[v];
    }
    out << "\n";
}

RecolorSequence read_sequence(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> tok;
    if (!reader.next_line(tok)) throw ParseError("missing 's <count>' header", 1, 1);
    if (tok[0].text != "s") {
        throw ParseError("expected 's <count>' header", reader.line_no(), tok[0].column);
    }
    expect_token_count(tok, 2, reader.line_no(), "'s <count>'");
    long long count = parse_int(tok[1], reader.line_no(), 0, 1LL << 40, "step count");

    RecolorSequence seq;
    for (long long i = 0; i < count; ++i) {
        if (!reader.next_line(tok)) {
            throw ParseError("expected " + std::to_string(count) + " step lines, got " +
                                 std::to_string(i),
                             reader.line_no(), 1);
        }
        if (tok[0].text != "r") {
            throw ParseError("expected 'r <vertex> <from> <to>'", reader.line_no(), tok[0].column);
        }
        expect_token_count(tok, 4, reader.line_no(), "'r <vertex> <from> <to>'");
        int v = static_cast<int>(parse_int(tok[1], reader.line_no(), 1, 1 << 28, "vertex"));
        int from = static_cast<int>(parse_int(tok[2], reader.line_no(), 1, 1 << 28, "color"));
        int to = static_cast<int>(parse_int(tok[3], reader.line_no(), 1, 1 << 28, "color"));
        seq.push_back({v - 1, from, to});
    }
    if (reader.next_line(tok)) {
        throw ParseError("unexpected content after " + std::to_string(count) + " steps",
                         reader.line_no(), tok[0].column);
    }
    return seq;
}

void write_sequence(std::ostream& out, const RecolorSequence& seq) {
    out << "s " << seq.size() << "\n";
    for (const RecolorStep& s : seq) {
        out << "r " << s.vertex + 1 << " " << s.from_color << " " << s.to_color << "\n";
    }
}

LevelPartition read_partition(std::istream& in) {
    LineReader reader(in);
    std::vector<Token> tok;
    if (!reader.next_line(tok)) throw ParseError("missing 't <levels> <bound>' header", 1, 1);
    if (tok[0].text != "t") {
        throw ParseError("expected 't <levels> <bound>' header", reader.line_no(), tok[0].column);
    }
    expect_token_count(tok, 3, reader.line_no(), "'t <levels> <degree_bound>'");
    int t = static_cast<int>(parse_int(tok[1], reader.line_no(), 0, 1 << 28, "level count"));
    int bound = static_cast<int>(parse_int(tok[2], reader.line_no(), 0, 1 << 28, "degree bound"));

    std::vector<int> levels;
    int levels_line = reader.line_no();
    if (reader.next_line(tok)) {
        levels_line = reader.line_no();
        for (const Token& tk : tok) {
            levels.push_back(static_cast<int>(parse_int(tk, reader.line_no(), 1, t, "level")));
        }
        if (reader.next_line(tok)) {
            throw ParseError("unexpected content after level line", reader.line_no(),
                             tok[0].column);
        }
    }
    LevelPartition p;
    try {
        p = LevelPartition::make(std::move(levels), bound);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), levels_line, 1);
    }
    if (p.t != t) {
        throw ParseError("header declares " + std::to_string(t) + " levels but data uses " +
                             std::to_string(p.t),
                         levels_line, 1);
    }
    return p;
}

void write_partition(std::ostream& out, const LevelPartition& p) {
    out << "t " << p.t << " " << p.degree_bound << "\n";
    for (std::size_t v = 0; v < p.levels.size(); ++v) {
        out << (v ? " " : "") << p.levels[v];
    }
    out << "\n";
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    return f;
}

}  // namespace

Graph load_graph(const std::string& path) {
    auto f = open_in(path);
    return read_graph(f);
}
Coloring load_coloring(const std::string& path) {
    auto f = open_in(path);
    return read_coloring(f);
}
RecolorSequence load_sequence(const std::string& path) {
    auto f = open_in(path);
    return read_sequence(f);
}
LevelPartition load_partition(const std::string& path) {
    auto f = open_in(path);
    return read_partition(f);
}
void save_graph(const std::string& path, const Graph& g) {
    auto f = open_out(path);
    write_graph(f, g);
}
void save_coloring(const std::string& path, const Coloring& c) {
    auto f = open_out(path);
    write_coloring(f, c);
}
void save_sequence(const std::string& path, const RecolorSequence& seq) {
    auto f = open_out(path);
    write_sequence(f, seq);
}
void save_partition(const std::string& path, const LevelPartition& p) {
    auto f = open_out(path);
    write_partition(f, p);
}

}  // namespace recolor
