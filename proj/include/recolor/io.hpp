#pragma once

#include <iosfwd>
#include <string>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"
#include "recolor/partition.hpp"

namespace recolor {

// Text formats. Lines whose first character is 'c' are comments. Vertex ids
// are 1-based on disk, 0-based in memory.
//
//   graph:      p edge <n> <m>        then m lines  e <u> <v>
//   coloring:   k <k>                 then one line of n colors
//   sequence:   s <count>             then count lines  r <vertex> <from> <to>
//   partition:  t <levels> <bound>    then one line of n levels
//
// Readers throw ParseError with 1-based line/column on malformed input.

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);

RecolorSequence read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const RecolorSequence& seq);

LevelPartition read_partition(std::istream& in);
void write_partition(std::ostream& out, const LevelPartition& p);

// File variants; throw std::runtime_error when the file cannot be opened.
Graph load_graph(const std::string& path);
Coloring load_coloring(const std::string& path);
RecolorSequence load_sequence(const std::string& path);
LevelPartition load_partition(const std::string& path);
void save_graph(const std::string& path, const Graph& g);
void save_coloring(const std::string& path, const Coloring& c);
void save_sequence(const std::string& path, const RecolorSequence& seq);
void save_partition(const std::string& path, const LevelPartition& p);

}  // namespace recolor
