#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

// Total assignment of colors 1..k to vertices. k is stored explicitly so a
// coloring that happens to use fewer colors stays comparable inside the
// k-recoloring graph. Properness is a predicate, not a storage invariant.
struct Coloring {
    int k = 0;
    std::vector<int> colors;  // colors[v] in 1..k

    int color(int v) const { return colors[v]; }
};

// One recoloring move; from_color != to_color.
struct RecolorStep {
    int vertex;
    int from_color;
    int to_color;

    friend bool operator==(const RecolorStep&, const RecolorStep&) = default;
};

using RecolorSequence = std::vector<RecolorStep>;

// True iff no edge is monochromatic. Throws std::invalid_argument if the
// coloring does not match the graph (size mismatch, color out of 1..k).
bool is_proper(const Graph& g, const Coloring& c);

// True iff every vertex sees every other color 1..k in its neighborhood,
// i.e. c is an isolated vertex of the k-recoloring graph. Requires a proper
// input coloring (std::invalid_argument otherwise).
bool is_frozen(const Graph& g, const Coloring& c);

struct VerifyError {
    std::size_t step_index;
    std::string reason;
};

struct VerifyResult {
    std::optional<Coloring> final_coloring;  // set iff the replay succeeded
    std::optional<VerifyError> error;

    bool ok() const { return final_coloring.has_value(); }
};

// Replays `seq` from `start`, checking at every step that the color range,
// the recorded from_color, and properness all hold. On failure reports the
// first offending step. `start` itself must be proper (std::invalid_argument).
VerifyResult verify_sequence(const Graph& g, const Coloring& start, const RecolorSequence& seq);

// Applies one step without validity checks; helper for replay loops.
inline void apply_step(Coloring& c, const RecolorStep& s) { c.colors[s.vertex] = s.to_color; }

// Reverses a sequence: steps inverted and in opposite order.
RecolorSequence reversed_sequence(const RecolorSequence& seq);

}  // namespace recolor
