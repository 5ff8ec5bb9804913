#pragma once

#include <cstddef>
#include <vector>

#include "convexdim/critical.hpp"

namespace convexdim {

/// Vertices 0..vertex_count-1; every edge has at least two vertices.
/// A graph is the special case where all edges have size 2.
struct Hypergraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> edges;
};

Hypergraph as_hypergraph(const CopointGraph& graph);
Hypergraph as_hypergraph(const CycleHypergraph& hypergraph);

struct ColoringResult {
    /// Minimum number of colors; 0 for the empty vertex set.
    int colors = 0;
    std::vector<int> coloring;
    /// False when the input was an incomplete cycle hypergraph (lower bound only).
    bool exact = true;
};

/// True iff no edge is monochromatic and all colors lie in [0, colors).
bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& coloring, int colors);

/// Exact chromatic number: DSATUR-ordered branch and bound over k = lower..,
/// with a greedy clique of the size-2 edges as the starting lower bound. The
/// witness is verified before returning.
ColoringResult chromatic_number(const Hypergraph& h);
ColoringResult chromatic_number(const CopointGraph& graph);
ColoringResult chromatic_number(const CycleHypergraph& hypergraph);

/// Exact maximum clique of a simple graph given as an adjacency matrix.
std::vector<std::size_t> maximum_clique(const std::vector<std::vector<char>>& adjacency);

}  // namespace convexdim
