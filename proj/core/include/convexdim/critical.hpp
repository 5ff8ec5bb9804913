#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convexdim/closure_lattice.hpp"

namespace convexdim {

/// Critical pair (a, b) of the closed-set lattice: a = ℓ(attach), b the
/// copoint attached to `attach`. `a` and `b` are lattice node ids; `copoint`
/// indexes ConvexGeometry::copoints().
struct CriticalPair {
    std::size_t a = 0;
    std::size_t b = 0;
    int attach = 0;
    std::size_t copoint = 0;
    friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

using NodePair = std::pair<std::size_t, std::size_t>;

/// Incomparable ordered pairs (A, B) such that every U > B has U > A and
/// every D < A has D < B, found by scanning the lattice directly. Sorted.
std::vector<NodePair> critical_pairs_definitional(const Lattice& lattice);

/// Pairs read off the copoints: (ℓ(α(B)), B) for each copoint B incomparable
/// with ℓ(α(B)), in copoint order.
std::vector<CriticalPair> critical_pairs_from_copoints(const ConvexGeometry& geometry, const Lattice& lattice);

/// critical_pairs_from_copoints(), asserted equal as a set to the
/// definitional scan (InvariantError otherwise).
std::vector<CriticalPair> critical_pairs(const ConvexGeometry& geometry, const Lattice& lattice);

/// Edge i -> j whenever a(j) ⊆ b(i).
class CriticalDigraph {
  public:
    CriticalDigraph() = default;
    CriticalDigraph(std::vector<CriticalPair> pairs, std::vector<std::vector<char>> adjacency);

    [[nodiscard]] std::size_t size() const { return pairs_.size(); }
    [[nodiscard]] const std::vector<CriticalPair>& pairs() const { return pairs_; }
    [[nodiscard]] bool edge(std::size_t i, std::size_t j) const { return adjacency_[i][j] != 0; }
    [[nodiscard]] const std::vector<std::size_t>& successors(std::size_t i) const { return out_[i]; }
    [[nodiscard]] std::size_t edge_count() const;

  private:
    std::vector<CriticalPair> pairs_;
    std::vector<std::vector<char>> adjacency_;
    std::vector<std::vector<std::size_t>> out_;
};

/// Also asserts a(j) ⊆ b(i) <=> α(j) ∈ b(i), which holds because b(i) is closed.
CriticalDigraph critical_digraph(const Lattice& lattice, const std::vector<CriticalPair>& pairs);

struct Hyperedge {
    /// One chord-free directed cycle, rotated to start at its smallest id.
    std::vector<std::size_t> cycle;
    /// Sorted vertex set.
    std::vector<std::size_t> vertices;
};

/// Hyperedges are the chord-free directed cycles of the critical digraph.
struct CycleHypergraph {
    std::size_t vertex_count = 0;
    std::vector<Hyperedge> edges;
    /// False when a length cap may have hidden longer cycles.
    bool complete = true;

    [[nodiscard]] std::size_t count_of_size(std::size_t size) const;
    [[nodiscard]] std::size_t max_edge_size() const;
};

/// All chord-free cycles (no edge A_i -> A_j for cyclically non-consecutive
/// j), length >= 2, deduplicated by vertex set, in discovery order from the
/// smallest start vertex.
CycleHypergraph minimal_cycles(const CriticalDigraph& digraph, std::optional<std::size_t> max_len = std::nullopt);

/// Copoints adjacent when each contains the other's attach element.
struct CopointGraph {
    std::vector<Copoint> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<char>> adjacency;

    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i][j] != 0; }
};

CopointGraph copoint_graph(const ConvexGeometry& geometry);

/// Null when the copoint graph maps onto the size-2 hyperedges via
/// copoint -> (ℓ(α), copoint); otherwise a description of the first mismatch.
std::optional<std::string> copoint_graph_isomorphism_violation(const CopointGraph& graph,
                                                               const std::vector<CriticalPair>& pairs,
                                                               const CycleHypergraph& hypergraph);

/// Throws InvariantError when the geometry is 2-edge-connected and the
/// isomorphism check above fails.
void assert_copoint_graph_isomorphism(const ConvexGeometry& geometry, const CopointGraph& graph,
                                      const std::vector<CriticalPair>& pairs, const CycleHypergraph& hypergraph);

}  // namespace convexdim
