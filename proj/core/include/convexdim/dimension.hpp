#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convexdim/coloring.hpp"
#include "convexdim/critical.hpp"

namespace convexdim {

/// Linear extension of the lattice that puts b before a for every given
/// pair, or nullopt when ⊆ plus those reversals has a cycle. Ties are broken
/// by smallest node id, so the result is deterministic.
std::optional<std::vector<std::size_t>> reversing_extension(const Lattice& lattice,
                                                            const std::vector<CriticalPair>& pairs);

/// Some linear extension reverses every pair in `pairs`.
bool is_reversible(const Lattice& lattice, const std::vector<CriticalPair>& pairs);

struct Realizer {
    /// Each extension lists every lattice node id once, bottom first.
    std::vector<std::vector<std::size_t>> extensions;
};

bool is_linear_extension(const Lattice& lattice, const std::vector<std::size_t>& order);

/// Null when every extension is linear, every critical pair is reversed
/// somewhere, and the intersection of the extensions is exactly ⊆.
std::optional<std::string> realizer_violation(const Lattice& lattice, const Realizer& realizer,
                                              const std::vector<CriticalPair>& pairs);

struct DimensionResult {
    /// Agreed dimension; empty when the hypergraph is incomplete.
    std::optional<int> dim;
    /// Minimum number of reversible classes partitioning the critical pairs.
    int by_partition = 1;
    /// Chromatic number of the cycle hypergraph (1 when there are no pairs).
    int by_hypergraph = 1;
    /// Chromatic number of the non-jointly-reversible pair graph.
    int pair_graph_bound = 1;
    /// Class of each critical pair in the partition witness.
    std::vector<int> classes;
    ColoringResult hypergraph_coloring;
    Realizer realizer;
};

/// Computes the dimension by a reversible-class partition search and by
/// coloring the cycle hypergraph, and throws InvariantError when the two
/// disagree on a complete hypergraph. A chain has dimension 1. The realizer
/// witness is verified before returning.
DimensionResult order_dimension(const Lattice& lattice, const std::vector<CriticalPair>& pairs,
                                const CycleHypergraph& hypergraph);

struct ChainCover {
    int cdim = 0;
    /// Copoint indices, each chain increasing by inclusion.
    std::vector<std::vector<std::size_t>> chains;
    /// Exact maximum antichain when there are at most kAntichainCheckLimit copoints.
    std::optional<std::vector<std::size_t>> max_antichain;
};

inline constexpr std::size_t kAntichainCheckLimit = 40;

/// Minimum chain cover of the copoints ordered by inclusion (bipartite
/// matching on the comparability DAG). Throws InvariantError when the cover
/// and the exact maximum antichain have different sizes.
ChainCover convex_dimension(const std::vector<Copoint>& copoints);

}  // namespace convexdim
