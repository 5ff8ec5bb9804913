#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "convexdim/closure_lattice.hpp"
#include "convexdim/coloring.hpp"
#include "convexdim/critical.hpp"
#include "convexdim/dimension.hpp"

namespace convexdim {

struct AnalysisOptions {
    /// Longest cycle to enumerate; unset means complete enumeration.
    std::optional<std::size_t> cycle_cap;
};

/// Headline numbers of an analysis.
struct AnalysisReport {
    int n = 0;
    std::size_t closed_sets = 0;
    std::size_t copoints = 0;
    std::size_t critical_pairs = 0;
    bool atomic = false;
    bool two_edge_connected = false;
    std::optional<int> dim;
    int dim_by_partition = 0;
    int dim_by_hypergraph = 0;
    int cdim = 0;
    int b = 0;
    int chi_g = 0;
    std::optional<int> chi_h;
    int omega_g = 0;
    bool hypergraph_complete = true;
    std::map<std::size_t, std::size_t> hyperedge_sizes;
};

/// Everything computed for one convex geometry, witnesses included.
struct Analysis {
    ConvexGeometry geometry;
    std::optional<PointSet> points;
    Lattice lattice;
    bool atomic = false;
    bool two_edge_connected = false;
    std::vector<CriticalPair> pairs{};
    CriticalDigraph digraph{};
    CycleHypergraph hypergraph{};
    CopointGraph copoint_graph{};
    ColoringResult graph_coloring{};
    std::vector<std::size_t> max_clique{};
    DimensionResult dimension{};
    ChainCover chain_cover{};
    IndependenceResult independence{};

    [[nodiscard]] AnalysisReport report() const;
};

/// Runs the whole pipeline. Internal cross-checks that fail throw
/// InvariantError.
Analysis analyze(ConvexGeometry geometry, std::optional<PointSet> points = std::nullopt,
                 const AnalysisOptions& options = {});
Analysis analyze(const PointSet& points, const AnalysisOptions& options = {});

}  // namespace convexdim
