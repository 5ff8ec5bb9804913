#include "convexdim/analysis.hpp"

namespace convexdim {

AnalysisReport Analysis::report() const {
    AnalysisReport r;
    r.n = geometry.size();
    r.closed_sets = lattice.size();
    r.copoints = geometry.copoints().size();
    r.critical_pairs = pairs.size();
    r.atomic = atomic;
    r.two_edge_connected = two_edge_connected;
    r.dim = dimension.dim;
    r.dim_by_partition = dimension.by_partition;
    r.dim_by_hypergraph = dimension.by_hypergraph;
    r.cdim = chain_cover.cdim;
    r.b = independence.b;
    r.chi_g = graph_coloring.colors;
    if (hypergraph.complete) r.chi_h = dimension.by_hypergraph;
    r.omega_g = static_cast<int>(max_clique.size());
    r.hypergraph_complete = hypergraph.complete;
    for (const auto& e : hypergraph.edges) ++r.hyperedge_sizes[e.vertices.size()];
    return r;
}

Analysis analyze(ConvexGeometry geometry, std::optional<PointSet> points, const AnalysisOptions& options) {
    Lattice lattice = Lattice::of(geometry);
    Analysis a{.geometry = std::move(geometry), .points = std::move(points), .lattice = std::move(lattice)};
    a.atomic = is_atomic(a.geometry);
    a.two_edge_connected = is_two_edge_connected(a.geometry, a.lattice);
    a.pairs = critical_pairs(a.geometry, a.lattice);
    a.digraph = critical_digraph(a.lattice, a.pairs);
    a.hypergraph = minimal_cycles(a.digraph, options.cycle_cap);
    a.copoint_graph = copoint_graph(a.geometry);
    assert_copoint_graph_isomorphism(a.geometry, a.copoint_graph, a.pairs, a.hypergraph);
    a.graph_coloring = chromatic_number(a.copoint_graph);
    a.max_clique = maximum_clique(a.copoint_graph.adjacency);
    a.dimension = order_dimension(a.lattice, a.pairs, a.hypergraph);
    a.chain_cover = convex_dimension(a.geometry.copoints());
    a.independence = independence_number(a.geometry);
    return a;
}

Analysis analyze(const PointSet& points, const AnalysisOptions& options) {
    return analyze(from_planar(points), points, options);
}

}  // namespace convexdim
