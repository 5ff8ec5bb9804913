#include "convexdim/critical.hpp"

#include <algorithm>
#include <set>

#include "bitrow.hpp"
#include "convexdim/errors.hpp"

namespace convexdim {

using detail::BitRow;

std::vector<NodePair> critical_pairs_definitional(const Lattice& lattice) {
    const std::size_t n = lattice.size();
    const auto& nodes = lattice.nodes();
    // above[b]: intersection of all U > B; below[a]: union of all D < A.
    // Nodes are sorted by size, so strict supersets come later and strict
    // subsets earlier. A pair needs A ⊆ above[B] and below[A] ⊆ B, and
    // incomparability rules out above[B] == B and below[A] == A.
    std::vector<std::size_t> tops;
    std::vector<ElementSet> above;
    for (std::size_t b = 0; b < n; ++b) {
        if (b == lattice.top()) continue;
        ElementSet meet = nodes[lattice.top()];
        for (std::size_t u = b + 1; u < n && meet != nodes[b]; ++u)
            if (nodes[b].proper_subset_of(nodes[u])) meet &= nodes[u];
        if (meet != nodes[b]) {
            tops.push_back(b);
            above.push_back(meet);
        }
    }
    std::vector<std::size_t> bottoms;
    std::vector<ElementSet> below;
    for (std::size_t a = 1; a < n; ++a) {
        ElementSet join;
        for (std::size_t d = a; d-- > 0 && join != nodes[a];)
            if (nodes[d].proper_subset_of(nodes[a])) join |= nodes[d];
        if (join != nodes[a]) {
            bottoms.push_back(a);
            below.push_back(join);
        }
    }
    std::vector<NodePair> out;
    for (std::size_t i = 0; i < bottoms.size(); ++i) {
        const ElementSet a = nodes[bottoms[i]];
        for (std::size_t j = 0; j < tops.size(); ++j) {
            const ElementSet b = nodes[tops[j]];
            if (a.comparable(b)) continue;
            if (a.subset_of(above[j]) && below[i].subset_of(b)) out.emplace_back(bottoms[i], tops[j]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CriticalPair> critical_pairs_from_copoints(const ConvexGeometry& geometry, const Lattice& lattice) {
    (void)lattice;
    std::vector<CriticalPair> out;
    const auto& cps = geometry.copoints();
    for (std::size_t k = 0; k < cps.size(); ++k) {
        const ElementSet a = geometry.closure_of(cps[k].attach);
        if (a.comparable(cps[k].set)) continue;
        out.push_back({*geometry.family().id_of(a), cps[k].node, cps[k].attach, k});
    }
    return out;
}

std::vector<CriticalPair> critical_pairs(const ConvexGeometry& geometry, const Lattice& lattice) {
    std::vector<CriticalPair> pairs = critical_pairs_from_copoints(geometry, lattice);
    std::vector<NodePair> via_copoints;
    for (const auto& p : pairs) via_copoints.emplace_back(p.a, p.b);
    std::sort(via_copoints.begin(), via_copoints.end());
    const std::vector<NodePair> direct = critical_pairs_definitional(lattice);
    if (via_copoints != direct) {
        const GroundSet& g = geometry.ground();
        std::string msg = "critical pairs from copoints (" + std::to_string(via_copoints.size()) +
                          ") differ from the direct lattice scan (" + std::to_string(direct.size()) + ")";
        std::vector<NodePair> diff;
        std::set_symmetric_difference(via_copoints.begin(), via_copoints.end(), direct.begin(), direct.end(),
                                      std::back_inserter(diff));
        if (!diff.empty())
            msg += ", e.g. (" + g.format(lattice[diff[0].first]) + ", " + g.format(lattice[diff[0].second]) + ")";
        throw InvariantError(msg);
    }
    return pairs;
}

// ---------------------------------------------------------------------------

CriticalDigraph::CriticalDigraph(std::vector<CriticalPair> pairs, std::vector<std::vector<char>> adjacency)
    : pairs_(std::move(pairs)), adjacency_(std::move(adjacency)), out_(pairs_.size()) {
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        for (std::size_t j = 0; j < pairs_.size(); ++j)
            if (adjacency_[i][j]) out_[i].push_back(j);
}

std::size_t CriticalDigraph::edge_count() const {
    std::size_t m = 0;
    for (const auto& o : out_) m += o.size();
    return m;
}

CriticalDigraph critical_digraph(const Lattice& lattice, const std::vector<CriticalPair>& pairs) {
    const std::size_t m = pairs.size();
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const ElementSet b = lattice[pairs[i].b];
        for (std::size_t j = 0; j < m; ++j) {
            const bool by_order = lattice[pairs[j].a].subset_of(b);
            const bool by_attach = b.contains(pairs[j].attach);
            if (by_order != by_attach) throw InvariantError("critical digraph edge disagrees with the attach-point form");
            if (i == j && by_order) throw InvariantError("critical digraph has a self-loop");
            adj[i][j] = by_order ? 1 : 0;
        }
    }
    return CriticalDigraph(pairs, std::move(adj));
}

// ---------------------------------------------------------------------------

std::size_t CycleHypergraph::count_of_size(std::size_t size) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [&](const Hyperedge& e) { return e.vertices.size() == size; }));
}

std::size_t CycleHypergraph::max_edge_size() const {
    std::size_t m = 0;
    for (const auto& e : edges) m = std::max(m, e.vertices.size());
    return m;
}

CycleHypergraph minimal_cycles(const CriticalDigraph& digraph, std::optional<std::size_t> max_len) {
    const std::size_t n = digraph.size();
    std::vector<BitRow> out(n, BitRow(n)), in(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : digraph.successors(i)) {
            out[i].set(j);
            in[j].set(i);
        }

    CycleHypergraph h;
    h.vertex_count = n;
    h.complete = !max_len || *max_len >= n;
    const std::size_t cap = max_len ? *max_len : n;

    std::vector<std::size_t> path;
    // For a path v0..vk, a new vertex w must avoid out(v0..v(k-1)) and
    // in(v1..vk); edges into v0 close the cycle.
    auto extend = [&](auto&& self, const BitRow& forbid_out, const BitRow& forbid_in, BitRow& on_path) -> void {
        const std::size_t start = path.front();
        const std::size_t last = path.back();
        BitRow candidates = out[last];
        candidates.subtract(forbid_out);
        candidates.subtract(forbid_in);
        candidates.subtract(on_path);
        candidates.for_each([&](std::size_t w) {
            if (w <= start) return;
            if (out[w].test(start)) {
                Hyperedge e;
                e.cycle = path;
                e.cycle.push_back(w);
                e.vertices = e.cycle;
                std::sort(e.vertices.begin(), e.vertices.end());
                h.edges.push_back(std::move(e));
                return;
            }
            if (path.size() + 1 >= cap) return;
            BitRow next_out = forbid_out;
            next_out |= out[last];
            BitRow next_in = forbid_in;
            next_in |= in[w];
            path.push_back(w);
            on_path.set(w);
            self(self, next_out, next_in, on_path);
            on_path.reset(w);
            path.pop_back();
        });
    };

    for (std::size_t s = 0; s < n; ++s) {
        if (cap < 2) break;
        path.assign(1, s);
        BitRow on_path(n);
        on_path.set(s);
        extend(extend, BitRow(n), BitRow(n), on_path);
    }
    return h;
}

// ---------------------------------------------------------------------------

CopointGraph copoint_graph(const ConvexGeometry& geometry) {
    CopointGraph g;
    g.vertices = geometry.copoints();
    const std::size_t m = g.vertices.size();
    g.adjacency.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (g.vertices[j].set.contains(g.vertices[i].attach) && g.vertices[i].set.contains(g.vertices[j].attach)) {
                g.adjacency[i][j] = g.adjacency[j][i] = 1;
                g.edges.emplace_back(i, j);
            }
        }
    }
    return g;
}

std::optional<std::string> copoint_graph_isomorphism_violation(const CopointGraph& graph,
                                                               const std::vector<CriticalPair>& pairs,
                                                               const CycleHypergraph& hypergraph) {
    const std::size_t m = graph.vertices.size();
    if (pairs.size() != m)
        return "vertex counts differ: " + std::to_string(m) + " copoints vs " + std::to_string(pairs.size()) +
               " critical pairs";
    std::vector<std::size_t> pair_of_copoint(m, m);
    for (std::size_t p = 0; p < pairs.size(); ++p) pair_of_copoint[pairs[p].copoint] = p;
    std::set<std::pair<std::size_t, std::size_t>> mapped;
    for (auto [i, j] : graph.edges) {
        auto a = pair_of_copoint[i];
        auto b = pair_of_copoint[j];
        if (a == m || b == m) return "copoint without a critical pair";
        mapped.emplace(std::min(a, b), std::max(a, b));
    }
    std::set<std::pair<std::size_t, std::size_t>> two_cycles;
    for (const auto& e : hypergraph.edges)
        if (e.vertices.size() == 2) two_cycles.emplace(e.vertices[0], e.vertices[1]);
    if (mapped != two_cycles)
        return "copoint graph has " + std::to_string(mapped.size()) + " edges but the hypergraph has " +
               std::to_string(two_cycles.size()) + " hyperedges of size 2 (or they differ)";
    return std::nullopt;
}

void assert_copoint_graph_isomorphism(const ConvexGeometry& geometry, const CopointGraph& graph,
                                      const std::vector<CriticalPair>& pairs, const CycleHypergraph& hypergraph) {
    if (!copoints_incomparable_with_attach_closure(geometry)) return;
    if (auto v = copoint_graph_isomorphism_violation(graph, pairs, hypergraph))
        throw InvariantError("copoint graph is not isomorphic to the 2-cycle graph: " + *v);
}

}  // namespace convexdim
