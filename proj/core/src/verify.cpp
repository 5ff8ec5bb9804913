#include "convexdim/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "convexdim/composition.hpp"
#include "convexdim/errors.hpp"

namespace convexdim {

const char* to_string(LawStatus status) {
    switch (status) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "FAIL";
        case LawStatus::Skipped: return "skipped";
    }
    return "?";
}

bool all_passed(const std::vector<LawResult>& laws) {
    return std::none_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.status == LawStatus::Fail; });
}

namespace {

using Check = std::function<std::optional<std::string>()>;

class Suite {
  public:
    void run(std::string law, bool applicable, std::string skip_reason, const Check& check) {
        if (!applicable) {
            out_.push_back({std::move(law), LawStatus::Skipped, std::move(skip_reason)});
            return;
        }
        std::optional<std::string> failure;
        try {
            failure = check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        out_.push_back({std::move(law), failure ? LawStatus::Fail : LawStatus::Pass, failure.value_or("")});
    }
    std::vector<LawResult> take() { return std::move(out_); }

  private:
    std::vector<LawResult> out_;
};

std::vector<ElementSet> sample_subsets(int n) {
    std::vector<ElementSet> out;
    if (n <= 10) {
        for (std::uint32_t m = 0; m < (1U << n); ++m) out.emplace_back(m);
        return out;
    }
    std::mt19937_64 rng(0x5eedULL);
    for (int i = 0; i < 4096; ++i) out.emplace_back(static_cast<std::uint32_t>(rng()) & ElementSet::full(n).bits());
    return out;
}

}  // namespace

std::vector<LawResult> verify_suite(const Analysis& a) {
    Suite suite;
    const ConvexGeometry& g = a.geometry;
    const GroundSet& ground = g.ground();
    const int n = g.size();
    const auto& cps = g.copoints();
    const bool planar = a.points.has_value();
    const bool planar_gp = planar && is_general_position(*a.points);
    const bool has_tree = planar && a.points->tree().has_value();
    const bool dim_known = a.dimension.dim.has_value();

    suite.run("anti-exchange", true, "", [&]() -> std::optional<std::string> {
        const auto r = is_anti_exchange(g.family());
        if (r.holds) return std::nullopt;
        return "C = " + ground.format(r.witness->closed) + ", p = " + ground.label(r.witness->p) +
               ", q = " + ground.label(r.witness->q);
    });

    suite.run("closure-axioms", true, "", [&]() -> std::optional<std::string> {
        std::optional<OrientationTable> table;
        if (planar) table.emplace(*a.points);
        for (ElementSet s : sample_subsets(n)) {
            const ElementSet c = g.closure(s);
            if (table && table->closure(s) != c)
                return "planar closure of " + ground.format(s) + " differs from the lattice closure";
            if (!s.subset_of(c)) return "not extensive at " + ground.format(s);
            if (g.closure(c) != c) return "not idempotent at " + ground.format(s);
            for (int e = 0; e < n; ++e)
                if (!s.contains(e) && !c.subset_of(g.closure(s.with(e))))
                    return "not monotone at " + ground.format(s) + " + " + ground.label(e);
        }
        return std::nullopt;
    });

    suite.run("lattice-covers-add-one-element", true, "", [&]() -> std::optional<std::string> {
        for (std::size_t v = 0; v < a.lattice.size(); ++v)
            for (std::size_t w : a.lattice.up(v))
                if (a.lattice[w].size() != a.lattice[v].size() + 1 || !a.lattice[v].subset_of(a.lattice[w]))
                    return "cover " + ground.format(a.lattice[v]) + " < " + ground.format(a.lattice[w]);
        return std::nullopt;
    });

    suite.run("copoints-are-meet-irreducible", true, "", [&]() -> std::optional<std::string> {
        std::vector<ElementSet> by_cover, by_copoint;
        for (std::size_t v = 0; v < a.lattice.size(); ++v)
            if (a.lattice.up(v).size() == 1) by_cover.push_back(a.lattice[v]);
        for (const auto& c : cps) by_copoint.push_back(c.set);
        const auto& by_meet = g.family().meet_irreducibles();
        if (by_cover != by_copoint) return "single-upper-cover nodes differ from copoints";
        if (by_meet != by_copoint) return "meet-irreducibles differ from copoints";
        return std::nullopt;
    });

    suite.run("planar-copoints-match-definition", planar_gp && n >= 2, "needs a planar set in general position",
              [&]() -> std::optional<std::string> {
                  std::vector<PlanarCopoint> expected;
                  for (const auto& c : cps) expected.push_back({c.set, c.attach});
                  const auto got = planar_copoints(*a.points);
                  if (got != expected)
                      return "rotating-line copoints (" + std::to_string(got.size()) + ") differ from lattice copoints (" +
                             std::to_string(expected.size()) + ")";
                  return std::nullopt;
              });

    suite.run("critical-pairs-are-attached-copoints", true, "", [&]() -> std::optional<std::string> {
        std::vector<NodePair> from_copoints;
        for (const auto& p : a.pairs) from_copoints.emplace_back(p.a, p.b);
        std::sort(from_copoints.begin(), from_copoints.end());
        if (from_copoints != critical_pairs_definitional(a.lattice))
            return "copoint-derived critical pairs differ from the direct scan";
        return std::nullopt;
    });

    suite.run("two-edge-connectivity-routes-agree", true, "", [&]() -> std::optional<std::string> {
        const bool bridges = hasse_has_bridge(a.lattice);
        const bool incomparable = copoints_incomparable_with_attach_closure(g);
        if (bridges == incomparable)
            return std::string("bridge search and copoint test disagree (bridge: ") + (bridges ? "yes" : "no") + ")";
        return std::nullopt;
    });

    suite.run("atomic-critical-pairs", a.atomic && n > 1, "needs an atomic geometry with |X| > 1",
              [&]() -> std::optional<std::string> {
                  if (!a.two_edge_connected) return "atomic geometry is not 2-edge-connected";
                  if (a.pairs.size() != cps.size()) return "critical pair count differs from copoint count";
                  for (const auto& p : a.pairs)
                      if (a.lattice[p.a] != ElementSet::single(p.attach))
                          return "pair lower side is not the attach point " + ground.label(p.attach);
                  return std::nullopt;
              });

    suite.run("copoint-graph-isomorphic-to-2-cycles", a.two_edge_connected, "needs a 2-edge-connected geometry",
              [&]() { return copoint_graph_isomorphism_violation(a.copoint_graph, a.pairs, a.hypergraph); });

    suite.run("dimension-equals-hypergraph-chromatic-number", dim_known && !a.pairs.empty(),
              a.pairs.empty() ? "no critical pairs" : "cycle enumeration incomplete", [&]() -> std::optional<std::string> {
                  const auto& d = a.dimension;
                  if (d.by_partition != d.by_hypergraph)
                      return "partition " + std::to_string(d.by_partition) + " vs hypergraph " +
                             std::to_string(d.by_hypergraph);
                  if (d.by_hypergraph < d.pair_graph_bound) return "chi(H) below chi of the 2-cycle graph";
                  if (a.two_edge_connected && d.by_hypergraph < a.graph_coloring.colors)
                      return "chi(H) below chi(G) on a 2-edge-connected geometry";
                  return std::nullopt;
              });

    suite.run("realizer", true, "", [&]() { return realizer_violation(a.lattice, a.dimension.realizer, a.pairs); });

    const ElementSet extreme = extreme_points(g);
    suite.run("minimal-cycle-observations", true, "", [&]() -> std::optional<std::string> {
        for (const auto& e : a.hypergraph.edges) {
            const std::size_t l = e.cycle.size();
            if (l < 2) return "hyperedge of size " + std::to_string(l);
            for (std::size_t i = 0; i < l; ++i) {
                const auto& pi = a.pairs[e.cycle[i]];
                if (!a.digraph.edge(e.cycle[i], e.cycle[(i + 1) % l])) return "cycle misses a consecutive edge";
                if (l == 2) continue;
                if (extreme.contains(pi.attach)) return "attach point " + ground.label(pi.attach) + " is extreme";
                for (std::size_t j = 0; j < l; ++j) {
                    if (i == j) continue;
                    const auto& pj = a.pairs[e.cycle[j]];
                    if (pi.attach == pj.attach) return "repeated attach point " + ground.label(pi.attach);
                    if (a.lattice[pi.b].subset_of(a.lattice[pj.b])) return "nested copoints in a cycle";
                    if (j != (i + 1) % l && a.lattice[pi.b].contains(pj.attach))
                        return "chord: " + ground.label(pj.attach) + " in " + ground.format(a.lattice[pi.b]);
                }
            }
        }
        return std::nullopt;
    });

    suite.run("cycle-attach-points-in-convex-position", planar_gp, "needs a planar set in general position",
              [&]() -> std::optional<std::string> {
                  for (const auto& e : a.hypergraph.edges) {
                      if (e.cycle.size() < 3) continue;
                      ElementSet attach;
                      for (auto v : e.cycle) attach = attach.with(a.pairs[v].attach);
                      if (static_cast<std::size_t>(attach.size()) != e.cycle.size() || !is_independent(g, attach))
                          return "attach points " + ground.format(attach) + " are not the vertices of a convex polygon";
                  }
                  return std::nullopt;
              });

    suite.run("dimension-inequalities", dim_known, "dimension unknown", [&]() -> std::optional<std::string> {
        const int dim = *a.dimension.dim;
        if (!(a.chain_cover.cdim >= dim && dim >= a.independence.b))
            return "cdim " + std::to_string(a.chain_cover.cdim) + ", dim " + std::to_string(dim) + ", b " +
                   std::to_string(a.independence.b);
        return std::nullopt;
    });

    suite.run("clique-number-equals-independence-number", true, "", [&]() -> std::optional<std::string> {
        if (static_cast<int>(a.max_clique.size()) != a.independence.b)
            return "omega(G) = " + std::to_string(a.max_clique.size()) + ", b = " + std::to_string(a.independence.b);
        return std::nullopt;
    });

    suite.run("chain-cover-equals-max-antichain", a.chain_cover.max_antichain.has_value(),
              "more copoints than the antichain search limit", [&]() -> std::optional<std::string> {
                  if (a.chain_cover.max_antichain->size() != a.chain_cover.chains.size())
                      return "chain cover and antichain sizes differ";
                  return std::nullopt;
              });

    suite.run("size-bound-from-dimension", planar_gp && dim_known, "needs a planar set in general position",
              [&]() -> std::optional<std::string> {
                  const int dim = *a.dimension.dim;
                  if (dim - 1 < 31 && n > (1 << (dim - 1)))
                      return std::to_string(n) + " points exceed 2^(dim-1) = " + std::to_string(1 << (dim - 1));
                  return std::nullopt;
              });

    // Composition laws.
    const std::string no_tree = "needs a composition tree";
    std::vector<const CompositionTree*> leaves, internal;
    if (has_tree) {
        leaves = a.points->tree()->leaves();
        internal = a.points->tree()->internal_nodes();
    }
    auto set_of = [](const std::vector<int>& idx) {
        ElementSet s;
        for (int i : idx) s = s.with(i);
        return s;
    };

    suite.run("composition-conditions", has_tree, no_tree, [&]() { return composition_condition_violation(*a.points); });

    suite.run("circular-sequence-blocks", has_tree && planar_gp, no_tree + " in general position",
              [&]() { return block_structure_violation(*a.points); });

    suite.run("sibling-block-containment", has_tree, no_tree, [&]() -> std::optional<std::string> {
        for (const CompositionTree* node : internal) {
            const ElementSet left = set_of(node->left().indices());
            const ElementSet right = set_of(node->right().indices());
            for (const auto& c : cps) {
                for (auto [own, other] : {std::pair{left, right}, std::pair{right, left}}) {
                    if (own.contains(c.attach) && !(c.set & other).empty() && !other.subset_of(c.set))
                        return "copoint " + ground.format(c.set) + "@" + ground.label(c.attach) + " meets block " +
                               ground.format(other) + " without containing it";
                }
            }
        }
        return std::nullopt;
    });

    suite.run("leaf-block-containment", has_tree, no_tree, [&]() -> std::optional<std::string> {
        for (const auto& c : cps) {
            for (const CompositionTree* leaf : leaves) {
                const ElementSet block = set_of(leaf->indices());
                if (block.contains(c.attach)) continue;
                if (!(c.set & block).empty() && !block.subset_of(c.set))
                    return "copoint " + ground.format(c.set) + "@" + ground.label(c.attach) + " meets leaf " +
                           ground.format(block) + " without containing it";
            }
        }
        return std::nullopt;
    });

    suite.run("large-hyperedges-in-one-leaf", has_tree, no_tree, [&]() -> std::optional<std::string> {
        for (const auto& e : a.hypergraph.edges) {
            if (e.vertices.size() <= 2) continue;
            ElementSet attach;
            for (auto v : e.vertices) attach = attach.with(a.pairs[v].attach);
            const bool inside = std::any_of(leaves.begin(), leaves.end(),
                                            [&](const CompositionTree* l) { return attach.subset_of(set_of(l->indices())); });
            if (!inside) return "hyperedge attach points " + ground.format(attach) + " span several leaves";
        }
        return std::nullopt;
    });

    const bool singleton_leaves =
        has_tree && std::all_of(leaves.begin(), leaves.end(), [](const CompositionTree* l) { return l->indices().size() == 1; });
    suite.run("singleton-composition-has-no-large-hyperedges", singleton_leaves, "needs a composition of singletons",
              [&]() -> std::optional<std::string> {
                  if (!a.hypergraph.complete) return "cycle enumeration incomplete";
                  const std::size_t big = a.hypergraph.edges.size() - a.hypergraph.count_of_size(2);
                  if (big > 0) return std::to_string(big) + " hyperedges of size > 2";
                  return std::nullopt;
              });

    return suite.take();
}

}  // namespace convexdim
