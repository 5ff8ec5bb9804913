#include "convexdim/dimension.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "bitrow.hpp"
#include "convexdim/errors.hpp"

namespace convexdim {

using detail::BitRow;

std::optional<std::vector<std::size_t>> reversing_extension(const Lattice& lattice,
                                                            const std::vector<CriticalPair>& pairs) {
    const std::size_t n = lattice.size();
    std::vector<std::vector<std::size_t>> extra(n);
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : lattice.up(v)) ++indegree[w];
    for (const auto& p : pairs) {
        extra[p.b].push_back(p.a);
        ++indegree[p.a];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        const std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (const std::vector<std::size_t>* targets : {&lattice.up(v), &std::as_const(extra[v])})
            for (std::size_t w : *targets)
                if (--indegree[w] == 0) ready.push(w);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

bool is_reversible(const Lattice& lattice, const std::vector<CriticalPair>& pairs) {
    return reversing_extension(lattice, pairs).has_value();
}

bool is_linear_extension(const Lattice& lattice, const std::vector<std::size_t>& order) {
    const std::size_t n = lattice.size();
    if (order.size() != n) return false;
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || pos[order[i]] != n) return false;
        pos[order[i]] = i;
    }
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : lattice.up(v))
            if (pos[v] > pos[w]) return false;
    return true;
}

std::optional<std::string> realizer_violation(const Lattice& lattice, const Realizer& realizer,
                                              const std::vector<CriticalPair>& pairs) {
    const std::size_t n = lattice.size();
    if (realizer.extensions.empty()) return "realizer is empty";
    std::vector<std::vector<std::size_t>> pos;
    for (std::size_t e = 0; e < realizer.extensions.size(); ++e) {
        if (!is_linear_extension(lattice, realizer.extensions[e]))
            return "extension " + std::to_string(e) + " is not a linear extension";
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[realizer.extensions[e][i]] = i;
        pos.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const bool reversed = std::any_of(pos.begin(), pos.end(), [&](const auto& p) { return p[pairs[k].b] < p[pairs[k].a]; });
        if (!reversed) return "critical pair " + std::to_string(k) + " is never reversed";
    }
    const auto& nodes = lattice.nodes();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            if (nodes[x].comparable(nodes[y])) continue;
            bool x_first = false;
            bool y_first = false;
            for (const auto& p : pos) {
                (p[x] < p[y] ? x_first : y_first) = true;
                if (x_first && y_first) break;
            }
            if (!x_first || !y_first)
                return "incomparable nodes " + std::to_string(x) + " and " + std::to_string(y) +
                       " are ordered the same way in every extension";
        }
    }
    return std::nullopt;
}

namespace {

/// Partition of critical pairs into the fewest classes whose reversals can
/// all be realized by one linear extension. succ[i] = {j : a_i ⊆ b_j}; a
/// class is reversible iff that relation restricted to it is acyclic, since
/// every cycle of ⊆ plus the reversals b -> a alternates between the two.
class PartitionSearch {
  public:
    PartitionSearch(const Lattice& lattice, const std::vector<CriticalPair>& pairs)
        : m_(pairs.size()), succ_(m_, BitRow(m_)), conflict_(m_, BitRow(m_)) {
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                if (lattice[pairs[i].a].subset_of(lattice[pairs[j].b])) succ_[i].set(j);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                if (i != j && succ_[i].test(j) && succ_[j].test(i)) conflict_[i].set(j);
    }

    Hypergraph conflict_graph() const {
        Hypergraph g;
        g.vertex_count = m_;
        for (std::size_t i = 0; i < m_; ++i)
            conflict_[i].for_each([&](std::size_t j) {
                if (i < j) g.edges.push_back({i, j});
            });
        return g;
    }

    std::vector<int> solve(int t) {
        t_ = t;
        class_of_.assign(m_, -1);
        members_.assign(static_cast<std::size_t>(t), BitRow(m_));
        if (backtrack(0, 0)) return class_of_;
        return {};
    }

  private:
    bool creates_cycle(std::size_t v, const BitRow& members) const {
        BitRow visited(m_);
        std::vector<std::size_t> stack;
        BitRow start = succ_[v];
        start &= members;
        start.for_each([&](std::size_t u) {
            visited.set(u);
            stack.push_back(u);
        });
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            if (succ_[u].test(v)) return true;
            BitRow next = succ_[u];
            next &= members;
            next.subtract(visited);
            next.for_each([&](std::size_t w) {
                visited.set(w);
                stack.push_back(w);
            });
        }
        return false;
    }

    std::size_t pick() const {
        std::size_t best = m_;
        int best_sat = -1;
        std::size_t best_deg = 0;
        for (std::size_t v = 0; v < m_; ++v) {
            if (class_of_[v] >= 0) continue;
            int sat = 0;
            for (const auto& mem : members_) sat += mem.intersects(conflict_[v]) ? 1 : 0;
            const std::size_t deg = conflict_[v].count();
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool backtrack(std::size_t assigned, int used) {
        if (assigned == m_) return true;
        const std::size_t v = pick();
        const int limit = std::min(t_, used + 1);
        for (int c = 0; c < limit; ++c) {
            BitRow& mem = members_[static_cast<std::size_t>(c)];
            if (mem.intersects(conflict_[v]) || creates_cycle(v, mem)) continue;
            mem.set(v);
            class_of_[v] = c;
            if (backtrack(assigned + 1, std::max(used, c + 1))) return true;
            mem.reset(v);
            class_of_[v] = -1;
        }
        return false;
    }

    std::size_t m_;
    std::vector<BitRow> succ_;
    std::vector<BitRow> conflict_;
    int t_ = 0;
    std::vector<int> class_of_;
    std::vector<BitRow> members_;
};

}  // namespace

DimensionResult order_dimension(const Lattice& lattice, const std::vector<CriticalPair>& pairs,
                                const CycleHypergraph& hypergraph) {
    DimensionResult r;
    if (pairs.empty()) {
        r.dim = 1;
        r.realizer.extensions.push_back(*reversing_extension(lattice, {}));
        return r;
    }
    if (hypergraph.vertex_count != pairs.size())
        throw InputError("hypergraph does not match the critical pairs");

    PartitionSearch search(lattice, pairs);
    r.pair_graph_bound = chromatic_number(search.conflict_graph()).colors;
    for (int t = r.pair_graph_bound;; ++t) {
        r.classes = search.solve(t);
        if (!r.classes.empty()) {
            r.by_partition = t;
            break;
        }
    }

    r.hypergraph_coloring = chromatic_number(hypergraph);
    r.by_hypergraph = r.hypergraph_coloring.colors;
    if (hypergraph.complete) {
        if (r.by_partition != r.by_hypergraph)
            throw InvariantError("dimension disagrees: partition search gives " + std::to_string(r.by_partition) +
                                 ", hypergraph coloring gives " + std::to_string(r.by_hypergraph));
        r.dim = r.by_partition;
    }

    for (int c = 0; c < r.by_partition; ++c) {
        std::vector<CriticalPair> cls;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (r.classes[k] == c) cls.push_back(pairs[k]);
        auto ext = reversing_extension(lattice, cls);
        if (!ext) throw InvariantError("partition class " + std::to_string(c) + " is not reversible");
        r.realizer.extensions.push_back(std::move(*ext));
    }
    if (auto v = realizer_violation(lattice, r.realizer, pairs)) throw InvariantError("realizer check failed: " + *v);
    return r;
}

// ---------------------------------------------------------------------------

ChainCover convex_dimension(const std::vector<Copoint>& copoints) {
    const std::size_t m = copoints.size();
    auto below = [&](std::size_t i, std::size_t j) { return copoints[i].set.proper_subset_of(copoints[j].set); };

    // Kuhn's augmenting paths: left copy i -> right copy j when i < j.
    std::vector<std::size_t> match_right(m, m), match_left(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<char> seen(m, 0);
        std::function<bool(std::size_t)> augment = [&](std::size_t u) {
            for (std::size_t j = 0; j < m; ++j) {
                if (!below(u, j) || seen[j]) continue;
                seen[j] = 1;
                if (match_right[j] == m || augment(match_right[j])) {
                    match_right[j] = u;
                    match_left[u] = j;
                    return true;
                }
            }
            return false;
        };
        augment(i);
    }

    ChainCover cover;
    std::vector<char> covered(m, 0);
    for (std::size_t start = 0; start < m; ++start) {
        if (match_right[start] != m) continue;
        std::vector<std::size_t> chain;
        for (std::size_t v = start; v != m; v = match_left[v]) {
            chain.push_back(v);
            covered[v] = 1;
        }
        cover.chains.push_back(std::move(chain));
    }
    cover.cdim = static_cast<int>(cover.chains.size());
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw InvariantError("chain cover misses a copoint");
    for (const auto& chain : cover.chains)
        for (std::size_t k = 1; k < chain.size(); ++k)
            if (!below(chain[k - 1], chain[k])) throw InvariantError("chain cover has a non-chain");

    if (m <= kAntichainCheckLimit) {
        std::vector<std::vector<char>> incomparable(m, std::vector<char>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                incomparable[i][j] = (i != j && !copoints[i].set.comparable(copoints[j].set)) ? 1 : 0;
        cover.max_antichain = maximum_clique(incomparable);
        if (cover.max_antichain->size() != cover.chains.size())
            throw InvariantError("minimum chain cover (" + std::to_string(cover.chains.size()) +
                                 ") differs from maximum antichain (" + std::to_string(cover.max_antichain->size()) + ")");
    }
    return cover;
}

}  // namespace convexdim
