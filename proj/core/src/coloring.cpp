#include "convexdim/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "bitrow.hpp"
#include "convexdim/errors.hpp"

namespace convexdim {

using detail::BitRow;

Hypergraph as_hypergraph(const CopointGraph& graph) {
    Hypergraph h;
    h.vertex_count = graph.vertices.size();
    for (auto [i, j] : graph.edges) h.edges.push_back({i, j});
    return h;
}

Hypergraph as_hypergraph(const CycleHypergraph& hypergraph) {
    Hypergraph h;
    h.vertex_count = hypergraph.vertex_count;
    for (const auto& e : hypergraph.edges) h.edges.push_back(e.vertices);
    return h;
}

bool is_proper_coloring(const Hypergraph& h, const std::vector<int>& coloring, int colors) {
    if (coloring.size() != h.vertex_count) return false;
    for (int c : coloring)
        if (c < 0 || c >= colors) return false;
    for (const auto& e : h.edges) {
        bool mono = true;
        for (std::size_t v : e) mono = mono && coloring[v] == coloring[e.front()];
        if (mono) return false;
    }
    return true;
}

namespace {

class ColoringSearch {
  public:
    explicit ColoringSearch(const Hypergraph& h) : h_(h), n_(h.vertex_count), adj_(n_, BitRow(n_)), big_(n_) {
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            const auto& edge = h.edges[e];
            if (edge.size() < 2) throw InputError("hyperedge with fewer than two vertices");
            if (edge.size() == 2) {
                adj_[edge[0]].set(edge[1]);
                adj_[edge[1]].set(edge[0]);
            } else {
                for (std::size_t v : edge) big_[v].push_back(e);
            }
        }
        degree_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) degree_[v] = adj_[v].count() + big_[v].size();
    }

    std::size_t greedy_clique() const {
        std::vector<std::size_t> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return adj_[a].count() > adj_[b].count(); });
        std::size_t best = n_ > 0 ? 1 : 0;
        for (std::size_t seed : order) {
            std::vector<std::size_t> clique{seed};
            BitRow cand = adj_[seed];
            for (std::size_t v : order) {
                if (!cand.test(v)) continue;
                clique.push_back(v);
                cand &= adj_[v];
            }
            best = std::max(best, clique.size());
        }
        return best;
    }

    /// k-coloring or empty.
    std::vector<int> solve(int k) {
        k_ = k;
        color_.assign(n_, -1);
        neighbor_colors_.assign(n_, std::vector<int>(static_cast<std::size_t>(k), 0));
        saturation_.assign(n_, 0);
        if (n_ == 0) return {};
        if (backtrack(0, 0)) return color_;
        return {};
    }

  private:
    bool allowed(std::size_t v, int c) const {
        if (neighbor_colors_[v][static_cast<std::size_t>(c)] > 0) return false;
        for (std::size_t e : big_[v]) {
            bool mono = true;
            for (std::size_t u : h_.edges[e])
                if (u != v && color_[u] != c) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
        return true;
    }

    void assign(std::size_t v, int c, int delta) {
        adj_[v].for_each([&](std::size_t u) {
            int& cnt = neighbor_colors_[u][static_cast<std::size_t>(c)];
            if (delta > 0 && cnt++ == 0) ++saturation_[u];
            if (delta < 0 && --cnt == 0) --saturation_[u];
        });
        color_[v] = delta > 0 ? c : -1;
    }

    std::size_t pick() const {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            if (best == n_ || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    bool backtrack(std::size_t colored, int used) {
        if (colored == n_) return true;
        const std::size_t v = pick();
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!allowed(v, c)) continue;
            assign(v, c, +1);
            if (backtrack(colored + 1, std::max(used, c + 1))) return true;
            assign(v, c, -1);
        }
        return false;
    }

    const Hypergraph& h_;
    std::size_t n_;
    std::vector<BitRow> adj_;
    std::vector<std::vector<std::size_t>> big_;
    std::vector<std::size_t> degree_;
    int k_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<int>> neighbor_colors_;
    std::vector<int> saturation_;
};

}  // namespace

ColoringResult chromatic_number(const Hypergraph& h) {
    ColoringResult r;
    if (h.vertex_count == 0) return r;
    ColoringSearch search(h);
    int k = static_cast<int>(search.greedy_clique());
    for (;; ++k) {
        std::vector<int> coloring = search.solve(k);
        if (!coloring.empty()) {
            if (!is_proper_coloring(h, coloring, k)) throw InvariantError("coloring witness failed verification");
            r.colors = k;
            r.coloring = std::move(coloring);
            return r;
        }
    }
}

ColoringResult chromatic_number(const CopointGraph& graph) { return chromatic_number(as_hypergraph(graph)); }

ColoringResult chromatic_number(const CycleHypergraph& hypergraph) {
    ColoringResult r = chromatic_number(as_hypergraph(hypergraph));
    r.exact = hypergraph.complete;
    return r;
}

std::vector<std::size_t> maximum_clique(const std::vector<std::vector<char>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<BitRow> adj(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && adjacency[i][j]) adj[i].set(j);
    std::vector<std::size_t> best, current;
    auto expand = [&](auto&& self, BitRow candidates) -> void {
        if (candidates.none()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (current.size() + candidates.count() <= best.size()) return;
        std::vector<std::size_t> order;
        candidates.for_each([&](std::size_t v) { order.push_back(v); });
        for (std::size_t v : order) {
            if (current.size() + candidates.count() <= best.size()) return;
            current.push_back(v);
            BitRow next = candidates;
            next &= adj[v];
            self(self, std::move(next));
            current.pop_back();
            candidates.reset(v);
        }
    };
    BitRow all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    expand(expand, std::move(all));
    return best;
}

}  // namespace convexdim
