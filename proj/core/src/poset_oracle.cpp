#include "convexdim/poset_oracle.hpp"

#include "convexdim/errors.hpp"

namespace convexdim {

Poset Poset::chain(std::size_t n) {
    Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) p.less[i][j] = 1;
    return p;
}

Poset Poset::boolean_lattice(int atoms) {
    const std::size_t n = std::size_t{1} << atoms;
    Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.less[i][j] = (i != j && (i & ~j) == 0) ? 1 : 0;
    return p;
}

Poset Poset::of(const Lattice& lattice) {
    const std::size_t n = lattice.size();
    Poset p{n, std::vector<std::vector<char>>(n, std::vector<char>(n, 0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.less[i][j] = lattice[i].proper_subset_of(lattice[j]) ? 1 : 0;
    return p;
}

namespace {

/// Calls `visit(order)` for each linear extension until it returns false.
template <typename Visit>
void for_each_extension(const Poset& poset, Visit&& visit) {
    const std::size_t n = poset.size;
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (poset.less[i][j]) ++pending[j];
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> order;
    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        if (order.size() == n) {
            if (!visit(order)) stop = true;
            return;
        }
        for (std::size_t v = 0; v < n && !stop; ++v) {
            if (placed[v] || pending[v] != 0) continue;
            placed[v] = 1;
            order.push_back(v);
            for (std::size_t w = 0; w < n; ++w)
                if (poset.less[v][w]) --pending[w];
            self(self);
            for (std::size_t w = 0; w < n; ++w)
                if (poset.less[v][w]) ++pending[w];
            order.pop_back();
            placed[v] = 0;
        }
    };
    rec(rec);
}

}  // namespace

std::size_t count_linear_extensions(const Poset& poset, const OracleCaps& caps) {
    std::size_t count = 0;
    for_each_extension(poset, [&](const std::vector<std::size_t>&) { return ++count <= caps.max_extensions; });
    return count;
}

int brute_force_dimension(const Poset& poset, const OracleCaps& caps) {
    const std::size_t n = poset.size;
    if (n > caps.max_elements)
        throw SizeGuardError("poset of " + std::to_string(n) + " elements exceeds the oracle cap");

    // Ordered incomparable pairs (x, y); an extension covers (x, y) when x precedes y.
    std::vector<std::pair<std::size_t, std::size_t>> targets;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && !poset.less[x][y] && !poset.less[y][x]) targets.emplace_back(x, y);
    if (targets.empty()) return 1;

    std::vector<std::vector<char>> covers;
    bool too_many = false;
    for_each_extension(poset, [&](const std::vector<std::size_t>& order) {
        if (covers.size() == caps.max_extensions) {
            too_many = true;
            return false;
        }
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
        std::vector<char> row(targets.size());
        for (std::size_t k = 0; k < targets.size(); ++k) row[k] = pos[targets[k].first] < pos[targets[k].second];
        covers.push_back(std::move(row));
        return true;
    });
    if (too_many) throw SizeGuardError("poset has more linear extensions than the oracle cap");

    std::vector<int> hits(targets.size(), 0);
    auto search = [&](auto&& self, int remaining) -> bool {
        std::size_t first = targets.size();
        for (std::size_t k = 0; k < targets.size(); ++k)
            if (hits[k] == 0) {
                first = k;
                break;
            }
        if (first == targets.size()) return true;
        if (remaining == 0) return false;
        for (const auto& row : covers) {
            if (!row[first]) continue;
            for (std::size_t k = 0; k < targets.size(); ++k) hits[k] += row[k];
            const bool ok = self(self, remaining - 1);
            for (std::size_t k = 0; k < targets.size(); ++k) hits[k] -= row[k];
            if (ok) return true;
        }
        return false;
    };
    for (int t = 1; t <= caps.max_t; ++t)
        if (search(search, t)) return t;
    throw SizeGuardError("poset dimension exceeds the oracle's t cap of " + std::to_string(caps.max_t));
}

}  // namespace convexdim
