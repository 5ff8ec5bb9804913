#include "convexdim/composition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "convexdim/errors.hpp"

namespace convexdim {

namespace {

struct Extent {
    Rational min_x, max_x, min_y, max_y;
};

Extent extent_of(const PointSet& s) {
    Extent e{s[0].x, s[0].x, s[0].y, s[0].y};
    for (const Point& p : s.points()) {
        e.min_x = std::min(e.min_x, p.x);
        e.max_x = std::max(e.max_x, p.x);
        e.min_y = std::min(e.min_y, p.y);
        e.max_y = std::max(e.max_y, p.y);
    }
    return e;
}

/// Max slope over pairs of `idx`; nullopt for fewer than two points.
std::optional<Rational> max_internal_slope(const PointSet& s, const std::vector<int>& idx) {
    std::optional<Rational> best;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const Point& p = s[idx[a]];
            const Point& q = s[idx[b]];
            if (p.x == q.x) throw InputError("vertical pair '" + p.label + "'-'" + q.label + "' in composition block");
            const Rational slope = (q.y - p.y) / (q.x - p.x);
            if (!best || slope > *best) best = slope;
        }
    }
    return best;
}

std::vector<int> all_indices(const PointSet& s) {
    std::vector<int> idx(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return idx;
}

PointSet relabeled(const PointSet& s) {
    std::vector<Point> pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].label = "p" + std::to_string(i + 1);
    return PointSet(std::move(pts), s.tree());
}

PointSet singleton() { return PointSet({Point{"p1", Rational(0), Rational(0)}}, CompositionTree::leaf({0})); }

}  // namespace

PointSet compose(const PointSet& left, const PointSet& right) {
    if (left.size() == 0 || right.size() == 0) throw InputError("cannot compose an empty point set");
    if (!is_general_position(left) || !is_general_position(right))
        throw InputError("composition inputs must be in general position");

    const Extent le = extent_of(left);
    const Extent re = extent_of(right);
    const auto sl = max_internal_slope(left, all_indices(left));
    const auto sr = max_internal_slope(right, all_indices(right));
    Rational steepest(0);
    if (sl) steepest = std::max(steepest, *sl);
    if (sr) steepest = std::max(steepest, *sr);

    const Rational shift_x = le.max_x + Rational(1) - re.min_x;
    const Rational width = re.max_x + shift_x - le.min_x;
    const Rational shift_y = le.max_y - re.min_y + steepest * width + Rational(1);

    std::vector<Point> pts = left.points();
    std::unordered_set<std::string> used;
    for (const Point& p : pts) used.insert(p.label);
    for (const Point& p : right.points()) used.insert(p.label);
    std::unordered_set<std::string> taken;
    for (const Point& p : left.points()) taken.insert(p.label);
    for (const Point& p : right.points()) {
        std::string label = p.label;
        if (taken.count(label)) {
            int k = 2;
            while (used.count(p.label + "_" + std::to_string(k))) ++k;
            label = p.label + "_" + std::to_string(k);
            used.insert(label);
        }
        taken.insert(label);
        pts.push_back(Point{label, p.x + shift_x, p.y + shift_y});
    }

    CompositionTree lt = left.tree() ? *left.tree() : CompositionTree::leaf(all_indices(left));
    CompositionTree rt = (right.tree() ? *right.tree() : CompositionTree::leaf(all_indices(right))).shifted(left.size());
    return PointSet(std::move(pts), CompositionTree::node(std::move(lt), std::move(rt)));
}

PointSet es(int i, int j, bool unsafe_large) {
    if (i < 0 || j < 0) throw InputError("es(i, j) needs non-negative arguments");
    if (!unsafe_large && i + j > kEsSizeGuard)
        throw SizeGuardError("es(" + std::to_string(i) + ", " + std::to_string(j) + ") exceeds the size guard i + j <= " +
                             std::to_string(kEsSizeGuard));
    std::map<std::pair<int, int>, PointSet> memo;
    auto build = [&](auto&& self, int a, int b) -> PointSet {
        if (a == 0 || b == 0) return singleton();
        if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
        PointSet s = relabeled(compose(self(self, a - 1, b), self(self, a, b - 1)));
        memo.emplace(std::make_pair(a, b), s);
        return s;
    };
    return build(build, i, j);
}

PointSet xes(int k, bool unsafe_large) {
    if (k < 1) throw InputError("xes(k) needs k >= 1");
    if (!unsafe_large && k > kXesSizeGuard)
        throw SizeGuardError("xes(" + std::to_string(k) + ") exceeds the size guard k <= " + std::to_string(kXesSizeGuard));
    PointSet acc = es(0, k, true);
    for (int i = 1; i <= k; ++i) acc = relabeled(compose(acc, es(i, k - i, true)));
    return acc;
}

std::optional<std::string> composition_condition_violation(const PointSet& points) {
    if (!points.tree()) return std::nullopt;
    for (const CompositionTree* node : points.tree()->internal_nodes()) {
        const auto& li = node->left().indices();
        const auto& ri = node->right().indices();
        for (int l : li)
            for (int r : ri)
                if (!(points[r].x > points[l].x))
                    return "x-separation fails: '" + points[r].label + "' not right of '" + points[l].label + "'";
        std::optional<Rational> internal;
        std::string internal_pair;
        for (const auto* block : {&li, &ri}) {
            for (std::size_t a = 0; a < block->size(); ++a) {
                for (std::size_t b = a + 1; b < block->size(); ++b) {
                    const Point& p = points[(*block)[a]];
                    const Point& q = points[(*block)[b]];
                    if (p.x == q.x) return "vertical internal pair '" + p.label + "'-'" + q.label + "'";
                    const Rational s = (q.y - p.y) / (q.x - p.x);
                    if (!internal || s > *internal) {
                        internal = s;
                        internal_pair = p.label + "-" + q.label;
                    }
                }
            }
        }
        if (!internal) continue;
        for (int l : li) {
            for (int r : ri) {
                const Rational s = (points[r].y - points[l].y) / (points[r].x - points[l].x);
                if (!(s > *internal))
                    return "cross slope " + points[l].label + "-" + points[r].label + " = " + s.str() +
                           " not above internal slope " + internal_pair + " = " + internal->str();
            }
        }
    }
    return std::nullopt;
}

namespace {

/// True iff the entries of `seq` whose point lies in `block` with the given
/// head flag occupy one cyclic interval.
bool contiguous(const CircularSequence& seq, const std::set<int>& block, bool head) {
    const std::size_t m = seq.entries.size();
    auto member = [&](std::size_t i) {
        const LineEvent& e = seq.entries[i % m];
        return e.head == head && block.count(e.point) > 0;
    };
    std::size_t starts = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (member(i) && !member(i + m - 1)) ++starts;
    return starts <= 1;
}

}  // namespace

std::optional<std::string> block_structure_violation(const PointSet& points) {
    if (!points.tree()) return std::nullopt;
    const OrientationTable table(points);
    std::vector<CircularSequence> seqs;
    for (int p = 0; p < points.size(); ++p) seqs.push_back(circular_local_sequence(table, p));
    for (const CompositionTree* node : points.tree()->internal_nodes()) {
        const std::vector<int>& li = node->left().indices();
        const std::vector<int>& ri = node->right().indices();
        const std::set<int> lset(li.begin(), li.end());
        const std::set<int> rset(ri.begin(), ri.end());
        for (auto [pivots, sibling] : {std::pair{&li, &rset}, std::pair{&ri, &lset}}) {
            for (int p : *pivots) {
                const CircularSequence& s = seqs[static_cast<std::size_t>(p)];
                if (!contiguous(s, *sibling, true) || !contiguous(s, *sibling, false))
                    return "sequence of '" + points[p].label + "' " + s.str(points) + " splits a sibling block";
            }
        }
    }
    return std::nullopt;
}

}  // namespace convexdim
