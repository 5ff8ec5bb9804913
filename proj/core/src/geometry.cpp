#include "convexdim/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "convexdim/errors.hpp"

namespace convexdim {

// ---------------------------------------------------------------------------
// CompositionTree

CompositionTree CompositionTree::leaf(std::vector<int> indices) {
    CompositionTree t;
    std::sort(indices.begin(), indices.end());
    t.indices_ = std::move(indices);
    return t;
}

CompositionTree CompositionTree::node(CompositionTree left, CompositionTree right) {
    CompositionTree t;
    t.indices_ = left.indices_;
    t.indices_.insert(t.indices_.end(), right.indices_.begin(), right.indices_.end());
    std::sort(t.indices_.begin(), t.indices_.end());
    if (std::adjacent_find(t.indices_.begin(), t.indices_.end()) != t.indices_.end())
        throw InputError("composition tree children overlap");
    t.left_ = std::make_shared<const CompositionTree>(std::move(left));
    t.right_ = std::make_shared<const CompositionTree>(std::move(right));
    return t;
}

CompositionTree CompositionTree::shifted(int offset) const {
    if (is_leaf()) {
        std::vector<int> idx = indices_;
        for (int& i : idx) i += offset;
        return leaf(std::move(idx));
    }
    return node(left_->shifted(offset), right_->shifted(offset));
}

std::vector<const CompositionTree*> CompositionTree::leaves() const {
    std::vector<const CompositionTree*> out;
    std::vector<const CompositionTree*> stack{this};
    while (!stack.empty()) {
        const CompositionTree* t = stack.back();
        stack.pop_back();
        if (t->is_leaf()) {
            out.push_back(t);
        } else {
            stack.push_back(t->right_.get());
            stack.push_back(t->left_.get());
        }
    }
    return out;
}

std::vector<const CompositionTree*> CompositionTree::internal_nodes() const {
    std::vector<const CompositionTree*> out;
    std::vector<const CompositionTree*> stack{this};
    while (!stack.empty()) {
        const CompositionTree* t = stack.back();
        stack.pop_back();
        if (t->is_leaf()) continue;
        out.push_back(t);
        stack.push_back(t->right_.get());
        stack.push_back(t->left_.get());
    }
    return out;
}

bool operator==(const CompositionTree& a, const CompositionTree& b) {
    if (a.is_leaf() != b.is_leaf() || a.indices_ != b.indices_) return false;
    return a.is_leaf() || (*a.left_ == *b.left_ && *a.right_ == *b.right_);
}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(std::vector<Point> points, std::optional<CompositionTree> tree)
    : points_(std::move(points)), tree_(std::move(tree)) {
    std::unordered_set<std::string> seen;
    std::set<std::pair<std::string, std::string>> coords;
    for (const Point& p : points_) {
        if (p.label.empty()) throw InputError("point label must be non-empty");
        if (!seen.insert(p.label).second) throw InputError("duplicate point label '" + p.label + "'");
        if (!coords.emplace(p.x.str(), p.y.str()).second)
            throw InputError("duplicate coordinates (" + p.x.str() + ", " + p.y.str() + ") at '" + p.label + "'");
    }
    if (tree_) {
        std::vector<int> all(points_.size());
        std::iota(all.begin(), all.end(), 0);
        if (tree_->indices() != all) throw InputError("composition tree root must cover every point exactly once");
    }
}

int PointSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].label == label) return static_cast<int>(i);
    throw InputError("unknown label '" + std::string(label) + "'");
}

ElementSet PointSet::subset(const std::vector<std::string>& labels) const {
    ElementSet s;
    for (const auto& l : labels) s = s.with(index_of(l));
    return s;
}

std::vector<std::string> PointSet::labels(ElementSet s) const {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(points_[static_cast<std::size_t>(i)].label); });
    return out;
}

// ---------------------------------------------------------------------------
// Predicates

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    const int s = det.sign();
    return s > 0 ? Orientation::CounterClockwise : s < 0 ? Orientation::Clockwise : Orientation::Collinear;
}

bool is_general_position(const PointSet& points) {
    const int n = points.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(points[i], points[j], points[k]) == Orientation::Collinear) return false;
    return true;
}

OrientationTable::OrientationTable(const PointSet& points) : n_(points.size()) {
    if (n_ > kMaxGroundSize)
        throw SizeGuardError("point set of " + std::to_string(n_) + " points exceeds the ground-set limit of " +
                             std::to_string(kMaxGroundSize));
    const auto n = static_cast<std::size_t>(n_);
    signs_.assign(n * n * n, 0);
    dx_.assign(n * n, 0);
    dy_.assign(n * n, 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            dx_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::int8_t>((points[j].x - points[i].x).sign());
            dy_[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::int8_t>((points[j].y - points[i].y).sign());
        }
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            for (int k = j + 1; k < n_; ++k) {
                const Orientation o = orientation(points[i], points[j], points[k]);
                const int s = o == Orientation::CounterClockwise ? 1 : o == Orientation::Clockwise ? -1 : 0;
                if (s == 0) general_position_ = false;
                // Even permutations keep the sign, odd ones flip it.
                const int perms[6][3] = {{i, j, k}, {j, k, i}, {k, i, j}, {j, i, k}, {i, k, j}, {k, j, i}};
                for (int t = 0; t < 6; ++t) {
                    const auto idx = static_cast<std::size_t>((perms[t][0] * n_ + perms[t][1]) * n_ + perms[t][2]);
                    signs_[idx] = static_cast<std::int8_t>(t < 3 ? s : -s);
                }
            }
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int sx = dx_sign(a, b);
        return sx != 0 ? sx > 0 : dy_sign(a, b) > 0;
    });
    rank_.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) rank_[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
}

std::vector<int> OrientationTable::hull(ElementSet subset) const {
    std::vector<int> pts = subset.elements();
    std::sort(pts.begin(), pts.end(), [&](int a, int b) { return lex_rank(a) < lex_rank(b); });
    if (pts.size() <= 1) return pts;
    std::vector<int> h(2 * pts.size());
    std::size_t k = 0;
    for (int p : pts) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && orient(h[k - 2], h[k - 1], *it) <= 0) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return h;
}

ElementSet OrientationTable::closure(ElementSet subset) const {
    if (subset.size() <= 1) return subset;
    const std::vector<int> h = hull(subset);
    ElementSet out = subset;
    for (int p = 0; p < n_; ++p) {
        if (out.contains(p)) continue;
        bool inside = true;
        if (h.size() == 2) {
            const int lo = std::min(lex_rank(h[0]), lex_rank(h[1]));
            const int hi = std::max(lex_rank(h[0]), lex_rank(h[1]));
            inside = orient(h[0], h[1], p) == 0 && lex_rank(p) > lo && lex_rank(p) < hi;
        } else {
            for (std::size_t i = 0; i < h.size() && inside; ++i)
                inside = orient(h[i], h[(i + 1) % h.size()], p) >= 0;
        }
        if (inside) out = out.with(p);
    }
    return out;
}

ElementSet planar_closure(const PointSet& points, ElementSet subset) {
    if (!subset.subset_of(ElementSet::full(points.size()))) throw InputError("subset index out of range");
    return OrientationTable(points).closure(subset);
}

std::vector<std::string> planar_closure(const PointSet& points, const std::vector<std::string>& subset) {
    return points.labels(planar_closure(points, points.subset(subset)));
}

// ---------------------------------------------------------------------------
// Circular local sequences

namespace {

void require_general_position(const OrientationTable& table) {
    if (table.size() < 2) throw InputError("circular local sequences need at least 2 points");
    if (!table.general_position()) throw InputError("point set is not in general position");
}

}  // namespace

CircularSequence circular_local_sequence(const OrientationTable& table, int pivot) {
    require_general_position(table);
    if (pivot < 0 || pivot >= table.size()) throw InputError("pivot index out of range");

    // Clockwise angle from "up" in [0, 180) is half 0, [180, 360) is half 1.
    auto half = [&](const LineEvent& e) {
        const int sx = table.dx_sign(pivot, e.point);
        const int sy = table.dy_sign(pivot, e.point);
        const bool upper = sx > 0 || (sx == 0 && sy > 0);
        return upper == e.head ? 0 : 1;
    };
    auto before = [&](const LineEvent& a, const LineEvent& b) {
        const int ha = half(a);
        const int hb = half(b);
        if (ha != hb) return ha < hb;
        // b is clockwise of a  <=>  cross(dir a, dir b) < 0
        const int s = (a.head ? 1 : -1) * (b.head ? 1 : -1);
        return s * table.orient(pivot, a.point, b.point) < 0;
    };

    CircularSequence seq;
    seq.pivot = pivot;
    for (int q = 0; q < table.size(); ++q) {
        if (q == pivot) continue;
        seq.entries.push_back({q, true});
        seq.entries.push_back({q, false});
    }
    std::sort(seq.entries.begin(), seq.entries.end(), before);
    return seq;
}

CircularSequence circular_local_sequence(const PointSet& points, int pivot) {
    return circular_local_sequence(OrientationTable(points), pivot);
}

CircularSequence circular_local_sequence(const PointSet& points, std::string_view pivot) {
    return circular_local_sequence(points, points.index_of(pivot));
}

std::string CircularSequence::str(const PointSet& points) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << (entries[i].head ? "" : "-") << points[entries[i].point].label;
    }
    os << ')';
    return os.str();
}

std::vector<PlanarCopoint> planar_copoints(const PointSet& points) {
    const OrientationTable table(points);
    require_general_position(table);
    const int n = table.size();
    std::vector<PlanarCopoint> out;
    for (int p = 0; p < n; ++p) {
        const CircularSequence seq = circular_local_sequence(table, p);
        const std::size_t m = seq.entries.size();
        for (std::size_t i = 0; i < m; ++i) {
            const LineEvent& cur = seq.entries[i];
            const LineEvent& next = seq.entries[(i + 1) % m];
            if (!cur.head || next.head) continue;
            const int q = cur.point;
            const int side = table.orient(p, q, next.point);
            ElementSet copoint = ElementSet::single(q);
            for (int x = 0; x < n; ++x)
                if (x != p && x != q && table.orient(p, q, x) == side) copoint = copoint.with(x);
            out.push_back({copoint, p});
        }
    }
    std::sort(out.begin(), out.end(), [](const PlanarCopoint& a, const PlanarCopoint& b) {
        if (a.set != b.set) return CanonicalLess{}(a.set, b.set);
        return a.attach < b.attach;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace convexdim
