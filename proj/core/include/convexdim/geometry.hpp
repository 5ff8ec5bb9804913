#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexdim/element_set.hpp"
#include "convexdim/rational.hpp"

namespace convexdim {

struct Point {
    std::string label;
    Rational x;
    Rational y;
};

/// Full binary tree recording how a point set was composed. Every node keeps
/// the sorted indices of the points below it; leaves are the composed blocks.
class CompositionTree {
  public:
    static CompositionTree leaf(std::vector<int> indices);
    static CompositionTree node(CompositionTree left, CompositionTree right);

    [[nodiscard]] bool is_leaf() const { return left_ == nullptr; }
    [[nodiscard]] const std::vector<int>& indices() const { return indices_; }
    [[nodiscard]] const CompositionTree& left() const { return *left_; }
    [[nodiscard]] const CompositionTree& right() const { return *right_; }

    /// Copy with every point index increased by `offset`.
    [[nodiscard]] CompositionTree shifted(int offset) const;
    /// Leaves in left-to-right order.
    [[nodiscard]] std::vector<const CompositionTree*> leaves() const;
    /// Internal nodes in pre-order.
    [[nodiscard]] std::vector<const CompositionTree*> internal_nodes() const;

    friend bool operator==(const CompositionTree& a, const CompositionTree& b);

  private:
    std::vector<int> indices_;
    std::shared_ptr<const CompositionTree> left_;
    std::shared_ptr<const CompositionTree> right_;
};

/// Labeled planar points with exact coordinates.
/// Labels are non-empty and unique; coordinate pairs are pairwise distinct.
class PointSet {
  public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points, std::optional<CompositionTree> tree = std::nullopt);

    [[nodiscard]] int size() const { return static_cast<int>(points_.size()); }
    [[nodiscard]] const std::vector<Point>& points() const { return points_; }
    [[nodiscard]] const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::optional<CompositionTree>& tree() const { return tree_; }

    /// Index of `label`; throws InputError when absent.
    [[nodiscard]] int index_of(std::string_view label) const;
    [[nodiscard]] ElementSet subset(const std::vector<std::string>& labels) const;
    [[nodiscard]] std::vector<std::string> labels(ElementSet s) const;

  private:
    std::vector<Point> points_;
    std::optional<CompositionTree> tree_;
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

/// Sign of (q - p) x (r - p), exact.
Orientation orientation(const Point& p, const Point& q, const Point& r);

bool is_general_position(const PointSet& points);

/// Orientation signs of every triple plus the lexicographic (x, y) rank of
/// every point. All repeated geometric queries go through this table so that
/// rational arithmetic happens once per triple.
class OrientationTable {
  public:
    explicit OrientationTable(const PointSet& points);

    [[nodiscard]] int size() const { return n_; }
    /// +1 counter-clockwise, -1 clockwise, 0 collinear.
    [[nodiscard]] int orient(int p, int q, int r) const {
        return signs_[static_cast<std::size_t>((p * n_ + q) * n_ + r)];
    }
    [[nodiscard]] int dx_sign(int from, int to) const { return dx_[static_cast<std::size_t>(from * n_ + to)]; }
    [[nodiscard]] int dy_sign(int from, int to) const { return dy_[static_cast<std::size_t>(from * n_ + to)]; }
    [[nodiscard]] int lex_rank(int p) const { return rank_[static_cast<std::size_t>(p)]; }
    [[nodiscard]] bool general_position() const { return general_position_; }

    /// conv(A) ∩ X.
    [[nodiscard]] ElementSet closure(ElementSet subset) const;
    /// Vertices of conv(A), counter-clockwise, collinear points dropped.
    [[nodiscard]] std::vector<int> hull(ElementSet subset) const;

  private:
    int n_ = 0;
    bool general_position_ = true;
    std::vector<std::int8_t> signs_;
    std::vector<std::int8_t> dx_;
    std::vector<std::int8_t> dy_;
    std::vector<int> rank_;
};

/// Points of P lying in the convex hull of `subset` (labels). Throws InputError
/// on an unknown label.
std::vector<std::string> planar_closure(const PointSet& points, const std::vector<std::string>& subset);
ElementSet planar_closure(const PointSet& points, ElementSet subset);

/// One head (+q) or tail (-q) event of the rotating line.
struct LineEvent {
    int point = 0;
    bool head = true;
    friend bool operator==(const LineEvent&, const LineEvent&) = default;
};

/// Circular local sequence of `pivot`: 2n-2 events in clockwise order,
/// starting at the event with smallest clockwise angle from "up".
struct CircularSequence {
    int pivot = 0;
    std::vector<LineEvent> entries;

    /// e.g. "(c, b, -c, -b)".
    [[nodiscard]] std::string str(const PointSet& points) const;
};

/// Requires general position and |P| >= 2. Throws InputError otherwise.
CircularSequence circular_local_sequence(const PointSet& points, int pivot);
CircularSequence circular_local_sequence(const PointSet& points, std::string_view pivot);
CircularSequence circular_local_sequence(const OrientationTable& table, int pivot);

struct PlanarCopoint {
    ElementSet set;
    int attach = 0;
    friend bool operator==(const PlanarCopoint&, const PlanarCopoint&) = default;
};

/// Copoints read off the circular local sequences (rotating-line method):
/// every adjacent (+q, -r) around p yields the copoint attached to p made of
/// q and the points strictly on r's side of line pq. Sorted by
/// (canonical set order, attach). Requires general position and |P| >= 2.
std::vector<PlanarCopoint> planar_copoints(const PointSet& points);

}  // namespace convexdim
