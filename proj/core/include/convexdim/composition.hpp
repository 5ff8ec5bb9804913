#pragma once

#include <optional>
#include <string>

#include "convexdim/geometry.hpp"

namespace convexdim {

/// Largest i + j accepted by es() unless the guard is lifted.
inline constexpr int kEsSizeGuard = 12;
/// Largest k accepted by xes() unless the guard is lifted.
inline constexpr int kXesSizeGuard = 5;

/// Places a translated copy of `right` to the right of `left` so that every
/// cross slope exceeds every internal slope. Requires both inputs in general
/// position with no vertical internal pair. Colliding labels of `right` get a
/// "_<k>" suffix. The result carries Node(tree(left), tree(right)); an input
/// without a tree contributes a single leaf.
PointSet compose(const PointSet& left, const PointSet& right);

/// Erdős–Szekeres set ES(i, j) with C(i+j, i) points; ES(0,k) = ES(k,0) is a
/// singleton at the origin. Points are relabeled p1..pN left to right.
PointSet es(int i, int j, bool unsafe_large = false);

/// Left fold ES(0,k) ∘ ES(1,k-1) ∘ ... ∘ ES(k,0); 2^k points.
PointSet xes(int k, bool unsafe_large = false);

/// First violation of the two composition conditions at any internal node of
/// the set's tree (x-separation, cross slopes above internal slopes), or
/// nullopt. Returns nullopt when there is no tree.
std::optional<std::string> composition_condition_violation(const PointSet& points);

/// First internal node (M1, M2) and pivot p in M1 (or M2) whose circular
/// local sequence does not contain the sibling as a head block and a tail
/// block, or nullopt.
std::optional<std::string> block_structure_violation(const PointSet& points);

}  // namespace convexdim
