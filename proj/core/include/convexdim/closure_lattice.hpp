#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convexdim/element_set.hpp"
#include "convexdim/geometry.hpp"

namespace convexdim {

/// Ordered, labeled ground set X with 1 <= |X| <= kMaxGroundSize.
class GroundSet {
  public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    [[nodiscard]] int size() const { return static_cast<int>(labels_.size()); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
    [[nodiscard]] int index_of(std::string_view label) const;
    [[nodiscard]] ElementSet all() const { return ElementSet::full(size()); }
    [[nodiscard]] ElementSet subset(const std::vector<std::string>& labels) const;
    /// "{a,b,c}" in element order.
    [[nodiscard]] std::string format(ElementSet s) const;
    /// "abc" when every label is one character, otherwise "{a,b,c}".
    [[nodiscard]] std::string compact(ElementSet s) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

  private:
    std::vector<std::string> labels_;
};

/// Intersection-closed family of subsets containing ∅ and X, stored in
/// canonical order (size, then lexicographic). Node ids are positions in
/// that order. Only validate_alignment() and enumerate_closed_sets() build
/// one.
class ClosedSetFamily {
  public:
    [[nodiscard]] const GroundSet& ground() const { return ground_; }
    [[nodiscard]] const std::vector<ElementSet>& sets() const { return sets_; }
    [[nodiscard]] std::size_t size() const { return sets_.size(); }
    [[nodiscard]] ElementSet operator[](std::size_t id) const { return sets_[id]; }
    [[nodiscard]] bool contains(ElementSet s) const { return id_of(s).has_value(); }
    [[nodiscard]] std::optional<std::size_t> id_of(ElementSet s) const;

    /// Smallest member containing `subset`.
    [[nodiscard]] ElementSet closure(ElementSet subset) const;
    /// Members that are not the intersection of the members strictly above them.
    [[nodiscard]] const std::vector<ElementSet>& meet_irreducibles() const { return meet_irreducibles_; }

  private:
    friend class FamilyBuilder;
    ClosedSetFamily(GroundSet ground, std::vector<ElementSet> sets);

    GroundSet ground_;
    std::vector<ElementSet> sets_;
    std::vector<std::int32_t> id_by_mask_;
    std::vector<ElementSet> meet_irreducibles_;
};

struct AlignmentViolation {
    enum class Kind { MissingEmptySet, MissingGroundSet, NotIntersectionClosed, ElementOutOfRange };
    Kind kind;
    ElementSet first;
    ElementSet second;
    std::string message;
};

/// The family, or the first violated alignment axiom with a witness.
std::variant<ClosedSetFamily, AlignmentViolation> validate_alignment(const GroundSet& ground,
                                                                     std::vector<ElementSet> sets);
std::variant<ClosedSetFamily, AlignmentViolation> validate_alignment(
    const GroundSet& ground, const std::vector<std::vector<std::string>>& sets);

struct AntiExchangeWitness {
    ElementSet closed;
    int p = 0;
    int q = 0;
};

struct AntiExchangeResult {
    bool holds = true;
    std::optional<AntiExchangeWitness> witness;
};

/// Scans every closed C and distinct p, q ∉ C for q ∈ ℓ(C∪p) and p ∈ ℓ(C∪q).
AntiExchangeResult is_anti_exchange(const ClosedSetFamily& family);

using ClosureOracle = std::function<ElementSet(ElementSet)>;

/// All A with ℓ(A) = A, by breadth-first single-element extension from ℓ(∅).
/// Throws ValidationError when the oracle is not a closure operator on the
/// sets it produces (non-idempotent, non-extensive) or the result is not an
/// alignment.
ClosedSetFamily enumerate_closed_sets(const GroundSet& ground, const ClosureOracle& closure);

struct Copoint {
    ElementSet set;
    int attach = 0;
    std::size_t node = 0;
    friend bool operator==(const Copoint&, const Copoint&) = default;
};

/// Alignment with the anti-exchange property: a finite convex geometry.
class ConvexGeometry {
  public:
    /// Throws ValidationError (with the (C, p, q) witness) when anti-exchange fails.
    static ConvexGeometry create(ClosedSetFamily family);

    [[nodiscard]] const ClosedSetFamily& family() const { return family_; }
    [[nodiscard]] const GroundSet& ground() const { return family_.ground(); }
    [[nodiscard]] int size() const { return family_.ground().size(); }
    [[nodiscard]] ElementSet closure(ElementSet s) const { return family_.closure(s); }
    [[nodiscard]] ElementSet closure_of(int e) const { return closure_of_element_[static_cast<std::size_t>(e)]; }
    /// Closed sets with exactly one single-element closed extension, with
    /// their attach element, in canonical order.
    [[nodiscard]] const std::vector<Copoint>& copoints() const { return copoints_; }

  private:
    explicit ConvexGeometry(ClosedSetFamily family);

    ClosedSetFamily family_;
    std::vector<ElementSet> closure_of_element_;
    std::vector<Copoint> copoints_;
};

/// Convex geometry of conv(A) ∩ X. Collinear sets are accepted.
ConvexGeometry from_planar(const PointSet& points);

/// Hasse diagram of the closed sets ordered by inclusion. Node ids match the
/// family's ids; node 0 is ∅ and the last node is X.
class Lattice {
  public:
    /// Throws InvariantError if some cover adds more than one element.
    static Lattice of(const ConvexGeometry& geometry);

    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] const std::vector<ElementSet>& nodes() const { return nodes_; }
    [[nodiscard]] ElementSet operator[](std::size_t id) const { return nodes_[id]; }
    [[nodiscard]] const std::vector<std::size_t>& up(std::size_t id) const { return up_[id]; }
    [[nodiscard]] const std::vector<std::size_t>& down(std::size_t id) const { return down_[id]; }
    [[nodiscard]] std::size_t bottom() const { return 0; }
    [[nodiscard]] std::size_t top() const { return nodes_.size() - 1; }
    [[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return nodes_[a].subset_of(nodes_[b]); }
    [[nodiscard]] std::size_t edge_count() const;

  private:
    std::vector<ElementSet> nodes_;
    std::vector<std::vector<std::size_t>> up_;
    std::vector<std::vector<std::size_t>> down_;
};

std::vector<Copoint> copoints(const ConvexGeometry& geometry);

bool is_atomic(const ConvexGeometry& geometry);

/// Bridge search on the undirected Hasse diagram.
bool hasse_has_bridge(const Lattice& lattice);
/// Every copoint B is incomparable with ℓ(α(B)).
bool copoints_incomparable_with_attach_closure(const ConvexGeometry& geometry);
/// Both routes above, asserted equal (InvariantError otherwise).
bool is_two_edge_connected(const ConvexGeometry& geometry);
bool is_two_edge_connected(const ConvexGeometry& geometry, const Lattice& lattice);

bool is_independent(const ConvexGeometry& geometry, ElementSet s);

struct IndependenceResult {
    int b = 0;
    ElementSet witness;
};

/// Largest independent set (p ∉ ℓ(B∖p) for every p ∈ B).
IndependenceResult independence_number(const ConvexGeometry& geometry);

/// {p : p ∉ ℓ(X∖p)}.
ElementSet extreme_points(const ConvexGeometry& geometry);

}  // namespace convexdim
