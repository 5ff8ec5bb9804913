#include "convexdim/closure_lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "convexdim/errors.hpp"

namespace convexdim {

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InputError("ground set must be non-empty");
    if (size() > kMaxGroundSize)
        throw SizeGuardError("ground set of " + std::to_string(size()) + " elements exceeds the limit of " +
                             std::to_string(kMaxGroundSize));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw InputError("ground-set labels must be non-empty");
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i] == labels_[j]) throw InputError("duplicate ground-set label '" + labels_[i] + "'");
    }
}

int GroundSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw InputError("unknown element '" + std::string(label) + "'");
}

ElementSet GroundSet::subset(const std::vector<std::string>& labels) const {
    ElementSet s;
    for (const auto& l : labels) s = s.with(index_of(l));
    return s;
}

std::string GroundSet::format(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int e) {
        if (!first) out += ',';
        out += label(e);
        first = false;
    });
    return out + "}";
}

std::string GroundSet::compact(ElementSet s) const {
    const bool short_labels =
        std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
    if (!short_labels || s.empty()) return format(s);
    std::string out;
    s.for_each([&](int e) { out += label(e); });
    return out;
}

// ---------------------------------------------------------------------------
// ClosedSetFamily

class FamilyBuilder {
  public:
    static ClosedSetFamily build(GroundSet ground, std::vector<ElementSet> sets) {
        return ClosedSetFamily(std::move(ground), std::move(sets));
    }
};

ClosedSetFamily::ClosedSetFamily(GroundSet ground, std::vector<ElementSet> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end(), CanonicalLess{});
    id_by_mask_.assign(std::size_t{1} << ground_.size(), -1);
    for (std::size_t i = 0; i < sets_.size(); ++i) id_by_mask_[sets_[i].bits()] = static_cast<std::int32_t>(i);

    // M is meet-irreducible iff the intersection of the members strictly
    // above it differs from M. Two single-element extensions already meet in
    // M, so the full scan only runs for members with at most one of them.
    const ElementSet all = ground_.all();
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        const ElementSet m = sets_[i];
        if (m == all) continue;
        int single_ext = 0;
        (all - m).for_each([&](int e) {
            if (contains(m.with(e))) ++single_ext;
        });
        if (single_ext >= 2) continue;
        ElementSet meet = all;
        for (std::size_t j = i + 1; j < sets_.size() && meet != m; ++j)
            if (m.proper_subset_of(sets_[j])) meet &= sets_[j];
        if (meet != m) meet_irreducibles_.push_back(m);
    }
}

std::optional<std::size_t> ClosedSetFamily::id_of(ElementSet s) const {
    if (!s.subset_of(ground_.all())) return std::nullopt;
    const std::int32_t id = id_by_mask_[s.bits()];
    if (id < 0) return std::nullopt;
    return static_cast<std::size_t>(id);
}

ElementSet ClosedSetFamily::closure(ElementSet subset) const {
    ElementSet out = ground_.all();
    for (ElementSet m : meet_irreducibles_)
        if (subset.subset_of(m)) out &= m;
    return out;
}

std::variant<ClosedSetFamily, AlignmentViolation> validate_alignment(const GroundSet& ground,
                                                                     std::vector<ElementSet> sets) {
    using Kind = AlignmentViolation::Kind;
    const ElementSet all = ground.all();
    for (ElementSet s : sets)
        if (!s.subset_of(all)) return AlignmentViolation{Kind::ElementOutOfRange, s, {}, "set uses elements outside the ground set"};
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<bool> member(std::size_t{1} << ground.size(), false);
    for (ElementSet s : sets) member[s.bits()] = true;
    if (!member[0]) return AlignmentViolation{Kind::MissingEmptySet, {}, {}, "empty set missing"};
    if (!member[all.bits()])
        return AlignmentViolation{Kind::MissingGroundSet, all, {}, "ground set " + ground.format(all) + " missing"};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const ElementSet meet = sets[i] & sets[j];
            if (!member[meet.bits()])
                return AlignmentViolation{Kind::NotIntersectionClosed, sets[i], sets[j],
                                          ground.format(sets[i]) + " ∩ " + ground.format(sets[j]) + " = " +
                                              ground.format(meet) + " missing"};
        }
    }
    return FamilyBuilder::build(ground, std::move(sets));
}

std::variant<ClosedSetFamily, AlignmentViolation> validate_alignment(
    const GroundSet& ground, const std::vector<std::vector<std::string>>& sets) {
    std::vector<ElementSet> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(ground.subset(s));
    return validate_alignment(ground, std::move(masks));
}

AntiExchangeResult is_anti_exchange(const ClosedSetFamily& family) {
    const ElementSet all = family.ground().all();
    const int n = family.ground().size();
    std::vector<ElementSet> ext(static_cast<std::size_t>(n));
    for (ElementSet c : family.sets()) {
        const ElementSet outside = all - c;
        outside.for_each([&](int p) { ext[static_cast<std::size_t>(p)] = family.closure(c.with(p)); });
        std::optional<AntiExchangeWitness> bad;
        outside.for_each([&](int p) {
            if (bad) return;
            outside.for_each([&](int q) {
                if (bad || q <= p) return;
                if (ext[static_cast<std::size_t>(p)].contains(q) && ext[static_cast<std::size_t>(q)].contains(p))
                    bad = AntiExchangeWitness{c, p, q};
            });
        });
        if (bad) return {false, bad};
    }
    return {true, std::nullopt};
}

ClosedSetFamily enumerate_closed_sets(const GroundSet& ground, const ClosureOracle& closure) {
    const ElementSet all = ground.all();
    std::vector<bool> seen(std::size_t{1} << ground.size(), false);
    std::vector<ElementSet> sets;
    std::deque<ElementSet> queue;

    auto visit = [&](ElementSet from, ElementSet c) {
        if (!c.subset_of(all) || !from.subset_of(c))
            throw ValidationError("closure oracle is not extensive at " + ground.format(from));
        if (closure(c) != c) throw ValidationError("closure oracle is not idempotent at " + ground.format(c));
        if (seen[c.bits()]) return;
        seen[c.bits()] = true;
        sets.push_back(c);
        queue.push_back(c);
    };

    visit(ElementSet{}, closure(ElementSet{}));
    while (!queue.empty()) {
        const ElementSet a = queue.front();
        queue.pop_front();
        (all - a).for_each([&](int e) { visit(a.with(e), closure(a.with(e))); });
    }
    if (!seen[0]) sets.push_back(ElementSet{});  // reported as an alignment violation below

    auto result = validate_alignment(ground, std::move(sets));
    if (auto* v = std::get_if<AlignmentViolation>(&result))
        throw ValidationError("closure oracle does not induce an alignment: " + v->message);
    return std::get<ClosedSetFamily>(std::move(result));
}

// ---------------------------------------------------------------------------
// ConvexGeometry

ConvexGeometry ConvexGeometry::create(ClosedSetFamily family) {
    const AntiExchangeResult ae = is_anti_exchange(family);
    if (!ae.holds) {
        const auto& w = *ae.witness;
        const GroundSet& g = family.ground();
        throw ValidationError("anti-exchange fails at C = " + g.format(w.closed) + ", p = " + g.label(w.p) +
                              ", q = " + g.label(w.q));
    }
    return ConvexGeometry(std::move(family));
}

ConvexGeometry::ConvexGeometry(ClosedSetFamily family) : family_(std::move(family)) {
    const int n = family_.ground().size();
    for (int e = 0; e < n; ++e) closure_of_element_.push_back(family_.closure(ElementSet::single(e)));
    const ElementSet all = family_.ground().all();
    for (std::size_t id = 0; id < family_.size(); ++id) {
        const ElementSet a = family_[id];
        int count = 0;
        int attach = -1;
        (all - a).for_each([&](int e) {
            if (family_.contains(a.with(e))) {
                ++count;
                attach = e;
            }
        });
        if (count == 1) copoints_.push_back({a, attach, id});
    }
}

ConvexGeometry from_planar(const PointSet& points) {
    if (points.size() < 1) throw InputError("planar geometry needs at least one point");
    const OrientationTable table(points);
    std::vector<std::string> labels;
    for (const Point& p : points.points()) labels.push_back(p.label);
    const GroundSet ground(std::move(labels));
    ClosedSetFamily family = enumerate_closed_sets(ground, [&](ElementSet s) { return table.closure(s); });
    return ConvexGeometry::create(std::move(family));
}

std::vector<Copoint> copoints(const ConvexGeometry& geometry) { return geometry.copoints(); }

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::of(const ConvexGeometry& geometry) {
    const ClosedSetFamily& family = geometry.family();
    const ElementSet all = geometry.ground().all();
    Lattice l;
    l.nodes_ = family.sets();
    l.up_.resize(l.nodes_.size());
    l.down_.resize(l.nodes_.size());
    for (std::size_t id = 0; id < l.nodes_.size(); ++id) {
        const ElementSet a = l.nodes_[id];
        ElementSet single_ext;
        (all - a).for_each([&](int e) {
            if (auto up = family.id_of(a.with(e))) {
                l.up_[id].push_back(*up);
                l.down_[*up].push_back(id);
                single_ext = single_ext.with(e);
            }
        });
        // Every closed B ⊋ A must contain a single-element extension of A,
        // otherwise some cover of A adds two or more elements.
        (all - a).for_each([&](int e) {
            const ElementSet b = family.closure(a.with(e));
            if ((b & single_ext).empty())
                throw InvariantError("lattice cover " + geometry.ground().format(a) + " < " +
                                     geometry.ground().format(b) + " adds more than one element");
        });
    }
    for (auto& d : l.down_) std::sort(d.begin(), d.end());
    return l;
}

std::size_t Lattice::edge_count() const {
    std::size_t m = 0;
    for (const auto& u : up_) m += u.size();
    return m;
}

bool is_atomic(const ConvexGeometry& geometry) {
    for (int e = 0; e < geometry.size(); ++e)
        if (geometry.closure_of(e) != ElementSet::single(e)) return false;
    return true;
}

bool hasse_has_bridge(const Lattice& lattice) {
    // Iterative lowpoint DFS over the undirected cover graph. Parallel edges
    // cannot occur in a Hasse diagram, so skipping the parent vertex is safe.
    const std::size_t n = lattice.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w : lattice.up(v)) {
            adj[v].push_back(w);
            adj[w].push_back(v);
        }
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, kNone), low(n, 0);
    std::size_t timer = 0;
    struct Frame {
        std::size_t v, parent, next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != kNone) continue;
        std::vector<Frame> stack{{root, kNone, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                const std::size_t w = adj[f.v][f.next++];
                if (w == f.parent) continue;
                if (disc[w] == kNone) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                const std::size_t v = f.v;
                const std::size_t parent = f.parent;
                stack.pop_back();
                if (parent != kNone) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] > disc[parent]) return true;
                }
            }
        }
    }
    return false;
}

bool copoints_incomparable_with_attach_closure(const ConvexGeometry& geometry) {
    for (const Copoint& c : geometry.copoints())
        if (c.set.comparable(geometry.closure_of(c.attach))) return false;
    return true;
}

bool is_two_edge_connected(const ConvexGeometry& geometry, const Lattice& lattice) {
    const bool by_bridges = !hasse_has_bridge(lattice);
    const bool by_copoints = copoints_incomparable_with_attach_closure(geometry);
    if (by_bridges != by_copoints)
        throw InvariantError(std::string("2-edge-connectivity disagrees: bridge search says ") +
                             (by_bridges ? "yes" : "no") + ", copoint test says " + (by_copoints ? "yes" : "no"));
    return by_bridges;
}

bool is_two_edge_connected(const ConvexGeometry& geometry) {
    return is_two_edge_connected(geometry, Lattice::of(geometry));
}

bool is_independent(const ConvexGeometry& geometry, ElementSet s) {
    bool ok = true;
    s.for_each([&](int p) {
        if (ok && geometry.closure(s.without(p)).contains(p)) ok = false;
    });
    return ok;
}

IndependenceResult independence_number(const ConvexGeometry& geometry) {
    const int n = geometry.size();
    IndependenceResult best;
    auto search = [&](auto&& self, ElementSet current, int next) -> void {
        if (current.size() > best.b) best = {current.size(), current};
        if (current.size() + (n - next) <= best.b) return;
        for (int e = next; e < n; ++e) {
            const ElementSet candidate = current.with(e);
            // Supersets of dependent sets are dependent, so prune here.
            if (is_independent(geometry, candidate)) self(self, candidate, e + 1);
        }
    };
    search(search, ElementSet{}, 0);
    return best;
}

ElementSet extreme_points(const ConvexGeometry& geometry) {
    const ElementSet all = geometry.ground().all();
    ElementSet out;
    for (int p = 0; p < geometry.size(); ++p)
        if (!geometry.closure(all.without(p)).contains(p)) out = out.with(p);
    return out;
}

}  // namespace convexdim
