#pragma once

#include <string>
#include <variant>
#include <vector>

#include "convexdim/closure_lattice.hpp"
#include "convexdim/geometry.hpp"
#include "convexdim/io.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(CONVEXDIM_FIXTURE_DIR) + "/" + name; }

inline convexdim::PointSet six_points() {
    return convexdim::parse_point_set(convexdim::read_text_file(fixture("six_points.json")));
}

inline convexdim::ConvexGeometry four_elements() {
    return convexdim::parse_geometry(convexdim::read_text_file(fixture("four_elements.json")));
}

inline convexdim::PointSet points(const std::vector<std::tuple<std::string, long, long>>& coords) {
    std::vector<convexdim::Point> pts;
    for (const auto& [label, x, y] : coords) pts.push_back({label, convexdim::Rational(x), convexdim::Rational(y)});
    return convexdim::PointSet(std::move(pts));
}

inline convexdim::PointSet triangle() { return points({{"a", 0, 0}, {"b", 4, 0}, {"c", 0, 4}}); }

/// Geometry whose closed sets are all subsets of n labels "1".."n".
inline convexdim::ConvexGeometry free_geometry(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    convexdim::GroundSet g(labels);
    return convexdim::ConvexGeometry::create(
        convexdim::enumerate_closed_sets(g, [](convexdim::ElementSet s) { return s; }));
}

/// Chain geometry ∅ ⊂ {1} ⊂ {1,2} ⊂ ... on n labels.
inline convexdim::ConvexGeometry chain_geometry(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    convexdim::GroundSet g(labels);
    std::vector<convexdim::ElementSet> sets;
    for (int i = 0; i <= n; ++i) sets.push_back(convexdim::ElementSet::full(i));
    return convexdim::ConvexGeometry::create(std::get<convexdim::ClosedSetFamily>(convexdim::validate_alignment(g, sets)));
}

// Every convex geometry on n <= 4 labels, as closed-set families.
inline std::vector<convexdim::ConvexGeometry> all_geometries(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    const convexdim::GroundSet g(labels);
    const std::uint32_t full = (1U << n) - 1;
    std::vector<std::uint32_t> middle;
    for (std::uint32_t m = 1; m < full; ++m) middle.push_back(m);
    std::vector<convexdim::ConvexGeometry> out;
    for (std::uint32_t pick = 0; pick < (1U << middle.size()); ++pick) {
        std::vector<convexdim::ElementSet> sets{convexdim::ElementSet(), convexdim::ElementSet(full)};
        for (std::size_t i = 0; i < middle.size(); ++i)
            if (pick >> i & 1U) sets.emplace_back(middle[i]);
        auto r = convexdim::validate_alignment(g, sets);
        if (!std::holds_alternative<convexdim::ClosedSetFamily>(r)) continue;
        auto& fam = std::get<convexdim::ClosedSetFamily>(r);
        if (!convexdim::is_anti_exchange(fam).holds) continue;
        out.push_back(convexdim::ConvexGeometry::create(std::move(fam)));
    }
    return out;
}

}  // namespace testing_support
