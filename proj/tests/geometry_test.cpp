#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "convexdim/closure_lattice.hpp"
#include "convexdim/errors.hpp"
#include "convexdim/geometry.hpp"
#include "convexdim/search.hpp"
#include "support.hpp"

using namespace convexdim;
using testing_support::six_points;
using testing_support::points;

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Orientation, Basics) {
    EXPECT_EQ(orientation({"", 0, 0}, {"", 1, 0}, {"", 0, 1}), Orientation::CounterClockwise);
    EXPECT_EQ(orientation({"", 0, 0}, {"", 0, 1}, {"", 1, 0}), Orientation::Clockwise);
    EXPECT_EQ(orientation({"", 0, 0}, {"", 1, 1}, {"", 2, 2}), Orientation::Collinear);
}

TEST(Orientation, SixPointTriple) {
    const PointSet p = six_points();
    EXPECT_EQ(orientation(p[p.index_of("x")], p[p.index_of("y")], p[p.index_of("z")]), Orientation::CounterClockwise);
}

TEST(GeneralPosition, Cases) {
    EXPECT_TRUE(is_general_position(six_points()));
    EXPECT_FALSE(is_general_position(points({{"a", 0, 0}, {"b", 1, 1}, {"c", 2, 2}, {"d", 0, 1}})));
    EXPECT_TRUE(is_general_position(points({{"a", 0, 0}, {"b", 1, 1}})));
    EXPECT_TRUE(is_general_position(points({{"a", 0, 0}})));
}

TEST(PointSetTest, RejectsDuplicates) {
    EXPECT_THROW(points({{"a", 0, 0}, {"a", 1, 1}}), InputError);
    EXPECT_THROW(points({{"a", 0, 0}, {"b", 0, 0}}), InputError);
    EXPECT_THROW(points({{"", 0, 0}}), InputError);
}

TEST(PlanarClosure, SixPoint) {
    const PointSet p = six_points();
    EXPECT_EQ(as_set(planar_closure(p, {"x", "w", "u"})), (std::set<std::string>{"x", "y", "z", "w", "v", "u"}));
    EXPECT_EQ(as_set(planar_closure(p, {"x", "y"})), (std::set<std::string>{"x", "y"}));
    EXPECT_TRUE(planar_closure(p, std::vector<std::string>{}).empty());
    EXPECT_THROW(planar_closure(p, {"q"}), InputError);
}

TEST(PlanarClosure, CollinearSegmentAndHullBoundary) {
    const PointSet p = points({{"a", 0, 0}, {"b", 2, 2}, {"m", 1, 1}, {"e", 4, 0}, {"f", 3, 0}, {"o", 5, 5}});
    EXPECT_EQ(as_set(planar_closure(p, {"a", "b"})), (std::set<std::string>{"a", "b", "m"}));
    EXPECT_EQ(as_set(planar_closure(p, {"a", "e"})), (std::set<std::string>{"a", "e", "f"}));
    // f lies on edge ae of triangle a,e,b; m lies on edge ab.
    EXPECT_EQ(as_set(planar_closure(p, {"a", "e", "b"})), (std::set<std::string>{"a", "e", "b", "m", "f"}));
    EXPECT_EQ(as_set(planar_closure(p, {"m"})), (std::set<std::string>{"m"}));
}

TEST(PlanarClosure, CollinearSetIsStillAConvexGeometry) {
    const PointSet p = points({{"a", 0, 0}, {"b", 1, 1}, {"c", 2, 2}, {"d", 3, 0}});
    const ConvexGeometry g = from_planar(p);
    EXPECT_TRUE(is_anti_exchange(g.family()).holds);
    EXPECT_TRUE(is_atomic(g));
    EXPECT_THROW(circular_local_sequence(p, "a"), InputError);
}

TEST(CircularSequence, RightTriangle) {
    const PointSet p = points({{"a", 0, 0}, {"b", 1, 0}, {"c", 0, 1}});
    EXPECT_EQ(circular_local_sequence(p, "a").str(p), "(c, b, -c, -b)");
}

TEST(CircularSequence, StructuralInvariants) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const PointSet p = random_point_set(3 + static_cast<int>(seed % 8), seed);
        const int n = p.size();
        for (int pivot = 0; pivot < n; ++pivot) {
            const auto seq = circular_local_sequence(p, pivot);
            ASSERT_EQ(seq.entries.size(), static_cast<std::size_t>(2 * n - 2));
            for (std::size_t i = 0; i < seq.entries.size(); ++i) {
                const auto& e = seq.entries[i];
                EXPECT_NE(e.point, pivot);
                const auto& opposite = seq.entries[(i + static_cast<std::size_t>(n - 1)) % seq.entries.size()];
                EXPECT_EQ(opposite.point, e.point);
                EXPECT_NE(opposite.head, e.head);
            }
        }
    }
}

TEST(CircularSequence, StartsAtSmallestClockwiseAngleFromUp) {
    // Heads: q straight up (angle 0), r to the right (90), s below-left (225).
    const PointSet p = points({{"p", 0, 0}, {"q", 0, 5}, {"r", 5, 1}, {"s", -3, -4}});
    EXPECT_EQ(circular_local_sequence(p, "p").str(p), "(q, -s, r, -q, s, -r)");
}

TEST(CircularSequence, RequiresPivotAndSize) {
    EXPECT_THROW(circular_local_sequence(six_points(), "nope"), InputError);
    EXPECT_THROW(circular_local_sequence(points({{"a", 0, 0}}), "a"), InputError);
}

TEST(PlanarCopoints, Triangle) {
    const PointSet p = testing_support::triangle();
    const auto cps = planar_copoints(p);
    std::set<std::pair<std::set<std::string>, std::string>> got;
    for (const auto& c : cps) got.insert({as_set(p.labels(c.set)), p[c.attach].label});
    EXPECT_EQ(got, (std::set<std::pair<std::set<std::string>, std::string>>{
                       {{"a", "b"}, "c"}, {{"a", "c"}, "b"}, {{"b", "c"}, "a"}}));
}

TEST(PlanarCopoints, TwoPoints) {
    const PointSet p = points({{"a", 0, 0}, {"b", 1, 3}});
    const auto cps = planar_copoints(p);
    ASSERT_EQ(cps.size(), 2U);
    std::set<std::pair<std::set<std::string>, std::string>> got;
    for (const auto& c : cps) got.insert({as_set(p.labels(c.set)), p[c.attach].label});
    EXPECT_EQ(got, (std::set<std::pair<std::set<std::string>, std::string>>{{{"a"}, "b"}, {{"b"}, "a"}}));
}

TEST(PlanarCopoints, SixPointHasTwelve) {
    const PointSet p = six_points();
    std::set<std::pair<std::set<std::string>, std::string>> got;
    for (const auto& c : planar_copoints(p)) got.insert({as_set(p.labels(c.set)), p[c.attach].label});
    const std::set<std::pair<std::set<std::string>, std::string>> expected{
        {{"x", "y", "u", "v", "z"}, "w"}, {{"x", "y", "u", "v"}, "z"}, {{"x", "y", "u"}, "v"},
        {{"x", "v", "u"}, "y"},           {{"x", "y", "w", "z", "v"}, "u"}, {{"x", "y", "w", "z"}, "v"},
        {{"x", "y", "w"}, "z"},           {{"x", "w", "z"}, "y"},           {{"u", "w", "z", "v", "y"}, "x"},
        {{"u", "w", "z", "v"}, "y"},      {{"u", "w", "z"}, "v"},           {{"u", "w", "v"}, "z"}};
    EXPECT_EQ(got, expected);
}
