#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexdim/analysis.hpp"
#include "convexdim/geometry.hpp"
#include "convexdim/verify.hpp"

namespace convexdim {

/// Point-set JSON: {"points":[{"label","x","y"}...], "tree":...}. Coordinates
/// are "p/q" or integer strings; the tree is nested {"leaf":[labels]} or
/// {"node":[left,right]}. Throws InputError.
PointSet parse_point_set(std::string_view text);
/// Canonical form: sorted keys, canonical rationals, two-space indent.
std::string write_point_set(const PointSet& points);

/// Geometry JSON: {"ground":[labels], "closed_sets":[[labels]...]}. Throws
/// InputError on malformed JSON and ValidationError, naming the violated
/// axiom and its witness, on an invalid family.
ConvexGeometry parse_geometry(std::string_view text);
std::string write_geometry(const ConvexGeometry& geometry);

/// Either input shape, detected by its "points" or "closed_sets" key.
struct GeometryInput {
    ConvexGeometry geometry;
    std::optional<PointSet> points;
};
GeometryInput parse_input(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// "{a,b}@c".
std::string copoint_label(const GroundSet& ground, const Copoint& copoint);

/// Counts, values, witnesses and law outcomes.
std::string report_json(const Analysis& analysis, const std::vector<LawResult>& laws);

std::string copoint_graph_dot(const Analysis& analysis);
std::string critical_digraph_dot(const Analysis& analysis);
/// Hasse diagram of the copoints ordered by inclusion.
std::string copoint_poset_dot(const Analysis& analysis);

}  // namespace convexdim
