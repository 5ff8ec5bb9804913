#include "convexdim/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "convexdim/errors.hpp"

namespace convexdim {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

const json& member(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
    return obj.at(key);
}

std::string string_of(const json& j, const char* what) {
    if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> labels_of(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of labels");
    std::vector<std::string> out;
    for (const auto& e : j) out.push_back(string_of(e, what));
    return out;
}

Rational coordinate(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(string_of(j, "coordinate"));
}

CompositionTree tree_from_json(const json& j, const std::vector<Point>& points) {
    auto index_of = [&](const std::string& label) {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i].label == label) return static_cast<int>(i);
        throw InputError("tree names unknown label \"" + label + "\"");
    };
    if (j.is_object() && j.contains("leaf")) {
        std::vector<int> idx;
        for (const auto& l : labels_of(j.at("leaf"), "leaf")) idx.push_back(index_of(l));
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw InputError("leaf repeats a label");
        return CompositionTree::leaf(std::move(idx));
    }
    if (j.is_object() && j.contains("node")) {
        const json& kids = j.at("node");
        if (!kids.is_array() || kids.size() != 2) throw InputError("tree node needs exactly two children");
        return CompositionTree::node(tree_from_json(kids[0], points), tree_from_json(kids[1], points));
    }
    throw InputError("tree must be {\"leaf\":[...]} or {\"node\":[l,r]}");
}

json tree_to_json(const CompositionTree& t, const PointSet& p) {
    if (t.is_leaf()) {
        json labels = json::array();
        for (int i : t.indices()) labels.push_back(p[i].label);
        return json{{"leaf", labels}};
    }
    return json{{"node", json::array({tree_to_json(t.left(), p), tree_to_json(t.right(), p)})}};
}

PointSet point_set_from_json(const json& j) {
    const json& arr = member(j, "points");
    if (!arr.is_array()) throw InputError("\"points\" must be an array");
    std::vector<Point> points;
    for (const auto& e : arr)
        points.push_back({string_of(member(e, "label"), "label"), coordinate(member(e, "x")), coordinate(member(e, "y"))});
    std::optional<CompositionTree> tree;
    if (j.contains("tree") && !j.at("tree").is_null()) tree = tree_from_json(j.at("tree"), points);
    return PointSet(std::move(points), std::move(tree));
}

ConvexGeometry geometry_from_json(const json& j) {
    GroundSet ground(labels_of(member(j, "ground"), "ground"));
    const json& sets = member(j, "closed_sets");
    if (!sets.is_array()) throw InputError("\"closed_sets\" must be an array");
    std::vector<ElementSet> family;
    for (const auto& s : sets) family.push_back(ground.subset(labels_of(s, "closed set")));
    auto result = validate_alignment(ground, family);
    if (auto* v = std::get_if<AlignmentViolation>(&result)) throw ValidationError("not an alignment: " + v->message);
    return ConvexGeometry::create(std::get<ClosedSetFamily>(std::move(result)));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json labels_json(const GroundSet& g, ElementSet s) {
    json out = json::array();
    s.for_each([&](int e) { out.push_back(g.label(e)); });
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

PointSet parse_point_set(std::string_view text) { return point_set_from_json(parse_json(text)); }

std::string write_point_set(const PointSet& p) {
    json points = json::array();
    for (const auto& pt : p.points()) points.push_back({{"label", pt.label}, {"x", pt.x.str()}, {"y", pt.y.str()}});
    json out{{"points", points}};
    if (p.tree()) out["tree"] = tree_to_json(*p.tree(), p);
    return dump(out);
}

ConvexGeometry parse_geometry(std::string_view text) { return geometry_from_json(parse_json(text)); }

std::string write_geometry(const ConvexGeometry& g) {
    json sets = json::array();
    for (ElementSet s : g.family().sets()) sets.push_back(labels_json(g.ground(), s));
    return dump(json{{"ground", g.ground().labels()}, {"closed_sets", sets}});
}

GeometryInput parse_input(std::string_view text) {
    const json j = parse_json(text);
    if (j.is_object() && j.contains("points")) {
        PointSet p = point_set_from_json(j);
        ConvexGeometry g = from_planar(p);
        return {std::move(g), std::move(p)};
    }
    if (j.is_object() && j.contains("closed_sets")) return {geometry_from_json(j), std::nullopt};
    throw InputError("input has neither \"points\" nor \"closed_sets\"");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

std::string copoint_label(const GroundSet& ground, const Copoint& c) {
    return ground.format(c.set) + "@" + ground.label(c.attach);
}

std::string report_json(const Analysis& a, const std::vector<LawResult>& laws) {
    const GroundSet& g = a.geometry.ground();
    const AnalysisReport r = a.report();
    const auto& cps = a.geometry.copoints();
    auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };

    json sizes = json::object();
    for (auto [size, count] : r.hyperedge_sizes) sizes[std::to_string(size)] = count;

    json copoints = json::array();
    for (std::size_t i = 0; i < cps.size(); ++i)
        copoints.push_back({{"set", labels_json(g, cps[i].set)},
                            {"attach", g.label(cps[i].attach)},
                            {"color", a.graph_coloring.coloring.empty() ? json(nullptr) : json(a.graph_coloring.coloring[i])}});

    json pairs = json::array();
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        const auto& p = a.pairs[i];
        json entry{{"a", labels_json(g, a.lattice[p.a])}, {"b", labels_json(g, a.lattice[p.b])}, {"attach", g.label(p.attach)}};
        if (i < a.dimension.classes.size()) entry["class"] = a.dimension.classes[i];
        if (i < a.dimension.hypergraph_coloring.coloring.size()) entry["color"] = a.dimension.hypergraph_coloring.coloring[i];
        pairs.push_back(entry);
    }

    json cycles = json::array();
    for (const auto& e : a.hypergraph.edges) {
        if (e.cycle.size() <= 2) continue;
        json cycle = json::array();
        for (auto v : e.cycle) cycle.push_back(copoint_label(g, cps[a.pairs[v].copoint]));
        cycles.push_back(cycle);
    }

    json realizer = json::array();
    for (const auto& ext : a.dimension.realizer.extensions) {
        json order = json::array();
        for (auto v : ext) order.push_back(g.format(a.lattice[v]));
        realizer.push_back(order);
    }

    json chains = json::array();
    for (const auto& chain : a.chain_cover.chains) {
        json c = json::array();
        for (auto v : chain) c.push_back(copoint_label(g, cps[v]));
        chains.push_back(c);
    }

    json law_rows = json::array();
    for (const auto& l : laws) law_rows.push_back({{"law", l.law}, {"status", to_string(l.status)}, {"detail", l.detail}});

    json out{{"n", r.n},
             {"closed_sets", r.closed_sets},
             {"copoint_count", r.copoints},
             {"critical_pair_count", r.critical_pairs},
             {"atomic", r.atomic},
             {"two_edge_connected", r.two_edge_connected},
             {"dim", opt(r.dim)},
             {"dim_by_partition", r.dim_by_partition},
             {"dim_by_hypergraph", r.dim_by_hypergraph},
             {"cdim", r.cdim},
             {"b", r.b},
             {"chi_g", r.chi_g},
             {"chi_h", opt(r.chi_h)},
             {"omega_g", r.omega_g},
             {"hypergraph_complete", r.hypergraph_complete},
             {"hyperedge_sizes", sizes},
             {"copoints", copoints},
             {"critical_pairs", pairs},
             {"long_minimal_cycles", cycles},
             {"realizer", realizer},
             {"chain_cover", chains},
             {"max_independent_set", labels_json(g, a.independence.witness)},
             {"laws", law_rows}};
    return dump(out);
}

std::string copoint_graph_dot(const Analysis& a) {
    const GroundSet& g = a.geometry.ground();
    std::ostringstream out;
    out << "graph copoints {\n";
    for (std::size_t i = 0; i < a.copoint_graph.vertices.size(); ++i)
        out << "  c" << i << " [label=" << dot_quote(copoint_label(g, a.copoint_graph.vertices[i])) << "];\n";
    for (auto [u, v] : a.copoint_graph.edges) out << "  c" << u << " -- c" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string critical_digraph_dot(const Analysis& a) {
    const GroundSet& g = a.geometry.ground();
    std::ostringstream out;
    out << "digraph critical {\n";
    for (std::size_t i = 0; i < a.pairs.size(); ++i)
        out << "  p" << i << " [label=" << dot_quote("(" + g.format(a.lattice[a.pairs[i].a]) + ", " + g.format(a.lattice[a.pairs[i].b]) + ")")
            << "];\n";
    for (std::size_t i = 0; i < a.pairs.size(); ++i)
        for (std::size_t j : a.digraph.successors(i)) out << "  p" << i << " -> p" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string copoint_poset_dot(const Analysis& a) {
    const GroundSet& g = a.geometry.ground();
    const auto& cps = a.geometry.copoints();
    std::ostringstream out;
    out << "digraph copoint_poset {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < cps.size(); ++i) out << "  c" << i << " [label=" << dot_quote(copoint_label(g, cps[i])) << "];\n";
    for (std::size_t i = 0; i < cps.size(); ++i)
        for (std::size_t j = 0; j < cps.size(); ++j) {
            if (!cps[i].set.proper_subset_of(cps[j].set)) continue;
            const bool covered = std::none_of(cps.begin(), cps.end(), [&](const Copoint& k) {
                return cps[i].set.proper_subset_of(k.set) && k.set.proper_subset_of(cps[j].set);
            });
            if (covered) out << "  c" << i << " -> c" << j << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace convexdim
