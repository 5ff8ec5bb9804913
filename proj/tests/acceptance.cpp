// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any
// required criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "convexdim/analysis.hpp"
#include "convexdim/composition.hpp"
#include "convexdim/poset_oracle.hpp"
#include "convexdim/search.hpp"
#include "convexdim/verify.hpp"
#include "support.hpp"

using namespace convexdim;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string copoint_key(const GroundSet& g, ElementSet s, int attach) {
    return g.compact(s) + "@" + g.label(attach);
}

std::string law_status(const std::vector<LawResult>& laws, const std::string& name) {
    for (const auto& l : laws)
        if (l.law == name) return to_string(l.status);
    return "missing";
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Outcome six_point_example() {
    Outcome o;
    const Analysis a = analyze(testing_support::six_points());
    const GroundSet& g = a.geometry.ground();
    std::set<std::string> got;
    for (const auto& c : a.geometry.copoints()) got.insert(copoint_key(g, c.set, c.attach));
    const std::set<std::string> trees{
        copoint_key(g, g.subset({"x", "y", "u", "v", "z"}), g.index_of("w")),
        copoint_key(g, g.subset({"x", "y", "u", "v"}), g.index_of("z")),
        copoint_key(g, g.subset({"x", "y", "u"}), g.index_of("v")),
        copoint_key(g, g.subset({"x", "v", "u"}), g.index_of("y")),
        copoint_key(g, g.subset({"x", "y", "w", "z", "v"}), g.index_of("u")),
        copoint_key(g, g.subset({"x", "y", "w", "z"}), g.index_of("v")),
        copoint_key(g, g.subset({"x", "y", "w"}), g.index_of("z")),
        copoint_key(g, g.subset({"x", "w", "z"}), g.index_of("y")),
        copoint_key(g, g.subset({"u", "w", "z", "v", "y"}), g.index_of("x")),
        copoint_key(g, g.subset({"u", "w", "z", "v"}), g.index_of("y")),
        copoint_key(g, g.subset({"u", "w", "z"}), g.index_of("v")),
        copoint_key(g, g.subset({"u", "w", "v"}), g.index_of("z"))};
    o.require(got == trees, "copoints differ from the three drawn trees (got " + std::to_string(got.size()) + ")");

    std::set<std::set<std::string>> cycles;
    for (const auto& e : a.hypergraph.edges) {
        std::set<std::string> c;
        for (auto v : e.vertices) c.insert(copoint_key(g, a.lattice[a.pairs[v].b], a.pairs[v].attach));
        cycles.insert(c);
    }
    auto key = [&](const char* attach, std::vector<std::string> set) {
        return copoint_key(g, g.subset(set), g.index_of(attach));
    };
    o.require(cycles.count({key("z", {"u", "w", "v"}), key("v", {"x", "y", "u"}), key("y", {"x", "w", "z"})}) == 1,
              "cycle (z,uwv),(v,xyu),(y,xwz) missing");
    o.require(cycles.count({key("z", {"x", "y", "w"}), key("y", {"x", "v", "u"}), key("v", {"u", "w", "z"})}) == 1,
              "cycle (z,xyw),(y,xvu),(v,uwz) missing");
    const AnalysisReport r = a.report();
    o.require(r.chi_g == 4, "chi(G) = " + std::to_string(r.chi_g));
    o.require(r.chi_h == 4, "chi(H) != 4");
    o.require(r.dim == 4, "dim != 4");
    o.require(r.b == 4, "b = " + std::to_string(r.b));
    o.require(r.cdim == 6, "cdim = " + std::to_string(r.cdim));
    return o;
}

Outcome four_element_example() {
    Outcome o;
    const ConvexGeometry g = testing_support::four_elements();  // validates alignment and anti-exchange
    o.require(is_anti_exchange(g.family()).holds, "anti-exchange fails");
    o.require(!is_atomic(g), "reported atomic");
    o.require(is_two_edge_connected(g), "not 2-edge-connected");
    const Lattice l = Lattice::of(g);
    const auto definitional = critical_pairs_definitional(l);
    std::vector<NodePair> via_copoints;
    for (const auto& p : critical_pairs_from_copoints(g, l)) via_copoints.emplace_back(p.a, p.b);
    std::sort(via_copoints.begin(), via_copoints.end());
    o.require(definitional.size() == 6, "definitional scan found " + std::to_string(definitional.size()) + " pairs");
    o.require(via_copoints == definitional, "copoint route differs from the definitional scan");
    return o;
}

Outcome es_sizes() {
    Outcome o;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j)
            o.require(es(i, j).size() == binomial(i + j, i), "|es(" + std::to_string(i) + "," + std::to_string(j) + ")|");
    return o;
}

Outcome xes_table(int k_from, int k_to, bool stretch) {
    Outcome o;
    for (int k = k_from; k <= k_to; ++k) {
        const PointSet p = xes(k);
        const Analysis a = analyze(p);
        const std::string tag = "k=" + std::to_string(k) + ": ";
        const AnalysisReport r = a.report();
        o.require(p.size() == (1 << k), tag + "size " + std::to_string(p.size()));
        o.require(r.b == k + 1, tag + "b = " + std::to_string(r.b));
        o.require(r.dim == k + 1 && r.dim_by_partition == k + 1 && r.dim_by_hypergraph == k + 1,
                  tag + "dim = " + std::to_string(r.dim_by_partition) + "/" + std::to_string(r.dim_by_hypergraph));
        const int expected_cdim = stretch ? 6 : 2 * k - 2;
        if (stretch || k >= 2)
            o.require(r.cdim == expected_cdim,
                      tag + "cdim = " + std::to_string(r.cdim) + ", expected " + std::to_string(expected_cdim));
        o.require(r.hyperedge_sizes.size() <= 1 && (r.hyperedge_sizes.empty() || r.hyperedge_sizes.begin()->first == 2),
                  tag + "hyperedge larger than 2");
        if (!stretch) std::printf("        XES(%d): n=%d b=%d dim=%d cdim=%d chi(G)=%d\n", k, r.n, r.b, r.dim_by_partition, r.cdim, r.chi_g);
    }
    return o;
}

Outcome random_property_suite() {
    Outcome o;
    const std::vector<std::string> required{
        "closure-axioms", "anti-exchange", "planar-copoints-match-definition", "critical-pairs-are-attached-copoints",
        "two-edge-connectivity-routes-agree", "dimension-equals-hypergraph-chromatic-number", "clique-number-equals-independence-number",
        "dimension-inequalities", "minimal-cycle-observations", "cycle-attach-points-in-convex-position",
        "size-bound-from-dimension", "realizer"};
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::uint64_t seed = instance_seed(20240501, i);
        const PointSet p = random_point_set(5 + static_cast<int>(seed % 5), seed);
        const std::string tag = "instance " + std::to_string(i) + ": ";
        if (!is_general_position(p)) {
            o.require(false, tag + "not in general position");
            continue;
        }
        const Analysis a = analyze(p);
        const auto laws = verify_suite(a);
        for (const auto& law : required)
            o.require(law_status(laws, law) == "pass", tag + law + " " + law_status(laws, law));
        o.require(all_passed(laws), tag + "some law failed");
        const AnalysisReport r = a.report();
        o.require(r.dim && r.dim_by_partition == r.dim_by_hypergraph && r.chi_h == r.dim && *r.chi_h >= r.chi_g,
                  tag + "dimension methods");
        o.require(r.omega_g == r.b, tag + "omega != b");
        o.require(r.dim && r.cdim >= *r.dim && *r.dim >= r.b, tag + "cdim >= dim >= b");
        o.require(r.dim && r.n <= (1 << (*r.dim - 1)), tag + "|P| > 2^(dim-1)");
    }
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    int compared = 0;
    std::map<int, int> boolean_dims;
    for (int n = 1; n <= 4; ++n)
        for (const ConvexGeometry& g : testing_support::all_geometries(n)) {
            const Lattice l = Lattice::of(g);
            const Poset poset = Poset::of(l);
            if (poset.size > OracleCaps{}.max_elements || count_linear_extensions(poset) > OracleCaps{}.max_extensions) continue;
            const Analysis a = analyze(g);
            const int brute = brute_force_dimension(poset);
            o.require(a.dimension.dim == brute, "disagreement on a lattice of " + std::to_string(l.size()) + " sets");
            if (l.size() == (std::size_t{1} << n)) boolean_dims[n] = brute;
            ++compared;
        }
    for (int atoms : {2, 3}) {
        const int brute = brute_force_dimension(Poset::boolean_lattice(atoms));
        o.require(brute == atoms, "Boolean lattice on " + std::to_string(atoms) + " atoms: " + std::to_string(brute));
        o.require(boolean_dims[atoms] == atoms, "free geometry on " + std::to_string(atoms) + " elements");
    }
    o.require(compared >= 20, "only " + std::to_string(compared) + " lattices compared");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(compared) + " lattices compared";
    return o;
}

Outcome composition_laws() {
    Outcome o;
    const std::vector<std::string> laws_needed{"composition-conditions", "circular-sequence-blocks", "sibling-block-containment",
                                               "leaf-block-containment", "large-hyperedges-in-one-leaf"};
    std::size_t large_hyperedges = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const std::uint64_t s = instance_seed(777, i);
        PointSet acc = random_point_set(1 + static_cast<int>(s % 7), instance_seed(s, 0));
        const int parts = 2 + static_cast<int>((s >> 8) % 2);
        for (int part = 1; part < parts; ++part)
            acc = compose(acc, random_point_set(1 + static_cast<int>((s >> (4 * part)) % 7), instance_seed(s, static_cast<std::uint64_t>(part))));
        const std::string tag = "composition " + std::to_string(i) + ": ";
        const Analysis a = analyze(acc);
        large_hyperedges += a.hypergraph.edges.size() - a.hypergraph.count_of_size(2);
        const auto laws = verify_suite(a);
        for (const auto& law : laws_needed) o.require(law_status(laws, law) == "pass", tag + law + " " + law_status(laws, law));
        o.require(all_passed(laws), tag + "some law failed");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(large_hyperedges) + " hyperedges of size > 2 checked";
    return o;
}

Outcome search_determinism() {
    Outcome o;
    auto run = [](const char* workers) {
        const char* argv[] = {"convexdim", "search", "--seed", "99", "--max-n", "8", "--count", "60", "--workers", workers};
        std::ostringstream out, err;
        const int code = cli::run_cli(10, argv, out, err);
        return std::make_pair(code, out.str());
    };
    const auto one = run("1");
    const auto four = run("4");
    o.require(one.first == 0 && four.first == 0, "search exit codes " + std::to_string(one.first) + "/" + std::to_string(four.first));
    o.require(!one.second.empty() && one.second == four.second, "summaries differ between 1 and 4 workers");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        double limit_seconds;
        bool required;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1", "six-point example copoints, 3-cycles, chi(G)=chi(H)=dim=4, b=4, cdim=6", 5, true, six_point_example},
        {"2", "four-element example valid, non-atomic, 2-edge-connected, 6 critical pairs by both routes", 1, true, four_element_example},
        {"3", "|es(i,j)| = C(i+j,i) for i+j <= 6", 5, true, es_sizes},
        {"4", "XES(k), k=1..3: size 2^k, b=dim=k+1, cdim=2k-2 (k>=2), no hyperedge > 2", 60, true,
         [] { return xes_table(1, 3, false); }},
        {"4+", "XES(4) stretch: dim=5, cdim=6, b=5", 1800, false, [] { return xes_table(4, 4, true); }},
        {"5", "100 random general-position sets, 5 <= n <= 9, all laws", 600, true, random_property_suite},
        {"6", "brute-force dimension = order_dimension on small lattices", 600, true, oracle_agreement},
        {"7", "20 random compositions: conditions, blocks, containment, one-leaf hyperedges", 300, true, composition_laws},
        {"8", "search summary identical for 1 and 4 workers", 600, true, search_determinism},
    };
    bool all_required = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs < c.limit_seconds, "took " + std::to_string(secs) + " s");
        std::printf("[%s] criterion %-2s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
        std::fflush(stdout);
        if (c.required && !o.pass) all_required = false;
    }
    return all_required ? 0 : 1;
}
