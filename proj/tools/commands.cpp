#include "commands.hpp"

#include <iomanip>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convexdim/analysis.hpp"
#include "convexdim/composition.hpp"
#include "convexdim/errors.hpp"
#include "convexdim/io.hpp"
#include "convexdim/search.hpp"
#include "convexdim/verify.hpp"

namespace convexdim::cli {

namespace {

struct Options {
    // generate
    int es_i = 0, es_j = 0, xes_k = 1, random_n = 6;
    std::uint64_t random_seed = 1;
    std::string left_file, right_file;
    bool unsafe_large = false;
    // analyze / verify / export
    std::string input;
    std::string report_path;
    std::string dot_prefix;
    std::optional<std::size_t> cycle_cap;
    bool geometry_json = false;
    // search
    RunConfig run;
    std::optional<std::uint64_t> count;
    std::optional<double> budget;
    std::string from_dir;
    std::string summary_path;
};

Analysis load_and_analyze(const Options& o) {
    GeometryInput in = parse_input(read_text_file(o.input));
    AnalysisOptions opts;
    opts.cycle_cap = o.cycle_cap;
    return analyze(std::move(in.geometry), std::move(in.points), opts);
}

void print_laws(std::ostream& out, const std::vector<LawResult>& laws) {
    std::size_t width = 0;
    for (const auto& l : laws) width = std::max(width, l.law.size());
    for (const auto& l : laws) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << l.law;
        if (l.detail.empty()) out << to_string(l.status) << "\n";
        else out << std::setw(8) << to_string(l.status) << l.detail << "\n";
    }
}

void print_report(std::ostream& out, const Analysis& a) {
    const AnalysisReport r = a.report();
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("unknown"); };
    out << "points/elements     " << r.n << "\n"
        << "closed sets         " << r.closed_sets << "\n"
        << "copoints            " << r.copoints << "\n"
        << "critical pairs      " << r.critical_pairs << "\n"
        << "atomic              " << (r.atomic ? "yes" : "no") << "\n"
        << "2-edge-connected    " << (r.two_edge_connected ? "yes" : "no") << "\n"
        << "dim                 " << opt(r.dim) << "\n"
        << "cdim                " << r.cdim << "\n"
        << "b                   " << r.b << "\n"
        << "chi(G)              " << r.chi_g << "\n"
        << "chi(H)              " << opt(r.chi_h) << (r.hypergraph_complete ? "" : " (cycle enumeration capped)") << "\n"
        << "omega(G)            " << r.omega_g << "\n"
        << "hyperedge sizes    ";
    for (auto [size, count] : r.hyperedge_sizes) out << " " << size << ":" << count;
    out << "\n";
    const GroundSet& g = a.geometry.ground();
    for (const auto& e : a.hypergraph.edges) {
        if (e.cycle.size() <= 2) continue;
        out << "cycle              ";
        for (auto v : e.cycle) out << " (" << g.label(a.pairs[v].attach) << ", " << g.format(a.lattice[a.pairs[v].b]) << ")";
        out << "\n";
    }
}

void write_dots(const Analysis& a, const std::string& prefix) {
    write_text_file(prefix + ".copoint_graph.dot", copoint_graph_dot(a));
    write_text_file(prefix + ".critical_digraph.dot", critical_digraph_dot(a));
    write_text_file(prefix + ".copoint_poset.dot", copoint_poset_dot(a));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact convex geometries: copoints, critical pairs, order and convex dimension."};
    app.name("convexdim");
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Emit a point set as JSON");
    gen->require_subcommand(1);
    gen->add_flag("--unsafe-large", o.unsafe_large, "Lift the es/xes size guards");
    auto* g_es = gen->add_subcommand("es", "Erdos-Szekeres set ES(i,j)");
    g_es->add_option("i", o.es_i)->required()->check(CLI::NonNegativeNumber);
    g_es->add_option("j", o.es_j)->required()->check(CLI::NonNegativeNumber);
    auto* g_xes = gen->add_subcommand("xes", "XES(k), 2^k points");
    g_xes->add_option("k", o.xes_k)->required();
    auto* g_comp = gen->add_subcommand("compose", "Composition of two point-set files");
    g_comp->add_option("left", o.left_file)->required();
    g_comp->add_option("right", o.right_file)->required();
    auto* g_rand = gen->add_subcommand("random", "Random point set in general position");
    g_rand->add_option("n", o.random_n)->required();
    g_rand->add_option("seed", o.random_seed)->required();
    for (auto* sub : {g_es, g_xes}) sub->add_flag("--unsafe-large", o.unsafe_large, "Lift the size guards");

    auto* ana = app.add_subcommand("analyze", "Full analysis and law check of a point-set or geometry file");
    ana->add_option("input", o.input)->required();
    ana->add_option("--report", o.report_path, "Write the JSON report here");
    ana->add_option("--dot", o.dot_prefix, "Write DOT graphs with this path prefix");
    ana->add_option("--cycle-cap", o.cycle_cap, "Longest minimal cycle to enumerate");

    auto* ver = app.add_subcommand("verify", "Print the law table for a point-set or geometry file");
    ver->add_option("input", o.input)->required();
    ver->add_option("--cycle-cap", o.cycle_cap, "Longest minimal cycle to enumerate");

    auto* exp = app.add_subcommand("export", "Export DOT graphs or the closed-set family");
    exp->add_option("input", o.input)->required();
    exp->add_option("--dot", o.dot_prefix, "Write DOT graphs with this path prefix");
    exp->add_flag("--geometry", o.geometry_json, "Print the closed-set family as geometry JSON");
    exp->add_option("--cycle-cap", o.cycle_cap, "Longest minimal cycle to enumerate");

    auto* sea = app.add_subcommand("search", "Random search for chi(H) > chi(G) and large chi(G)/omega(G)");
    sea->add_option("--seed", o.run.seed, "Run seed")->capture_default_str();
    sea->add_option("--min-n", o.run.min_n, "Smallest point count")->capture_default_str();
    sea->add_option("--max-n", o.run.max_n, "Largest point count")->capture_default_str();
    auto* count_opt = sea->add_option("--count", o.count, "Analyze exactly this many instances");
    sea->add_option("--budget", o.budget, "Wall-clock budget in seconds")->excludes(count_opt);
    sea->add_option("--workers", o.run.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sea->add_option("--cycle-cap", o.run.cycle_cap, "Longest minimal cycle to enumerate");
    sea->add_option("--from-dir", o.from_dir, "Analyze the .json geometry files of a directory")->check(CLI::ExistingDirectory);
    sea->add_option("--summary", o.summary_path, "Also write the summary JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return e.get_exit_code() == 0 ? kOk : kInputError;
    }

    try {
        if (gen->parsed()) {
            PointSet p;
            if (g_es->parsed()) p = es(o.es_i, o.es_j, o.unsafe_large);
            else if (g_xes->parsed()) p = xes(o.xes_k, o.unsafe_large);
            else if (g_comp->parsed())
                p = compose(parse_point_set(read_text_file(o.left_file)), parse_point_set(read_text_file(o.right_file)));
            else p = random_point_set(o.random_n, o.random_seed);
            out << write_point_set(p);
            return kOk;
        }
        if (ana->parsed()) {
            const Analysis a = load_and_analyze(o);
            const auto laws = verify_suite(a);
            print_report(out, a);
            out << "\n";
            print_laws(out, laws);
            if (!o.report_path.empty()) write_text_file(o.report_path, report_json(a, laws));
            if (!o.dot_prefix.empty()) write_dots(a, o.dot_prefix);
            return all_passed(laws) ? kOk : kLawFailure;
        }
        if (ver->parsed()) {
            const auto laws = verify_suite(load_and_analyze(o));
            print_laws(out, laws);
            return all_passed(laws) ? kOk : kLawFailure;
        }
        if (exp->parsed()) {
            if (o.geometry_json) {
                out << write_geometry(parse_input(read_text_file(o.input)).geometry);
                return kOk;
            }
            const Analysis a = load_and_analyze(o);
            if (o.dot_prefix.empty()) out << copoint_graph_dot(a);
            else write_dots(a, o.dot_prefix);
            return kOk;
        }
        if (sea->parsed()) {
            o.run.count = o.count;
            if (o.budget) o.run.budget_seconds = *o.budget;
            if (!o.from_dir.empty()) o.run.from_dir = o.from_dir;
            const SearchSummary s = run_search(o.run, [&](const std::string& line) { err << line << "\n"; });
            const std::string summary = summary_json(o.run, s);
            out << summary;
            if (!o.summary_path.empty()) write_text_file(o.summary_path, summary);
            return s.failures.empty() ? kOk : kLawFailure;
        }
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

}  // namespace convexdim::cli
