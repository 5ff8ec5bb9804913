#include "convexdim/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include <json.hpp>

#include "convexdim/analysis.hpp"
#include "convexdim/errors.hpp"
#include "convexdim/io.hpp"
#include "convexdim/verify.hpp"

namespace convexdim {

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

PointSet random_point_set(int n, std::uint64_t seed) {
    if (n < 1 || n > static_cast<int>(kMaxGroundSize)) throw SizeGuardError("random point sets need 1..20 points");
    std::mt19937_64 rng(seed);
    const long hi = 4L * n * n;
    std::uniform_int_distribution<long> coord(0, hi);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point cand{"p" + std::to_string(pts.size() + 1), Rational(coord(rng)), Rational(coord(rng))};
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
            if (pts[i].x == cand.x) ok = false;
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
                if (orientation(pts[i], pts[j], cand) == Orientation::Collinear) ok = false;
        }
        if (ok) pts.push_back(std::move(cand));
    }
    return PointSet(std::move(pts));
}

namespace {

struct Outcome {
    std::string source;
    std::string input;
    int chi_g = 0;
    int omega = 0;
    int chi_h = 0;
    std::vector<std::pair<std::string, std::string>> failures;
};

std::vector<std::filesystem::path> geometry_files(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

Outcome evaluate(const RunConfig& cfg, std::uint64_t index, const std::vector<std::filesystem::path>& files) {
    Outcome o;
    try {
        if (cfg.from_dir) {
            o.source = files[index].filename().string();
            o.input = read_text_file(files[index]);
        } else {
            const std::uint64_t s = instance_seed(cfg.seed, index);
            const int n = cfg.min_n + static_cast<int>(s % static_cast<std::uint64_t>(cfg.max_n - cfg.min_n + 1));
            o.source = "random n=" + std::to_string(n);
            o.input = write_point_set(random_point_set(n, s));
        }
        GeometryInput in = parse_input(o.input);
        AnalysisOptions opts;
        opts.cycle_cap = cfg.cycle_cap;
        const Analysis a = analyze(std::move(in.geometry), std::move(in.points), opts);
        o.chi_g = a.graph_coloring.colors;
        o.omega = static_cast<int>(a.max_clique.size());
        o.chi_h = a.dimension.by_hypergraph;
        for (const auto& law : verify_suite(a))
            if (law.status == LawStatus::Fail) o.failures.emplace_back(law.law, law.detail);
    } catch (const std::exception& e) {
        o.failures.emplace_back("analysis", e.what());
    }
    return o;
}

}  // namespace

SearchSummary run_search(const RunConfig& cfg, const std::function<void(const std::string&)>& on_finding) {
    if (cfg.workers < 1) throw InputError("workers must be positive");
    if (!cfg.from_dir && (cfg.min_n < 1 || cfg.max_n < cfg.min_n))
        throw InputError("need 1 <= min_n <= max_n");
    std::vector<std::filesystem::path> files;
    std::optional<std::uint64_t> limit = cfg.count;
    if (cfg.from_dir) {
        files = geometry_files(*cfg.from_dir);
        limit = std::min<std::uint64_t>(limit.value_or(files.size()), files.size());
    }

    const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(cfg.budget_seconds);
    std::atomic<std::uint64_t> next{0};
    std::mutex mu;
    std::map<std::uint64_t, Outcome> done;

    auto worker = [&]() {
        for (;;) {
            if (!limit && std::chrono::steady_clock::now() >= deadline) return;
            const std::uint64_t i = next.fetch_add(1);
            if (limit && i >= *limit) return;
            Outcome o = evaluate(cfg, i, files);
            std::lock_guard<std::mutex> lock(mu);
            if (on_finding) {
                if (o.chi_h > o.chi_g)
                    on_finding("candidate #" + std::to_string(i) + " (" + o.source + "): chi(H)=" + std::to_string(o.chi_h) +
                               " > chi(G)=" + std::to_string(o.chi_g));
                for (const auto& [law, detail] : o.failures)
                    on_finding("law failure #" + std::to_string(i) + " (" + o.source + "): " + law + ": " + detail);
            }
            done.emplace(i, std::move(o));
        }
    };
    std::vector<std::thread> threads;
    for (int w = 1; w < cfg.workers; ++w) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    SearchSummary s;
    for (const auto& [i, o] : done) {
        ++s.instances;
        if (o.omega > 0 && (!s.ratio_index || static_cast<long>(o.chi_g) * s.ratio_omega > static_cast<long>(s.ratio_chi) * o.omega)) {
            s.ratio_chi = o.chi_g;
            s.ratio_omega = o.omega;
            s.ratio_index = i;
        }
        if (o.chi_h > o.chi_g) s.candidates.push_back({i, o.source, o.chi_g, o.chi_h, o.input});
        for (const auto& [law, detail] : o.failures) s.failures.push_back({i, law, detail});
    }
    return s;
}

std::string summary_json(const RunConfig& cfg, const SearchSummary& s) {
    using nlohmann::json;
    json candidates = json::array();
    for (const auto& c : s.candidates)
        candidates.push_back({{"index", c.index}, {"source", c.source}, {"chi_g", c.chi_g}, {"chi_h", c.chi_h}, {"input", c.input}});
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back({{"index", f.index}, {"law", f.law}, {"detail", f.detail}});
    json ratio = nullptr;
    if (s.ratio_index)
        ratio = {{"chi_g", s.ratio_chi}, {"omega_g", s.ratio_omega}, {"index", *s.ratio_index},
                 {"value", Rational(s.ratio_chi, s.ratio_omega).str()}};
    json out{{"seed", cfg.seed},
             {"instances", s.instances},
             {"max_chi_over_omega", ratio},
             {"candidates", candidates},
             {"law_failures", failures}};
    if (cfg.from_dir) out["from_dir"] = cfg.from_dir->filename().string();
    else out["n_range"] = {cfg.min_n, cfg.max_n};
    return out.dump(2) + "\n";
}

}  // namespace convexdim
