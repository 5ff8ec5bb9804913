#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convexdim/geometry.hpp"

namespace convexdim {

/// n points labeled p1..pn with integer coordinates in [0, 4n²]², drawn from
/// a generator seeded with `seed`. Candidates are resampled until no three
/// points are collinear and no two share an x-coordinate, so any two results
/// can be composed.
PointSet random_point_set(int n, std::uint64_t seed);

/// Seed of instance `index` in a run seeded with `seed` (splitmix64 mixing).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

struct RunConfig {
    std::uint64_t seed = 1;
    int min_n = 5;
    int max_n = 7;
    /// Exactly this many instances; makes the run reproducible.
    std::optional<std::uint64_t> count;
    /// Wall-clock budget, used when no count is given.
    double budget_seconds = 10.0;
    std::optional<std::size_t> cycle_cap;
    int workers = 1;
    /// Analyze the geometry files of this directory instead of random sets.
    std::optional<std::filesystem::path> from_dir;
};

struct Candidate {
    std::uint64_t index = 0;
    std::string source;
    int chi_g = 0;
    int chi_h = 0;
    /// Input JSON of the instance, verbatim.
    std::string input;
};

struct LawFailure {
    std::uint64_t index = 0;
    std::string law;
    std::string detail;
};

struct SearchSummary {
    std::uint64_t instances = 0;
    /// Largest χ(G)/ω(G) seen, as numerator and denominator.
    int ratio_chi = 0;
    int ratio_omega = 0;
    std::optional<std::uint64_t> ratio_index;
    std::vector<Candidate> candidates;
    std::vector<LawFailure> failures;
};

/// Instances are numbered; each is analyzed on its own from its own seed and
/// results are merged in index order, so a count-budgeted run gives the same
/// summary for any number of workers. `on_finding` receives each candidate
/// and law failure as it is found.
SearchSummary run_search(const RunConfig& config, const std::function<void(const std::string&)>& on_finding = {});

/// Canonical JSON summary. Holds no timing or worker information.
std::string summary_json(const RunConfig& config, const SearchSummary& summary);

}  // namespace convexdim
