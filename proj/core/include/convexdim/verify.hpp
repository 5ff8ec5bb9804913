#pragma once

#include <string>
#include <vector>

#include "convexdim/analysis.hpp"

namespace convexdim {

enum class LawStatus { Pass, Fail, Skipped };

struct LawResult {
    std::string law;
    LawStatus status = LawStatus::Skipped;
    /// Failure witness, or the reason a law was skipped.
    std::string detail;
};

const char* to_string(LawStatus status);

/// Evaluates every applicable structural law on an analysis. Laws about
/// planar sets need the point set in general position; laws about
/// compositions need its composition tree. Failures are returned, never
/// thrown.
std::vector<LawResult> verify_suite(const Analysis& analysis);

bool all_passed(const std::vector<LawResult>& laws);

}  // namespace convexdim
