#pragma once

#include <cstddef>
#include <vector>

#include "convexdim/closure_lattice.hpp"

namespace convexdim {

/// Finite poset as a strict order relation matrix.
struct Poset {
    std::size_t size = 0;
    /// less[i][j] == true iff i < j.
    std::vector<std::vector<char>> less;

    static Poset chain(std::size_t n);
    static Poset boolean_lattice(int atoms);
    static Poset of(const Lattice& lattice);
};

struct OracleCaps {
    std::size_t max_elements = 12;
    std::size_t max_extensions = 2000;
    int max_t = 4;
};

/// Enumerates all linear extensions and returns the least t such that some t
/// of them intersect to the poset. Throws SizeGuardError when a cap is hit.
/// Shares no code with the critical-pair machinery.
int brute_force_dimension(const Poset& poset, const OracleCaps& caps = {});

/// Number of linear extensions, or caps.max_extensions + 1 when exceeded.
std::size_t count_linear_extensions(const Poset& poset, const OracleCaps& caps = {});

}  // namespace convexdim
