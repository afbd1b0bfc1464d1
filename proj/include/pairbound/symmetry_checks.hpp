#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pairbound {

struct PropertyResult {
    std::string name;
    int cases = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed() const { return max_error < tolerance; }
};

struct SymmetryCheckReport {
    std::uint64_t seed = 0;
    std::vector<PropertyResult> results;
    bool all_passed() const;
};

// Randomized property suite for the symmetry algebra: closed-form apply,
// extension quadrature, intertwining E S = T E, conjugation identity, group
// laws, cross composition and L^2 isometry. Errors are relative to
// max(1, |reference|). Cases alternate between d = 1 and d = 2.
SymmetryCheckReport run_symmetry_checks(std::uint64_t seed, int cases = 100);

}  // namespace pairbound
