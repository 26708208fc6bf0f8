#pragma once

#include <string>
#include <vector>

namespace lame {

/// Outcome of one verification property. margin is the worst observed
/// value of (checked quantity - its allowance): <= 0 passes, and the
/// magnitude says how much headroom was left.
struct PropertyResult {
    std::string name;
    bool passed;
    double worst_margin;
    std::string detail;
};

struct VerifyOptions {
    unsigned long long seed = 20240316;
    /// Multiplies the randomized sample counts; the pinned grids
    /// (theorem inclusions) are fixed.
    int grid_density = 1;
    /// Negative-control hook: integrate at a uselessly loose tolerance
    /// while keeping the nominal pass thresholds, so the integrator-
    /// dependent properties must fail.
    bool corrupt_tolerance = false;
};

/// Runs every invariant of the library as a checkable property and
/// reports one result per property.
std::vector<PropertyResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<PropertyResult>& results);

} // namespace lame
