#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ofw {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Brute-force LMO equivalence: simplex / flow / matroid objectives against
// exhaustive enumeration, and the trace-norm LMO against a dense SVD.
std::vector<CheckResult> lmo_equivalence_checks(std::uint64_t seed = 7);

// Gap and regret bound assertions: the smooth stochastic gap schedule on
// the ball and the adversarial regret bound on simplex and ball.
std::vector<CheckResult> bound_checks(std::uint64_t seed = 7);

// Prints "PASS <name>" / "FAIL <name>: <detail>" lines; returns true when
// everything passed.
bool report_checks(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace ofw
