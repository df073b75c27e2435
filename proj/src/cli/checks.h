#pragma once

#include <string>
#include <vector>

#include "entropic/inequalities.h"

namespace entropic::cli {

struct Check {
    InequalityReport report;
    bool must_hold = true;
    // Exact checks carry their own tolerance in the bound.
    bool exact = false;
};

// Re-evaluates `satisfied` against the user tolerance; exact checks use 0.
InequalityReport finalize(const Check &c, double tolerance, bool natural_log);

// Markov-only inequalities (pipelining, triangle) are must-hold only when
// the joint is a chain.
std::vector<Check> classical_battery(const JointDist3 &j, const std::string &descriptor, bool is_chain);

std::vector<Check> quantum_battery(const DensityOperator &rho, const std::string &descriptor);

inline constexpr double kMarkovCheckTolerance = 1e-10;

}  // namespace entropic::cli
