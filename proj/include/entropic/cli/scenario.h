#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entropic/cli/output.h"
#include "entropic/thermo.h"

namespace entropic::cli {

const std::vector<std::string> &scenario_names();

struct ScenarioParams {
    uint64_t seed = 0;
    double tolerance = kSatisfactionTolerance;
    bool natural_log = false;
    ThermoConfig thermo;
    bool thermo_overridden = false;  // --k/--h/--thermo-config given

    // mixing-lattice
    std::vector<uint64_t> sites = {2, 2};
    std::vector<uint64_t> particles = {2, 2};
    bool same_species = false;

    // sackur-tetrode-sweep
    double t_min = 1e-4;
    double t_max = 1.0;
    size_t points = 41;

    // phase-space; dp defaults to h.
    std::optional<double> dp;
    double dq = 1.0;
    unsigned phase_dims = 1;
};

// Throws UsageError for unknown names, listing the available scenarios.
Document run_scenario(const std::string &name, const ScenarioParams &params);

// Evaluates every applicable inequality on a JointDist3 or three-qubit
// density document. Must-hold failures are flagged in summary.must_hold_failed.
// Pipelining and the triangle are must-hold only for Markov chains, detected
// numerically unless assume_chain is set.
Document run_check(const Json &input, double tolerance, bool natural_log, bool assume_chain = false);

}  // namespace entropic::cli
