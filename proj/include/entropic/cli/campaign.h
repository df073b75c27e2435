#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entropic/cli/output.h"
#include "entropic/inequalities.h"

namespace entropic::cli {

enum class CampaignKind {
    ClassicalBell,
    QuantumBell,
    ProjectiveSecondLaw,
    PovmPositivity,
    MixingOrder,
    ThermoMixing,
};

const char *to_string(CampaignKind kind);
// Throws UsageError listing the known kinds.
CampaignKind campaign_kind_from_string(const std::string &name);
const std::vector<std::string> &campaign_kind_names();

struct CampaignSpec {
    CampaignKind kind = CampaignKind::ClassicalBell;
    uint64_t trials = 1000;
    uint64_t seed = 0;
    double tolerance = kSatisfactionTolerance;
    // Report entropies in nats instead of bits (thermo kinds are always natural).
    bool natural_log = false;

    // Throws UsageError.
    void validate() const;
};

struct TrialFailure {
    uint64_t trial;
    double margin;
};

inline constexpr size_t kMaxRecordedFailures = 20;

struct InequalityTally {
    std::string name;
    bool must_hold = true;  // any evaluation was must-hold
    uint64_t evaluated = 0;
    uint64_t satisfied = 0;
    double min_margin = 0;
    double max_lhs = 0;
    InequalityReport worst;
    std::vector<TrialFailure> failures;  // first kMaxRecordedFailures only
    uint64_t failure_count = 0;
    uint64_t must_hold_failure_count = 0;
};

struct CampaignResult {
    CampaignSpec spec;
    std::vector<InequalityTally> tallies;  // in order of first appearance
    uint64_t skipped = 0;
    uint64_t incomparable_draws = 0;  // mixing-order only

    bool must_hold_failed() const;
};

// Deterministic in spec.seed: trial i draws from trial_rng(seed, i).
// Numeric errors from the modules are rethrown with the trial index.
CampaignResult run_campaign(const CampaignSpec &spec);

Document campaign_document(const CampaignResult &result);

}  // namespace entropic::cli
