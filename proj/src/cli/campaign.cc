#include "entropic/cli/campaign.h"

#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "checks.h"
#include "entropic/errors.h"
#include "entropic/mixing_order.h"
#include "entropic/quantum_core.h"
#include "entropic/rng.h"
#include "entropic/thermo.h"

namespace entropic::cli {

namespace {

struct KindName {
    CampaignKind kind;
    const char *name;
};

constexpr KindName kKindNames[] = {
    {CampaignKind::ClassicalBell, "classical-bell"},
    {CampaignKind::QuantumBell, "quantum-bell"},
    {CampaignKind::ProjectiveSecondLaw, "projective-second-law"},
    {CampaignKind::PovmPositivity, "povm-positivity"},
    {CampaignKind::MixingOrder, "mixing-order"},
    {CampaignKind::ThermoMixing, "thermo-mixing"},
};

constexpr size_t kMaxComparableDraws = 10000;

size_t draw(Rng &rng, size_t lo, size_t hi) { return std::uniform_int_distribution<size_t>(lo, hi)(rng); }

std::vector<Check> classical_bell_trial(uint64_t trial, Rng &rng) {
    const bool uniform = trial % 2 == 1;
    auto chain = random_markov_chain(rng, uniform);
    const auto &s = chain.joint.shape();
    return classical_battery(chain.joint,
                             fmt::format("trial {}: chain {}x{}x{}{}", trial, s[0], s[1], s[2],
                                         uniform ? ", uniform marginals" : ""),
                             true);
}

std::vector<Check> quantum_bell_trial(uint64_t trial, Rng &rng) {
    const std::vector<size_t> pair_dims = {2, 2};
    switch (trial % 4) {
        case 0: {
            auto a = DensityOperator::pure(random_pure_state(2, rng), {2});
            return quantum_battery(tensor(a, bell_pair()), fmt::format("trial {}: pure qubit (x) bell pair", trial));
        }
        case 1: {
            auto a = random_density(2, rng);
            return quantum_battery(tensor(a, random_density(4, rng, pair_dims)),
                                   fmt::format("trial {}: qubit (x) two-qubit state", trial));
        }
        case 2: {
            auto a = DensityOperator::maximally_mixed({2});
            return quantum_battery(tensor(a, random_density(4, rng, pair_dims)),
                                   fmt::format("trial {}: I/2 (x) two-qubit state", trial));
        }
        default:
            return quantum_battery(random_density(8, rng, {2, 2, 2}),
                                   fmt::format("trial {}: general three-qubit state", trial));
    }
}

std::vector<Check> projective_trial(uint64_t trial, Rng &rng) {
    const size_t dim = draw(rng, 2, 4);
    auto rho = random_density(dim, rng);
    auto projectors = random_projective(dim, rng);
    auto after = projective_measure_channel(rho, projectors);
    return {{make_report("projective_second_law", von_neumann_entropy(rho), von_neumann_entropy(after),
                         fmt::format("trial {}: dim {}, {} projectors", trial, dim, projectors.operators().size()),
                         "S(before) <= S(after)")}};
}

std::vector<Check> povm_trial(uint64_t trial, Rng &rng) {
    const size_t dim = draw(rng, 2, 4);
    const size_t effects = draw(rng, 2, 6);
    auto rho = random_density(dim, rng);
    auto povm = random_povm(dim, effects, rng);
    const std::string descriptor = fmt::format("trial {}: dim {}, {} effects", trial, dim, effects);

    double total = 0;
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto &e : povm.operators()) {
        const double p = (rho.matrix() * e).trace().real();
        total += p;
        smallest = std::min(smallest, p);
    }
    std::vector<Check> out;
    out.push_back({make_report("povm_normalization", std::abs(total - 1), kMeasurementTolerance, descriptor,
                               "|sum p - 1|"),
                   true, true});
    out.push_back({make_report("povm_probability_nonnegative", -smallest, 0.0, descriptor, "-min p")});
    out.push_back({make_report("povm_entropy_nonnegative", 0.0, shannon_entropy(povm_distribution(rho, povm)),
                               descriptor, "0 <= H(p)")});
    return out;
}

std::vector<Check> mixing_trial(uint64_t trial, Rng &rng, uint64_t &incomparable) {
    const size_t dim = draw(rng, 2, 6);
    for (size_t attempt = 0; attempt < kMaxComparableDraws; attempt++) {
        Spectrum a = random_spectrum(dim, rng);
        Spectrum b = random_spectrum(dim, rng);
        auto verdict = compare_mixing(a, b).verdict;
        if (verdict == MixingVerdict::Incomparable) {
            incomparable++;
            continue;
        }
        const double ha = spectrum_entropy(a);
        const double hb = spectrum_entropy(b);
        const std::string descriptor = fmt::format("trial {}: dim {}, {}", trial, dim, to_string(verdict));
        switch (verdict) {
            case MixingVerdict::LeftLessMixed:
                return {{make_report("mixing_homomorphism", ha, hb, descriptor, "H(less mixed) <= H(more mixed)")}};
            case MixingVerdict::RightLessMixed:
                return {{make_report("mixing_homomorphism", hb, ha, descriptor, "H(less mixed) <= H(more mixed)")}};
            default:
                return {{make_report("mixing_homomorphism", std::abs(ha - hb), 0.0, descriptor, "equal entropies")}};
        }
    }
    return {};
}

std::vector<Check> thermo_trial(uint64_t trial, Rng &rng) {
    LatticeScenario s;
    s.sites_a = draw(rng, 1, 6);
    s.sites_b = draw(rng, 1, 6);
    s.particles_a = draw(rng, 0, s.sites_a);
    s.particles_b = draw(rng, 0, s.sites_b);
    const std::string descriptor = fmt::format("trial {}: sites {}+{}, particles {}+{}", trial, s.sites_a, s.sites_b,
                                               s.particles_a, s.particles_b);
    const double distinct = entropy_of_mixing(s);
    s.same_species = true;
    const double same = entropy_of_mixing(s);

    const uint64_t omega = draw(rng, 1, 10000);
    const auto eq = uniform_equivalence(omega);

    std::vector<Check> out;
    out.push_back({make_report("mixing_entropy_nonnegative", 0.0, distinct, descriptor, "distinct species")});
    out.push_back({make_report("same_species_nonnegative", 0.0, same, descriptor, "same species")});
    out.push_back({make_report("same_species_not_above_distinct", same, distinct, descriptor)});
    out.push_back({make_report("uniform_equivalence", std::abs(eq.boltzmann - eq.gibbs_shannon),
                               1e-10 * std::max(1.0, eq.boltzmann),
                               fmt::format("trial {}: omega {}", trial, omega), "relative 1e-10"),
                   true, true});
    return out;
}

}  // namespace

const char *to_string(CampaignKind kind) {
    for (const auto &k : kKindNames) {
        if (k.kind == kind) return k.name;
    }
    return "unknown";
}

const std::vector<std::string> &campaign_kind_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &k : kKindNames) out.emplace_back(k.name);
        return out;
    }();
    return names;
}

CampaignKind campaign_kind_from_string(const std::string &name) {
    for (const auto &k : kKindNames) {
        if (name == k.name) return k.kind;
    }
    throw UsageError(
        fmt::format("unknown campaign kind '{}'; available: {}", name, fmt::join(campaign_kind_names(), ", ")));
}

void CampaignSpec::validate() const {
    if (trials < 1) {
        throw UsageError("campaign: trials must be at least 1");
    }
    if (!(tolerance >= 0) || !std::isfinite(tolerance)) {
        throw UsageError("campaign: tolerance must be a finite nonnegative number");
    }
}

bool CampaignResult::must_hold_failed() const {
    for (const auto &t : tallies) {
        if (t.must_hold_failure_count > 0) return true;
    }
    return false;
}

CampaignResult run_campaign(const CampaignSpec &spec) {
    spec.validate();
    CampaignResult result;
    result.spec = spec;
    std::map<std::string, size_t> index;
    uint64_t incomparable = 0;
    const bool thermo = spec.kind == CampaignKind::ThermoMixing;

    for (uint64_t trial = 0; trial < spec.trials; trial++) {
        Rng rng = trial_rng(spec.seed, trial);
        std::vector<Check> checks;
        try {
            switch (spec.kind) {
                case CampaignKind::ClassicalBell:
                    checks = classical_bell_trial(trial, rng);
                    break;
                case CampaignKind::QuantumBell:
                    checks = quantum_bell_trial(trial, rng);
                    break;
                case CampaignKind::ProjectiveSecondLaw:
                    checks = projective_trial(trial, rng);
                    break;
                case CampaignKind::PovmPositivity:
                    checks = povm_trial(trial, rng);
                    break;
                case CampaignKind::MixingOrder:
                    checks = mixing_trial(trial, rng, incomparable);
                    break;
                case CampaignKind::ThermoMixing:
                    checks = thermo_trial(trial, rng);
                    break;
            }
        } catch (const NumericError &e) {
            throw NumericError(fmt::format("{} trial {}: {}", to_string(spec.kind), trial, e.what()));
        } catch (const ValidationError &e) {
            throw ValidationError(fmt::format("{} trial {}: {}", to_string(spec.kind), trial, e.what()));
        }
        if (checks.empty()) {
            result.skipped++;
            continue;
        }

        for (const auto &c : checks) {
            const InequalityReport r = finalize(c, spec.tolerance, spec.natural_log && !thermo);
            auto [it, inserted] = index.try_emplace(r.name, result.tallies.size());
            if (inserted) {
                InequalityTally t;
                t.name = r.name;
                t.must_hold = c.must_hold;
                t.min_margin = std::numeric_limits<double>::infinity();
                t.max_lhs = -std::numeric_limits<double>::infinity();
                t.worst = r;
                result.tallies.push_back(std::move(t));
            }
            InequalityTally &t = result.tallies[it->second];
            t.must_hold = t.must_hold || c.must_hold;
            t.evaluated++;
            t.max_lhs = std::max(t.max_lhs, r.lhs);
            if (r.margin < t.min_margin) {
                t.min_margin = r.margin;
                t.worst = r;
            }
            if (r.satisfied) {
                t.satisfied++;
            } else {
                t.failure_count++;
                t.must_hold_failure_count += c.must_hold ? 1 : 0;
                if (t.failures.size() < kMaxRecordedFailures) {
                    t.failures.push_back({trial, r.margin});
                }
            }
        }
    }
    result.incomparable_draws = incomparable;
    return result;
}

Document campaign_document(const CampaignResult &result) {
    Document doc;
    const auto &spec = result.spec;
    const bool thermo = spec.kind == CampaignKind::ThermoMixing;
    doc.seed = spec.seed;
    doc.spec = {
        {"command", "campaign"},
        {"kind", to_string(spec.kind)},
        {"trials", spec.trials},
        {"seed", spec.seed},
        {"tolerance", spec.tolerance},
        {"log_base", thermo || spec.natural_log ? "e" : "2"},
    };
    Json inequalities = Json::array();
    for (const auto &t : result.tallies) {
        doc.results.push_back(t.worst);
        Json failures = Json::array();
        for (const auto &f : t.failures) {
            failures.push_back({{"trial", f.trial}, {"margin", f.margin}});
        }
        inequalities.push_back({
            {"name", t.name},
            {"must_hold", t.must_hold},
            {"evaluated", t.evaluated},
            {"satisfied", t.satisfied},
            {"failures", t.failure_count},
            {"must_hold_failures", t.must_hold_failure_count},
            {"min_margin", t.min_margin},
            {"max_lhs", t.max_lhs},
            {"failed_trials", std::move(failures)},
        });
    }
    doc.summary = {
        {"trials", spec.trials},
        {"skipped_trials", result.skipped},
        {"inequalities", std::move(inequalities)},
        {"must_hold_failed", result.must_hold_failed()},
    };
    if (spec.kind == CampaignKind::MixingOrder) {
        doc.summary["incomparable_draws"] = result.incomparable_draws;
    }
    return doc;
}

}  // namespace entropic::cli
