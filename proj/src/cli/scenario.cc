#include "entropic/cli/scenario.h"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "checks.h"
#include "entropic/errors.h"
#include "entropic/quantum_core.h"
#include "entropic/rng.h"

namespace entropic::cli {

namespace {

// Appends finalized reports; returns true if a must-hold check failed.
bool append_checks(Document &doc, const std::vector<Check> &checks, double tolerance, bool natural_log) {
    bool failed = false;
    for (const auto &c : checks) {
        auto r = finalize(c, tolerance, natural_log);
        failed = failed || (c.must_hold && !r.satisfied);
        doc.results.push_back(std::move(r));
    }
    return failed;
}

Json base_spec(const std::string &name, const ScenarioParams &p) {
    return {{"command", "scenario"}, {"scenario", name}, {"seed", p.seed}, {"tolerance", p.tolerance}};
}

Document bell_violation(const ScenarioParams &p) {
    Rng rng = trial_rng(p.seed, 0);
    const auto a = DensityOperator::pure(random_pure_state(2, rng), {2});
    const auto rho = tensor(a, bell_pair());

    Document doc;
    doc.spec = base_spec("bell-violation", p);
    doc.spec["state"] = "random pure qubit (x) bell pair";
    const bool failed = append_checks(doc, quantum_battery(rho, "pure qubit (x) bell pair"), p.tolerance,
                                      p.natural_log);

    const double scale = p.natural_log ? std::numbers::ln2 : 1.0;
    const auto b = partial_trace(rho, {1});
    const auto c = partial_trace(rho, {2});
    const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
    doc.summary = {
        {"entropies",
         {
             {"S(A)", scale * von_neumann_entropy(partial_trace(rho, {0}))},
             {"S(B)", scale * von_neumann_entropy(b)},
             {"S(C)", scale * von_neumann_entropy(c)},
             {"S(B,C)", scale * von_neumann_entropy(partial_trace(rho, {1, 2}))},
         }},
        {"reduced_deviation_from_half_identity",
         {{"B", max_abs(b.matrix() - half)}, {"C", max_abs(c.matrix() - half)}}},
        {"must_hold_failed", failed},
    };
    return doc;
}

Document noiseless_chain(const ScenarioParams &p) {
    const auto j = markov_chain(ProbDist({0.5, 0.5}), StochasticMatrix::identity(2), StochasticMatrix::identity(2));
    Document doc;
    doc.spec = base_spec("noiseless-chain", p);
    doc.spec["input"] = to_json_value(j);
    const bool failed = append_checks(doc, classical_battery(j, "noiseless binary chain", true), p.tolerance,
                                      p.natural_log);
    doc.summary = {{"must_hold_failed", failed}};
    return doc;
}

Document mixing_lattice(const ScenarioParams &p) {
    if (p.sites.size() != 2 || p.particles.size() != 2) {
        throw UsageError("mixing-lattice: --sites and --particles each take two values");
    }
    LatticeScenario s{p.sites[0], p.sites[1], p.particles[0], p.particles[1], p.same_species};
    try {
        s.validate();
    } catch (const ValidationError &e) {
        throw UsageError(e.what());
    }
    const auto m = mixing_multiplicities(s);
    const double entropy = entropy_of_mixing(s, p.thermo);

    Document doc;
    doc.spec = base_spec("mixing-lattice", p);
    doc.spec["sites"] = p.sites;
    doc.spec["particles"] = p.particles;
    doc.spec["species"] = p.same_species ? "same" : "distinct";
    doc.spec["thermo"] = to_json_value(p.thermo);
    const std::string descriptor = fmt::format("sites {}+{}, particles {}+{}, {} species", s.sites_a, s.sites_b,
                                               s.particles_a, s.particles_b, p.same_species ? "same" : "distinct");
    const bool failed = append_checks(
        doc, {{make_report("mixing_entropy_nonnegative", 0.0, entropy, descriptor, "k [ln W_after - ln W_before]")}},
        p.tolerance, false);
    doc.summary = {
        {"ln_omega_before", m.ln_before},
        {"ln_omega_after", m.ln_after},
        {"entropy_of_mixing", entropy},
        {"must_hold_failed", failed},
    };
    return doc;
}

Document sackur_tetrode_scenario(const ScenarioParams &p) {
    const ThermoConfig cfg = p.thermo_overridden ? p.thermo : ThermoConfig::si_units();
    const double density = si::kLoschmidtDensity;
    const double mass = si::kHeliumMass;
    const auto samples = sackur_tetrode_sweep(density, mass, p.t_min, p.t_max, p.points, cfg);

    Document doc;
    doc.spec = base_spec("sackur-tetrode-sweep", p);
    doc.spec["gas"] = "helium";
    doc.spec["number_density"] = density;
    doc.spec["mass"] = mass;
    doc.spec["t_min"] = p.t_min;
    doc.spec["t_max"] = p.t_max;
    doc.spec["points"] = p.points;
    doc.spec["thermo"] = to_json_value(cfg);
    doc.table.columns = {"T", "S"};
    for (const auto &[t, s] : samples) {
        doc.table.rows.push_back({t, s});
    }
    doc.summary = {
        {"crossover_temperature", sackur_tetrode_crossover(density, mass, cfg)},
        {"units", "T in K; S per m^3 in units of k (J/K for SI k)"},
        {"must_hold_failed", false},
    };
    return doc;
}

Document phase_space(const ScenarioParams &p) {
    const ThermoConfig &cfg = p.thermo;
    const double dp = p.dp.value_or(cfg.h);
    const auto r = phase_space_entropy(dp, p.dq, p.phase_dims, cfg);

    Document doc;
    doc.spec = base_spec("phase-space", p);
    doc.spec["dp"] = dp;
    doc.spec["dq"] = p.dq;
    doc.spec["d"] = p.phase_dims;
    doc.spec["thermo"] = to_json_value(cfg);
    doc.summary = {
        {"entropy", r.entropy},
        {"cell_ratio", dp * p.dq / cfg.h},
        {"below_uncertainty_floor", r.below_uncertainty_floor},
        {"must_hold_failed", false},
    };
    return doc;
}

}  // namespace

const std::vector<std::string> &scenario_names() {
    static const std::vector<std::string> names = {"bell-violation", "noiseless-chain", "mixing-lattice",
                                                   "sackur-tetrode-sweep", "phase-space"};
    return names;
}

Document run_scenario(const std::string &name, const ScenarioParams &params) {
    params.thermo.validate();
    Document doc;
    if (name == "bell-violation") {
        doc = bell_violation(params);
    } else if (name == "noiseless-chain") {
        doc = noiseless_chain(params);
    } else if (name == "mixing-lattice") {
        doc = mixing_lattice(params);
    } else if (name == "sackur-tetrode-sweep") {
        doc = sackur_tetrode_scenario(params);
    } else if (name == "phase-space") {
        doc = phase_space(params);
    } else {
        throw UsageError(fmt::format("unknown scenario '{}'; available: {}", name, fmt::join(scenario_names(), ", ")));
    }
    doc.seed = params.seed;
    return doc;
}

Document run_check(const Json &input, double tolerance, bool natural_log, bool assume_chain) {
    Document doc;
    doc.spec = {{"command", "check"}, {"tolerance", tolerance}, {"log_base", natural_log ? "e" : "2"}};
    bool failed = false;
    if (input.is_object() && input.contains("re")) {
        const auto rho = density_from_json(input);
        doc.spec["input"] = "density";
        failed = append_checks(doc, quantum_battery(rho, "input density"), tolerance, natural_log);
        doc.summary = {{"product_deviation", product_deviation(rho)}};
    } else {
        const auto j = joint3_from_json(input);
        const double deviation = markov_deviation(j);
        const bool chain = assume_chain || deviation <= kMarkovCheckTolerance;
        doc.spec["input"] = "joint";
        failed = append_checks(doc, classical_battery(j, "input joint", chain), tolerance, natural_log);
        doc.summary = {{"markov_deviation", deviation}, {"markov_chain", chain}};
    }
    doc.summary["must_hold_failed"] = failed;
    return doc;
}

}  // namespace entropic::cli
