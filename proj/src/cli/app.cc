#include "entropic/cli/app.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "entropic/cli/campaign.h"
#include "entropic/cli/output.h"
#include "entropic/cli/scenario.h"
#include "entropic/errors.h"

namespace entropic::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Options {
    uint64_t seed = 0;
    uint64_t trials = 1000;
    std::string format = "text";
    double tolerance = kSatisfactionTolerance;
    std::string log_base = "2";
    std::string out_path;
    std::optional<double> k;
    std::optional<double> h;
    std::string thermo_config;

    std::string input_path;
    std::string kind;
    std::string scenario;
    ScenarioParams params;
    bool distinct = false;
    bool same = false;
    bool assume_chain = false;
};

ThermoConfig thermo_from(const Options &o, bool &overridden) {
    ThermoConfig cfg;
    overridden = false;
    if (!o.thermo_config.empty()) {
        cfg = thermo_config_from_json(parse_json(read_file(o.thermo_config)));
        overridden = true;
    }
    if (o.k) {
        cfg.k = *o.k;
        overridden = true;
    }
    if (o.h) {
        cfg.h = *o.h;
        overridden = true;
    }
    try {
        cfg.validate();
    } catch (const ValidationError &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

int emit(const Document &doc, const Options &o, std::ostream &out) {
    const Format format = format_from_string(o.format);
    if (o.out_path.empty()) {
        render(doc, format, out);
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            throw IoError(fmt::format("cannot write '{}'", o.out_path));
        }
        render(doc, format, file);
    }
    const bool failed = doc.summary.value("must_hold_failed", false);
    return failed ? kExitMustHoldFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Entropic inequality checks, property campaigns and thermodynamic scenarios", "entropic"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Base seed; trial i uses a substream of (seed, i)");
    app.add_option("--trials", o.trials, "Campaign trial count")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tolerance", o.tolerance, "Satisfaction tolerance on margins")->check(CLI::NonNegativeNumber);
    app.add_option("--log-base", o.log_base, "Entropy units: 2 for bits, e for nats")
        ->check(CLI::IsMember({"2", "e"}));
    app.add_option("--out", o.out_path, "Write output to FILE instead of stdout");
    app.add_option("--k-unit", o.k, "Thermodynamic entropy unit per nat (1 by default)");
    app.add_option("--planck", o.h, "Phase-space cell size (SI Planck constant by default)");
    app.add_option("--thermo-config", o.thermo_config, "JSON file {\"k\": ..., \"h\": ...}");

    auto *check = app.add_subcommand("check", "Evaluate all inequalities on a JointDist3 or three-qubit density file");
    check->add_option("file", o.input_path, "Input JSON")->required();
    check->add_flag("--assume-chain", o.assume_chain, "Treat the joint as X -> Y -> Z even if it is not one");

    auto *campaign = app.add_subcommand("campaign", "Run a seeded property campaign");
    campaign->add_option("kind", o.kind, fmt::format("One of: {}", fmt::join(campaign_kind_names(), ", ")))
        ->required();

    auto *scenario = app.add_subcommand("scenario", "Run a named scenario");
    scenario->add_option("name", o.scenario, fmt::format("One of: {}", fmt::join(scenario_names(), ", ")))
        ->required();
    scenario->add_option("--sites", o.params.sites, "mixing-lattice: compartment sizes A B")->expected(2);
    scenario->add_option("--particles", o.params.particles, "mixing-lattice: particle counts A B")->expected(2);
    auto *distinct = scenario->add_flag("--distinct", o.distinct, "mixing-lattice: distinguishable species");
    scenario->add_flag("--same", o.same, "mixing-lattice: identical species")->excludes(distinct);
    scenario->add_option("--tmin", o.params.t_min, "sackur-tetrode-sweep: lowest temperature, K");
    scenario->add_option("--tmax", o.params.t_max, "sackur-tetrode-sweep: highest temperature, K");
    scenario->add_option("--points", o.params.points, "sackur-tetrode-sweep: sample count");
    scenario->add_option("--dp", o.params.dp, "phase-space: momentum spread (default h)");
    scenario->add_option("--dq", o.params.dq, "phase-space: position spread");
    scenario->add_option("--d", o.params.phase_dims, "phase-space: degrees of freedom");

    auto *report = app.add_subcommand("report", "Re-emit a saved JSON result in another format");
    report->add_option("file", o.input_path, "Saved JSON output")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const bool natural_log = o.log_base == "e";
    try {
        if (check->parsed()) {
            return emit(run_check(parse_json(read_file(o.input_path)), o.tolerance, natural_log, o.assume_chain), o, out);
        }
        if (campaign->parsed()) {
            CampaignSpec spec;
            spec.kind = campaign_kind_from_string(o.kind);
            spec.trials = o.trials;
            spec.seed = o.seed;
            spec.tolerance = o.tolerance;
            spec.natural_log = natural_log;
            return emit(campaign_document(run_campaign(spec)), o, out);
        }
        if (scenario->parsed()) {
            o.params.seed = o.seed;
            o.params.tolerance = o.tolerance;
            o.params.natural_log = natural_log;
            o.params.same_species = o.same;
            o.params.thermo = thermo_from(o, o.params.thermo_overridden);
            return emit(run_scenario(o.scenario, o.params), o, out);
        }
        emit(document_from_json(parse_json(read_file(o.input_path))), o, out);
        return kExitOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitError;
    } catch (const NumericError &e) {
        err << "numeric error: " << e.what() << "\n";
        return kExitError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace entropic::cli
