#include "entropic/cli/app.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "gtest/gtest.h"

#include "entropic/cli/output.h"
#include "entropic/serialization.h"

using namespace entropic;
using namespace entropic::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    auto r = run(args);
    EXPECT_EQ(r.err, "");
    return parse_json(r.out);
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("entropic_cli_test_" + name)).string();
}

void write_file(const std::string &path, const std::string &text) { std::ofstream(path) << text; }

const Json *find_tally(const Json &summary, const std::string &name) {
    for (const auto &t : summary.at("inequalities")) {
        if (t.at("name") == name) return &t;
    }
    return nullptr;
}

// Z copies X, Y independent: not a Markov chain X -> Y -> Z.
const char *kCopyJoint = R"({"shape": [2, 2, 2], "probs": [[[0.25, 0], [0.25, 0]], [[0, 0.25], [0, 0.25]]]})";

}  // namespace

TEST(cli, json_output_is_deterministic) {
    const std::vector<std::string> args = {"--format", "json", "--trials", "1", "--seed", "42", "campaign",
                                           "classical-bell"};
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);

    for (const char *kind : {"quantum-bell", "povm-positivity", "mixing-order", "thermo-mixing"}) {
        const std::vector<std::string> more = {"--format", "json", "--trials", "25", "--seed", "3", "campaign", kind};
        EXPECT_EQ(run(more).out, run(more).out) << kind;
    }
    auto other = run({"--format", "json", "--trials", "1", "--seed", "43", "campaign", "classical-bell"});
    EXPECT_NE(a.out, other.out);
}

TEST(cli, classical_campaign_all_satisfied) {
    auto doc = run_json({"--trials", "10000", "--seed", "42", "campaign", "classical-bell"});
    EXPECT_EQ(doc.at("tool_version"), kToolVersion);
    EXPECT_EQ(doc.at("seed"), 42);
    EXPECT_FALSE(doc.at("summary").at("must_hold_failed").get<bool>());
    for (const auto &t : doc.at("summary").at("inequalities")) {
        EXPECT_EQ(t.at("evaluated"), 10000) << t.at("name");
        EXPECT_EQ(t.at("satisfied"), 10000) << t.at("name");
    }
}

TEST(cli, quantum_campaign_reports_bell_configuration) {
    auto r = run({"--format", "json", "--trials", "40", "--seed", "1", "campaign", "quantum-bell"});
    EXPECT_EQ(r.code, kExitOk);
    auto doc = parse_json(r.out);
    const Json *quantum = find_tally(doc.at("summary"), "cerf_adami_quantum");
    ASSERT_NE(quantum, nullptr);
    EXPECT_NEAR(quantum->at("max_lhs").get<double>(), 2.0, 1e-9);
    EXPECT_EQ(quantum->at("failures"), 0);
    const Json *classical = find_tally(doc.at("summary"), "cerf_adami_quantum_classical_bound");
    ASSERT_NE(classical, nullptr);
    EXPECT_FALSE(classical->at("must_hold").get<bool>());
    EXPECT_GE(classical->at("failures").get<int>(), 10);
    EXPECT_EQ(classical->at("must_hold_failures"), 0);
    const Json *general = find_tally(doc.at("summary"), "cerf_adami_quantum_general");
    ASSERT_NE(general, nullptr);
    EXPECT_FALSE(general->at("must_hold").get<bool>());
}

TEST(cli, bell_violation_scenario) {
    auto doc = run_json({"scenario", "bell-violation"});
    const auto &results = doc.at("results");
    ASSERT_GE(results.size(), 2u);
    EXPECT_EQ(results[0].at("name"), "cerf_adami_quantum");
    EXPECT_NEAR(results[0].at("lhs").get<double>(), 2.0, 1e-9);
    EXPECT_TRUE(results[0].at("satisfied").get<bool>());
    EXPECT_FALSE(results[1].at("satisfied").get<bool>());
    EXPECT_NEAR(doc.at("summary").at("entropies").at("S(B,C)").get<double>(), 0.0, 1e-9);
}

TEST(cli, mixing_lattice_scenario) {
    auto distinct = run_json({"scenario", "mixing-lattice", "--sites", "2", "2", "--particles", "2", "2", "--distinct"});
    EXPECT_NEAR(distinct.at("summary").at("entropy_of_mixing").get<double>(), std::log(6.0), 1e-14);
    auto same = run_json({"scenario", "mixing-lattice", "--sites", "2", "2", "--particles", "2", "2", "--same"});
    EXPECT_NEAR(same.at("summary").at("entropy_of_mixing").get<double>(), 0.0, 1e-14);

    auto text = run({"scenario", "mixing-lattice", "--sites", "2", "2", "--particles", "2", "2", "--distinct"});
    EXPECT_NE(text.out.find("entropy_of_mixing: 1.79176\n"), std::string::npos);

    auto bad = run({"scenario", "mixing-lattice", "--sites", "2", "2", "--particles", "3", "2"});
    EXPECT_EQ(bad.code, kExitUsage);
    auto both = run({"scenario", "mixing-lattice", "--same", "--distinct"});
    EXPECT_EQ(both.code, kExitUsage);
}

TEST(cli, usage_errors) {
    auto unknown = run({"scenario", "nope"});
    EXPECT_EQ(unknown.code, kExitUsage);
    EXPECT_NE(unknown.err.find("available: bell-violation, noiseless-chain, mixing-lattice"), std::string::npos);

    EXPECT_EQ(run({"campaign", "nope"}).code, kExitUsage);
    EXPECT_EQ(run({"--format", "xml", "scenario", "noiseless-chain"}).code, kExitUsage);
    EXPECT_EQ(run({"--trials", "0", "campaign", "classical-bell"}).code, kExitUsage);
    EXPECT_EQ(run({"--log-base", "10", "scenario", "noiseless-chain"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(cli, json_numbers_have_twelve_significant_digits) {
    std::vector<std::vector<std::string>> commands = {
        {"--format", "json", "scenario", "bell-violation"},
        {"--format", "json", "scenario", "sackur-tetrode-sweep"},
        {"--format", "json", "--trials", "20", "campaign", "projective-second-law"},
        {"--format", "json", "scenario", "phase-space", "--dp", "1e-34"},
    };
    const std::regex float_token(R"([-+]?\d+\.\d*(?:[eE][-+]?\d+)?|[-+]?\d+[eE][-+]?\d+)");
    for (const auto &args : commands) {
        const std::string out = std::regex_replace(run(args).out, std::regex(R"("[^"]*")"), "\"\"");
        int floats = 0;
        for (std::sregex_iterator it(out.begin(), out.end(), float_token), end; it != end; ++it) {
            std::string mantissa = it->str();
            mantissa = mantissa.substr(0, mantissa.find_first_of("eE"));
            int digits = 0;
            for (char c : mantissa) digits += std::isdigit(static_cast<unsigned char>(c)) ? 1 : 0;
            EXPECT_GE(digits, 12) << it->str();
            floats++;
        }
        EXPECT_GT(floats, 0);
    }
}

TEST(cli, report_round_trip) {
    const std::string path = temp_path("report.json");
    auto saved = run({"--format", "json", "--out", path, "--trials", "5", "campaign", "povm-positivity"});
    EXPECT_EQ(saved.code, 0);
    EXPECT_EQ(saved.out, "");
    auto direct = run({"--format", "json", "--trials", "5", "campaign", "povm-positivity"});
    auto again = run({"--format", "json", "report", path});
    EXPECT_EQ(again.out, direct.out);

    auto csv = run({"--format", "csv", "report", path});
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), kReportCsvHeader);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);

    const std::string sweep = temp_path("sweep.json");
    run({"--format", "json", "--out", sweep, "scenario", "sackur-tetrode-sweep"});
    EXPECT_EQ(run({"--format", "csv", "report", sweep}).out, run({"--format", "csv", "scenario", "sackur-tetrode-sweep"}).out);

    EXPECT_EQ(run({"report", temp_path("missing.json")}).code, kExitError);
    write_file(temp_path("garbage.json"), "{\"seed\": 1}");
    EXPECT_EQ(run({"report", temp_path("garbage.json")}).code, kExitError);
}

TEST(cli, sweep_csv_crosses_zero) {
    auto r = run({"--format", "csv", "scenario", "sackur-tetrode-sweep"});
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "T,S");
    double previous_t = 0;
    double previous_s = 0;
    int crossings = 0;
    while (std::getline(lines, line)) {
        const double t = std::stod(line.substr(0, line.find(',')));
        const double s = std::stod(line.substr(line.find(',') + 1));
        if (previous_t > 0 && previous_s < 0 && s >= 0) {
            crossings++;
            EXPECT_LT(previous_t, 0.0129019);
            EXPECT_GT(t, 0.0129019);
        }
        previous_t = t;
        previous_s = s;
    }
    EXPECT_EQ(crossings, 1);
}

TEST(cli, check_joint_and_density_files) {
    const std::string joint = temp_path("copy_joint.json");
    write_file(joint, kCopyJoint);
    auto informational = run({"check", joint});
    EXPECT_EQ(informational.code, kExitOk);
    EXPECT_NE(informational.out.find("VIOLATED"), std::string::npos);
    EXPECT_NE(informational.out.find("not a Markov chain"), std::string::npos);
    auto asserted = run({"check", "--assume-chain", joint});
    EXPECT_EQ(asserted.code, kExitMustHoldFailed);

    const std::string density = temp_path("bell.json");
    write_file(density, dump_precise(to_json_value(tensor(DensityOperator::maximally_mixed({2}), bell_pair()))));
    auto doc = run_json({"check", density});
    EXPECT_NEAR(doc.at("results")[0].at("lhs").get<double>(), 2.0, 1e-9);
    EXPECT_FALSE(doc.at("summary").at("must_hold_failed").get<bool>());

    const std::string pair = temp_path("pair.json");
    write_file(pair, dump_precise(to_json_value(bell_pair())));
    EXPECT_EQ(run({"check", pair}).code, kExitUsage);
    write_file(pair, "[1, 2");
    EXPECT_EQ(run({"check", pair}).code, kExitError);
}

TEST(cli, natural_log_units) {
    auto doc = run_json({"--log-base", "e", "scenario", "noiseless-chain"});
    EXPECT_NEAR(doc.at("results")[0].at("lhs").get<double>(), std::log(2.0), 1e-15);
    EXPECT_EQ(doc.at("spec").at("scenario"), "noiseless-chain");
}

TEST(cli, thermo_flags) {
    auto doc = run_json({"--k-unit", "2", "scenario", "mixing-lattice", "--distinct"});
    EXPECT_NEAR(doc.at("summary").at("entropy_of_mixing").get<double>(), 2 * std::log(6.0), 1e-14);
    const std::string cfg = temp_path("thermo.json");
    write_file(cfg, R"({"k": 1, "h": 2})");
    auto phase = run_json({"--thermo-config", cfg, "scenario", "phase-space", "--dp", "1", "--dq", "1"});
    EXPECT_NEAR(phase.at("summary").at("entropy").get<double>(), -std::log(2.0), 1e-15);
    EXPECT_TRUE(phase.at("summary").at("below_uncertainty_floor").get<bool>());
    EXPECT_EQ(run({"--k-unit", "-1", "scenario", "phase-space"}).code, kExitUsage);
}
