#include "checks.h"

#include <cmath>
#include <numbers>

namespace entropic::cli {

InequalityReport finalize(const Check &c, double tolerance, bool natural_log) {
    InequalityReport r = c.report;
    if (natural_log) {
        r.lhs *= std::numbers::ln2;
        r.bound *= std::numbers::ln2;
        r.margin *= std::numbers::ln2;
    }
    r.satisfied = r.margin >= -(c.exact ? 0.0 : tolerance);
    return r;
}

std::vector<Check> classical_battery(const JointDist3 &j, const std::string &descriptor, bool is_chain) {
    std::vector<Check> out;
    auto chain_only = [&](InequalityReport r) {
        if (!is_chain) {
            r.notes = "input is not a Markov chain; informational";
        }
        out.push_back({std::move(r), is_chain});
    };
    for (auto &r : pipelining_check(j, descriptor)) chain_only(r);
    chain_only(triangle_check(j, descriptor));
    for (auto &r : bounded_difference_checks(j, descriptor)) out.push_back({r, true});
    out.push_back({cerf_adami_classical(j, descriptor), true});
    const double disagreement = std::abs(cerf_adami_rewritten_lhs(j) - cerf_adami_mutual_lhs(j));
    out.push_back({make_report("cerf_adami_form_agreement", disagreement, kRewriteAgreementTolerance, descriptor,
                               "mutual-entropy form vs joint-entropy form"),
                   true, true});
    return out;
}

std::vector<Check> quantum_battery(const DensityOperator &rho, const std::string &descriptor) {
    std::vector<Check> out;
    auto bell = cerf_adami_quantum(rho, descriptor);
    if (!bell.product_configuration) {
        bell.quantum.name = "cerf_adami_quantum_general";
    }
    out.push_back({bell.quantum, bell.product_configuration});
    out.push_back({bell.classical, false});
    auto ssa = subadditivity_check(rho, descriptor);
    out.push_back({ssa.pair_bound, true});
    if (ssa.strong_subadditivity) {
        out.push_back({*ssa.strong_subadditivity, true});
    }
    return out;
}

}  // namespace entropic::cli
