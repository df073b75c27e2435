#include "entropic/inequalities.h"

#include <cmath>

#include <fmt/format.h>

#include "entropic/errors.h"

namespace entropic {

InequalityReport make_report(std::string name, double lhs, double bound, std::string input_descriptor,
                             std::string notes, double tolerance) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.bound = bound;
    r.margin = bound - lhs;
    r.satisfied = r.margin >= -tolerance;
    r.input_descriptor = std::move(input_descriptor);
    r.notes = std::move(notes);
    return r;
}

ClassicalEntropies classical_entropies(const JointDist3 &j) {
    const JointDist2 xy = marginal(j, 0, 1);
    const JointDist2 xz = marginal(j, 0, 2);
    const JointDist2 yz = marginal(j, 1, 2);
    ClassicalEntropies e{};
    e.h_x = shannon_entropy(marginal(j, 0));
    e.h_y = shannon_entropy(marginal(j, 1));
    e.h_z = shannon_entropy(marginal(j, 2));
    e.h_xy = joint_entropy2(xy);
    e.h_xz = joint_entropy2(xz);
    e.h_yz = joint_entropy2(yz);
    e.i_xy = clip_mutual(e.h_x + e.h_y - e.h_xy);
    e.i_xz = clip_mutual(e.h_x + e.h_z - e.h_xz);
    e.i_yz = clip_mutual(e.h_y + e.h_z - e.h_yz);
    return e;
}

std::array<InequalityReport, 2> pipelining_check(const JointDist3 &j, const std::string &descriptor) {
    const auto e = classical_entropies(j);
    return {
        make_report("pipelining_yz_ge_xz", e.i_xz, e.i_yz, descriptor),
        make_report("pipelining_xy_ge_xz", e.i_xz, e.i_xy, descriptor),
    };
}

InequalityReport triangle_check(const JointDist3 &j, const std::string &descriptor) {
    const auto e = classical_entropies(j);
    return make_report("mutual_triangle", e.i_xz, e.i_xy + e.i_yz, descriptor);
}

std::array<InequalityReport, 3> bounded_difference_checks(const JointDist3 &j, const std::string &descriptor) {
    const auto e = classical_entropies(j);
    return {
        make_report("bounded_difference_y", e.i_xy + e.i_yz - e.i_xz, e.h_y, descriptor),
        make_report("bounded_difference_x", e.i_xy + e.i_xz - e.i_yz, e.h_x, descriptor),
        make_report("bounded_difference_z", -e.i_xy + e.i_xz + e.i_yz, e.h_z, descriptor),
    };
}

double cerf_adami_mutual_lhs(const JointDist3 &j) {
    const auto e = classical_entropies(j);
    return std::abs(e.i_xy - e.i_xz) + e.i_yz;
}

double cerf_adami_rewritten_lhs(const JointDist3 &j) {
    const auto e = classical_entropies(j);
    return std::abs(e.h_y - e.h_z + e.h_xz - e.h_xy) + e.h_y + e.h_z - e.h_yz;
}

InequalityReport cerf_adami_classical(const JointDist3 &j, const std::string &descriptor) {
    const auto e = classical_entropies(j);
    const double lhs = std::abs(e.i_xy - e.i_xz) + e.i_yz;
    const double rewritten = std::abs(e.h_y - e.h_z + e.h_xz - e.h_xy) + e.h_y + e.h_z - e.h_yz;
    if (std::abs(lhs - rewritten) > kRewriteAgreementTolerance) {
        throw NumericError(fmt::format("cerf_adami_classical: mutual form {:.17g} and joint form {:.17g} disagree",
                                       lhs, rewritten));
    }

    const bool uniform = std::abs(e.h_x - 1) <= kUniformMarginalTolerance &&
                         std::abs(e.h_y - 1) <= kUniformMarginalTolerance &&
                         std::abs(e.h_z - 1) <= kUniformMarginalTolerance;
    if (uniform) {
        return make_report("cerf_adami_classical", lhs, kClassicalBellBound, descriptor, "uniform binary marginals");
    }
    const bool y_branch = e.i_xy >= e.i_xz;
    return make_report("cerf_adami_classical", lhs, y_branch ? e.h_y : e.h_z, descriptor,
                       fmt::format("marginal entropies ({:.6g}, {:.6g}, {:.6g}) are not all 1; bound is H({})", e.h_x,
                                   e.h_y, e.h_z, y_branch ? "Y" : "Z"));
}

namespace {

void require_three_qubits(const DensityOperator &rho, const char *what) {
    if (rho.subsystem_dims() != std::vector<size_t>{2, 2, 2}) {
        throw UsageError(fmt::format("{}: expected subsystem dims (2, 2, 2)", what));
    }
}

struct QuantumMutuals {
    double s_a;
    double ab, ac, bc;
};

QuantumMutuals quantum_mutuals(const DensityOperator &rho) {
    return QuantumMutuals{
        von_neumann_entropy(partial_trace(rho, {0})),
        quantum_mutual_entropy(rho, {0}, {1}),
        quantum_mutual_entropy(rho, {0}, {2}),
        quantum_mutual_entropy(rho, {1}, {2}),
    };
}

}  // namespace

double product_deviation(const DensityOperator &rho) {
    require_three_qubits(rho, "product_deviation");
    const DensityOperator product = tensor(partial_trace(rho, {0}), partial_trace(rho, {1, 2}));
    return max_abs(product.matrix() - rho.matrix());
}

QuantumBellReport cerf_adami_quantum(const DensityOperator &rho, const std::string &descriptor) {
    require_three_qubits(rho, "cerf_adami_quantum");
    const auto m = quantum_mutuals(rho);
    const double lhs = std::abs(m.ab - m.ac) + m.bc;

    QuantumBellReport out;
    out.product_configuration = product_deviation(rho) <= kProductStateTolerance;
    out.quantum = make_report("cerf_adami_quantum", lhs, kQuantumBellBound, descriptor,
                              out.product_configuration
                                  ? "A unentangled with BC"
                                  : "A correlated with BC; bound 2 evaluated but not asserted");
    out.classical = make_report("cerf_adami_quantum_classical_bound", lhs, kClassicalBellBound, descriptor,
                                "classical bound; entangled pairs may exceed it");
    return out;
}

SubadditivityReport subadditivity_check(const DensityOperator &rho, const std::string &descriptor) {
    require_three_qubits(rho, "subadditivity_check");
    const auto m = quantum_mutuals(rho);

    SubadditivityReport out;
    std::string premise;
    if (m.ab > 1 || m.ac > 1 || m.bc > 1) {
        premise = "a pairwise mutual entropy exceeds 1";
    }
    out.pair_bound = make_report("quantum_pair_bound", m.ab + m.ac - m.bc, kQuantumBellBound, descriptor, premise);
    if (std::abs(m.s_a - 1) <= kUniformMarginalTolerance) {
        out.strong_subadditivity =
            make_report("strong_subadditivity", m.ab + m.ac, 2 * m.s_a, descriptor, premise);
    } else {
        out.notes = fmt::format("S(A) = {:.6g} is not 1; strong subadditivity check skipped", m.s_a);
    }
    return out;
}

}  // namespace entropic
