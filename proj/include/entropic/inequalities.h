#pragma once

#include <array>
#include <optional>
#include <string>

#include "entropic/prob_core.h"
#include "entropic/quantum_core.h"

// Evaluation of the classical and quantum entropic inequalities: data
// pipelining, the mutual-entropy triangle, the bounded-difference family,
// Cerf-Adami (classical and quantum) and the three-qubit bounds leading to
// strong subadditivity.
//
// Every inequality is reported in the form lhs <= bound. For ">=" statements
// lhs is the side that must be smaller.

namespace entropic {

inline constexpr double kSatisfactionTolerance = 1e-9;
inline constexpr double kUniformMarginalTolerance = 1e-6;
inline constexpr double kRewriteAgreementTolerance = 1e-9;
inline constexpr double kProductStateTolerance = 1e-9;
inline constexpr double kClassicalBellBound = 1.0;
inline constexpr double kQuantumBellBound = 2.0;

struct InequalityReport {
    std::string name;
    double lhs = 0;
    double bound = 0;
    bool satisfied = false;
    double margin = 0;  // bound - lhs
    std::string input_descriptor;
    std::string notes;
};

// satisfied <=> margin >= -tolerance
InequalityReport make_report(std::string name, double lhs, double bound, std::string input_descriptor,
                             std::string notes = {}, double tolerance = kSatisfactionTolerance);

/// Single-system entropies and pairwise mutual entropies of a rank-3 joint.
struct ClassicalEntropies {
    double h_x, h_y, h_z;
    double h_xy, h_xz, h_yz;
    double i_xy, i_xz, i_yz;
};

ClassicalEntropies classical_entropies(const JointDist3 &j);

// H(Y:Z) >= H(X:Z) and H(X:Y) >= H(X:Z).
std::array<InequalityReport, 2> pipelining_check(const JointDist3 &j, const std::string &descriptor = "joint");

// H(X:Y) + H(Y:Z) >= H(X:Z)
InequalityReport triangle_check(const JointDist3 &j, const std::string &descriptor = "joint");

// H(X:Y) + H(Y:Z) - H(X:Z) <= H(Y)
// H(X:Y) + H(X:Z) - H(Y:Z) <= H(X)
// -H(X:Y) + H(X:Z) + H(Y:Z) <= H(Z)
std::array<InequalityReport, 3> bounded_difference_checks(const JointDist3 &j,
                                                          const std::string &descriptor = "joint");

// |H(X:Y) - H(X:Z)| + H(Y:Z) <= 1.
//
// The bound 1 is used only when H(X), H(Y), H(Z) are all 1 within
// kUniformMarginalTolerance. Otherwise the bound is H(Y) when
// H(X:Y) >= H(X:Z) and H(Z) otherwise, and the notes flag the
// non-uniformity. Throws NumericError if the joint-entropy form disagrees with
// the mutual-entropy form by more than kRewriteAgreementTolerance.
InequalityReport cerf_adami_classical(const JointDist3 &j, const std::string &descriptor = "joint");

// |H(Y) - H(Z) + H(X,Z) - H(X,Y)| + H(Y) + H(Z) - H(Y,Z), from joint entropies only.
double cerf_adami_rewritten_lhs(const JointDist3 &j);
// The same left-hand side from pairwise mutual entropies.
double cerf_adami_mutual_lhs(const JointDist3 &j);

struct QuantumBellReport {
    InequalityReport quantum;    // against bound 2; carries the satisfied flag that matters
    InequalityReport classical;  // same lhs against bound 1
    // rho = rho_A (x) rho_BC within kProductStateTolerance: the configuration
    // for which bound 2 is asserted.
    bool product_configuration = false;
};

// |S(A:B) - S(A:C)| + S(B:C) on three qubits. Throws UsageError unless the
// subsystem dims are (2, 2, 2).
QuantumBellReport cerf_adami_quantum(const DensityOperator &rho, const std::string &descriptor = "rho");

struct SubadditivityReport {
    // S(A:B) + S(A:C) - S(B:C) <= 2
    InequalityReport pair_bound;
    // S(A:B) + S(A:C) <= 2 S(A), evaluated only when S(A) = 1 within
    // kUniformMarginalTolerance.
    std::optional<InequalityReport> strong_subadditivity;
    std::string notes;
};

SubadditivityReport subadditivity_check(const DensityOperator &rho, const std::string &descriptor = "rho");

// max |rho - rho_A (x) rho_BC| for a three-qubit operator.
double product_deviation(const DensityOperator &rho);

}  // namespace entropic
