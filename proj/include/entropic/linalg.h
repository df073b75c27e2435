#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entropic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermiticityTolerance = 1e-10;
// Jacobi stops once the off-diagonal Frobenius norm is below this, scaled by
// max(1, ||A||_F).
inline constexpr double kJacobiOffDiagonalThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

struct Eigensystem {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // column j belongs to eigenvalues[j]
    int sweeps = 0;
};

// Throws ValidationError unless m is square, non-empty and finite.
void require_square_finite(const ComplexMatrix &m, const char *what);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_error(const ComplexMatrix &m);
double max_abs(const ComplexMatrix &m);

// Cyclic complex Jacobi rotations. Throws ValidationError on non-Hermitian
// input and NumericError if kJacobiMaxSweeps sweeps do not converge.
Eigensystem hermitian_eigensystem(const ComplexMatrix &m);

// sum_j f(lambda_j) |j><j|
template <typename F>
ComplexMatrix apply_spectral(const Eigensystem &es, F &&f) {
    const auto n = es.eigenvectors.rows();
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        out += f(es.eigenvalues[static_cast<size_t>(j)]) * es.eigenvectors.col(j) * es.eigenvectors.col(j).adjoint();
    }
    return out;
}

ComplexMatrix reconstruct(const Eigensystem &es);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace entropic
