#include "entropic/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "entropic/errors.h"

namespace entropic {

void require_square_finite(const ComplexMatrix &m, const char *what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw ValidationError(fmt::format("{}: matrix is {}x{}, expected square", what, m.rows(), m.cols()));
    }
    if (!m.allFinite()) {
        throw ValidationError(fmt::format("{}: non-finite entry", what));
    }
}

double hermiticity_error(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexMatrix &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0;
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// A <- U^dag A U and V <- V U for the unitary U acting on the (p, q) plane
// that zeroes A(p, q).
void rotate(ComplexMatrix &a, ComplexMatrix &v, Eigen::Index p, Eigen::Index q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0) {
        return;
    }
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double zeta = (aqq - app) / (2 * r);
    const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
    const double c = 1 / std::sqrt(1 + t * t);
    const double s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
    const Complex u00 = c;
    const Complex u01 = s;
    const Complex u10 = -std::conj(phase) * s;
    const Complex u11 = std::conj(phase) * c;

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; k++) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * u00 + akq * u10;
        a(k, q) = akp * u01 + akq * u11;
    }
    for (Eigen::Index k = 0; k < n; k++) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
        a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (Eigen::Index k = 0; k < n; k++) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * u00 + vkq * u10;
        v(k, q) = vkp * u01 + vkq * u11;
    }
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix &m) {
    require_square_finite(m, "hermitian_eigensystem");
    const double herr = hermiticity_error(m);
    if (herr > kHermiticityTolerance) {
        throw ValidationError(fmt::format("hermitian_eigensystem: matrix is not Hermitian (error {:.3g})", herr));
    }
    ComplexMatrix a = (m + m.adjoint()) / 2.0;
    const Eigen::Index n = a.rows();
    ComplexMatrix v = ComplexMatrix::Identity(n, n);
    const double threshold = kJacobiOffDiagonalThreshold * std::max(1.0, a.norm());

    int sweeps = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweeps == kJacobiMaxSweeps) {
            throw NumericError(fmt::format("hermitian_eigensystem: no convergence after {} sweeps", sweeps));
        }
        for (Eigen::Index p = 0; p < n - 1; p++) {
            for (Eigen::Index q = p + 1; q < n; q++) {
                rotate(a, v, p, q);
            }
        }
        sweeps++;
    }

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

    Eigensystem es;
    es.sweeps = sweeps;
    es.eigenvalues.reserve(order.size());
    es.eigenvectors.resize(n, n);
    for (Eigen::Index j = 0; j < n; j++) {
        const Eigen::Index src = order[static_cast<size_t>(j)];
        es.eigenvalues.push_back(a(src, src).real());
        es.eigenvectors.col(j) = v.col(src);
    }
    return es;
}

ComplexMatrix reconstruct(const Eigensystem &es) {
    return apply_spectral(es, [](double lambda) { return Complex(lambda); });
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace entropic
