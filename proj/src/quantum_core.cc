#include "entropic/quantum_core.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "entropic/errors.h"

namespace entropic {

namespace {

size_t product(const std::vector<size_t> &dims) {
    return std::accumulate(dims.begin(), dims.end(), size_t{1}, std::multiplies<>());
}

std::vector<size_t> checked_dims(std::vector<size_t> dims, size_t total) {
    if (dims.empty()) {
        dims = {total};
    }
    for (size_t d : dims) {
        if (d == 0) {
            throw ValidationError("DensityOperator: zero subsystem dimension");
        }
    }
    if (product(dims) != total) {
        throw ValidationError(
            fmt::format("DensityOperator: subsystem dims {} do not multiply to {}", fmt::join(dims, "x"), total));
    }
    return dims;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    require_square_finite(m, "DensityOperator");
    const double herr = hermiticity_error(m);
    if (herr > kHermiticityTolerance) {
        throw ValidationError(fmt::format("DensityOperator: not Hermitian (error {:.3g})", herr));
    }
    return (m + m.adjoint()) / 2.0;
}

Spectrum validated_spectrum(const ComplexMatrix &m) {
    const Complex tr = m.trace();
    if (std::abs(tr.real() - 1.0) > kTraceTolerance || std::abs(tr.imag()) > kTraceTolerance) {
        throw ValidationError(fmt::format("DensityOperator: trace is {:.17g}, expected 1", tr.real()));
    }
    auto es = hermitian_eigensystem(m);
    if (es.eigenvalues.back() < -kEigenvalueFloor) {
        throw ValidationError(
            fmt::format("DensityOperator: not positive (smallest eigenvalue {:.3g})", es.eigenvalues.back()));
    }
    return Spectrum(std::move(es.eigenvalues));
}

}  // namespace

DensityOperator::DensityOperator(const ComplexMatrix &matrix, std::vector<size_t> subsystem_dims)
    : matrix_(hermitian_part(matrix)),
      dims_(checked_dims(std::move(subsystem_dims), static_cast<size_t>(matrix.rows()))),
      spectrum_(validated_spectrum(matrix_)) {}

DensityOperator::DensityOperator(const ComplexMatrix &matrix) : DensityOperator(matrix, {}) {}

DensityOperator DensityOperator::pure(const ComplexVector &psi, std::vector<size_t> subsystem_dims) {
    const double norm = psi.norm();
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw ValidationError("DensityOperator::pure: state vector has zero or non-finite norm");
    }
    ComplexVector unit = psi / norm;
    return DensityOperator(unit * unit.adjoint(), std::move(subsystem_dims));
}

DensityOperator DensityOperator::maximally_mixed(std::vector<size_t> subsystem_dims) {
    const size_t n = product(subsystem_dims);
    if (subsystem_dims.empty() || n == 0) {
        throw ValidationError("DensityOperator::maximally_mixed: empty dims");
    }
    const auto dn = static_cast<Eigen::Index>(n);
    return DensityOperator(ComplexMatrix::Identity(dn, dn) / static_cast<double>(n), std::move(subsystem_dims));
}

DensityOperator DensityOperator::diagonal(const std::vector<double> &probs, std::vector<size_t> subsystem_dims) {
    ProbDist checked(probs);
    const auto n = static_cast<Eigen::Index>(probs.size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        m(i, i) = checked[static_cast<size_t>(i)];
    }
    return DensityOperator(m, std::move(subsystem_dims));
}

const char *to_string(MeasurementKind kind) {
    switch (kind) {
        case MeasurementKind::Projective:
            return "projective";
        case MeasurementKind::PovmEffects:
            return "povm";
        case MeasurementKind::Kraus:
            return "kraus";
    }
    return "?";
}

MeasurementKind measurement_kind_from_string(const std::string &name) {
    if (name == "projective") return MeasurementKind::Projective;
    if (name == "povm") return MeasurementKind::PovmEffects;
    if (name == "kraus") return MeasurementKind::Kraus;
    throw UsageError(fmt::format("unknown measurement kind '{}' (expected projective, povm or kraus)", name));
}

MeasurementSet::MeasurementSet(std::vector<ComplexMatrix> operators, MeasurementKind kind)
    : operators_(std::move(operators)), kind_(kind) {
    if (operators_.empty()) {
        throw ValidationError("MeasurementSet: no operators");
    }
    const auto n = operators_.front().rows();
    for (const auto &op : operators_) {
        require_square_finite(op, "MeasurementSet");
        if (op.rows() != n) {
            throw ValidationError("MeasurementSet: operators differ in dimension");
        }
    }
    const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    switch (kind_) {
        case MeasurementKind::Projective:
            for (size_t i = 0; i < operators_.size(); i++) {
                const auto &p = operators_[i];
                if (hermiticity_error(p) > kMeasurementTolerance) {
                    throw ValidationError(fmt::format("MeasurementSet: projector {} is not Hermitian", i));
                }
                if (max_abs(p * p - p) > kMeasurementTolerance) {
                    throw ValidationError(fmt::format("MeasurementSet: projector {} is not idempotent", i));
                }
                for (size_t j = i + 1; j < operators_.size(); j++) {
                    if (max_abs(p * operators_[j]) > kMeasurementTolerance) {
                        throw ValidationError(fmt::format("MeasurementSet: projectors {} and {} overlap", i, j));
                    }
                }
                total += p;
            }
            break;
        case MeasurementKind::PovmEffects:
            for (size_t i = 0; i < operators_.size(); i++) {
                const auto &a = operators_[i];
                if (hermiticity_error(a) > kMeasurementTolerance) {
                    throw ValidationError(fmt::format("MeasurementSet: effect {} is not Hermitian", i));
                }
                if (hermitian_eigensystem((a + a.adjoint()) / 2.0).eigenvalues.back() < -kMeasurementTolerance) {
                    throw ValidationError(fmt::format("MeasurementSet: effect {} is not positive", i));
                }
                total += a;
            }
            break;
        case MeasurementKind::Kraus:
            for (const auto &m : operators_) {
                total += m.adjoint() * m;
            }
            break;
    }
    const double err = max_abs(total - identity);
    if (err > kMeasurementTolerance) {
        throw ValidationError(
            fmt::format("MeasurementSet: {} completeness violated (error {:.3g})", to_string(kind_), err));
    }
}

MeasurementSet MeasurementSet::computational_basis(size_t dim, MeasurementKind kind) {
    std::vector<ComplexMatrix> ops;
    const auto n = static_cast<Eigen::Index>(dim);
    for (Eigen::Index i = 0; i < n; i++) {
        ComplexMatrix p = ComplexMatrix::Zero(n, n);
        p(i, i) = 1;
        ops.push_back(std::move(p));
    }
    return MeasurementSet(std::move(ops), kind);
}

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b) {
    std::vector<size_t> dims = a.subsystem_dims();
    dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
    return DensityOperator(kron(a.matrix(), b.matrix()), std::move(dims));
}

namespace {

std::vector<size_t> checked_subsystems(const std::vector<size_t> &keep, size_t count, const char *what) {
    if (keep.empty()) {
        throw UsageError(fmt::format("{}: empty subsystem set", what));
    }
    std::vector<size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError(fmt::format("{}: duplicate subsystem index", what));
    }
    if (sorted.back() >= count) {
        throw UsageError(fmt::format("{}: subsystem {} out of range ({} subsystems)", what, sorted.back(), count));
    }
    return sorted;
}

}  // namespace

DensityOperator partial_trace(const DensityOperator &rho, const std::vector<size_t> &keep) {
    const auto &dims = rho.subsystem_dims();
    const auto kept = checked_subsystems(keep, dims.size(), "partial_trace");
    if (kept.size() == dims.size()) {
        return rho;
    }

    const size_t n = dims.size();
    std::vector<bool> is_kept(n, false);
    for (size_t k : kept) {
        is_kept[k] = true;
    }
    std::vector<size_t> kept_dims;
    for (size_t k : kept) {
        kept_dims.push_back(dims[k]);
    }

    // For each basis index: its position in the kept space and in the traced space.
    const size_t total = rho.dim();
    std::vector<size_t> kept_index(total);
    std::vector<size_t> traced_index(total);
    std::vector<size_t> digits(n);
    for (size_t idx = 0; idx < total; idx++) {
        size_t rem = idx;
        for (size_t s = n; s-- > 0;) {
            digits[s] = rem % dims[s];
            rem /= dims[s];
        }
        size_t ki = 0;
        size_t ti = 0;
        for (size_t s = 0; s < n; s++) {
            if (is_kept[s]) {
                ki = ki * dims[s] + digits[s];
            } else {
                ti = ti * dims[s] + digits[s];
            }
        }
        kept_index[idx] = ki;
        traced_index[idx] = ti;
    }

    const auto kn = static_cast<Eigen::Index>(product(kept_dims));
    ComplexMatrix out = ComplexMatrix::Zero(kn, kn);
    const auto &m = rho.matrix();
    for (size_t i = 0; i < total; i++) {
        for (size_t j = 0; j < total; j++) {
            if (traced_index[i] == traced_index[j]) {
                out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return DensityOperator(out, std::move(kept_dims));
}

double von_neumann_entropy(const DensityOperator &rho) { return spectrum_entropy(rho.spectrum()); }

namespace {

void require_matching_dim(const DensityOperator &rho, const MeasurementSet &m, const char *what) {
    if (m.dim() != rho.dim()) {
        throw UsageError(fmt::format("{}: operators are {}-dimensional, state is {}-dimensional", what, m.dim(),
                                     rho.dim()));
    }
}

}  // namespace

ProbDist povm_distribution(const DensityOperator &rho, const MeasurementSet &effects) {
    require_matching_dim(rho, effects, "povm_distribution");
    if (effects.kind() == MeasurementKind::Kraus) {
        throw UsageError("povm_distribution: expected POVM effects or projectors, got Kraus operators");
    }
    std::vector<double> probs;
    probs.reserve(effects.operators().size());
    for (const auto &a : effects.operators()) {
        const Complex p = (rho.matrix() * a).trace();
        if (std::abs(p.imag()) > kMeasurementTolerance) {
            throw NumericError(fmt::format("povm_distribution: tr(rho A) has imaginary part {:.3g}", p.imag()));
        }
        // Rounding can leave a zero-probability outcome a hair below zero.
        probs.push_back(p.real() < 0 && p.real() > -kEigenvalueFloor ? 0.0 : p.real());
    }
    return ProbDist(std::move(probs));
}

DensityOperator projective_measure_channel(const DensityOperator &rho, const MeasurementSet &projectors) {
    require_matching_dim(rho, projectors, "projective_measure_channel");
    if (projectors.kind() != MeasurementKind::Projective) {
        throw UsageError(fmt::format("projective_measure_channel: expected projective set, got {}",
                                     to_string(projectors.kind())));
    }
    const auto n = static_cast<Eigen::Index>(rho.dim());
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (const auto &p : projectors.operators()) {
        out += p * rho.matrix() * p;
    }
    return DensityOperator(out, rho.subsystem_dims());
}

DensityOperator kraus_channel(const DensityOperator &rho, const MeasurementSet &kraus) {
    require_matching_dim(rho, kraus, "kraus_channel");
    const auto n = static_cast<Eigen::Index>(rho.dim());
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (const auto &m : kraus.operators()) {
        out += m * rho.matrix() * m.adjoint();
    }
    return DensityOperator(out, rho.subsystem_dims());
}

DensityOperator bell_pair() {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(0) = 1 / std::sqrt(2.0);
    psi(3) = 1 / std::sqrt(2.0);
    return DensityOperator::pure(psi, {2, 2});
}

double quantum_mutual_entropy(const DensityOperator &rho, const std::vector<size_t> &part_a,
                              const std::vector<size_t> &part_b) {
    const size_t count = rho.subsystem_dims().size();
    auto a = checked_subsystems(part_a, count, "quantum_mutual_entropy");
    auto b = checked_subsystems(part_b, count, "quantum_mutual_entropy");
    std::vector<size_t> joint;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(joint));
    if (joint.size() != a.size() + b.size()) {
        throw UsageError("quantum_mutual_entropy: parts overlap");
    }
    DensityOperator rho_ab = partial_trace(rho, joint);

    // Positions of A and B inside the reduced operator.
    std::vector<size_t> local_a;
    std::vector<size_t> local_b;
    for (size_t i = 0; i < joint.size(); i++) {
        (std::binary_search(a.begin(), a.end(), joint[i]) ? local_a : local_b).push_back(i);
    }
    const double s_a = von_neumann_entropy(partial_trace(rho_ab, local_a));
    const double s_b = von_neumann_entropy(partial_trace(rho_ab, local_b));
    const double s_ab = von_neumann_entropy(rho_ab);
    return clip_mutual(s_a + s_b - s_ab);
}

namespace {

Complex gaussian_complex(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

ComplexMatrix gaussian_matrix(size_t dim, Rng &rng) {
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            g(i, j) = gaussian_complex(rng);
        }
    }
    return g;
}

// S^-1/2 for Hermitian positive definite S.
ComplexMatrix inverse_sqrt(const ComplexMatrix &s) {
    auto es = hermitian_eigensystem(s);
    if (es.eigenvalues.back() <= 0) {
        throw NumericError("inverse_sqrt: matrix is singular");
    }
    return apply_spectral(es, [](double lambda) { return Complex(1 / std::sqrt(lambda)); });
}

}  // namespace

ComplexVector random_pure_state(size_t dim, Rng &rng) {
    ComplexVector psi(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        psi(i) = gaussian_complex(rng);
    }
    return psi / psi.norm();
}

DensityOperator random_density(size_t dim, Rng &rng, std::vector<size_t> subsystem_dims) {
    if (dim == 0) {
        throw UsageError("random_density: dim must be positive");
    }
    // Reshape the purification psi (dim x dim, system index first) and take
    // Psi Psi^dag, which traces out the ancilla.
    ComplexVector psi = random_pure_state(dim * dim, rng);
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix reshaped(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            reshaped(i, j) = psi(i * n + j);
        }
    }
    return DensityOperator(reshaped * reshaped.adjoint(), std::move(subsystem_dims));
}

DensityOperator random_density(size_t dim, uint64_t seed) {
    Rng rng(seed);
    return random_density(dim, rng);
}

ComplexMatrix random_hermitian(size_t dim, Rng &rng) {
    ComplexMatrix g = gaussian_matrix(dim, rng);
    return (g + g.adjoint()) / 2.0;
}

ComplexMatrix random_unitary(size_t dim, Rng &rng) { return hermitian_eigensystem(random_hermitian(dim, rng)).eigenvectors; }

MeasurementSet random_projective(size_t dim, Rng &rng) {
    if (dim < 2) {
        throw UsageError("random_projective: dim must be at least 2");
    }
    ComplexMatrix u = random_unitary(dim, rng);
    const size_t groups = std::uniform_int_distribution<size_t>(2, dim)(rng);
    // Every group gets one basis vector, the rest are assigned at random.
    std::vector<size_t> owner(dim);
    for (size_t i = 0; i < dim; i++) {
        owner[i] = i < groups ? i : std::uniform_int_distribution<size_t>(0, groups - 1)(rng);
    }
    std::shuffle(owner.begin(), owner.end(), rng);

    const auto n = static_cast<Eigen::Index>(dim);
    std::vector<ComplexMatrix> projectors(groups, ComplexMatrix::Zero(n, n));
    for (size_t i = 0; i < dim; i++) {
        const auto col = u.col(static_cast<Eigen::Index>(i));
        projectors[owner[i]] += col * col.adjoint();
    }
    return MeasurementSet(std::move(projectors), MeasurementKind::Projective);
}

MeasurementSet random_povm(size_t dim, size_t effects, Rng &rng) {
    if (effects == 0) {
        throw UsageError("random_povm: need at least one effect");
    }
    std::vector<ComplexMatrix> grams;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    for (size_t i = 0; i < effects; i++) {
        ComplexMatrix g = gaussian_matrix(dim, rng);
        grams.push_back(g.adjoint() * g);
        total += grams.back();
    }
    const ComplexMatrix w = inverse_sqrt(total);
    std::vector<ComplexMatrix> out;
    for (const auto &gram : grams) {
        ComplexMatrix a = w * gram * w;
        out.push_back((a + a.adjoint()) / 2.0);
    }
    return MeasurementSet(std::move(out), MeasurementKind::PovmEffects);
}

MeasurementSet random_kraus(size_t dim, size_t operators, Rng &rng) {
    if (operators == 0) {
        throw UsageError("random_kraus: need at least one operator");
    }
    std::vector<ComplexMatrix> gs;
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    for (size_t i = 0; i < operators; i++) {
        gs.push_back(gaussian_matrix(dim, rng));
        total += gs.back().adjoint() * gs.back();
    }
    const ComplexMatrix w = inverse_sqrt(total);
    for (auto &g : gs) {
        g = g * w;
    }
    return MeasurementSet(std::move(gs), MeasurementKind::Kraus);
}

}  // namespace entropic
