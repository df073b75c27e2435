#pragma once

#include <cstdint>
#include <vector>

#include "entropic/linalg.h"
#include "entropic/prob_core.h"
#include "entropic/rng.h"
#include "entropic/spectrum.h"

// Density operators, partial traces, von Neumann entropy and measurement
// channels.
//
// Subsystem indexing is big-endian: for dims (d0, d1, ..., dn-1) the basis
// index is i0 * (d1 ... dn-1) + ... + in-1, so the first listed subsystem is
// the most significant tensor factor.

namespace entropic {

inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kMeasurementTolerance = 1e-9;

class DensityOperator {
   public:
    // Validates Hermiticity, unit trace and positivity. Stores the Hermitian
    // part of `matrix`.
    DensityOperator(const ComplexMatrix &matrix, std::vector<size_t> subsystem_dims);
    explicit DensityOperator(const ComplexMatrix &matrix);

    // |psi><psi| after normalizing psi.
    static DensityOperator pure(const ComplexVector &psi, std::vector<size_t> subsystem_dims);
    static DensityOperator maximally_mixed(std::vector<size_t> subsystem_dims);
    static DensityOperator diagonal(const std::vector<double> &probs, std::vector<size_t> subsystem_dims);

    const ComplexMatrix &matrix() const { return matrix_; }
    const std::vector<size_t> &subsystem_dims() const { return dims_; }
    size_t dim() const { return static_cast<size_t>(matrix_.rows()); }
    // Clamped eigenvalues, computed once during validation.
    const Spectrum &spectrum() const { return spectrum_; }

   private:
    ComplexMatrix matrix_;
    std::vector<size_t> dims_;
    Spectrum spectrum_;
};

enum class MeasurementKind { Projective, PovmEffects, Kraus };

const char *to_string(MeasurementKind kind);
MeasurementKind measurement_kind_from_string(const std::string &name);

class MeasurementSet {
   public:
    // Validates the completeness invariant of `kind`.
    MeasurementSet(std::vector<ComplexMatrix> operators, MeasurementKind kind);

    // Rank-1 projectors onto the standard basis.
    static MeasurementSet computational_basis(size_t dim, MeasurementKind kind = MeasurementKind::Projective);

    MeasurementKind kind() const { return kind_; }
    const std::vector<ComplexMatrix> &operators() const { return operators_; }
    size_t dim() const { return static_cast<size_t>(operators_.front().rows()); }

   private:
    std::vector<ComplexMatrix> operators_;
    MeasurementKind kind_;
};

DensityOperator tensor(const DensityOperator &a, const DensityOperator &b);

// Traces out every subsystem not in `keep`. Kept subsystems stay in ascending
// index order. Throws UsageError for empty, duplicate or out-of-range sets.
DensityOperator partial_trace(const DensityOperator &rho, const std::vector<size_t> &keep);

double von_neumann_entropy(const DensityOperator &rho);

// p_i = tr(rho A_i)
ProbDist povm_distribution(const DensityOperator &rho, const MeasurementSet &effects);

// sum_i P_i rho P_i
DensityOperator projective_measure_channel(const DensityOperator &rho, const MeasurementSet &projectors);

// sum_i M_i rho M_i^dag
DensityOperator kraus_channel(const DensityOperator &rho, const MeasurementSet &kraus);

// (|00> + |11>) / sqrt(2) on dims (2, 2).
DensityOperator bell_pair();

// S(A) + S(B) - S(A,B). The joint operator is first reduced to A u B.
double quantum_mutual_entropy(const DensityOperator &rho, const std::vector<size_t> &part_a,
                              const std::vector<size_t> &part_b);

// Haar-random pure state: normalized complex Gaussian vector.
ComplexVector random_pure_state(size_t dim, Rng &rng);
// Purification sampling: a pure state on dim * dim with half traced out.
DensityOperator random_density(size_t dim, Rng &rng, std::vector<size_t> subsystem_dims = {});
DensityOperator random_density(size_t dim, uint64_t seed);
// Gaussian entries, symmetrized.
ComplexMatrix random_hermitian(size_t dim, Rng &rng);
// Eigenvectors of a random Hermitian matrix.
ComplexMatrix random_unitary(size_t dim, Rng &rng);
// Basis vectors of a random unitary, randomly grouped into between 2 and dim
// orthogonal projectors (dim >= 2).
MeasurementSet random_projective(size_t dim, Rng &rng);
// A_i = S^-1/2 G_i^dag G_i S^-1/2 with S = sum_i G_i^dag G_i.
MeasurementSet random_povm(size_t dim, size_t effects, Rng &rng);
// M_i = G_i S^-1/2, so sum_i M_i^dag M_i = I.
MeasurementSet random_kraus(size_t dim, size_t operators, Rng &rng);

}  // namespace entropic
