#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

// Statistical-thermodynamic entropies: Boltzmann and Gibbs-Shannon forms,
// entropy of mixing on a hard-core lattice gas, phase-space entropy with the
// uncertainty floor, and the Sackur-Tetrode ideal-gas entropy.
//
// All logarithms here are natural; entropy units come from ThermoConfig::k.

namespace entropic {

namespace si {
inline constexpr double kBoltzmann = 1.380649e-23;     // J/K
inline constexpr double kPlanck = 6.62607015e-34;      // J s
inline constexpr double kAvogadro = 6.02214076e23;     // 1/mol
inline constexpr double kAtomicMass = 1.66053906660e-27;  // kg
inline constexpr double kHeliumMass = 4.002602 * kAtomicMass;
// Ideal gas at 273.15 K and 101325 Pa, in 1/m^3.
inline constexpr double kLoschmidtDensity = 101325.0 / (kBoltzmann * 273.15);
}  // namespace si

struct ThermoConfig {
    double k = 1.0;  // entropy units per nat; 1 gives dimensionless entropies
    double h = si::kPlanck;

    // k = Boltzmann constant, so entropies come out in J/K.
    static ThermoConfig si_units() { return ThermoConfig{si::kBoltzmann, si::kPlanck}; }
    // Throws ValidationError unless k > 0 and h > 0.
    void validate() const;
};

struct LatticeScenario {
    uint64_t sites_a = 0;
    uint64_t sites_b = 0;
    uint64_t particles_a = 0;
    uint64_t particles_b = 0;
    bool same_species = false;

    // Throws ValidationError for empty compartments or overfilled sites.
    void validate() const;
};

// k ln(omega). Throws UsageError for omega < 1.
double boltzmann_entropy(uint64_t multiplicity, const ThermoConfig &cfg = {});
// Arbitrary-size multiplicity given as decimal digits.
double boltzmann_entropy(std::string_view decimal_multiplicity, const ThermoConfig &cfg = {});

struct UniformEquivalence {
    double boltzmann;      // k ln(omega)
    double gibbs_shannon;  // -k sum (1/omega) ln(1/omega), summed term by term
};

inline constexpr uint64_t kMaxEnumeratedMultiplicity = 1'000'000;

// Throws UsageError for omega < 1 or omega > kMaxEnumeratedMultiplicity.
UniformEquivalence uniform_equivalence(uint64_t multiplicity, const ThermoConfig &cfg = {});

// ln C(n, k): exact integer binomial for n <= 64, log-gamma beyond.
double ln_binomial(uint64_t n, uint64_t k);

struct MixingMultiplicities {
    double ln_before;
    double ln_after;
};

MixingMultiplicities mixing_multiplicities(const LatticeScenario &s);

// k [ln(omega_after) - ln(omega_before)] on the hard-core lattice.
//
// Before: C(sites_a, particles_a) C(sites_b, particles_b).
// After, distinct species: C(N, particles_a) C(N - particles_a, particles_b).
// After, same species: C(N, particles_a + particles_b).
double entropy_of_mixing(const LatticeScenario &s, const ThermoConfig &cfg = {});

struct PhaseSpaceEntropy {
    double entropy;
    // dp dq / h < 1: below the uncertainty floor, where the entropy can be negative.
    bool below_uncertainty_floor;
};

// k ln((dp dq)^d / h^d). Throws UsageError for nonpositive spreads or d = 0.
PhaseSpaceEntropy phase_space_entropy(double dp, double dq, unsigned d, const ThermoConfig &cfg = {});

// N k [ln(V / (N lambda^3)) + 5/2] with lambda = h / sqrt(2 pi m k_B T).
// Negative at low enough temperature. Throws UsageError for nonpositive input.
double sackur_tetrode(double n_particles, double volume, double temperature, double mass,
                      const ThermoConfig &cfg = {});

// Temperature where the Sackur-Tetrode entropy changes sign at fixed
// number density, found by bisection on log T.
double sackur_tetrode_crossover(double number_density, double mass, const ThermoConfig &cfg = {});

// Log-spaced (T, S) samples at fixed number density, per unit volume.
std::vector<std::pair<double, double>> sackur_tetrode_sweep(double number_density, double mass, double t_min,
                                                            double t_max, size_t points,
                                                            const ThermoConfig &cfg = {});

}  // namespace entropic
