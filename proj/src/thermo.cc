#include "entropic/thermo.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "entropic/errors.h"

namespace entropic {

void ThermoConfig::validate() const {
    if (!(k > 0) || !std::isfinite(k)) {
        throw ValidationError(fmt::format("ThermoConfig: k must be positive, got {}", k));
    }
    if (!(h > 0) || !std::isfinite(h)) {
        throw ValidationError(fmt::format("ThermoConfig: h must be positive, got {}", h));
    }
}

void LatticeScenario::validate() const {
    if (sites_a == 0 || sites_b == 0) {
        throw ValidationError("LatticeScenario: compartments need at least one site");
    }
    if (particles_a > sites_a || particles_b > sites_b) {
        throw ValidationError(fmt::format("LatticeScenario: {} + {} particles do not fit {} + {} sites", particles_a,
                                          particles_b, sites_a, sites_b));
    }
}

double boltzmann_entropy(uint64_t multiplicity, const ThermoConfig &cfg) {
    cfg.validate();
    if (multiplicity < 1) {
        throw UsageError("boltzmann_entropy: multiplicity must be at least 1");
    }
    return cfg.k * std::log(static_cast<double>(multiplicity));
}

double boltzmann_entropy(std::string_view digits, const ThermoConfig &cfg) {
    cfg.validate();
    if (digits.empty()) {
        throw UsageError("boltzmann_entropy: empty multiplicity");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw UsageError(fmt::format("boltzmann_entropy: '{}' is not a decimal integer", digits));
        }
    }
    while (digits.size() > 1 && digits.front() == '0') {
        digits.remove_prefix(1);
    }
    if (digits == "0") {
        throw UsageError("boltzmann_entropy: multiplicity must be at least 1");
    }
    constexpr size_t kLeading = 17;
    if (digits.size() <= 19) {
        return boltzmann_entropy(std::stoull(std::string(digits)), cfg);
    }
    const double leading = std::stod(std::string(digits.substr(0, kLeading)));
    const double exponent = static_cast<double>(digits.size() - kLeading);
    return cfg.k * (std::log(leading) + exponent * std::numbers::ln10);
}

UniformEquivalence uniform_equivalence(uint64_t multiplicity, const ThermoConfig &cfg) {
    cfg.validate();
    if (multiplicity < 1) {
        throw UsageError("uniform_equivalence: multiplicity must be at least 1");
    }
    if (multiplicity > kMaxEnumeratedMultiplicity) {
        throw UsageError(fmt::format("uniform_equivalence: multiplicity {} exceeds {}; use boltzmann_entropy",
                                     multiplicity, kMaxEnumeratedMultiplicity));
    }
    const double p = 1.0 / static_cast<double>(multiplicity);
    const double term = -p * std::log(p);
    // Kahan summation over the omega equal terms.
    double sum = 0;
    double carry = 0;
    for (uint64_t i = 0; i < multiplicity; i++) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return UniformEquivalence{boltzmann_entropy(multiplicity, cfg), cfg.k * sum};
}

double ln_binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        throw UsageError(fmt::format("ln_binomial: k = {} exceeds n = {}", k, n));
    }
    if (n <= 64) {
        k = std::min(k, n - k);
        unsigned __int128 c = 1;
        for (uint64_t i = 0; i < k; i++) {
            c = c * (n - i) / (i + 1);
        }
        return std::log(static_cast<double>(c));
    }
    const auto ln_fact = [](uint64_t m) { return std::lgamma(static_cast<double>(m) + 1); };
    return ln_fact(n) - ln_fact(k) - ln_fact(n - k);
}

MixingMultiplicities mixing_multiplicities(const LatticeScenario &s) {
    s.validate();
    const uint64_t total = s.sites_a + s.sites_b;
    const double before = ln_binomial(s.sites_a, s.particles_a) + ln_binomial(s.sites_b, s.particles_b);
    const double after = s.same_species ? ln_binomial(total, s.particles_a + s.particles_b)
                                        : ln_binomial(total, s.particles_a) +
                                              ln_binomial(total - s.particles_a, s.particles_b);
    return MixingMultiplicities{before, after};
}

double entropy_of_mixing(const LatticeScenario &s, const ThermoConfig &cfg) {
    cfg.validate();
    const auto m = mixing_multiplicities(s);
    const double mix = cfg.k * (m.ln_after - m.ln_before);
    if (mix < -1e-12 * cfg.k) {
        throw NumericError(fmt::format("entropy_of_mixing: negative result {:.17g}", mix));
    }
    return mix;
}

PhaseSpaceEntropy phase_space_entropy(double dp, double dq, unsigned d, const ThermoConfig &cfg) {
    cfg.validate();
    if (!(dp > 0) || !(dq > 0) || !std::isfinite(dp) || !std::isfinite(dq)) {
        throw UsageError(fmt::format("phase_space_entropy: spreads must be positive, got dp = {}, dq = {}", dp, dq));
    }
    if (d == 0) {
        throw UsageError("phase_space_entropy: need at least one degree of freedom");
    }
    const double cell_ratio = dp * dq / cfg.h;
    return PhaseSpaceEntropy{cfg.k * d * std::log(cell_ratio), cell_ratio < 1};
}

namespace {

// S / (N k) at number density n.
double sackur_tetrode_per_particle(double number_density, double temperature, double mass, double h) {
    const double lambda = h / std::sqrt(2 * std::numbers::pi * mass * si::kBoltzmann * temperature);
    return std::log(1 / (number_density * lambda * lambda * lambda)) + 2.5;
}

void require_positive(double value, const char *name) {
    if (!(value > 0) || !std::isfinite(value)) {
        throw UsageError(fmt::format("sackur_tetrode: {} must be positive, got {}", name, value));
    }
}

}  // namespace

double sackur_tetrode(double n_particles, double volume, double temperature, double mass, const ThermoConfig &cfg) {
    cfg.validate();
    require_positive(n_particles, "particle number");
    require_positive(volume, "volume");
    require_positive(temperature, "temperature");
    require_positive(mass, "mass");
    return n_particles * cfg.k * sackur_tetrode_per_particle(n_particles / volume, temperature, mass, cfg.h);
}

double sackur_tetrode_crossover(double number_density, double mass, const ThermoConfig &cfg) {
    cfg.validate();
    require_positive(number_density, "number density");
    require_positive(mass, "mass");
    double lo = std::log(1e-15);
    double hi = std::log(1e9);
    const auto f = [&](double log_t) { return sackur_tetrode_per_particle(number_density, std::exp(log_t), mass, cfg.h); };
    if (f(lo) >= 0 || f(hi) <= 0) {
        throw NumericError("sackur_tetrode_crossover: no sign change between 1e-15 K and 1e9 K");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15; i++) {
        const double mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return std::exp((lo + hi) / 2);
}

std::vector<std::pair<double, double>> sackur_tetrode_sweep(double number_density, double mass, double t_min,
                                                            double t_max, size_t points, const ThermoConfig &cfg) {
    require_positive(t_min, "minimum temperature");
    require_positive(t_max, "maximum temperature");
    if (points < 2 || t_max <= t_min) {
        throw UsageError("sackur_tetrode_sweep: need t_max > t_min and at least 2 points");
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(points);
    const double step = std::log(t_max / t_min) / static_cast<double>(points - 1);
    for (size_t i = 0; i < points; i++) {
        const double t = t_min * std::exp(step * static_cast<double>(i));
        out.emplace_back(t, sackur_tetrode(number_density, 1.0, t, mass, cfg));
    }
    return out;
}

}  // namespace entropic
