#pragma once

#include <vector>

namespace entropic {

inline constexpr double kSpectrumSumTolerance = 1e-9;
// Eigenvalues in [-kEigenvalueFloor, 0) are clamped to 0.
inline constexpr double kEigenvalueFloor = 1e-10;
// Allowed upward step between neighbours before a list counts as unsorted.
inline constexpr double kSortSlack = 1e-12;

/// Descending probability spectrum (eigenvalues of a density operator).
class Spectrum {
   public:
    // Requires descending order; throws ValidationError otherwise.
    explicit Spectrum(std::vector<double> eigenvalues);
    static Spectrum from_unsorted(std::vector<double> eigenvalues);

    const std::vector<double> &values() const { return values_; }
    size_t size() const { return values_.size(); }
    double operator[](size_t i) const { return values_[i]; }

    Spectrum padded(size_t length) const;

   private:
    std::vector<double> values_;
};

// -sum lambda log2 lambda
double spectrum_entropy(const Spectrum &s);

}  // namespace entropic
