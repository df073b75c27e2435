#include "entropic/spectrum.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <fmt/format.h>

#include "entropic/errors.h"
#include "entropic/prob_core.h"

namespace entropic {

namespace {

void clamp_and_check(std::vector<double> &values) {
    if (values.empty()) {
        throw ValidationError("Spectrum: empty");
    }
    for (auto &v : values) {
        if (!std::isfinite(v)) {
            throw ValidationError("Spectrum: non-finite eigenvalue");
        }
        if (v < -kEigenvalueFloor) {
            throw ValidationError(fmt::format("Spectrum: eigenvalue {:.3g} below PSD floor", v));
        }
        v = std::max(v, 0.0);
    }
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (std::abs(total - 1.0) > kSpectrumSumTolerance) {
        throw ValidationError(fmt::format("Spectrum: eigenvalues sum to {:.17g}, expected 1", total));
    }
}

}  // namespace

Spectrum::Spectrum(std::vector<double> eigenvalues) : values_(std::move(eigenvalues)) {
    clamp_and_check(values_);
    for (size_t i = 1; i < values_.size(); i++) {
        if (values_[i] > values_[i - 1] + kSortSlack) {
            throw ValidationError(fmt::format("Spectrum: not descending at index {}", i));
        }
    }
}

Spectrum Spectrum::from_unsorted(std::vector<double> eigenvalues) {
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    return Spectrum(std::move(eigenvalues));
}

Spectrum Spectrum::padded(size_t length) const {
    if (length <= values_.size()) {
        return *this;
    }
    std::vector<double> out = values_;
    out.resize(length, 0.0);
    return Spectrum(std::move(out));
}

double spectrum_entropy(const Spectrum &s) { return entropy_bits(s.values()); }

}  // namespace entropic
