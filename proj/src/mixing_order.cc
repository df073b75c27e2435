#include "entropic/mixing_order.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "entropic/errors.h"

namespace entropic {

const char *to_string(MixingVerdict verdict) {
    switch (verdict) {
        case MixingVerdict::LeftLessMixed:
            return "LeftLessMixed";
        case MixingVerdict::RightLessMixed:
            return "RightLessMixed";
        case MixingVerdict::EquallyMixed:
            return "EquallyMixed";
        case MixingVerdict::Incomparable:
            return "Incomparable";
    }
    return "?";
}

std::vector<double> partial_sums(const std::vector<double> &descending) {
    std::vector<double> out;
    out.reserve(descending.size());
    double running = 0;
    for (size_t i = 0; i < descending.size(); i++) {
        if (i > 0 && descending[i] > descending[i - 1] + kSortSlack) {
            throw ValidationError(fmt::format("partial_sums: spectrum not descending at index {}", i));
        }
        running += descending[i];
        out.push_back(running);
    }
    return out;
}

std::vector<double> partial_sums(const Spectrum &s) { return partial_sums(s.values()); }

MixingComparison compare_mixing(const Spectrum &a, const Spectrum &b) {
    const size_t n = std::max(a.size(), b.size());
    const auto sa = partial_sums(a.padded(n));
    const auto sb = partial_sums(b.padded(n));

    MixingComparison out{MixingVerdict::Incomparable};
    for (size_t i = 0; i < n; i++) {
        const double diff = sa[i] - sb[i];
        if (diff < -kDominanceTolerance && out.left_dominance_fails_at == 0) {
            out.left_dominance_fails_at = i + 1;
        }
        if (diff > kDominanceTolerance && out.right_dominance_fails_at == 0) {
            out.right_dominance_fails_at = i + 1;
        }
    }
    const bool a_dominates = out.left_dominance_fails_at == 0;
    const bool b_dominates = out.right_dominance_fails_at == 0;
    if (a_dominates && b_dominates) {
        out.verdict = MixingVerdict::EquallyMixed;
    } else if (a_dominates) {
        out.verdict = MixingVerdict::LeftLessMixed;
    } else if (b_dominates) {
        out.verdict = MixingVerdict::RightLessMixed;
    }
    return out;
}

Spectrum random_spectrum(size_t dim, Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    // Raising the draws to a random power spreads samples from near-pure to
    // near-uniform spectra.
    const double power = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
    std::vector<double> v(dim);
    double total = 0;
    for (auto &x : v) {
        x = std::pow(u(rng), power);
        total += x;
    }
    for (auto &x : v) {
        x /= total;
    }
    return Spectrum::from_unsorted(std::move(v));
}

}  // namespace entropic
