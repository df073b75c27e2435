#pragma once

#include <vector>

#include "entropic/rng.h"
#include "entropic/spectrum.h"

// Ruch's mixing relation on spectra.
//
// a < b ("b is more mixed than a") iff every partial sum of a's descending
// eigenvalues is >= the matching partial sum of b's. In textbook majorization
// language this is "a majorizes b"; the symbol direction here is the reverse
// of the usual one.

namespace entropic {

// Partial sums closer than this count as a tie at that N.
inline constexpr double kDominanceTolerance = 1e-12;

enum class MixingVerdict {
    LeftLessMixed,   // b is more mixed than a
    RightLessMixed,  // a is more mixed than b
    EquallyMixed,
    Incomparable,
};

const char *to_string(MixingVerdict verdict);

struct MixingComparison {
    MixingVerdict verdict;
    // First N (1-based) where each dominance direction fails; 0 if it never does.
    size_t left_dominance_fails_at = 0;
    size_t right_dominance_fails_at = 0;
};

// Cumulative sums of a spectrum's eigenvalues.
std::vector<double> partial_sums(const Spectrum &s);
// Same, taking a raw list; throws ValidationError unless it is descending.
std::vector<double> partial_sums(const std::vector<double> &descending);

// Zero-pads the shorter spectrum before comparing.
MixingComparison compare_mixing(const Spectrum &a, const Spectrum &b);

// Sorted normalized draws u^k, u ~ uniform(0,1), k ~ uniform(0.5, 4).
Spectrum random_spectrum(size_t dim, Rng &rng);

}  // namespace entropic
