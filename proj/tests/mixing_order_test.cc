#include "entropic/mixing_order.h"

#include "gtest/gtest.h"

#include "entropic/errors.h"

using namespace entropic;

namespace {

void expect_sums(const std::vector<double> &actual, const std::vector<double> &expected) {
    ASSERT_EQ(actual.size(), expected.size());
    for (size_t i = 0; i < actual.size(); i++) {
        EXPECT_NEAR(actual[i], expected[i], 1e-15) << "index " << i;
    }
}

}  // namespace

TEST(mixing_order, spectrum_invariants) {
    EXPECT_THROW(Spectrum({0.25, 0.75}), ValidationError);
    EXPECT_THROW(Spectrum({0.5, 0.4}), ValidationError);
    EXPECT_THROW(Spectrum({1.1, -0.1}), ValidationError);
    EXPECT_THROW(Spectrum({}), ValidationError);
    Spectrum clamped({1.0 + 5e-11, -5e-11});
    EXPECT_EQ(clamped[1], 0.0);
    EXPECT_EQ(Spectrum::from_unsorted({0.25, 0.75})[0], 0.75);
}

TEST(mixing_order, partial_sums_examples) {
    expect_sums(partial_sums(Spectrum({0.5, 0.25, 0.25})), {0.5, 0.75, 1.0});
    expect_sums(partial_sums(Spectrum({2.0 / 3, 1.0 / 6, 1.0 / 6})), {2.0 / 3, 5.0 / 6, 1.0});
    expect_sums(partial_sums(Spectrum({1.0, 0.0})), {1.0, 1.0});
    EXPECT_THROW(partial_sums(std::vector<double>{0.25, 0.75}), ValidationError);
}

TEST(mixing_order, compare_examples) {
    const Spectrum p({2.0 / 3, 1.0 / 6, 1.0 / 6});
    const Spectrum r({0.5, 0.25, 0.25});
    // r is more mixed than p.
    EXPECT_EQ(compare_mixing(p, r).verdict, MixingVerdict::LeftLessMixed);
    EXPECT_EQ(compare_mixing(r, p).verdict, MixingVerdict::RightLessMixed);
    EXPECT_EQ(compare_mixing(r, r).verdict, MixingVerdict::EquallyMixed);

    auto incomparable = compare_mixing(Spectrum({0.5, 0.5, 0.0}), Spectrum({0.6, 0.2, 0.2}));
    EXPECT_EQ(incomparable.verdict, MixingVerdict::Incomparable);
    EXPECT_EQ(incomparable.left_dominance_fails_at, 1u);
    EXPECT_EQ(incomparable.right_dominance_fails_at, 2u);
}

TEST(mixing_order, zero_padding) {
    // Trailing zeros do not change the order.
    EXPECT_EQ(compare_mixing(Spectrum({2.0 / 3, 1.0 / 6, 1.0 / 6}), Spectrum({0.5, 0.25, 0.25, 0.0, 0.0})).verdict,
              MixingVerdict::LeftLessMixed);
    EXPECT_EQ(compare_mixing(Spectrum({1.0}), Spectrum({0.5, 0.5})).verdict, MixingVerdict::LeftLessMixed);
    EXPECT_EQ(compare_mixing(Spectrum({0.5, 0.5}), Spectrum({0.5, 0.5, 0.0})).verdict, MixingVerdict::EquallyMixed);
}

TEST(mixing_order, entropies_follow_example) {
    EXPECT_NEAR(spectrum_entropy(Spectrum({2.0 / 3, 1.0 / 6, 1.0 / 6})), 1.2516291673878228, 1e-14);
    EXPECT_NEAR(spectrum_entropy(Spectrum({0.5, 0.25, 0.25})), 1.5, 1e-15);
}

TEST(mixing_order, property_uniform_and_pure_extremes) {
    Rng rng(5);
    for (int trial = 0; trial < 2000; trial++) {
        const size_t d = std::uniform_int_distribution<size_t>(1, 8)(rng);
        Spectrum s = random_spectrum(d, rng);
        Spectrum uniform(std::vector<double>(d, 1.0 / static_cast<double>(d)));
        std::vector<double> pure_values(d, 0.0);
        pure_values[0] = 1.0;
        Spectrum pure(pure_values);

        auto vs_uniform = compare_mixing(s, uniform).verdict;
        ASSERT_TRUE(vs_uniform == MixingVerdict::LeftLessMixed || vs_uniform == MixingVerdict::EquallyMixed);
        auto vs_pure = compare_mixing(pure, s).verdict;
        ASSERT_TRUE(vs_pure == MixingVerdict::LeftLessMixed || vs_pure == MixingVerdict::EquallyMixed);
    }
}

TEST(mixing_order, property_antisymmetry) {
    Rng rng(6);
    for (int trial = 0; trial < 5000; trial++) {
        const size_t d = std::uniform_int_distribution<size_t>(2, 6)(rng);
        Spectrum a = random_spectrum(d, rng);
        Spectrum b = random_spectrum(std::uniform_int_distribution<size_t>(2, 6)(rng), rng);
        auto forward = compare_mixing(a, b).verdict;
        auto backward = compare_mixing(b, a).verdict;
        switch (forward) {
            case MixingVerdict::LeftLessMixed:
                ASSERT_EQ(backward, MixingVerdict::RightLessMixed);
                break;
            case MixingVerdict::RightLessMixed:
                ASSERT_EQ(backward, MixingVerdict::LeftLessMixed);
                break;
            default:
                ASSERT_EQ(backward, forward);
        }
    }
}

TEST(mixing_order, property_entropy_is_mixing_homomorphic) {
    Rng rng(7);
    int comparable = 0;
    while (comparable < 10000) {
        const size_t d = std::uniform_int_distribution<size_t>(2, 6)(rng);
        Spectrum a = random_spectrum(d, rng);
        Spectrum b = random_spectrum(d, rng);
        auto verdict = compare_mixing(a, b).verdict;
        if (verdict == MixingVerdict::Incomparable) {
            continue;
        }
        comparable++;
        const double ha = spectrum_entropy(a);
        const double hb = spectrum_entropy(b);
        if (verdict == MixingVerdict::LeftLessMixed) {
            ASSERT_LE(ha, hb + 1e-9);
        } else if (verdict == MixingVerdict::RightLessMixed) {
            ASSERT_LE(hb, ha + 1e-9);
        } else {
            ASSERT_NEAR(ha, hb, 1e-9);
        }
    }
}
