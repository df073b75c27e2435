#include "entropic/prob_core.h"

#include <cmath>
#include <thread>

#include "gtest/gtest.h"

#include "entropic/errors.h"
#include "oracles.h"

using namespace entropic;

namespace {

const JointDist2 kSkewed({{0.5, 0.0}, {0.25, 0.25}});
const JointDist2 kCorrelated({{0.5, 0.0}, {0.0, 0.5}});
const JointDist2 kIndependent({{0.25, 0.25}, {0.25, 0.25}});

}  // namespace

TEST(prob_core, shannon_entropy_examples) {
    EXPECT_DOUBLE_EQ(shannon_entropy(ProbDist({0.5, 0.5})), 1.0);
    EXPECT_DOUBLE_EQ(shannon_entropy(ProbDist({1.0, 0.0})), 0.0);
    EXPECT_NEAR(shannon_entropy(ProbDist({0.5, 0.25, 0.25})), 1.5, 1e-15);
}

TEST(prob_core, validation_errors) {
    EXPECT_THROW(ProbDist({0.5, 0.6}), ValidationError);
    EXPECT_THROW(ProbDist({1.5, -0.5}), ValidationError);
    EXPECT_THROW(ProbDist({}), ValidationError);
    EXPECT_THROW(ProbDist({0.5, NAN}), ValidationError);
    EXPECT_THROW(ProbDist({0.5, 0.5}, {"a"}), ValidationError);
    EXPECT_THROW(JointDist2({{0.5, 0.5}, {0.5}}), ValidationError);
    EXPECT_THROW(JointDist2({{0.5, 0.5}, {0.5, 0.5}}), ValidationError);
    EXPECT_THROW(StochasticMatrix({{0.5, 0.4}}), ValidationError);
    EXPECT_THROW(StochasticMatrix::binary_symmetric(1.5), ValidationError);

    // Normalization tolerance is 1e-9.
    EXPECT_NO_THROW(ProbDist({0.5, 0.5 + 5e-10}));
    EXPECT_THROW(ProbDist({0.5, 0.5 + 5e-9}), ValidationError);
}

TEST(prob_core, renormalize_is_opt_in) {
    ProbDist d({2.0, 6.0}, {"heads", "tails"}, Normalization::Renormalize);
    EXPECT_DOUBLE_EQ(d[0], 0.25);
    EXPECT_DOUBLE_EQ(d[1], 0.75);
    EXPECT_EQ(d.labels()[1], "tails");
}

TEST(prob_core, joint_entropy2_examples) {
    EXPECT_DOUBLE_EQ(joint_entropy2(kIndependent), 2.0);
    EXPECT_DOUBLE_EQ(joint_entropy2(kCorrelated), 1.0);
    EXPECT_NEAR(joint_entropy2(kSkewed), 1.5, 1e-15);
}

TEST(prob_core, marginal_examples) {
    EXPECT_EQ(marginal(kCorrelated, 0).probs(), (std::vector<double>{0.5, 0.5}));
    EXPECT_EQ(marginal(kIndependent, 1).probs(), (std::vector<double>{0.5, 0.5}));
    EXPECT_EQ(marginal(kSkewed, 0).probs(), (std::vector<double>{0.5, 0.5}));
    EXPECT_EQ(marginal(kSkewed, 1).probs(), (std::vector<double>{0.75, 0.25}));
}

TEST(prob_core, marginalize_usage_errors) {
    EXPECT_THROW(marginalize(kSkewed, {}), UsageError);
    EXPECT_THROW(marginalize(kSkewed, {2}), UsageError);
    EXPECT_THROW(marginalize(kSkewed, {0, 0}), UsageError);
    EXPECT_THROW(marginal(kSkewed, 2), UsageError);

    auto chain = markov_chain(ProbDist({0.5, 0.5}), StochasticMatrix::identity(2), StochasticMatrix::identity(2));
    EXPECT_THROW(marginalize(chain, {3}), UsageError);
    EXPECT_THROW(marginal(chain, 1, 1), UsageError);

    auto kept = marginalize(chain, {2, 0});
    ASSERT_TRUE(std::holds_alternative<JointDist2>(kept));
    EXPECT_DOUBLE_EQ(std::get<JointDist2>(kept)(1, 1), 0.5);
    EXPECT_TRUE(std::holds_alternative<ProbDist>(marginalize(chain, {1})));
    EXPECT_TRUE(std::holds_alternative<JointDist3>(marginalize(chain, {0, 1, 2})));
}

TEST(prob_core, relative_entropy_examples) {
    EXPECT_NEAR(relative_entropy(kIndependent).bits(), 0.0, 1e-15);
    EXPECT_NEAR(relative_entropy(kCorrelated).bits(), 1.0, 1e-15);
    // Marginals {1/2, 1/2} and {3/4, 1/4}: 1 + 0.811278... - 1.5.
    const double expected = 0.31127812445913294;
    EXPECT_NEAR(oracle::kl_from_product(kSkewed.flat(), 2, 2), expected, 1e-15);
    EXPECT_NEAR(relative_entropy(kSkewed).bits(), expected, 1e-14);
}

TEST(prob_core, relative_entropy_infinite_case) {
    const JointDist2 p({{0.5, 0.5}, {0.0, 0.0}});
    const JointDist2 q({{1.0, 0.0}, {0.0, 0.0}});
    auto d = relative_entropy(p, q);
    EXPECT_TRUE(d.is_infinite());
    EXPECT_TRUE(std::isinf(d.bits()));
    EXPECT_FALSE(relative_entropy(q, p).is_infinite());
    EXPECT_NEAR(relative_entropy(q, p).bits(), 1.0, 1e-15);
    EXPECT_THROW(relative_entropy(p, JointDist2(1, 1, {1.0})), UsageError);
}

TEST(prob_core, mutual_entropy_examples) {
    EXPECT_EQ(mutual_entropy(kIndependent), 0.0);
    EXPECT_NEAR(mutual_entropy(kCorrelated), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(mutual_entropy(kSkewed), mutual_entropy(kSkewed.transpose()));
}

TEST(prob_core, clip_mutual_thresholds) {
    EXPECT_EQ(clip_mutual(-5e-10), 0.0);
    EXPECT_EQ(clip_mutual(0.25), 0.25);
    EXPECT_THROW(clip_mutual(-2e-9), NumericError);
}

TEST(prob_core, markov_chain_examples) {
    const ProbDist bit({0.5, 0.5});
    auto noiseless = markov_chain(bit, StochasticMatrix::identity(2), StochasticMatrix::identity(2));
    EXPECT_DOUBLE_EQ(noiseless(0, 0, 0), 0.5);
    EXPECT_DOUBLE_EQ(noiseless(1, 1, 1), 0.5);
    EXPECT_DOUBLE_EQ(noiseless(0, 1, 0), 0.0);

    auto erasure = markov_chain(bit, StochasticMatrix::binary_symmetric(0.2), StochasticMatrix({{0.3, 0.7}, {0.3, 0.7}}));
    EXPECT_EQ(mutual_entropy(marginal(erasure, 0, 2)), 0.0);

    // Two binary symmetric channels with flip 0.1: enumerated cells, then
    // entropies from the raw tables.
    auto bsc = markov_chain(bit, StochasticMatrix::binary_symmetric(0.1), StochasticMatrix::binary_symmetric(0.1));
    std::vector<double> cells;
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int z = 0; z < 2; z++) {
                const double t1 = x == y ? 0.9 : 0.1;
                const double t2 = y == z ? 0.9 : 0.1;
                cells.push_back(0.5 * t1 * t2);
                EXPECT_DOUBLE_EQ(bsc(x, y, z), cells.back());
            }
        }
    }
    const double i_xy = 0.5310044064107187;
    const double i_xz = 0.31992295427172035;
    EXPECT_NEAR(mutual_entropy(marginal(bsc, 0, 1)), i_xy, 1e-14);
    EXPECT_NEAR(mutual_entropy(marginal(bsc, 1, 2)), i_xy, 1e-14);
    EXPECT_NEAR(mutual_entropy(marginal(bsc, 0, 2)), i_xz, 1e-14);
}

TEST(prob_core, markov_chain_dimension_mismatch) {
    const ProbDist three({0.2, 0.3, 0.5});
    EXPECT_THROW(markov_chain(three, StochasticMatrix::identity(2), StochasticMatrix::identity(2)), UsageError);
    EXPECT_THROW(markov_chain(ProbDist({0.5, 0.5}), StochasticMatrix::identity(2), StochasticMatrix::identity(3)),
                 UsageError);
}

TEST(prob_core, property_entropy_bounds) {
    Rng rng(7);
    for (int trial = 0; trial < 10000; trial++) {
        const size_t n = std::uniform_int_distribution<size_t>(1, 8)(rng);
        ProbDist d = random_prob_dist(n, rng);
        const double h = shannon_entropy(d);
        ASSERT_GE(h, 0.0);
        ASSERT_LE(h, std::log2(static_cast<double>(n)) + 1e-12);
        ASSERT_NEAR(h, oracle::entropy(d.probs()), 1e-12);
    }
}

TEST(prob_core, property_mutual_entropy_bounds_and_relative_agreement) {
    Rng rng(11);
    for (int trial = 0; trial < 10000; trial++) {
        const size_t rows = std::uniform_int_distribution<size_t>(1, 5)(rng);
        const size_t cols = std::uniform_int_distribution<size_t>(1, 5)(rng);
        JointDist2 j(rows, cols, random_prob_dist(rows * cols, rng).probs());
        const double mi = mutual_entropy(j);
        ASSERT_GE(mi, 0.0);
        ASSERT_LE(mi, std::min(shannon_entropy(marginal(j, 0)), shannon_entropy(marginal(j, 1))) + 1e-12);
        ASSERT_NEAR(relative_entropy(j).bits(), mi, 1e-10);
        ASSERT_NEAR(mi, oracle::kl_from_product(j.flat(), rows, cols), 1e-10);
    }
}

TEST(prob_core, property_markov_chain_pipelining) {
    for (uint64_t trial = 0; trial < 10000; trial++) {
        Rng rng = trial_rng(2024, trial);
        auto chain = random_markov_chain(rng, trial % 2 == 0);
        const double i_xy = mutual_entropy(marginal(chain.joint, 0, 1));
        const double i_xz = mutual_entropy(marginal(chain.joint, 0, 2));
        const double i_yz = mutual_entropy(marginal(chain.joint, 1, 2));
        ASSERT_GE(i_yz, i_xz - 1e-9) << "trial " << trial;
        ASSERT_GE(i_xy, i_xz - 1e-9) << "trial " << trial;
    }
}

TEST(prob_core, uniform_marginal_chains_are_uniform) {
    for (uint64_t trial = 0; trial < 200; trial++) {
        Rng rng = trial_rng(5, trial);
        auto chain = random_markov_chain(rng, true);
        const size_t n = chain.px.size();
        for (size_t axis = 0; axis < 3; axis++) {
            ASSERT_NEAR(shannon_entropy(marginal(chain.joint, axis)), std::log2(static_cast<double>(n)), 1e-12);
        }
    }
}

TEST(prob_core, product_marginals_recover_factor_entropies) {
    Rng rng(3);
    for (int trial = 0; trial < 1000; trial++) {
        ProbDist a = random_prob_dist(3, rng);
        ProbDist b = random_prob_dist(4, rng);
        std::vector<double> cells;
        for (double pa : a.probs()) {
            for (double pb : b.probs()) {
                cells.push_back(pa * pb);
            }
        }
        JointDist2 j(3, 4, cells);
        ASSERT_NEAR(shannon_entropy(marginal(j, 0)), shannon_entropy(a), 1e-12);
        ASSERT_NEAR(shannon_entropy(marginal(j, 1)), shannon_entropy(b), 1e-12);
        ASSERT_NEAR(mutual_entropy(j), 0.0, 1e-12);
    }
}

TEST(prob_core, trial_substreams_do_not_depend_on_order) {
    std::vector<double> serial;
    for (uint64_t i = 0; i < 8; i++) {
        Rng rng = trial_rng(42, i);
        serial.push_back(shannon_entropy(random_markov_chain(rng, false).px));
    }
    std::vector<double> threaded(8);
    std::vector<std::thread> workers;
    for (uint64_t i = 8; i-- > 0;) {
        workers.emplace_back([&threaded, i] {
            Rng rng = trial_rng(42, i);
            threaded[i] = shannon_entropy(random_markov_chain(rng, false).px);
        });
    }
    for (auto &w : workers) w.join();
    EXPECT_EQ(serial, threaded);
}

TEST(prob_core, markov_deviation_detects_chains) {
    for (uint64_t trial = 0; trial < 500; trial++) {
        Rng rng = trial_rng(77, trial);
        ASSERT_LE(markov_deviation(random_markov_chain(rng, false).joint), 1e-15);
    }
    // Z copies X while Y is independent.
    std::vector<double> cells(8, 0.0);
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            cells[(x * 2 + y) * 2 + x] = 0.25;
        }
    }
    EXPECT_NEAR(markov_deviation(JointDist3({2, 2, 2}, cells)), 0.0625, 1e-15);
}
