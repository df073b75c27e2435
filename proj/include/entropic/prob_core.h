#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "entropic/rng.h"

// Finite discrete distributions and the classical (Shannon) entropic
// functionals. All entropies in this header are in bits.

namespace entropic {

inline constexpr double kNormalizationTolerance = 1e-9;
// Cells with |p| below this count as zero (0 log 0 = 0).
inline constexpr double kZeroCell = 1e-15;
// Mutual entropies in (-kMutualClip, 0) are rounding noise and clip to 0.
inline constexpr double kMutualClip = 1e-9;

enum class Normalization { Strict, Renormalize };

class ProbDist {
   public:
    explicit ProbDist(std::vector<double> probs, std::vector<std::string> labels = {},
                      Normalization mode = Normalization::Strict);

    const std::vector<double> &probs() const { return probs_; }
    const std::vector<std::string> &labels() const { return labels_; }
    size_t size() const { return probs_.size(); }
    double operator[](size_t i) const { return probs_[i]; }

   private:
    std::vector<double> probs_;
    std::vector<std::string> labels_;
};

/// Joint distribution p(x, y), stored row-major with x as the row index.
class JointDist2 {
   public:
    JointDist2(size_t rows, size_t cols, std::vector<double> probs,
               Normalization mode = Normalization::Strict);
    explicit JointDist2(const std::vector<std::vector<double>> &nested,
                        Normalization mode = Normalization::Strict);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double operator()(size_t x, size_t y) const { return probs_[x * cols_ + y]; }
    const std::vector<double> &flat() const { return probs_; }
    JointDist2 transpose() const;

   private:
    size_t rows_;
    size_t cols_;
    std::vector<double> probs_;
};

/// Joint distribution p(x, y, z), stored with z fastest.
class JointDist3 {
   public:
    JointDist3(std::array<size_t, 3> shape, std::vector<double> probs,
               Normalization mode = Normalization::Strict);

    const std::array<size_t, 3> &shape() const { return shape_; }
    double operator()(size_t x, size_t y, size_t z) const {
        return probs_[(x * shape_[1] + y) * shape_[2] + z];
    }
    const std::vector<double> &flat() const { return probs_; }

   private:
    std::array<size_t, 3> shape_;
    std::vector<double> probs_;
};

/// Row-stochastic transition matrix; row index is the source symbol.
class StochasticMatrix {
   public:
    StochasticMatrix(size_t rows, size_t cols, std::vector<double> entries);
    explicit StochasticMatrix(const std::vector<std::vector<double>> &nested);

    static StochasticMatrix identity(size_t n);
    static StochasticMatrix binary_symmetric(double flip);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

   private:
    size_t rows_;
    size_t cols_;
    std::vector<double> entries_;
};

// Relative entropy value. Infinite when p puts mass where q has none.
class Divergence {
   public:
    static Divergence finite(double bits) { return Divergence(bits, false); }
    static Divergence infinite() { return Divergence(0.0, true); }

    bool is_infinite() const { return infinite_; }
    // +inf when infinite.
    double bits() const;

   private:
    Divergence(double bits, bool infinite) : bits_(bits), infinite_(infinite) {}
    double bits_;
    bool infinite_;
};

double shannon_entropy(const ProbDist &d);
double joint_entropy2(const JointDist2 &j);
double joint_entropy3(const JointDist3 &j);

// -sum p log2 p over an arbitrary cell list; zero cells skipped.
double entropy_bits(const std::vector<double> &cells);

ProbDist marginal(const JointDist2 &j, size_t axis);
ProbDist marginal(const JointDist3 &j, size_t axis);
// Keeps two axes of a rank-3 joint, in the order given.
JointDist2 marginal(const JointDist3 &j, size_t first_axis, size_t second_axis);

using Distribution = std::variant<ProbDist, JointDist2, JointDist3>;
// General form taking an index set. Axes are kept in ascending order.
// Throws UsageError for empty, duplicate or out-of-range sets.
Distribution marginalize(const JointDist2 &j, const std::vector<size_t> &keep);
Distribution marginalize(const JointDist3 &j, const std::vector<size_t> &keep);

// H(p(x)) + H(p(y)) - H(p(x,y)). Infinite if some cell with p(x,y) > 0 sits
// where the product of marginals vanishes.
Divergence relative_entropy(const JointDist2 &j);
// sum p log2(p / q) over cells of p; infinite when q = 0 on p's support.
Divergence relative_entropy(const JointDist2 &p, const JointDist2 &q);

// H(X:Y) = H(X) + H(Y) - H(X,Y). Throws NumericError below -kMutualClip.
double mutual_entropy(const JointDist2 &j);
double clip_mutual(double value);

// p(x,y,z) = px(x) t1[x,y] t2[y,z].
JointDist3 markov_chain(const ProbDist &px, const StochasticMatrix &t1, const StochasticMatrix &t2);

// max |p(x,y,z) p(y) - p(x,y) p(y,z)|; zero exactly for X -> Y -> Z chains.
double markov_deviation(const JointDist3 &j);

// Samplers for property campaigns. Rows are normalized independent
// uniform(0,1) draws.
ProbDist random_prob_dist(size_t n, Rng &rng);
StochasticMatrix random_stochastic(size_t rows, size_t cols, Rng &rng);
// Convex mixture of random permutation matrices.
StochasticMatrix random_doubly_stochastic(size_t n, Rng &rng);

struct ChainSample {
    ProbDist px;
    StochasticMatrix t1;
    StochasticMatrix t2;
    JointDist3 joint;
};

// Alphabet sizes drawn from {2, 3, 4}. With uniform_marginals the chain uses
// one alphabet size, a uniform source and doubly stochastic transitions, so
// X, Y and Z are all uniform.
ChainSample random_markov_chain(Rng &rng, bool uniform_marginals);

}  // namespace entropic
