#include "entropic/prob_core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "entropic/errors.h"

namespace entropic {

namespace {

void normalize_cells(std::vector<double> &cells, Normalization mode, const char *what) {
    if (cells.empty()) {
        throw ValidationError(fmt::format("{}: empty distribution", what));
    }
    for (size_t i = 0; i < cells.size(); i++) {
        if (!std::isfinite(cells[i])) {
            throw ValidationError(fmt::format("{}: non-finite entry at {}", what, i));
        }
        if (cells[i] < 0) {
            throw ValidationError(fmt::format("{}: negative entry {} at {}", what, cells[i], i));
        }
    }
    double total = std::accumulate(cells.begin(), cells.end(), 0.0);
    if (mode == Normalization::Renormalize) {
        if (total <= 0) {
            throw ValidationError(fmt::format("{}: cannot renormalize zero total mass", what));
        }
        for (auto &c : cells) {
            c /= total;
        }
        return;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw ValidationError(fmt::format("{}: entries sum to {:.17g}, expected 1", what, total));
    }
}

std::vector<double> flatten(const std::vector<std::vector<double>> &nested, size_t &rows, size_t &cols,
                            const char *what) {
    rows = nested.size();
    cols = rows ? nested.front().size() : 0;
    std::vector<double> flat;
    flat.reserve(rows * cols);
    for (const auto &row : nested) {
        if (row.size() != cols) {
            throw ValidationError(fmt::format("{}: ragged rows", what));
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

}  // namespace

ProbDist::ProbDist(std::vector<double> probs, std::vector<std::string> labels, Normalization mode)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != probs_.size()) {
        throw ValidationError("ProbDist: labels and probs differ in length");
    }
    normalize_cells(probs_, mode, "ProbDist");
}

JointDist2::JointDist2(size_t rows, size_t cols, std::vector<double> probs, Normalization mode)
    : rows_(rows), cols_(cols), probs_(std::move(probs)) {
    if (rows_ == 0 || cols_ == 0 || probs_.size() != rows_ * cols_) {
        throw ValidationError("JointDist2: shape does not match entry count");
    }
    normalize_cells(probs_, mode, "JointDist2");
}

JointDist2::JointDist2(const std::vector<std::vector<double>> &nested, Normalization mode) : rows_(0), cols_(0) {
    probs_ = flatten(nested, rows_, cols_, "JointDist2");
    if (rows_ == 0 || cols_ == 0) {
        throw ValidationError("JointDist2: empty");
    }
    normalize_cells(probs_, mode, "JointDist2");
}

JointDist2 JointDist2::transpose() const {
    std::vector<double> t(probs_.size());
    for (size_t x = 0; x < rows_; x++) {
        for (size_t y = 0; y < cols_; y++) {
            t[y * rows_ + x] = (*this)(x, y);
        }
    }
    return JointDist2(cols_, rows_, std::move(t), Normalization::Renormalize);
}

JointDist3::JointDist3(std::array<size_t, 3> shape, std::vector<double> probs, Normalization mode)
    : shape_(shape), probs_(std::move(probs)) {
    if (shape_[0] == 0 || shape_[1] == 0 || shape_[2] == 0 || probs_.size() != shape_[0] * shape_[1] * shape_[2]) {
        throw ValidationError("JointDist3: shape does not match entry count");
    }
    normalize_cells(probs_, mode, "JointDist3");
}

StochasticMatrix::StochasticMatrix(size_t rows, size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0 || entries_.size() != rows_ * cols_) {
        throw ValidationError("StochasticMatrix: shape does not match entry count");
    }
    for (size_t r = 0; r < rows_; r++) {
        double sum = 0;
        for (size_t c = 0; c < cols_; c++) {
            double v = entries_[r * cols_ + c];
            if (!std::isfinite(v) || v < 0) {
                throw ValidationError(fmt::format("StochasticMatrix: invalid entry {} at ({}, {})", v, r, c));
            }
            sum += v;
        }
        if (std::abs(sum - 1.0) > kNormalizationTolerance) {
            throw ValidationError(fmt::format("StochasticMatrix: row {} sums to {:.17g}", r, sum));
        }
    }
}

namespace {

StochasticMatrix from_nested(const std::vector<std::vector<double>> &nested) {
    size_t rows = 0;
    size_t cols = 0;
    auto flat = flatten(nested, rows, cols, "StochasticMatrix");
    return StochasticMatrix(rows, cols, std::move(flat));
}

}  // namespace

StochasticMatrix::StochasticMatrix(const std::vector<std::vector<double>> &nested)
    : StochasticMatrix(from_nested(nested)) {}

StochasticMatrix StochasticMatrix::identity(size_t n) {
    std::vector<double> e(n * n, 0.0);
    for (size_t i = 0; i < n; i++) {
        e[i * n + i] = 1.0;
    }
    return StochasticMatrix(n, n, std::move(e));
}

StochasticMatrix StochasticMatrix::binary_symmetric(double flip) {
    if (!(flip >= 0 && flip <= 1)) {
        throw ValidationError("binary_symmetric: flip probability outside [0, 1]");
    }
    return StochasticMatrix(2, 2, {1 - flip, flip, flip, 1 - flip});
}

double Divergence::bits() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : bits_;
}

double entropy_bits(const std::vector<double> &cells) {
    double h = 0;
    for (double p : cells) {
        if (std::abs(p) < kZeroCell) {
            continue;
        }
        h -= p * std::log2(p);
    }
    // Cells a hair above 1 from rounding would otherwise go slightly negative.
    return std::max(h, 0.0);
}

double shannon_entropy(const ProbDist &d) { return entropy_bits(d.probs()); }
double joint_entropy2(const JointDist2 &j) { return entropy_bits(j.flat()); }
double joint_entropy3(const JointDist3 &j) { return entropy_bits(j.flat()); }

ProbDist marginal(const JointDist2 &j, size_t axis) {
    if (axis > 1) {
        throw UsageError(fmt::format("marginal: axis {} out of range for rank 2", axis));
    }
    std::vector<double> out(axis == 0 ? j.rows() : j.cols(), 0.0);
    for (size_t x = 0; x < j.rows(); x++) {
        for (size_t y = 0; y < j.cols(); y++) {
            out[axis == 0 ? x : y] += j(x, y);
        }
    }
    return ProbDist(std::move(out), {}, Normalization::Renormalize);
}

ProbDist marginal(const JointDist3 &j, size_t axis) {
    if (axis > 2) {
        throw UsageError(fmt::format("marginal: axis {} out of range for rank 3", axis));
    }
    const auto &s = j.shape();
    std::vector<double> out(s[axis], 0.0);
    for (size_t x = 0; x < s[0]; x++) {
        for (size_t y = 0; y < s[1]; y++) {
            for (size_t z = 0; z < s[2]; z++) {
                const size_t idx[3] = {x, y, z};
                out[idx[axis]] += j(x, y, z);
            }
        }
    }
    return ProbDist(std::move(out), {}, Normalization::Renormalize);
}

JointDist2 marginal(const JointDist3 &j, size_t first_axis, size_t second_axis) {
    if (first_axis > 2 || second_axis > 2 || first_axis == second_axis) {
        throw UsageError(fmt::format("marginal: invalid axis pair ({}, {})", first_axis, second_axis));
    }
    const auto &s = j.shape();
    const size_t rows = s[first_axis];
    const size_t cols = s[second_axis];
    std::vector<double> out(rows * cols, 0.0);
    for (size_t x = 0; x < s[0]; x++) {
        for (size_t y = 0; y < s[1]; y++) {
            for (size_t z = 0; z < s[2]; z++) {
                const size_t idx[3] = {x, y, z};
                out[idx[first_axis] * cols + idx[second_axis]] += j(x, y, z);
            }
        }
    }
    return JointDist2(rows, cols, std::move(out), Normalization::Renormalize);
}

namespace {

std::vector<size_t> checked_keep(const std::vector<size_t> &keep, size_t rank) {
    if (keep.empty()) {
        throw UsageError("marginalize: empty keep set");
    }
    std::vector<size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError("marginalize: duplicate axis in keep set");
    }
    if (sorted.back() >= rank) {
        throw UsageError(fmt::format("marginalize: axis {} out of range for rank {}", sorted.back(), rank));
    }
    return sorted;
}

}  // namespace

Distribution marginalize(const JointDist2 &j, const std::vector<size_t> &keep) {
    auto axes = checked_keep(keep, 2);
    if (axes.size() == 2) {
        return j;
    }
    return marginal(j, axes[0]);
}

Distribution marginalize(const JointDist3 &j, const std::vector<size_t> &keep) {
    auto axes = checked_keep(keep, 3);
    switch (axes.size()) {
        case 1:
            return marginal(j, axes[0]);
        case 2:
            return marginal(j, axes[0], axes[1]);
        default:
            return j;
    }
}

namespace {

bool product_support_covers(const JointDist2 &j, const ProbDist &px, const ProbDist &py) {
    for (size_t x = 0; x < j.rows(); x++) {
        for (size_t y = 0; y < j.cols(); y++) {
            if (j(x, y) >= kZeroCell && px[x] * py[y] < kZeroCell * kZeroCell) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

Divergence relative_entropy(const JointDist2 &j) {
    ProbDist px = marginal(j, 0);
    ProbDist py = marginal(j, 1);
    if (!product_support_covers(j, px, py)) {
        return Divergence::infinite();
    }
    return Divergence::finite(shannon_entropy(px) + shannon_entropy(py) - joint_entropy2(j));
}

Divergence relative_entropy(const JointDist2 &p, const JointDist2 &q) {
    if (p.rows() != q.rows() || p.cols() != q.cols()) {
        throw UsageError("relative_entropy: shape mismatch");
    }
    double d = 0;
    for (size_t i = 0; i < p.flat().size(); i++) {
        double pi = p.flat()[i];
        double qi = q.flat()[i];
        if (pi < kZeroCell) {
            continue;
        }
        if (qi < kZeroCell) {
            return Divergence::infinite();
        }
        d += pi * std::log2(pi / qi);
    }
    return Divergence::finite(d);
}

double clip_mutual(double value) {
    if (value >= 0) {
        return value;
    }
    if (value > -kMutualClip) {
        return 0.0;
    }
    throw NumericError(fmt::format("mutual entropy {:.17g} is negative beyond rounding", value));
}

double mutual_entropy(const JointDist2 &j) {
    double raw = shannon_entropy(marginal(j, 0)) + shannon_entropy(marginal(j, 1)) - joint_entropy2(j);
    return clip_mutual(raw);
}

JointDist3 markov_chain(const ProbDist &px, const StochasticMatrix &t1, const StochasticMatrix &t2) {
    if (px.size() != t1.rows()) {
        throw UsageError(fmt::format("markov_chain: |X| = {} but t1 has {} rows", px.size(), t1.rows()));
    }
    if (t1.cols() != t2.rows()) {
        throw UsageError(fmt::format("markov_chain: t1 has {} cols but t2 has {} rows", t1.cols(), t2.rows()));
    }
    const std::array<size_t, 3> shape = {px.size(), t1.cols(), t2.cols()};
    std::vector<double> cells(shape[0] * shape[1] * shape[2]);
    size_t k = 0;
    for (size_t x = 0; x < shape[0]; x++) {
        for (size_t y = 0; y < shape[1]; y++) {
            for (size_t z = 0; z < shape[2]; z++) {
                cells[k++] = px[x] * t1(x, y) * t2(y, z);
            }
        }
    }
    return JointDist3(shape, std::move(cells), Normalization::Renormalize);
}

double markov_deviation(const JointDist3 &j) {
    const JointDist2 xy = marginal(j, 0, 1);
    const JointDist2 yz = marginal(j, 1, 2);
    const ProbDist y = marginal(j, 1);
    const auto &shape = j.shape();
    double worst = 0;
    for (size_t a = 0; a < shape[0]; a++) {
        for (size_t b = 0; b < shape[1]; b++) {
            for (size_t c = 0; c < shape[2]; c++) {
                worst = std::max(worst, std::abs(j(a, b, c) * y[b] - xy(a, b) * yz(b, c)));
            }
        }
    }
    return worst;
}

namespace {

std::vector<double> uniform_row(size_t n, Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> row(n);
    double total = 0;
    for (auto &v : row) {
        v = u(rng);
        total += v;
    }
    for (auto &v : row) {
        v /= total;
    }
    return row;
}

size_t draw_alphabet(Rng &rng) { return std::uniform_int_distribution<size_t>(2, 4)(rng); }

}  // namespace

ProbDist random_prob_dist(size_t n, Rng &rng) {
    return ProbDist(uniform_row(n, rng), {}, Normalization::Renormalize);
}

StochasticMatrix random_stochastic(size_t rows, size_t cols, Rng &rng) {
    std::vector<double> e;
    e.reserve(rows * cols);
    for (size_t r = 0; r < rows; r++) {
        auto row = uniform_row(cols, rng);
        e.insert(e.end(), row.begin(), row.end());
    }
    return StochasticMatrix(rows, cols, std::move(e));
}

StochasticMatrix random_doubly_stochastic(size_t n, Rng &rng) {
    const size_t terms = n + 1;
    auto weights = uniform_row(terms, rng);
    std::vector<double> e(n * n, 0.0);
    std::vector<size_t> perm(n);
    for (size_t t = 0; t < terms; t++) {
        std::iota(perm.begin(), perm.end(), size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (size_t r = 0; r < n; r++) {
            e[r * n + perm[r]] += weights[t];
        }
    }
    return StochasticMatrix(n, n, std::move(e));
}

ChainSample random_markov_chain(Rng &rng, bool uniform_marginals) {
    if (uniform_marginals) {
        size_t n = draw_alphabet(rng);
        ProbDist px(std::vector<double>(n, 1.0 / static_cast<double>(n)), {}, Normalization::Renormalize);
        StochasticMatrix t1 = random_doubly_stochastic(n, rng);
        StochasticMatrix t2 = random_doubly_stochastic(n, rng);
        JointDist3 joint = markov_chain(px, t1, t2);
        return ChainSample{std::move(px), std::move(t1), std::move(t2), std::move(joint)};
    }
    size_t nx = draw_alphabet(rng);
    size_t ny = draw_alphabet(rng);
    size_t nz = draw_alphabet(rng);
    ProbDist px = random_prob_dist(nx, rng);
    StochasticMatrix t1 = random_stochastic(nx, ny, rng);
    StochasticMatrix t2 = random_stochastic(ny, nz, rng);
    JointDist3 joint = markov_chain(px, t1, t2);
    return ChainSample{std::move(px), std::move(t1), std::move(t2), std::move(joint)};
}

}  // namespace entropic
