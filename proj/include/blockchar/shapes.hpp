#pragma once

// Random Young diagrams induced by the characters tau_k^n and sigma_k^n:
// diagram profiles, exact shape measures at small n, exact samplers for any
// n, the tau-versus-sigma total-variation estimate and Monte Carlo profile
// statistics.

#include "blockchar/combinatorics.hpp"
#include "blockchar/profile_kernels.hpp"
#include "blockchar/random.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace blockchar {

/// Piecewise-linear boundary f_lambda of a diagram in rotated coordinates.
///
/// The slope on [m, m+1) is -1 iff m belongs to {lambda_i - i : i >= 1}
/// (rows past the last are zero, so every m < -length qualifies) and +1
/// otherwise. f equals |x| outside [-length, lambda_1].
class Profile {
public:
    explicit Profile(const Partition& lambda);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int length() const { return static_cast<int>(shifted_.size()); }
    [[nodiscard]] int first_row() const { return shifted_.empty() ? 0 : shifted_.front() + 1; }
    /// {lambda_i - i : i = 1..length}, strictly decreasing.
    [[nodiscard]] std::span<const int> descending_set() const { return shifted_; }
    /// Evaluation window [-n-1, n+1].
    [[nodiscard]] int window() const { return n_ + 1; }

    [[nodiscard]] bool slope_down_on(int m) const;
    [[nodiscard]] Rational operator()(const Rational& x) const;
    [[nodiscard]] double operator()(double x) const;

private:
    int n_;
    std::vector<int> shifted_;
};

inline Profile profile(const Partition& lambda) { return Profile(lambda); }
inline Rational profile_eval(const Profile& f, const Rational& x) { return f(x); }

enum class MeasureKind { tau, sigma };
std::string_view kind_name(MeasureKind kind);
/// Accepts "tau"/"sigma" (and the Greek letters); throws std::invalid_argument.
MeasureKind parse_kind(std::string_view text);

/// Largest n for which exact measures are tabulated.
inline constexpr int kExactMeasureBound = 30;

struct ShapeMeasure {
    int n = 0;
    int k = 0;
    MeasureKind kind = MeasureKind::tau;
    /// Nonzero probabilities in canonical partition order.
    std::map<Partition, Rational, CanonicalOrder> probabilities;

    [[nodiscard]] Rational probability(const Partition& lambda) const;
};

/// tau: P(lambda) = m_k(lambda) dim(lambda) / A(n,k), 1 <= k <= n.
/// sigma: P(lambda) = s_k(lambda) dim(lambda) / k^n, k >= 1.
ShapeMeasure exact_measure(int n, int k, MeasureKind kind);

/// Shape of a uniform word in {1..k}^n under RSK insertion.
class SigmaShapeSampler {
public:
    SigmaShapeSampler(int n, int k);
    Partition operator()(Rng& rng) const;

private:
    int n_;
    int k_;
};

/// Uniform permutation with exactly k-1 descents built by inserting the
/// largest letter step by step (descent counts drawn from Eulerian ratios),
/// then the shape of its RSK recording tableau.
class TauShapeSampler {
public:
    TauShapeSampler(int n, int k);
    [[nodiscard]] Permutation sample_permutation(Rng& rng) const;
    Partition operator()(Rng& rng) const;

private:
    int n_;
    int k_;
    // log A(m, j) for m = 1..n, j = 1..k; row-major, -inf outside support.
    std::vector<double> log_eulerian_;
    [[nodiscard]] double log_eulerian(int m, int j) const;
};

Partition sample_sigma_shape(int n, int k, std::uint64_t seed);
Partition sample_tau_shape(int n, int k, std::uint64_t seed);

/// Reference sampler: uniform permutations rejected until d(g) = k-1.
Permutation sample_tau_permutation_by_rejection(int n, int k, Rng& rng);

struct SampleBatch {
    int n = 0;
    int k = 0;
    MeasureKind kind = MeasureKind::tau;
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<Partition> shapes;
};

/// Replicate i draws from Rng(derive_seed(seed, i)), so the batch is
/// independent of `threads`.
SampleBatch sample_batch(int n, int k, MeasureKind kind, std::uint64_t seed, int count, int threads = 1);

/// sum_lambda |P_tau(lambda) - P_sigma(lambda)| and the mixing coefficients
/// c_j = (-1)^j binom(n+1, j) (k-j)^n / A(n,k), j = 0..k-1, with
/// P_tau = sum_j c_j P_sigma^{(k-j)}.
struct TvReport {
    Rational tv;
    std::vector<Rational> coefficients;
    bool coefficients_sum_to_one = false;
};
std::vector<Rational> tv_coefficients(int n, int k);
TvReport tv_distance_exact(int n, int k);

/// Points -3.0, -2.9, ..., 3.0.
std::vector<double> default_profile_grid();

struct ProfileStatistics {
    std::vector<double> grid;
    std::vector<double> mean;
    std::vector<double> standard_error;
};

/// Pointwise mean (and standard error) of the rescaled profiles
/// x -> f_lambda(x sqrt(n)) / sqrt(n) over the batch. Throws on an empty batch.
ProfileStatistics mean_profile(const SampleBatch& batch, std::span<const double> grid,
                               simd::Isa isa = simd::active_isa());
/// Rescaled profile of a single diagram on the grid.
std::vector<double> rescaled_profile(const Partition& lambda, int n, std::span<const double> grid,
                                     simd::Isa isa = simd::active_isa());
double sup_distance(std::span<const double> p, std::span<const double> q);

/// sum_lambda |empirical(lambda) - exact(lambda)|.
double empirical_tv(std::span<const Partition> samples, const ShapeMeasure& exact);

struct ChiSquare {
    double statistic = 0;
    int degrees_of_freedom = 0;
    double p_value = 1;
};
/// Pearson goodness of fit; cells with expected count < 5 are pooled.
ChiSquare chi_square_test(std::span<const Partition> samples, const ShapeMeasure& exact);

}  // namespace blockchar
