#include "blockchar/shapes.hpp"

#include "blockchar/irreducibles.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace blockchar {

// ------------------------------------------------------------------ Profile

Profile::Profile(const Partition& lambda) : n_(lambda.size()) {
    shifted_.reserve(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) shifted_.push_back(lambda.row(i) - i);
}

bool Profile::slope_down_on(int m) const {
    if (m < -length()) return true;
    return std::find(shifted_.begin(), shifted_.end(), m) != shifted_.end();
}

Rational Profile::operator()(const Rational& x) const {
    Rational mass = 0;
    for (int s : shifted_) {
        Rational piece = Rational(s + 1) - x;
        if (piece > 1) piece = 1;
        if (piece > 0) mass += piece;
    }
    const Rational tail = Rational(-length()) - x;
    if (tail > 0) mass += tail;
    return x + 2 * mass;
}

double Profile::operator()(double x) const {
    std::vector<double> rows(shifted_.begin(), shifted_.end());
    double out = 0;
    simd::evaluate_profile_scalar(rows, static_cast<double>(length()), std::span<const double>(&x, 1),
                                  std::span<double>(&out, 1));
    return out;
}

// ----------------------------------------------------------- exact measures

std::string_view kind_name(MeasureKind kind) { return kind == MeasureKind::tau ? "tau" : "sigma"; }

MeasureKind parse_kind(std::string_view text) {
    if (text == "tau" || text == "τ") return MeasureKind::tau;
    if (text == "sigma" || text == "σ") return MeasureKind::sigma;
    throw std::invalid_argument("unknown measure kind: " + std::string(text));
}

Rational ShapeMeasure::probability(const Partition& lambda) const {
    auto it = probabilities.find(lambda);
    return it == probabilities.end() ? Rational(0) : it->second;
}

ShapeMeasure exact_measure(int n, int k, MeasureKind kind) {
    if (n < 1) throw std::out_of_range("exact_measure: need n >= 1");
    if (n > kExactMeasureBound)
        throw BoundError("exact_measure: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kExactMeasureBound));
    ShapeMeasure out{n, k, kind, {}};
    if (kind == MeasureKind::tau) {
        if (k < 1 || k > n) throw std::out_of_range("exact_measure: tau needs 1 <= k <= n");
        const BigInt total = eulerian(n, k);
        for (const auto& lambda : partitions_of(n)) {
            const BigInt m = lambda.is_hook() ? m_count(lambda, k) : descent_distribution(lambda)[k - 1];
            if (m == 0) continue;
            Rational p(m * dim_syt(lambda), total);
            p.canonicalize();
            out.probabilities.emplace(lambda, std::move(p));
        }
    } else {
        if (k < 1) throw std::out_of_range("exact_measure: sigma needs k >= 1");
        const BigInt total = power(BigInt(k), static_cast<unsigned>(n));
        for (const auto& lambda : partitions_of(n, k)) {
            Rational p(s_count_content(lambda, k) * dim_syt(lambda), total);
            p.canonicalize();
            out.probabilities.emplace(lambda, std::move(p));
        }
    }
    return out;
}

// ------------------------------------------------------------------ samplers

SigmaShapeSampler::SigmaShapeSampler(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 1) throw std::out_of_range("sigma sampler: need n >= 1 and k >= 1");
}

Partition SigmaShapeSampler::operator()(Rng& rng) const {
    std::vector<int> word(n_);
    for (int& letter : word) letter = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_))) + 1;
    return rsk_shape(word);
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

TauShapeSampler::TauShapeSampler(int n, int k)
    : n_(n), k_(k), log_eulerian_(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), kNegInf) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("tau sampler: need 1 <= k <= n");
    log_eulerian_[0] = 0.0;  // A(1,1) = 1
    for (int m = 2; m <= n; ++m)
        for (int j = 1; j <= std::min(m, k); ++j) {
            const double keep = std::log(static_cast<double>(j)) + log_eulerian(m - 1, j);
            const double grow = std::log(static_cast<double>(m - j + 1)) + log_eulerian(m - 1, j - 1);
            log_eulerian_[static_cast<std::size_t>(m - 1) * k + (j - 1)] = log_add(keep, grow);
        }
}

double TauShapeSampler::log_eulerian(int m, int j) const {
    if (j < 1 || j > k_ || j > m) return kNegInf;
    return log_eulerian_[static_cast<std::size_t>(m - 1) * k_ + (j - 1)];
}

Permutation TauShapeSampler::sample_permutation(Rng& rng) const {
    // Top-down: does the permutation of m with j-1 descents come from one of
    // m-1 with j-1 descents (n inserted keeping the count) or with j-2?
    std::vector<char> keeps(n_ + 1, 0);
    int j = k_;
    for (int m = n_; m >= 2; --m) {
        bool keep;
        if (j == 1) {
            keep = true;
        } else if (j == m) {
            keep = false;
        } else {
            const double p = std::exp(std::log(static_cast<double>(j)) + log_eulerian(m - 1, j) - log_eulerian(m, j));
            keep = rng.uniform() < p;
        }
        keeps[m] = keep;
        if (!keep) --j;
    }
    // Bottom-up insertion of m = 2..n.
    std::vector<int> word{1};
    word.reserve(n_);
    int blocks = 1;  // descents + 1
    for (int m = 2; m <= n_; ++m) {
        const int size = m - 1;
        std::size_t position = 0;
        if (keeps[m]) {
            // Slots after each descent top, then the end.
            auto r = static_cast<int>(rng.below(static_cast<std::uint64_t>(blocks)));
            position = static_cast<std::size_t>(size);
            for (int i = 0; i + 1 < size; ++i)
                if (word[i] > word[i + 1] && r-- == 0) {
                    position = static_cast<std::size_t>(i) + 1;
                    break;
                }
        } else {
            // The front, then the slot inside each ascent.
            auto r = static_cast<int>(rng.below(static_cast<std::uint64_t>(m - blocks)));
            if (r > 0) {
                --r;
                for (int i = 0; i + 1 < size; ++i)
                    if (word[i] < word[i + 1] && r-- == 0) {
                        position = static_cast<std::size_t>(i) + 1;
                        break;
                    }
            }
            ++blocks;
        }
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(position), m);
    }
    return Permutation(std::move(word));
}

Partition TauShapeSampler::operator()(Rng& rng) const {
    const Permutation g = sample_permutation(rng);
    return rsk_shape(g.values());
}

Partition sample_sigma_shape(int n, int k, std::uint64_t seed) {
    Rng rng(seed);
    return SigmaShapeSampler(n, k)(rng);
}

Partition sample_tau_shape(int n, int k, std::uint64_t seed) {
    Rng rng(seed);
    return TauShapeSampler(n, k)(rng);
}

Permutation sample_tau_permutation_by_rejection(int n, int k, Rng& rng) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("rejection sampler: need 1 <= k <= n");
    std::vector<int> word(n);
    for (;;) {
        std::iota(word.begin(), word.end(), 1);
        for (int i = n - 1; i > 0; --i)
            std::swap(word[i], word[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        int descents = 0;
        for (int i = 0; i + 1 < n; ++i) descents += word[i] > word[i + 1];
        if (descents == k - 1) return Permutation(word);
    }
}

SampleBatch sample_batch(int n, int k, MeasureKind kind, std::uint64_t seed, int count, int threads) {
    if (count < 0) throw std::invalid_argument("sample_batch: count must be nonnegative");
    SampleBatch batch{n, k, kind, seed, count, std::vector<Partition>(static_cast<std::size_t>(count))};
    std::optional<TauShapeSampler> tau_sampler;
    std::optional<SigmaShapeSampler> sigma_sampler;
    if (kind == MeasureKind::tau)
        tau_sampler.emplace(n, k);
    else
        sigma_sampler.emplace(n, k);
    auto draw = [&](int i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        batch.shapes[i] = tau_sampler ? (*tau_sampler)(rng) : (*sigma_sampler)(rng);
    };
    threads = std::clamp(threads, 1, std::max(count, 1));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) draw(i);
        return batch;
    }
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t)
        workers.emplace_back([&, t] {
            for (int i = t; i < count; i += threads) draw(i);
        });
    for (auto& w : workers) w.join();
    return batch;
}

// -------------------------------------------------------- total variation

std::vector<Rational> tv_coefficients(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("tv_coefficients: need 1 <= k <= n");
    const BigInt total = eulerian(n, k);
    std::vector<Rational> c(k);
    for (int j = 0; j < k; ++j) {
        BigInt term = binomial(n + 1, j) * power(BigInt(k - j), static_cast<unsigned>(n));
        if (j % 2) term = -term;
        c[j] = Rational(term, total);
        c[j].canonicalize();
    }
    return c;
}

TvReport tv_distance_exact(int n, int k) {
    const ShapeMeasure p_tau = exact_measure(n, k, MeasureKind::tau);
    const ShapeMeasure p_sigma = exact_measure(n, k, MeasureKind::sigma);
    TvReport report;
    for (const auto& lambda : partitions_of(n)) {
        const Rational diff = p_tau.probability(lambda) - p_sigma.probability(lambda);
        report.tv += diff < 0 ? Rational(-diff) : diff;
    }
    report.coefficients = tv_coefficients(n, k);
    const Rational sum = std::accumulate(report.coefficients.begin(), report.coefficients.end(), Rational(0));
    report.coefficients_sum_to_one = sum == 1;
    return report;
}

// ------------------------------------------------------- profile statistics

std::vector<double> default_profile_grid() {
    std::vector<double> grid;
    for (int i = -30; i <= 30; ++i) grid.push_back(i / 10.0);
    return grid;
}

std::vector<double> rescaled_profile(const Partition& lambda, int n, std::span<const double> grid, simd::Isa isa) {
    if (n < 1) throw std::invalid_argument("rescaled_profile: need n >= 1");
    const double scale = std::sqrt(static_cast<double>(n));
    std::vector<double> rows;
    rows.reserve(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) rows.push_back(static_cast<double>(lambda.row(i) - i));
    std::vector<double> points(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) points[j] = grid[j] * scale;
    std::vector<double> values(grid.size());
    simd::evaluate_profile(rows, static_cast<double>(lambda.length()), points, values, isa);
    for (double& v : values) v /= scale;
    return values;
}

ProfileStatistics mean_profile(const SampleBatch& batch, std::span<const double> grid, simd::Isa isa) {
    if (batch.shapes.empty()) throw std::invalid_argument("mean_profile: empty batch");
    const std::size_t points = grid.size();
    // Welford updates: a column of identical values keeps an exact zero spread.
    std::vector<double> mean(points, 0.0);
    std::vector<double> spread(points, 0.0);
    double count = 0;
    for (const auto& lambda : batch.shapes) {
        const auto values = rescaled_profile(lambda, batch.n, grid, isa);
        count += 1;
        for (std::size_t j = 0; j < points; ++j) {
            const double delta = values[j] - mean[j];
            mean[j] += delta / count;
            spread[j] += delta * (values[j] - mean[j]);
        }
    }
    ProfileStatistics stats{{grid.begin(), grid.end()}, std::move(mean), std::vector<double>(points, 0.0)};
    if (count > 1)
        for (std::size_t j = 0; j < points; ++j) stats.standard_error[j] = std::sqrt(spread[j] / (count - 1) / count);
    return stats;
}

double sup_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("sup_distance: length mismatch");
    double best = 0;
    for (std::size_t i = 0; i < p.size(); ++i) best = std::max(best, std::abs(p[i] - q[i]));
    return best;
}

namespace {

std::map<Partition, long long, CanonicalOrder> histogram(std::span<const Partition> samples) {
    std::map<Partition, long long, CanonicalOrder> counts;
    for (const auto& lambda : samples) ++counts[lambda];
    return counts;
}

}  // namespace

double empirical_tv(std::span<const Partition> samples, const ShapeMeasure& exact) {
    if (samples.empty()) throw std::invalid_argument("empirical_tv: no samples");
    const auto counts = histogram(samples);
    const auto total = static_cast<double>(samples.size());
    double tv = 0;
    for (const auto& [lambda, p] : exact.probabilities) {
        auto it = counts.find(lambda);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
        tv += std::abs(observed - p.get_d());
    }
    for (const auto& [lambda, c] : counts)
        if (!exact.probabilities.contains(lambda)) tv += static_cast<double>(c) / total;
    return tv;
}

ChiSquare chi_square_test(std::span<const Partition> samples, const ShapeMeasure& exact) {
    if (samples.empty()) throw std::invalid_argument("chi_square_test: no samples");
    const auto counts = histogram(samples);
    for (const auto& [lambda, c] : counts)
        if (!exact.probabilities.contains(lambda)) return {std::numeric_limits<double>::infinity(), 0, 0.0};
    const auto total = static_cast<double>(samples.size());
    std::vector<std::pair<double, double>> cells;  // expected, observed
    for (const auto& [lambda, p] : exact.probabilities) {
        auto it = counts.find(lambda);
        cells.emplace_back(p.get_d() * total, it == counts.end() ? 0.0 : static_cast<double>(it->second));
    }
    std::sort(cells.begin(), cells.end());
    std::vector<std::pair<double, double>> pooled;
    std::pair<double, double> pending{0.0, 0.0};
    for (const auto& cell : cells) {
        pending.first += cell.first;
        pending.second += cell.second;
        if (pending.first >= 5.0) {
            pooled.push_back(pending);
            pending = {0.0, 0.0};
        }
    }
    if (pending.first > 0.0) {
        if (pooled.empty()) {
            pooled.push_back(pending);
        } else {
            pooled.back().first += pending.first;
            pooled.back().second += pending.second;
        }
    }
    ChiSquare result;
    for (const auto& [expected, observed] : pooled) {
        const double diff = observed - expected;
        result.statistic += diff * diff / expected;
    }
    result.degrees_of_freedom = static_cast<int>(pooled.size()) - 1;
    if (result.degrees_of_freedom < 1) return {result.statistic, 0, 1.0};
    const boost::math::chi_squared_distribution<double> dist(result.degrees_of_freedom);
    result.p_value = boost::math::cdf(boost::math::complement(dist, result.statistic));
    return result;
}

}  // namespace blockchar
