#include "blockchar/shapes.hpp"

#include "blockchar/irreducibles.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace blockchar;

namespace {

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

// f(m) = |m| + 2 #{boxes on diagonal j - i = m}.
long diagonal_oracle(const Partition& lambda, int m) {
    long count = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) count += j - i == m;
    return std::abs(m) + 2 * count;
}

// Exact distribution of RSK shapes over all permutations with k-1 descents.
std::map<Partition, long> tau_shapes_by_enumeration(int n, int k) {
    std::map<Partition, long> out;
    for (const auto& w : oracle::permutations(n))
        if (oracle::descents(w) == k - 1) ++out[rsk(Permutation(w)).insertion.shape()];
    return out;
}

}  // namespace

TEST_CASE("profile examples") {
    const Profile empty(Partition{});
    for (int num = -20; num <= 20; ++num) CHECK(empty(q(num, 3)) == abs(q(num, 3)));
    const Profile one(Partition{1});
    CHECK(one(q(0)) == 2);
    CHECK(one(q(1)) == 1);
    CHECK(one(q(-1)) == 1);
    CHECK(one(q(1, 2)) == Rational(3, 2));
    const Profile f(Partition{3, 3, 1});
    CHECK(f(q(0)) == 4);
    CHECK(f(q(1)) == 5);
    CHECK(f(q(-2)) == 4);
    for (int x = -8; x <= -3; ++x) CHECK(f(q(x)) == -x);
    for (int x = 3; x <= 8; ++x) CHECK(f(q(x)) == x);
    CHECK(f.first_row() == 3);
    CHECK(f.length() == 3);
    CHECK(profile_eval(profile(Partition{3, 3, 1}), q(1)) == 5);
}

TEST_CASE("profile invariants for every diagram up to 12") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : n == 0 ? std::vector<Partition>{Partition{}} : partitions_of(n)) {
            const Profile f(lambda);
            const int w = f.window();
            Rational area = 0;
            for (int m = -w - 2; m <= w + 2; ++m) {
                const Rational at = f(q(m));
                CHECK(at == diagonal_oracle(lambda, m));
                CHECK(at >= abs(q(m)));
                if (m < -lambda.length() || m > lambda.row(1)) CHECK(at == abs(q(m)));
                const Rational slope = f(q(m + 1)) - at;
                CHECK(slope == (f.slope_down_on(m) ? -1 : 1));
                // Linear on [m, m+1].
                CHECK(f(q(2 * m + 1, 2)) == (at + f(q(m + 1))) / 2);
                area += (at + f(q(m + 1))) / 2 - (abs(q(m)) + abs(q(m + 1))) / 2;
                CHECK(f(q(m)) == Rational(f(static_cast<double>(m))));
            }
            // |x| is not linear on [-1, 1] but its trapezoid over [-1,0] and [0,1] is exact.
            CHECK(area == 2 * n);
        }
}

TEST_CASE("measure kinds") {
    CHECK(parse_kind("tau") == MeasureKind::tau);
    CHECK(parse_kind("σ") == MeasureKind::sigma);
    CHECK(kind_name(MeasureKind::sigma) == "sigma");
    CHECK_THROWS_AS(parse_kind("psi"), std::invalid_argument);
}

TEST_CASE("exact measure examples") {
    const auto t = exact_measure(3, 2, MeasureKind::tau);
    CHECK(t.probabilities.size() == 1);
    CHECK(t.probability(Partition{2, 1}) == 1);
    const auto s1 = exact_measure(2, 1, MeasureKind::sigma);
    CHECK(s1.probabilities.size() == 1);
    CHECK(s1.probability(Partition{2}) == 1);
    const auto s2 = exact_measure(2, 2, MeasureKind::sigma);
    CHECK(s2.probability(Partition{2}) == Rational(3, 4));
    CHECK(s2.probability(Partition{1, 1}) == Rational(1, 4));
    CHECK_THROWS_AS(exact_measure(3, 4, MeasureKind::tau), std::out_of_range);
    CHECK_THROWS_AS(exact_measure(31, 2, MeasureKind::sigma), BoundError);
}

TEST_CASE("exact measures against enumeration") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto t = exact_measure(n, k, MeasureKind::tau);
            const auto counts = tau_shapes_by_enumeration(n, k);
            const BigInt total = eulerian(n, k);
            CHECK(t.probabilities.size() == counts.size());
            for (const auto& [lambda, c] : counts) CHECK(t.probability(lambda) == Rational(BigInt(c)) / Rational(total));
        }
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k) {
            std::map<Partition, long> counts;
            std::vector<int> word(n, 1);
            for (;;) {
                ++counts[rsk_shape(word)];
                int pos = n - 1;
                while (pos >= 0 && word[pos] == k) word[pos--] = 1;
                if (pos < 0) break;
                ++word[pos];
            }
            const auto s = exact_measure(n, k, MeasureKind::sigma);
            for (const auto& [lambda, c] : counts)
                CHECK(s.probability(lambda) == Rational(BigInt(c)) / Rational(power(BigInt(k), n)));
            CHECK(s.probabilities.size() == counts.size());
        }
}

TEST_CASE("exact measures sum to one and respect duality") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            for (auto kind : {MeasureKind::tau, MeasureKind::sigma}) {
                Rational total = 0;
                for (const auto& [lambda, p] : exact_measure(n, k, kind).probabilities) {
                    CHECK(p > 0);
                    total += p;
                }
                CHECK(total == 1);
            }
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto t = exact_measure(n, k, MeasureKind::tau);
            const auto dual = exact_measure(n, n + 1 - k, MeasureKind::tau);
            CHECK(t.probabilities.size() == dual.probabilities.size());
            for (const auto& [lambda, p] : t.probabilities) CHECK(dual.probability(conjugate(lambda)) == p);
        }
}

TEST_CASE("deterministic samples") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(sample_sigma_shape(2, 1, seed) == Partition{2});
        CHECK(sample_tau_shape(3, 2, seed) == Partition{2, 1});
        CHECK(sample_tau_shape(9, 1, seed) == Partition{9});
        CHECK(sample_tau_shape(9, 9, seed) == Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
    }
    CHECK_THROWS_AS(sample_tau_shape(3, 4, 1), std::out_of_range);
    CHECK_THROWS_AS(sample_sigma_shape(0, 1, 1), std::out_of_range);
}

TEST_CASE("tau sampler draws permutations with the right descent number") {
    Rng rng(5);
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; k += 3) {
            const TauShapeSampler sampler(n, k);
            for (int rep = 0; rep < 5; ++rep) {
                const Permutation g = sampler.sample_permutation(rng);
                CHECK(g.size() == n);
                CHECK(descent_number(g) == k - 1);
            }
        }
    const TauShapeSampler big(3000, 60);
    CHECK(descent_number(big.sample_permutation(rng)) == 59);
}

TEST_CASE("tau sampler is uniform on permutations") {
    const int n = 5, k = 3;
    const TauShapeSampler sampler(n, k);
    Rng rng(31);
    std::map<Permutation, long> fast, slow;
    const int draws = 66000;
    for (int i = 0; i < draws; ++i) {
        ++fast[sampler.sample_permutation(rng)];
        ++slow[sample_tau_permutation_by_rejection(n, k, rng)];
    }
    CHECK(fast.size() == 66);
    CHECK(slow.size() == 66);
    // Each cell expects 1000; 6 standard deviations is about 190.
    for (const auto& [g, c] : fast) CHECK(std::abs(c - 1000) < 190);
    for (const auto& [g, c] : slow) CHECK(std::abs(c - 1000) < 190);
}

TEST_CASE("sampler fidelity") {
    const auto batch = sample_batch(2, 2, MeasureKind::sigma, 1, 100000, 4);
    long rows_one = 0;
    for (const auto& lambda : batch.shapes) rows_one += lambda == Partition{2};
    // Binomial(1e5, 3/4): sd = 137.
    CHECK(std::abs(rows_one - 75000) < 3 * 137);
    for (auto kind : {MeasureKind::tau, MeasureKind::sigma}) {
        const auto exact = exact_measure(6, 3, kind);
        const auto b = sample_batch(6, 3, kind, 2024, 1000000, 8);
        CHECK(empirical_tv(b.shapes, exact) <= 0.01);
        const auto chi = chi_square_test(b.shapes, exact);
        CHECK(chi.degrees_of_freedom >= 1);
        CHECK(chi.p_value >= 1e-3);
    }
}

TEST_CASE("batches are reproducible and independent of the thread count") {
    const auto one = sample_batch(50, 7, MeasureKind::tau, 123, 64, 1);
    const auto many = sample_batch(50, 7, MeasureKind::tau, 123, 64, 5);
    CHECK(one.shapes == many.shapes);
    CHECK(one.shapes.size() == 64);
    for (int i = 0; i < 64; ++i) {
        Rng rng(derive_seed(123, static_cast<std::uint64_t>(i)));
        CHECK(TauShapeSampler(50, 7)(rng) == one.shapes[i]);
    }
    const auto other = sample_batch(50, 7, MeasureKind::tau, 124, 64, 1);
    CHECK(other.shapes != one.shapes);
    const auto s1 = sample_batch(40, 4, MeasureKind::sigma, 9, 33, 1);
    const auto s3 = sample_batch(40, 4, MeasureKind::sigma, 9, 33, 3);
    CHECK(s1.shapes == s3.shapes);
    for (const auto& lambda : s1.shapes) {
        CHECK(lambda.size() == 40);
        CHECK(lambda.length() <= 4);
    }
}

TEST_CASE("total variation between tau and sigma measures") {
    const auto r32 = tv_distance_exact(3, 2);
    CHECK(r32.tv == 1);
    CHECK(r32.coefficients_sum_to_one);
    CHECK(tv_distance_exact(2, 1).tv == 0);
    const auto r83 = tv_distance_exact(8, 3);
    CHECK(r83.tv >= 0);
    CHECK(r83.tv <= 2);
    Rational previous = 3;
    for (int m = 2; m <= 4; ++m) {
        const auto r = tv_distance_exact(m * m, m);
        CHECK(r.tv < previous);
        previous = r.tv;
    }
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto c = tv_coefficients(n, k);
            REQUIRE(c.size() == static_cast<std::size_t>(k));
            Rational total = 0;
            for (const auto& x : c) total += x;
            CHECK(total == 1);
        }
    // Direct oracle on the mixture identity P_tau = sum_j c_j P_sigma^{(k-j)}.
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto c = tv_coefficients(n, k);
            const auto t = exact_measure(n, k, MeasureKind::tau);
            for (const auto& lambda : partitions_of(n)) {
                Rational mix = 0;
                for (int j = 0; j < k; ++j) mix += c[j] * exact_measure(n, k - j, MeasureKind::sigma).probability(lambda);
                CHECK(mix == t.probability(lambda));
            }
            Rational tv = 0;
            const auto s = exact_measure(n, k, MeasureKind::sigma);
            for (const auto& lambda : partitions_of(n)) tv += abs(t.probability(lambda) - s.probability(lambda));
            CHECK(tv_distance_exact(n, k).tv == tv);
        }
}

TEST_CASE("profile statistics") {
    const auto grid = default_profile_grid();
    REQUIRE(grid.size() == 61);
    CHECK(grid.front() == doctest::Approx(-3.0));
    CHECK(grid[30] == 0.0);
    CHECK(grid.back() == doctest::Approx(3.0));

    SampleBatch same;
    same.n = 7;
    same.shapes.assign(5, Partition{3, 3, 1});
    const auto stats = mean_profile(same, grid);
    const auto single = rescaled_profile(Partition{3, 3, 1}, 7, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(stats.mean[j] == doctest::Approx(single[j]).epsilon(1e-14));
        CHECK(stats.standard_error[j] == 0.0);
        const double x = grid[j] * std::sqrt(7.0);
        CHECK(single[j] == doctest::Approx(Profile(Partition{3, 3, 1})(x) / std::sqrt(7.0)).epsilon(1e-14));
    }
    const auto empty = rescaled_profile(Partition{}, 4, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) CHECK(empty[j] == doctest::Approx(std::abs(grid[j])));

    SampleBatch mixed;
    mixed.n = 2;
    mixed.shapes = {Partition{2}, Partition{1, 1}};
    const auto m = mean_profile(mixed, grid);
    const auto a = rescaled_profile(Partition{2}, 2, grid);
    const auto b = rescaled_profile(Partition{1, 1}, 2, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(m.mean[j] == doctest::Approx((a[j] + b[j]) / 2));
        CHECK(m.standard_error[j] == doctest::Approx(std::abs(a[j] - b[j]) / 2));
    }
    CHECK_THROWS_AS(mean_profile(SampleBatch{}, grid), std::invalid_argument);
    CHECK(sup_distance(a, a) == 0);
    CHECK(sup_distance(a, b) == doctest::Approx(*std::max_element(m.standard_error.begin(), m.standard_error.end()) * 2));
    CHECK_THROWS_AS(sup_distance(a, std::span<const double>(grid).subspan(1)), std::invalid_argument);
}

TEST_CASE("goodness of fit detects a wrong sampler") {
    const auto exact = exact_measure(6, 3, MeasureKind::tau);
    const auto wrong = sample_batch(6, 3, MeasureKind::sigma, 5, 20000, 4);
    CHECK(chi_square_test(wrong.shapes, exact).p_value < 1e-6);
    CHECK(empirical_tv(wrong.shapes, exact) > 0.1);
    const std::vector<Partition> point(100, Partition{2, 1});
    const auto chi = chi_square_test(point, exact_measure(3, 2, MeasureKind::tau));
    CHECK(chi.p_value == 1.0);
    CHECK(empirical_tv(point, exact_measure(3, 2, MeasureKind::tau)) == 0.0);
    const std::vector<Partition> outside(10, Partition{3});
    CHECK(chi_square_test(outside, exact_measure(3, 2, MeasureKind::tau)).p_value == 0.0);
}
