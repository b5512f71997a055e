#include "blockchar/profile_kernels.hpp"

#include "blockchar/random.hpp"
#include "blockchar/shapes.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace blockchar;

namespace {

Partition random_partition(Rng& rng, int max_rows, int max_first) {
    const int rows = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_rows) + 1));
    std::vector<int> parts;
    int cap = max_first;
    for (int i = 0; i < rows; ++i) {
        const int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
        parts.push_back(p);
        cap = p;
    }
    return Partition(parts);
}

std::vector<double> shifted_rows(const Partition& lambda) {
    std::vector<double> rows;
    for (int i = 1; i <= lambda.length(); ++i) rows.push_back(lambda.row(i) - i);
    return rows;
}

std::vector<double> random_points(Rng& rng, std::size_t count, double spread) {
    std::vector<double> points(count);
    for (std::size_t j = 0; j < count; ++j) {
        // Mix of integers, half-integers and arbitrary doubles.
        switch (rng.below(3)) {
            case 0: points[j] = static_cast<double>(static_cast<long>(rng.below(81)) - 40); break;
            case 1: points[j] = (static_cast<double>(rng.below(161)) - 80.0) / 2.0; break;
            default: points[j] = (rng.uniform() * 2.0 - 1.0) * spread; break;
        }
    }
    return points;
}

bool bit_identical(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("isa names and availability") {
    CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
    CHECK(simd::isa_name(simd::Isa::avx2) == "avx2");
    CHECK(simd::isa_name(simd::Isa::neon) == "neon");
    CHECK(simd::isa_available(simd::Isa::scalar));
    CHECK(simd::isa_available(simd::detect_isa()));
    CHECK(simd::isa_available(simd::active_isa()));
}

TEST_CASE("every available kernel matches the scalar kernel bit for bit") {
    Rng rng(99);
    for (int rep = 0; rep < 400; ++rep) {
        const Partition lambda = random_partition(rng, 1 + rep % 40, 1 + rep % 37);
        const auto rows = shifted_rows(lambda);
        // Odd sizes exercise the vector tails.
        const auto points = random_points(rng, 1 + rng.below(67), 45.0);
        std::vector<double> reference(points.size());
        simd::evaluate_profile_scalar(rows, lambda.length(), points, reference);
        for (auto isa : {simd::Isa::scalar, simd::Isa::avx2, simd::Isa::neon}) {
            if (!simd::isa_available(isa)) continue;
            std::vector<double> out(points.size());
            simd::evaluate_profile(rows, lambda.length(), points, out, isa);
            CHECK_MESSAGE(bit_identical(out, reference), simd::isa_name(isa), " on ", lambda.to_string());
        }
    }
}

TEST_CASE("scalar kernel agrees with exact evaluation") {
    Rng rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const Partition lambda = random_partition(rng, 12, 12);
        const Profile f(lambda);
        const auto rows = shifted_rows(lambda);
        std::vector<double> points;
        std::vector<Rational> exact_points;
        for (int num = -60; num <= 60; ++num) {
            exact_points.emplace_back(num, 4);
            exact_points.back().canonicalize();
            points.push_back(num / 4.0);
        }
        std::vector<double> out(points.size());
        simd::evaluate_profile(rows, lambda.length(), points, out, simd::active_isa());
        for (std::size_t j = 0; j < points.size(); ++j) CHECK(out[j] == f(exact_points[j]).get_d());
    }
}

TEST_CASE("empty diagram gives |x|") {
    const std::vector<double> points{-3.5, -1, 0, 0.25, 2};
    std::vector<double> out(points.size());
    for (auto isa : {simd::Isa::scalar, simd::Isa::avx2, simd::Isa::neon}) {
        if (!simd::isa_available(isa)) continue;
        simd::evaluate_profile({}, 0, points, out, isa);
        for (std::size_t j = 0; j < points.size(); ++j) CHECK(out[j] == std::abs(points[j]));
    }
}

TEST_CASE("kernel argument errors") {
    const std::vector<double> rows{0.0};
    const std::vector<double> points{0.0, 1.0};
    std::vector<double> out(1);
    CHECK_THROWS_AS(simd::evaluate_profile(rows, 1, points, out, simd::Isa::scalar), std::invalid_argument);
    out.resize(2);
    for (auto isa : {simd::Isa::avx2, simd::Isa::neon})
        if (!simd::isa_available(isa))
            CHECK_THROWS_AS(simd::evaluate_profile(rows, 1, points, out, isa), std::invalid_argument);
}

TEST_CASE("rescaled profiles do not depend on the instruction set") {
    Rng rng(3);
    const auto grid = default_profile_grid();
    for (int rep = 0; rep < 50; ++rep) {
        const Partition lambda = random_partition(rng, 30, 30);
        const int n = std::max(lambda.size(), 1);
        const auto reference = rescaled_profile(lambda, n, grid, simd::Isa::scalar);
        CHECK(bit_identical(rescaled_profile(lambda, n, grid, simd::detect_isa()), reference));
    }
}
