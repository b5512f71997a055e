#include "blockchar/infinite_group.hpp"

#include "blockchar/combinatorics.hpp"

#include <set>
#include <stdexcept>

namespace blockchar {

ExtremeLabel ExtremeLabel::reciprocal(int sign, int K) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("extreme label sign must be +1 or -1");
    if (K < 1) throw std::invalid_argument("extreme label needs K >= 1");
    return ExtremeLabel(sign, K);
}

ExtremeLabel ExtremeLabel::parse(std::string_view text) {
    const Rational z = parse_rational(text);
    if (z == 0) return zero();
    if (abs(z.get_num()) != 1 || !z.get_den().fits_sint_p())
        throw std::invalid_argument("extreme label must be 0 or ±1/K: " + std::string(text));
    return reciprocal(sgn(z), static_cast<int>(z.get_den().get_si()));
}

Rational ExtremeLabel::value() const {
    if (is_zero()) return 0;
    return Rational(sign_, K_);
}

std::string ExtremeLabel::to_string() const { return blockchar::to_string(value()); }

Rational sigma_infinity(const ExtremeLabel& z, int c) {
    if (c < 0) throw std::invalid_argument("sigma_infinity: decrement must be nonnegative");
    if (z.is_zero()) return c == 0 ? 1 : 0;
    return power(z.value(), static_cast<unsigned>(c));
}

BlockFunction restrict_to_finite(const ExtremeLabel& z, int n) {
    if (n < 1) throw std::invalid_argument("restrict_to_finite: need n >= 1");
    std::vector<Rational> values(n);
    for (int l = 1; l <= n; ++l) values[l - 1] = sigma_infinity(z, n - l);
    return BlockFunction(n, std::move(values));
}

CoefficientArray::CoefficientArray(int N) {
    if (N < 1) throw std::invalid_argument("coefficient array needs N >= 1");
    for (int n = 1; n <= N; ++n) rows_.emplace_back(n);
}

ExtremeLabel ArrayFamily::label() const {
    switch (type) {
        case ArrayType::T1: return ExtremeLabel::reciprocal(1, K);
        case ArrayType::T2: return ExtremeLabel::reciprocal(-1, K);
        case ArrayType::T3: break;
    }
    return ExtremeLabel::zero();
}

std::string ArrayFamily::to_string() const {
    switch (type) {
        case ArrayType::T1: return "T1(K=" + std::to_string(K) + ")";
        case ArrayType::T2: return "T2(K=" + std::to_string(K) + ")";
        case ArrayType::T3: break;
    }
    return "T3";
}

CoefficientArray extreme_array(const ArrayFamily& family, int N) {
    if (family.type != ArrayType::T3 && family.K < 1) throw std::invalid_argument("extreme_array: need K >= 1");
    CoefficientArray array(N);
    const int K = family.K;
    for (int n = 1; n <= N; ++n) {
        const auto A = eulerian_row(n);
        const BigInt scale = family.type == ArrayType::T3 ? factorial(n) : power(BigInt(K), static_cast<unsigned>(n));
        for (int k = 1; k <= n; ++k) {
            BigInt numerator = A[k - 1];
            if (family.type == ArrayType::T1) numerator *= binomial(n + K - k, n);
            if (family.type == ArrayType::T2) numerator *= binomial(K + k - 1, n);
            Rational a(numerator, scale);
            a.canonicalize();
            array.at(n, k) = std::move(a);
        }
    }
    return array;
}

CheckResult verify_backward_recursion(const CoefficientArray& array) {
    CheckResult result;
    const int N = array.N();
    for (int n = 1; n <= N; ++n) {
        ++result.cases;
        Rational total = 0;
        for (int k = 1; k <= n; ++k) {
            if (array.at(n, k) < 0)
                return CheckResult::fail("a[" + std::to_string(n) + "][" + std::to_string(k) + "] < 0", result.cases);
            total += array.at(n, k);
        }
        if (total != 1)
            return CheckResult::fail("row " + std::to_string(n) + " sums to " + to_string(total), result.cases);
    }
    for (int n = 1; n < N; ++n) {
        const auto A = eulerian_row(n);
        const auto A_next = eulerian_row(n + 1);
        for (int k = 1; k <= n; ++k) {
            ++result.cases;
            Rational stay(A[k - 1] * k, A_next[k - 1]);
            Rational step(A[k - 1] * (n - k + 1), A_next[k]);
            stay.canonicalize();
            step.canonicalize();
            const Rational rhs = stay * array.at(n + 1, k) + step * array.at(n + 1, k + 1);
            if (rhs != array.at(n, k))
                return CheckResult::fail("recursion fails at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                             ": " + to_string(array.at(n, k)) + " != " + to_string(rhs),
                                         result.cases);
        }
    }
    return result;
}

BlockFunction array_to_character(const CoefficientArray& array, int n) {
    if (n < 1 || n > array.N()) throw std::out_of_range("array_to_character: need 1 <= n <= N");
    BlockFunction out = BlockFunction::zero(n);
    for (int k = 1; k <= n; ++k) {
        if (array.at(n, k) == 0) continue;
        const BlockFunction t = tau(n, k);
        out += (array.at(n, k) / t.at_identity()) * t;
    }
    return out;
}

namespace {

std::string values_string(const BlockFunction& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.values().size(); ++i) out += (i ? "," : "") + to_string(f.values()[i]);
    return out + ")";
}

}  // namespace

CheckResult verify_extreme_identity(const ArrayFamily& family, int n) {
    const BlockFunction lhs = array_to_character(extreme_array(family, n), n);
    const BlockFunction rhs = restrict_to_finite(family.label(), n);
    if (lhs == rhs) return {true, 1, {}};
    return CheckResult::fail(family.to_string() + " at n=" + std::to_string(n) + ": " + values_string(lhs) +
                                 " != " + values_string(rhs),
                             1);
}

CheckResult verify_restriction_consistency(int max_K, int max_n) {
    std::vector<ExtremeLabel> labels{ExtremeLabel::zero()};
    for (int K = 1; K <= max_K; ++K) {
        labels.push_back(ExtremeLabel::reciprocal(1, K));
        labels.push_back(ExtremeLabel::reciprocal(-1, K));
    }
    CheckResult result;
    for (const auto& z : labels)
        for (int n = 1; n <= max_n; ++n) {
            ++result.cases;
            const BlockFunction f = restrict_to_finite(z, n);
            const auto test = is_character(f);
            if (!test.is_character)
                return CheckResult::fail("z=" + z.to_string() + " at n=" + std::to_string(n) +
                                             " has negative tau coefficient " + std::to_string(*test.first_negative),
                                         result.cases);
            if (n >= 2 && restrict(f) != restrict_to_finite(z, n - 1))
                return CheckResult::fail("z=" + z.to_string() + " is not consistent between n=" +
                                             std::to_string(n - 1) + " and n=" + std::to_string(n),
                                         result.cases);
        }
    return result;
}

namespace {

Rational checked_weight_sum(const Weights& gamma) {
    std::set<ExtremeLabel> seen;
    Rational total = 0;
    for (const auto& [z, w] : gamma) {
        if (w < 0) throw std::invalid_argument("mixture weight for z=" + z.to_string() + " is negative");
        if (!seen.insert(z).second) throw std::invalid_argument("mixture lists z=" + z.to_string() + " twice");
        total += w;
    }
    return total;
}

}  // namespace

BlockFunction mixture(const Weights& gamma, int n) {
    const Rational total = checked_weight_sum(gamma);
    if (total != 1) throw std::invalid_argument("mixture weights sum to " + to_string(total) + ", not 1");
    BlockFunction out = BlockFunction::zero(n);
    for (const auto& [z, w] : gamma)
        if (w != 0) out += w * restrict_to_finite(z, n);
    return out;
}

TruncatedMixture truncated_mixture(const Weights& head, int n) {
    const Rational total = checked_weight_sum(head);
    if (total > 1) throw std::invalid_argument("truncated mixture weights exceed 1");
    TruncatedMixture out{BlockFunction::zero(n), 1 - total};
    for (const auto& [z, w] : head)
        if (w != 0) out.partial += w * restrict_to_finite(z, n);
    return out;
}

}  // namespace blockchar
