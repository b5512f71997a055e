#pragma once

// Block characters of the infinite symmetric group: the extreme family
// z^{c(g)} for z in {0, ±1, ±1/2, ±1/3, ...}, their finite restrictions, and
// the coefficient arrays a[n][k] expressing them in normalized tau characters.

#include "blockchar/block_function.hpp"
#include "blockchar/check_result.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blockchar {

/// z = 0, or z = sign / K with K >= 1.
class ExtremeLabel {
public:
    static ExtremeLabel zero() { return ExtremeLabel(0, 0); }
    /// z = sign / K; sign is +1 or -1, K >= 1.
    static ExtremeLabel reciprocal(int sign, int K);
    /// Accepts "0", "1", "-1", "1/K", "-1/K".
    static ExtremeLabel parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return K_ == 0; }
    [[nodiscard]] int sign() const { return sign_; }
    [[nodiscard]] int K() const { return K_; }
    [[nodiscard]] Rational value() const;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const ExtremeLabel&, const ExtremeLabel&) = default;

private:
    ExtremeLabel(int sign, int K) : sign_(sign), K_(K) {}
    int sign_;
    int K_;
};

/// z^c, with 0^0 = 1. Throws std::invalid_argument for c < 0.
Rational sigma_infinity(const ExtremeLabel& z, int c);

/// Values z^{n - l} on permutations of n with l cycles.
BlockFunction restrict_to_finite(const ExtremeLabel& z, int n);

/// Triangular array a[n][k], 1 <= k <= n <= N.
class CoefficientArray {
public:
    explicit CoefficientArray(int N);

    [[nodiscard]] int N() const { return static_cast<int>(rows_.size()); }
    Rational& at(int n, int k) { return rows_.at(n - 1).at(k - 1); }
    [[nodiscard]] const Rational& at(int n, int k) const { return rows_.at(n - 1).at(k - 1); }
    [[nodiscard]] std::span<const Rational> row(int n) const { return rows_.at(n - 1); }

private:
    std::vector<std::vector<Rational>> rows_;
};

enum class ArrayType { T1, T2, T3 };

struct ArrayFamily {
    ArrayType type = ArrayType::T3;
    /// Ignored for T3.
    int K = 1;

    [[nodiscard]] ExtremeLabel label() const;
    [[nodiscard]] std::string to_string() const;
};

/// T1: binom(n+K-k, n) A(n,k) / K^n
/// T2: binom(K+k-1, n) A(n,k) / K^n
/// T3: A(n,k) / n!
CoefficientArray extreme_array(const ArrayFamily& family, int N);

/// Nonnegative rows summing to one and, for 1 <= k <= n < N,
/// a[n][k] = k A(n,k)/A(n+1,k) a[n+1][k] + (n-k+1) A(n,k)/A(n+1,k+1) a[n+1][k+1].
CheckResult verify_backward_recursion(const CoefficientArray& array);

/// sum_k a[n][k] tau_k^n / tau_k^n(e).
BlockFunction array_to_character(const CoefficientArray& array, int n);

/// array_to_character(extreme_array(family, n), n) == restrict_to_finite(family.label(), n).
CheckResult verify_extreme_identity(const ArrayFamily& family, int n);

/// For z = 0 and every z = ±1/K with K <= max_K, and 1 <= n <= max_n: the
/// restriction is a character and restricts to the level n-1 restriction.
CheckResult verify_restriction_consistency(int max_K, int max_n);

using Weights = std::vector<std::pair<ExtremeLabel, Rational>>;

/// sum_z gamma_z restrict_to_finite(z, n). Throws std::invalid_argument on a
/// negative weight, a repeated label or weights not summing to one.
BlockFunction mixture(const Weights& gamma, int n);

struct TruncatedMixture {
    BlockFunction partial;
    /// 1 - sum of the supplied weights; bounds every value of the omitted tail.
    Rational tail_bound;
};

/// Head of a mixture whose remaining mass 1 - sum(gamma) sits on labels not
/// listed. Weights must be nonnegative with sum <= 1.
TruncatedMixture truncated_mixture(const Weights& head, int n);

}  // namespace blockchar
