#pragma once

// Block functions on S_n: functions of a permutation through its cycle count
// only. Stored by value on each cycle count; coefficient vectors in the
// sigma and tau bases are computed views.

#include "blockchar/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace blockchar {

class BlockFunction {
public:
    /// values[l-1] is the value on permutations with l cycles, l = 1..n.
    BlockFunction(int n, std::vector<Rational> values);
    static BlockFunction zero(int n);

    [[nodiscard]] int n() const { return n_; }
    /// Value on permutations with `cycles` cycles (1-based).
    [[nodiscard]] const Rational& at(int cycles) const { return values_.at(cycles - 1); }
    [[nodiscard]] const Rational& at_identity() const { return values_.back(); }
    [[nodiscard]] std::span<const Rational> values() const { return values_; }
    [[nodiscard]] bool is_zero() const;

    BlockFunction& operator+=(const BlockFunction& rhs);
    BlockFunction& operator-=(const BlockFunction& rhs);
    BlockFunction& operator*=(const Rational& scalar);
    BlockFunction& operator/=(const Rational& scalar);
    friend BlockFunction operator+(BlockFunction lhs, const BlockFunction& rhs) { return lhs += rhs; }
    friend BlockFunction operator-(BlockFunction lhs, const BlockFunction& rhs) { return lhs -= rhs; }
    friend BlockFunction operator*(const Rational& s, BlockFunction f) { return f *= s; }
    friend BlockFunction operator/(BlockFunction f, const Rational& s) { return f /= s; }
    friend bool operator==(const BlockFunction&, const BlockFunction&) = default;

private:
    int n_;
    std::vector<Rational> values_;
};

/// Coefficients a_1..a_n of phi = sum_k a_k tau_k^n.
class TauCoefficients {
public:
    TauCoefficients(int n, std::vector<Rational> coefficients);

    [[nodiscard]] int n() const { return static_cast<int>(a_.size()); }
    /// a_k, 1-based.
    [[nodiscard]] const Rational& operator[](int k) const { return a_.at(k - 1); }
    [[nodiscard]] std::span<const Rational> values() const { return a_; }
    friend bool operator==(const TauCoefficients&, const TauCoefficients&) = default;

private:
    std::vector<Rational> a_;
};

/// sigma_k^n(g) = k^{l(g)}; any k >= 1 is accepted.
BlockFunction sigma(int n, int k);
/// (-1)^n (-k)^{l(g)}: sigma_k^n times the sign character.
BlockFunction sigma_hat(int n, int k);
/// Foulkes character tau_k^n = sum_{j<k} (-1)^j binom(n+1, j) sigma_{k-j}^n, 1 <= k <= n.
BlockFunction tau(int n, int k);
/// Character of words using exactly k letters: sum_j (-1)^{k-j} binom(k,j) sigma_j^n.
BlockFunction psi(int n, int k);
/// Value on permutations with l cycles equals n! when l = n and 0 otherwise.
BlockFunction regular_character(int n);
BlockFunction sign_character(int n);

struct EwensCharacter {
    BlockFunction values;         // theta^l
    TauCoefficients coefficients; // binom(theta + n - j, n), j = 1..n
    bool degenerate;              // theta == 0: the zero function
};

/// theta^{l(g)} together with its generalized-binomial tau expansion.
/// Throws std::invalid_argument for negative theta.
EwensCharacter ewens(int n, Rational theta);

/// Unique c with phi(l) = sum_k c_k k^l (exact Vandermonde solve).
std::vector<Rational> to_sigma_basis(const BlockFunction& phi);
/// Resums sigma-basis coefficients into values.
BlockFunction from_sigma_basis(int n, std::span<const Rational> coefficients);

TauCoefficients to_tau_basis(const BlockFunction& phi);
BlockFunction from_tau_basis(const TauCoefficients& a);

struct CharacterTest {
    bool is_character;
    std::optional<int> first_negative;  // smallest k with a_k < 0
    TauCoefficients coefficients;
};

/// phi is positive definite iff every tau coefficient is nonnegative.
CharacterTest is_character(const BlockFunction& phi);

/// Size limit of the brute-force Gram oracle (n! x n! matrix).
inline constexpr int kGramOracleBound = 5;

/// Independent positivity check: builds M[g,h] = phi(g h^{-1}) over all of
/// S_n and decides positive semidefiniteness by exact elimination.
bool gram_psd_oracle(const BlockFunction& phi);

/// Restriction to S_{n-1}: w(l) = v(l+1). Throws for n = 1.
BlockFunction restrict(const BlockFunction& phi);

/// Res tau_k^n == k tau_k^{n-1} + (n-k+1) tau_{k-1}^{n-1}, exactly.
bool branching_check(int n, int k);
/// Right-hand side of the tau branching rule (terms out of range vanish).
BlockFunction tau_branching_rhs(int n, int k);

}  // namespace blockchar
