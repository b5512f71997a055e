#include "blockchar/block_function.hpp"

#include "blockchar/combinatorics.hpp"
#include "blockchar/exact_linear_algebra.hpp"

#include <stdexcept>
#include <string>

namespace blockchar {

BlockFunction::BlockFunction(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("block function needs n >= 1");
    if (static_cast<int>(values_.size()) != n)
        throw std::invalid_argument("block function needs exactly n values");
}

BlockFunction BlockFunction::zero(int n) { return BlockFunction(n, std::vector<Rational>(n)); }

bool BlockFunction::is_zero() const {
    for (const auto& v : values_)
        if (v != 0) return false;
    return true;
}

BlockFunction& BlockFunction::operator+=(const BlockFunction& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("block functions on different groups");
    for (int i = 0; i < n_; ++i) values_[i] += rhs.values_[i];
    return *this;
}

BlockFunction& BlockFunction::operator-=(const BlockFunction& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("block functions on different groups");
    for (int i = 0; i < n_; ++i) values_[i] -= rhs.values_[i];
    return *this;
}

BlockFunction& BlockFunction::operator*=(const Rational& scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
}

BlockFunction& BlockFunction::operator/=(const Rational& scalar) {
    for (auto& v : values_) v /= scalar;
    return *this;
}

TauCoefficients::TauCoefficients(int n, std::vector<Rational> coefficients) : a_(std::move(coefficients)) {
    if (n < 1 || static_cast<int>(a_.size()) != n)
        throw std::invalid_argument("tau coefficients need exactly n >= 1 entries");
}

namespace {

void require_index(const char* what, int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::out_of_range(std::string(what) + ": need 1 <= k <= n (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
}

}  // namespace

BlockFunction sigma(int n, int k) {
    if (n < 1 || k < 1) throw std::out_of_range("sigma: need n >= 1 and k >= 1");
    std::vector<Rational> values(n);
    BigInt p = 1;
    for (int l = 1; l <= n; ++l) {
        p *= k;
        values[l - 1] = p;
    }
    return BlockFunction(n, std::move(values));
}

BlockFunction sign_character(int n) {
    std::vector<Rational> values(n);
    for (int l = 1; l <= n; ++l) values[l - 1] = (n - l) % 2 == 0 ? 1 : -1;
    return BlockFunction(n, std::move(values));
}

BlockFunction sigma_hat(int n, int k) {
    BlockFunction out = sigma(n, k);
    const BlockFunction sgn = sign_character(n);
    std::vector<Rational> values(out.values().begin(), out.values().end());
    for (int l = 1; l <= n; ++l) values[l - 1] *= sgn.at(l);
    return BlockFunction(n, std::move(values));
}

BlockFunction tau(int n, int k) {
    require_index("tau", n, k);
    BlockFunction out = BlockFunction::zero(n);
    for (int j = 0; j < k; ++j) {
        Rational c = binomial(n + 1, j);
        if (j % 2) c = -c;
        out += c * sigma(n, k - j);
    }
    return out;
}

BlockFunction psi(int n, int k) {
    require_index("psi", n, k);
    BlockFunction out = BlockFunction::zero(n);
    for (int j = 1; j <= k; ++j) {
        Rational c = binomial(k, j);
        if ((k - j) % 2) c = -c;
        out += c * sigma(n, j);
    }
    return out;
}

BlockFunction regular_character(int n) {
    if (n < 1) throw std::out_of_range("regular_character: need n >= 1");
    std::vector<Rational> values(n);
    values[n - 1] = factorial(n);
    return BlockFunction(n, std::move(values));
}

EwensCharacter ewens(int n, Rational theta) {
    theta.canonicalize();
    if (n < 1) throw std::out_of_range("ewens: need n >= 1");
    if (theta < 0) throw std::invalid_argument("ewens: theta must be nonnegative");
    std::vector<Rational> values(n);
    Rational p = 1;
    for (int l = 1; l <= n; ++l) {
        p *= theta;
        values[l - 1] = p;
    }
    std::vector<Rational> a(n);
    for (int j = 1; j <= n; ++j) a[j - 1] = binomial(theta + (n - j), static_cast<unsigned>(n));
    return {BlockFunction(n, std::move(values)), TauCoefficients(n, std::move(a)), theta == 0};
}

std::vector<Rational> to_sigma_basis(const BlockFunction& phi) {
    const int n = phi.n();
    RationalMatrix vandermonde(n, n);
    for (int l = 1; l <= n; ++l)
        for (int k = 1; k <= n; ++k) vandermonde(l - 1, k - 1) = power(BigInt(k), static_cast<unsigned>(l));
    return solve(std::move(vandermonde), {phi.values().begin(), phi.values().end()});
}

BlockFunction from_sigma_basis(int n, std::span<const Rational> coefficients) {
    if (static_cast<int>(coefficients.size()) != n) throw std::invalid_argument("need n sigma coefficients");
    BlockFunction out = BlockFunction::zero(n);
    for (int k = 1; k <= n; ++k)
        if (coefficients[k - 1] != 0) out += coefficients[k - 1] * sigma(n, k);
    return out;
}

TauCoefficients to_tau_basis(const BlockFunction& phi) {
    // sigma_k = sum_{j<k} binom(n+j, j) tau_{k-j}, so a_m = sum_{k>=m} c_k binom(n+k-m, k-m).
    const int n = phi.n();
    const auto c = to_sigma_basis(phi);
    std::vector<Rational> a(n);
    for (int m = 1; m <= n; ++m)
        for (int k = m; k <= n; ++k)
            if (c[k - 1] != 0) a[m - 1] += c[k - 1] * binomial(n + k - m, k - m);
    return TauCoefficients(n, std::move(a));
}

BlockFunction from_tau_basis(const TauCoefficients& a) {
    const int n = a.n();
    BlockFunction out = BlockFunction::zero(n);
    for (int k = 1; k <= n; ++k)
        if (a[k] != 0) out += a[k] * tau(n, k);
    return out;
}

CharacterTest is_character(const BlockFunction& phi) {
    TauCoefficients a = to_tau_basis(phi);
    std::optional<int> first_negative;
    for (int k = 1; k <= a.n(); ++k)
        if (a[k] < 0) {
            first_negative = k;
            break;
        }
    return {!first_negative.has_value(), first_negative, std::move(a)};
}

bool gram_psd_oracle(const BlockFunction& phi) {
    const int n = phi.n();
    if (n > kGramOracleBound)
        throw BoundError("gram_psd_oracle: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kGramOracleBound));
    const auto perms = all_permutations(n);
    std::vector<Permutation> inverses;
    inverses.reserve(perms.size());
    for (const auto& g : perms) inverses.push_back(g.inverse());
    RationalMatrix gram(perms.size(), perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j)
            gram(i, j) = phi.at(cycle_count(perms[i].compose(inverses[j])));
    return is_positive_semidefinite(std::move(gram));
}

BlockFunction restrict(const BlockFunction& phi) {
    if (phi.n() < 2) throw std::invalid_argument("restrict: need n >= 2");
    return BlockFunction(phi.n() - 1, {phi.values().begin() + 1, phi.values().end()});
}

BlockFunction tau_branching_rhs(int n, int k) {
    require_index("tau_branching_rhs", n, k);
    if (n < 2) throw std::invalid_argument("tau_branching_rhs: need n >= 2");
    BlockFunction out = BlockFunction::zero(n - 1);
    if (k <= n - 1) out += Rational(k) * tau(n - 1, k);
    if (k >= 2) out += Rational(n - k + 1) * tau(n - 1, k - 1);
    return out;
}

bool branching_check(int n, int k) { return restrict(tau(n, k)) == tau_branching_rhs(n, k); }

}  // namespace blockchar
