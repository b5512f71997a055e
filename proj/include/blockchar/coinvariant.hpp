#pragma once

// The coinvariant algebra Q[x_1..x_n] / (e_1, ..., e_n) at small n.
//
// Normal forms are taken modulo the lexicographic (x_1 > ... > x_n) basis
// {h_i(x_i, ..., x_n) : i = 1..n}, whose leading terms are x_i^i; a reduced
// polynomial only uses monomials with a_i <= i - 1, n! of them in total.

#include "blockchar/check_result.hpp"
#include "blockchar/combinatorics.hpp"
#include "blockchar/exact_linear_algebra.hpp"

#include <functional>
#include <map>
#include <vector>

namespace blockchar {

/// Largest n handled by default; 6 needs an explicit opt-in.
inline constexpr int kCoinvariantBound = 5;
inline constexpr int kCoinvariantOptInBound = 6;

using Exponent = std::vector<int>;

class Polynomial {
public:
    /// Terms sorted lexicographically largest first.
    using Terms = std::map<Exponent, Rational, std::greater<Exponent>>;

    explicit Polynomial(int n) : n_(n) {}
    static Polynomial constant(int n, const Rational& c);
    static Polynomial monomial(Exponent a, const Rational& c = 1);
    static Polynomial variable(int n, int i);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const Exponent& a) const;
    [[nodiscard]] int degree() const;

    void add_term(const Exponent& a, const Rational& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// x_i -> x_{s(i)}.
    [[nodiscard]] Polynomial act(const Permutation& s) const;

    /// "3*x1^2*x3 - 1/2*x2" style rendering; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

private:
    int n_;
    Terms terms_;
};

/// Elementary symmetric polynomial e_k(x_1..x_n).
Polynomial elementary_symmetric(int n, int k);
/// Complete homogeneous h_d in the variables x_first..x_n.
Polynomial complete_homogeneous(int n, int first, int d);

struct DescentMonomial {
    Permutation g;
    /// Exponent of x_j for j = 1..n (index j-1).
    Exponent exponents;
    /// (d_1(g), ..., d_n(g)).
    std::vector<int> pdeg;

    [[nodiscard]] Polynomial polynomial() const { return Polynomial::monomial(exponents); }
};

/// u_g = prod_i x_{g(i)}^{d_i(g)}.
DescentMonomial descent_monomial(const Permutation& g);

/// Reduction modulo the symmetric ideal. Throws BoundError for n above the
/// opt-in bound.
Polynomial normal_form(const Polynomial& f);

/// Index of a staircase exponent (a_i <= i-1) in 0..n!-1.
std::size_t staircase_index(const Exponent& a);
Exponent staircase_exponent(int n, std::size_t index);
/// Coordinates of a normal form in the staircase monomial basis.
std::vector<Rational> staircase_coordinates(const Polynomial& reduced);

/// pdeg(f): the lexicographically largest sorted exponent vector in f.
/// Zero polynomial maps to the empty vector.
std::vector<int> pdeg(const Polynomial& f);

struct QuotientBasis {
    int n = 0;
    std::vector<Permutation> perms;
    std::vector<int> descents;
    std::vector<Polynomial> normal_forms;
    /// Column g holds the staircase coordinates of NF(u_g).
    RationalMatrix matrix;
    RationalMatrix inverse;
    std::size_t rank = 0;

    [[nodiscard]] std::size_t dimension() const { return perms.size(); }
    /// Coordinates of a reduced polynomial in the descent basis.
    [[nodiscard]] std::vector<Rational> coordinates(const Polynomial& reduced) const;
};

/// Throws BoundError for n > 5 unless `allow_opt_in` (then n <= 6), and
/// std::domain_error if the descent monomials are not independent.
QuotientBasis build_quotient_basis(int n, bool allow_opt_in = false);

/// #{g : d(g) <= k} for k = 0..n-1.
std::vector<BigInt> filtration_dims(int n);

/// Trace of s on the layer spanned by descent classes with d(g) = k-1.
Rational quotient_trace(const QuotientBasis& basis, int k, const Permutation& s);
Rational quotient_trace(int n, int k, const Permutation& s);

/// NF(s u_g) has no coordinate on descent classes with more descents than g.
CheckResult verify_filtration_stable(const QuotientBasis& basis, const Permutation& s);

/// quotient_trace(n,k,s) == tau_k^n(l(s)) for one representative of every
/// cycle type and every k, plus filtration stability.
CheckResult verify_coinvariant(int n);

}  // namespace blockchar
