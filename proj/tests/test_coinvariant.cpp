#include "blockchar/coinvariant.hpp"

#include "blockchar/block_function.hpp"
#include "blockchar/random.hpp"

#include <doctest.h>

#include <set>

using namespace blockchar;

namespace {

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

Polynomial random_polynomial(int n, Rng& rng, int terms, int max_exponent) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        Exponent a(n);
        for (auto& e : a) e = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_exponent) + 1));
        Rational c(static_cast<long>(rng.below(21)) - 10, static_cast<long>(rng.below(3)) + 1);
        c.canonicalize();
        p.add_term(a, c);
    }
    return p;
}

bool is_staircase(const Polynomial& p) {
    for (const auto& [a, c] : p.terms())
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > static_cast<int>(i)) return false;
    return true;
}

Polynomial random_ideal_element(int n, Rng& rng) {
    Polynomial p(n);
    for (int k = 1; k <= n; ++k) p += random_polynomial(n, rng, 2, 2) * elementary_symmetric(n, k);
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Polynomial a = x(3, 1) + x(3, 2);
    const Polynomial sq = a * a;
    CHECK(sq.coefficient({2, 0, 0}) == 1);
    CHECK(sq.coefficient({1, 1, 0}) == 2);
    CHECK(sq.degree() == 2);
    CHECK((a - a).is_zero());
    CHECK(Polynomial::constant(3, 0).is_zero());
    CHECK(elementary_symmetric(3, 2) == x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3));
    CHECK(elementary_symmetric(3, 0) == Polynomial::constant(3, 1));
    CHECK(complete_homogeneous(3, 2, 2) == x(3, 2) * x(3, 2) + x(3, 2) * x(3, 3) + x(3, 3) * x(3, 3));
    CHECK(x(3, 1).act(Permutation{2, 3, 1}) == x(3, 2));
    CHECK(x(2, 1).to_string() == "x1");
    CHECK(Polynomial(2).to_string() == "0");
    CHECK_THROWS_AS(x(2, 3), std::out_of_range);
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), std::invalid_argument);
}

TEST_CASE("descent monomials") {
    CHECK(descent_monomial(Permutation::identity(4)).polynomial() == Polynomial::constant(4, 1));
    CHECK(descent_monomial(Permutation{2, 1}).polynomial() == x(2, 2));
    const auto u = descent_monomial(Permutation{3, 1, 2});
    CHECK(u.polynomial() == x(3, 3));
    CHECK(u.pdeg == std::vector<int>{1, 0, 0});
    for (const auto& g : all_permutations(5)) {
        const auto m = descent_monomial(g);
        const auto d = descent_suffix_counts(g);
        CHECK(m.pdeg == d);
        for (int i = 1; i <= 5; ++i) CHECK(m.exponents[g(i) - 1] == d[i - 1]);
        std::vector<int> sorted = m.exponents;
        std::sort(sorted.rbegin(), sorted.rend());
        CHECK(pdeg(m.polynomial()) == sorted);
        CHECK(sorted == d);
    }
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(x(3, 1) + x(3, 2) + x(3, 3)).is_zero());
    CHECK(normal_form(x(2, 1)) == Rational(-1) * x(2, 2));
    CHECK(normal_form(x(2, 1)).to_string() == "-x2");
    CHECK(normal_form(x(2, 2)) == x(2, 2));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) CHECK(normal_form(elementary_symmetric(n, k)).is_zero());
    CHECK_THROWS_AS(normal_form(x(7, 1)), BoundError);
}

TEST_CASE("normal form is an idempotent linear projection onto staircase monomials") {
    Rng rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        const Polynomial f = random_polynomial(3, rng, 5, 4);
        const Polynomial nf = normal_form(f);
        CHECK(is_staircase(nf));
        CHECK(normal_form(nf) == nf);
        const Polynomial g = random_polynomial(3, rng, 4, 3);
        const Rational c(static_cast<long>(rng.below(7)) - 3);
        CHECK(normal_form(f + c * g) == nf + c * normal_form(g));
    }
    for (int n = 2; n <= 5; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            const Polynomial p = random_ideal_element(n, rng);
            CHECK(normal_form(p).is_zero());
            const Polynomial f = random_polynomial(n, rng, 3, 3);
            CHECK(normal_form(f + p) == normal_form(f));
        }
}

TEST_CASE("staircase indexing") {
    for (int n = 1; n <= 5; ++n) {
        std::set<Exponent> seen;
        const std::size_t total = factorial(static_cast<unsigned>(n)).get_ui();
        for (std::size_t i = 0; i < total; ++i) {
            const Exponent a = staircase_exponent(n, i);
            for (int j = 0; j < n; ++j) CHECK(a[j] <= j);
            CHECK(staircase_index(a) == i);
            seen.insert(a);
        }
        CHECK(seen.size() == total);
    }
    CHECK_THROWS_AS(staircase_index({1, 0}), std::invalid_argument);
    const Polynomial p = Rational(3) * x(3, 3) * x(3, 3) + Rational(-2) * x(3, 2);
    const auto coords = staircase_coordinates(p);
    CHECK(coords.size() == 6);
    CHECK(coords[staircase_index({0, 0, 2})] == 3);
    CHECK(coords[staircase_index({0, 1, 0})] == -2);
}

TEST_CASE("quotient bases") {
    const auto b1 = build_quotient_basis(1);
    CHECK(b1.dimension() == 1);
    CHECK(b1.normal_forms[0] == Polynomial::constant(1, 1));
    const auto b2 = build_quotient_basis(2);
    CHECK(b2.rank == 2);
    std::set<std::string> forms;
    for (const auto& p : b2.normal_forms) forms.insert(p.to_string());
    CHECK(forms == std::set<std::string>{"1", "x2"});
    for (int n = 3; n <= 5; ++n) {
        const auto b = build_quotient_basis(n);
        CHECK(b.rank == factorial(static_cast<unsigned>(n)));
        CHECK(b.dimension() == b.rank);
        for (std::size_t g = 0; g < b.dimension(); ++g) {
            const auto c = b.coordinates(b.normal_forms[g]);
            for (std::size_t h = 0; h < c.size(); ++h) CHECK(c[h] == (h == g ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(build_quotient_basis(6), BoundError);
    CHECK_THROWS_AS(build_quotient_basis(7, true), BoundError);
}

TEST_CASE("filtration dimensions") {
    CHECK(filtration_dims(3) == std::vector<BigInt>{1, 5, 6});
    CHECK(filtration_dims(2) == std::vector<BigInt>{1, 2});
    for (int n = 1; n <= 5; ++n) {
        const auto dims = filtration_dims(n);
        CHECK(dims.back() == factorial(static_cast<unsigned>(n)));
        for (int k = 0; k < n; ++k) CHECK(dims[k] - (k ? dims[k - 1] : BigInt(0)) == eulerian(n, k + 1));
    }
}

TEST_CASE("quotient traces") {
    CHECK(quotient_trace(2, 2, Permutation{2, 1}) == -1);
    CHECK(quotient_trace(3, 2, Permutation{2, 3, 1}) == -2);
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) CHECK(quotient_trace(n, k, Permutation::identity(n)) == eulerian(n, k));
    CHECK_THROWS_AS(quotient_trace(3, 4, Permutation::identity(3)), std::out_of_range);
    CHECK_THROWS_AS(quotient_trace(3, 1, Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("layer traces reproduce tau on every class") {
    for (int n = 1; n <= 5; ++n) {
        const auto basis = build_quotient_basis(n);
        for (const auto& type : partitions_of(n)) {
            const Permutation s = Permutation::with_cycle_type(type);
            Rational total = 0;
            for (int k = 1; k <= n; ++k) {
                const Rational t = quotient_trace(basis, k, s);
                CHECK(t == tau(n, k).at(type.length()));
                total += t;
            }
            CHECK(total == regular_character(n).at(type.length()));
            CHECK(verify_filtration_stable(basis, s).passed);
        }
        CHECK(verify_coinvariant(n).passed);
    }
}

TEST_CASE("traces are class functions") {
    const auto basis = build_quotient_basis(4);
    for (const auto& s : all_permutations(4))
        for (int k = 1; k <= 4; ++k) CHECK(quotient_trace(basis, k, s) == tau(4, k).at(cycle_count(s)));
}

TEST_CASE("descent monomials have minimal pdeg in their class") {
    Rng rng(43);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const auto perms = all_permutations(n);
        const Permutation& g = perms[rng.below(perms.size())];
        const auto u = descent_monomial(g);
        const Polynomial shifted = u.polynomial() + random_ideal_element(n, rng);
        CHECK(pdeg(shifted) >= u.pdeg);
    }
    CHECK(pdeg(Polynomial(3)).empty());
}
