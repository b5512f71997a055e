#include "blockchar/coinvariant.hpp"

#include "blockchar/block_function.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blockchar {

// --------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

Polynomial Polynomial::monomial(Exponent a, const Rational& c) {
    Polynomial p(static_cast<int>(a.size()));
    p.add_term(a, c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    Exponent a(n, 0);
    a[i - 1] = 1;
    return monomial(std::move(a));
}

Rational Polynomial::coefficient(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    int best = -1;
    for (const auto& [a, c] : terms_) best = std::max(best, std::accumulate(a.begin(), a.end(), 0));
    return best;
}

void Polynomial::add_term(const Exponent& a, const Rational& c) {
    if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("polynomials in different rings");
    for (const auto& [a, c] : rhs.terms_) add_term(a, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.n_ != n_) throw std::invalid_argument("polynomials in different rings");
    for (const auto& [a, c] : rhs.terms_) add_term(a, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("polynomials in different rings");
    Polynomial out(a.n_);
    Exponent e(a.n_);
    for (const auto& [x, cx] : a.terms_)
        for (const auto& [y, cy] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) e[i] = x[i] + y[i];
            out.add_term(e, cx * cy);
        }
    return out;
}

Polynomial Polynomial::act(const Permutation& s) const {
    if (s.size() != n_) throw std::invalid_argument("permutation acts on a different number of variables");
    Polynomial out(n_);
    Exponent moved(n_);
    for (const auto& [a, c] : terms_) {
        for (int i = 1; i <= n_; ++i) moved[s(i) - 1] = a[i - 1];
        out.add_term(moved, c);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool is_constant = std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
        bool wrote = false;
        if (magnitude != 1 || is_constant) {
            out << blockchar::to_string(magnitude);
            wrote = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            if (wrote) out << '*';
            out << 'x' << i + 1;
            if (a[i] > 1) out << '^' << a[i];
            wrote = true;
        }
    }
    return out.str();
}

namespace {

void for_each_composition(int parts, int total, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(parts, 0);
    std::function<void(int, int)> rec = [&](int index, int left) {
        if (index == parts - 1) {
            current[index] = left;
            visit(current);
            return;
        }
        for (int v = left; v >= 0; --v) {
            current[index] = v;
            rec(index + 1, left - v);
        }
    };
    if (parts == 0) {
        if (total == 0) visit(current);
        return;
    }
    rec(0, total);
}

void check_bound(int n) {
    if (n < 1) throw std::invalid_argument("coinvariant algebra needs n >= 1");
    if (n > kCoinvariantOptInBound)
        throw BoundError("coinvariant algebra: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kCoinvariantOptInBound));
}

// Non-leading terms of h_i(x_i..x_n), i = 1..n, as exponent vectors.
const std::vector<std::vector<Exponent>>& reduction_tails(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<Exponent>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Exponent>> tails(n + 1);
    for (int i = 1; i <= n; ++i) {
        const Polynomial h = complete_homogeneous(n, i, i);
        for (const auto& [a, c] : h.terms())
            if (a[i - 1] != i) tails[i].push_back(a);
    }
    return cache.emplace(n, std::move(tails)).first->second;
}

}  // namespace

Polynomial elementary_symmetric(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("elementary_symmetric: need 0 <= k <= n");
    Polynomial out(n);
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        out.add_term(pick, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

Polynomial complete_homogeneous(int n, int first, int d) {
    if (first < 1 || first > n || d < 0) throw std::out_of_range("complete_homogeneous: bad arguments");
    Polynomial out(n);
    for_each_composition(n - first + 1, d, [&](const std::vector<int>& tail) {
        Exponent a(n, 0);
        std::copy(tail.begin(), tail.end(), a.begin() + (first - 1));
        out.add_term(a, 1);
    });
    return out;
}

DescentMonomial descent_monomial(const Permutation& g) {
    const int n = g.size();
    DescentMonomial u{g, Exponent(n, 0), descent_suffix_counts(g)};
    for (int i = 1; i <= n; ++i) u.exponents[g(i) - 1] = u.pdeg[i - 1];
    return u;
}

Polynomial normal_form(const Polynomial& f) {
    const int n = f.n();
    check_bound(n);
    const auto& tails = reduction_tails(n);
    Polynomial::Terms terms = f.terms();
    auto add = [&terms](const Exponent& a, const Rational& c) {
        auto [it, inserted] = terms.try_emplace(a, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms.erase(it);
    };
    // Each rewrite only creates lexicographically smaller terms, so a single
    // sweep from the largest term down reaches the normal form.
    auto it = terms.begin();
    while (it != terms.end()) {
        const Exponent a = it->first;
        int reducible = 0;
        for (int i = 1; i <= n; ++i)
            if (a[i - 1] >= i) {
                reducible = i;
                break;
            }
        if (reducible == 0) {
            ++it;
            continue;
        }
        const Rational c = it->second;
        terms.erase(it);
        Exponent base = a;
        base[reducible - 1] -= reducible;
        Exponent b(n);
        for (const auto& tail : tails[reducible]) {
            for (int j = 0; j < n; ++j) b[j] = base[j] + tail[j];
            add(b, -c);
        }
        it = terms.upper_bound(a);
    }
    Polynomial out(n);
    for (const auto& [a, c] : terms) out.add_term(a, c);
    return out;
}

std::size_t staircase_index(const Exponent& a) {
    std::size_t index = 0;
    std::size_t weight = 1;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        if (a[i - 1] < 0 || a[i - 1] > static_cast<int>(i) - 1)
            throw std::invalid_argument("exponent is not a staircase monomial");
        index += static_cast<std::size_t>(a[i - 1]) * weight;
        weight *= i;
    }
    return index;
}

Exponent staircase_exponent(int n, std::size_t index) {
    Exponent a(n);
    for (int i = 1; i <= n; ++i) {
        a[i - 1] = static_cast<int>(index % static_cast<std::size_t>(i));
        index /= static_cast<std::size_t>(i);
    }
    return a;
}

std::vector<Rational> staircase_coordinates(const Polynomial& reduced) {
    const int n = reduced.n();
    std::vector<Rational> v(factorial(n).get_ui());
    for (const auto& [a, c] : reduced.terms()) v[staircase_index(a)] = c;
    return v;
}

std::vector<int> pdeg(const Polynomial& f) {
    std::vector<int> best;
    for (const auto& [a, c] : f.terms()) {
        std::vector<int> sorted = a;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (best.empty() || sorted > best) best = std::move(sorted);
    }
    return best;
}

std::vector<Rational> QuotientBasis::coordinates(const Polynomial& reduced) const {
    const auto v = staircase_coordinates(reduced);
    std::vector<Rational> out(dimension());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (inverse(i, j) != 0) out[i] += inverse(i, j) * v[j];
    }
    return out;
}

QuotientBasis build_quotient_basis(int n, bool allow_opt_in) {
    check_bound(n);
    if (n > kCoinvariantBound && !allow_opt_in)
        throw BoundError("coinvariant basis: n = " + std::to_string(n) + " needs the opt-in flag");
    QuotientBasis basis;
    basis.n = n;
    basis.perms = all_permutations(n);
    const std::size_t size = basis.perms.size();
    basis.matrix = RationalMatrix(size, size);
    for (std::size_t g = 0; g < size; ++g) {
        basis.descents.push_back(descent_number(basis.perms[g]));
        basis.normal_forms.push_back(normal_form(descent_monomial(basis.perms[g]).polynomial()));
        const auto v = staircase_coordinates(basis.normal_forms.back());
        for (std::size_t i = 0; i < size; ++i) basis.matrix(i, g) = v[i];
    }
    basis.rank = rank(basis.matrix);
    if (basis.rank != size)
        throw std::domain_error("descent monomials are dependent: rank " + std::to_string(basis.rank) + " < " +
                                std::to_string(size));
    basis.inverse = *inverse(basis.matrix);
    return basis;
}

std::vector<BigInt> filtration_dims(int n) {
    check_bound(n);
    std::vector<BigInt> dims(n, 0);
    for (const auto& g : all_permutations(n))
        for (int k = descent_number(g); k < n; ++k) ++dims[k];
    return dims;
}

Rational quotient_trace(const QuotientBasis& basis, int k, const Permutation& s) {
    const int n = basis.n;
    if (k < 1 || k > n) throw std::out_of_range("quotient_trace: need 1 <= k <= n");
    if (s.size() != n) throw std::invalid_argument("quotient_trace: permutation of the wrong size");
    Rational trace = 0;
    for (std::size_t g = 0; g < basis.dimension(); ++g) {
        if (basis.descents[g] != k - 1) continue;
        const auto v = staircase_coordinates(normal_form(basis.normal_forms[g].act(s)));
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) trace += basis.inverse(g, j) * v[j];
    }
    return trace;
}

namespace {

std::shared_ptr<const QuotientBasis> cached_basis(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const QuotientBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const QuotientBasis>(build_quotient_basis(n));
    return slot;
}

std::string word(const Permutation& s) {
    std::string out = "[";
    for (int i = 1; i <= s.size(); ++i) out += (i > 1 ? "," : "") + std::to_string(s(i));
    return out + "]";
}

}  // namespace

Rational quotient_trace(int n, int k, const Permutation& s) { return quotient_trace(*cached_basis(n), k, s); }

CheckResult verify_filtration_stable(const QuotientBasis& basis, const Permutation& s) {
    CheckResult result;
    for (std::size_t g = 0; g < basis.dimension(); ++g) {
        ++result.cases;
        const auto coords = basis.coordinates(normal_form(basis.normal_forms[g].act(s)));
        for (std::size_t h = 0; h < coords.size(); ++h)
            if (coords[h] != 0 && basis.descents[h] > basis.descents[g])
                return CheckResult::fail("s=" + word(s) + " moves u_" + word(basis.perms[g]) + " onto u_" +
                                             word(basis.perms[h]),
                                         result.cases);
    }
    return result;
}

CheckResult verify_coinvariant(int n) {
    const QuotientBasis basis = build_quotient_basis(n);
    CheckResult result;
    ++result.cases;
    if (basis.rank != basis.dimension())
        return CheckResult::fail("rank " + std::to_string(basis.rank) + " at n=" + std::to_string(n), result.cases);
    for (const auto& mu : partitions_of(n)) {
        const Permutation s = Permutation::with_cycle_type(mu);
        const int cycles = cycle_count(s);
        CheckResult stable = verify_filtration_stable(basis, s);
        result.cases += stable.cases;
        if (!stable) return CheckResult::fail(stable.counterexample, result.cases);
        for (int k = 1; k <= n; ++k) {
            ++result.cases;
            const Rational trace = quotient_trace(basis, k, s);
            const Rational expected = tau(n, k).at(cycles);
            if (trace != expected)
                return CheckResult::fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " s=" + word(s) +
                                             ": trace " + to_string(trace) + " != " + to_string(expected),
                                         result.cases);
        }
    }
    return result;
}

}  // namespace blockchar
