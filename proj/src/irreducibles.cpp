#include "blockchar/irreducibles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace blockchar {

std::vector<BigInt> descent_distribution(const Partition& lambda, int bound) {
    const int n = lambda.size();
    if (n > bound)
        throw BoundError("descent distribution bound exceeded: |lambda| = " + std::to_string(n) + " > " +
                         std::to_string(bound));
    if (n == 0) return {BigInt(1)};
    const int rows = lambda.length();
    using State = std::pair<std::vector<int>, int>;  // filled row lengths, row of the last entry
    std::map<State, std::vector<BigInt>> level;
    {
        std::vector<int> first(rows, 0);
        first[0] = 1;
        std::vector<BigInt> dist(n, 0);
        dist[0] = 1;
        level.emplace(State{std::move(first), 0}, std::move(dist));
    }
    for (int step = 2; step <= n; ++step) {
        std::map<State, std::vector<BigInt>> next;
        for (const auto& [state, dist] : level) {
            const auto& [lengths, last] = state;
            for (int r = 0; r < rows; ++r) {
                if (lengths[r] >= lambda.row(r + 1)) continue;
                if (r > 0 && lengths[r - 1] <= lengths[r]) continue;
                State grown{lengths, r};
                ++grown.first[r];
                auto [it, inserted] = next.try_emplace(std::move(grown), std::vector<BigInt>(n, 0));
                auto& target = it->second;
                const int shift = r > last ? 1 : 0;
                for (int d = 0; d + shift < n; ++d)
                    if (dist[d] != 0) target[d + shift] += dist[d];
            }
        }
        level = std::move(next);
    }
    std::vector<BigInt> total(n, 0);
    for (const auto& [state, dist] : level)
        for (int d = 0; d < n; ++d) total[d] += dist[d];
    return total;
}

BigInt m_count(const Partition& lambda, int k, int bound) {
    const int n = lambda.size();
    if (k < 1 || k > n) throw std::out_of_range("m_count: need 1 <= k <= |lambda|");
    if (lambda.is_hook()) return k == lambda.length() ? binomial(n - 1, k - 1) : BigInt(0);
    return descent_distribution(lambda, bound)[k - 1];
}

BigInt m_count_by_enumeration(const Partition& lambda, int k, int bound) {
    if (k < 1 || k > lambda.size()) throw std::out_of_range("m_count: need 1 <= k <= |lambda|");
    BigInt count = 0;
    for_each_syt(
        lambda, [&](const Tableau& t) { count += static_cast<int>(tableau_descents(t).size()) == k - 1 ? 1 : 0; },
        bound);
    return count;
}

BigInt s_count_from_descents(const Partition& lambda, int k, int bound) {
    if (k < 1) throw std::out_of_range("s_count: need k >= 1");
    const int n = lambda.size();
    if (n == 0) return 1;
    const auto m = descent_distribution(lambda, bound);
    BigInt total = 0;
    for (int j = 0; j <= k - 1; ++j) {
        const int index = k - j;  // m_{k-j}; zero beyond n
        if (index <= n) total += binomial(n + j, j) * m[index - 1];
    }
    return total;
}

BigInt s_count_content(const Partition& lambda, int k) {
    if (k < 1) throw std::out_of_range("s_count: need k >= 1");
    if (lambda.length() > k) return 0;
    const Partition transposed = conjugate(lambda);
    BigInt numerator = 1;
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) {
            numerator *= k + (j - i);
            hooks *= lambda.row(i) - j + transposed.row(j) - i + 1;
        }
    return numerator / hooks;
}

BigInt s_count(const Partition& lambda, int k) {
    if (lambda.size() <= kDescentDpBound) return s_count_from_descents(lambda, k);
    return s_count_content(lambda, k);
}

// ------------------------------------------------------ admissible sequences

bool is_admissible(const Tableau& t, const AdmissibleSequence& x) {
    const int n = t.size();
    if (static_cast<int>(x.values.size()) != n) return false;
    if (n == 0) return true;
    if (x.values.front() < 1 || x.values.back() > x.bound) return false;
    const auto descents = tableau_descents(t);
    std::vector<bool> is_descent(n + 1, false);
    for (int d : descents) is_descent[d] = true;
    for (int i = 1; i < n; ++i) {
        const int a = x.values[i - 1];
        const int b = x.values[i];
        if (b < a || (is_descent[i] && b == a)) return false;
    }
    return true;
}

Tableau admissible_to_ssyt(const Tableau& t, const AdmissibleSequence& x) {
    if (!is_admissible(t, x)) throw std::invalid_argument("admissible_to_ssyt: sequence is not T-admissible");
    auto rows = t.rows();
    for (auto& row : rows)
        for (int& entry : row) entry = x.values[entry - 1];
    return Tableau(std::move(rows));
}

StandardizedTableau ssyt_to_admissible(const Tableau& y, int bound) {
    if (!y.is_semistandard()) throw std::invalid_argument("ssyt_to_admissible: tableau is not semistandard");
    std::vector<std::tuple<int, int, int>> cells;  // value, column, row
    for (std::size_t i = 0; i < y.rows().size(); ++i)
        for (std::size_t j = 0; j < y.rows()[i].size(); ++j)
            cells.emplace_back(y.rows()[i][j], static_cast<int>(j), static_cast<int>(i));
    std::sort(cells.begin(), cells.end());
    auto rows = y.rows();
    AdmissibleSequence x{{}, bound};
    int label = 0;
    for (const auto& [value, col, row] : cells) {
        if (value > bound) throw std::invalid_argument("ssyt_to_admissible: entry exceeds bound");
        rows[row][col] = ++label;
        x.values.push_back(value);
    }
    return {Tableau(std::move(rows)), std::move(x)};
}

void for_each_admissible(const Tableau& t, int k, const std::function<void(const AdmissibleSequence&)>& visit) {
    const int n = t.size();
    std::vector<bool> is_descent(n + 1, false);
    for (int d : tableau_descents(t)) is_descent[d] = true;
    AdmissibleSequence x{std::vector<int>(n), k};
    std::function<void(int, int)> rec = [&](int position, int minimum) {
        if (position == n) {
            visit(x);
            return;
        }
        for (int v = minimum; v <= k; ++v) {
            x.values[position] = v;
            rec(position + 1, is_descent[position + 1] ? v + 1 : v);
        }
    };
    rec(0, 1);
}

BigInt count_admissible(const Tableau& t, int k) {
    const int n = t.size();
    const int j = k - 1 - static_cast<int>(tableau_descents(t).size());
    return j < 0 ? BigInt(0) : binomial(n + j, j);
}

void for_each_ssyt(const Partition& lambda, int k, const std::function<void(const Tableau&)>& visit) {
    std::vector<std::vector<int>> rows;
    for (int part : lambda.parts()) rows.emplace_back(part, 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i + 1); ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t index) {
        if (index == cells.size()) {
            visit(Tableau(rows));
            return;
        }
        const auto [i, j] = cells[index];
        int minimum = 1;
        if (j > 0) minimum = std::max(minimum, rows[i][j - 1]);
        if (i > 0) minimum = std::max(minimum, rows[i - 1][j] + 1);
        for (int v = minimum; v <= k; ++v) {
            rows[i][j] = v;
            rec(index + 1);
        }
    };
    rec(0);
}

// ------------------------------------------------------------ decomposition

Rational IrrepDecomposition::multiplicity(const Partition& lambda) const {
    auto it = entries.find(lambda);
    return it == entries.end() ? Rational(0) : it->second;
}

Rational IrrepDecomposition::total_dimension() const {
    Rational total = 0;
    for (const auto& [lambda, b] : entries) total += b * dim_syt(lambda);
    return total;
}

IrrepDecomposition decompose(const BlockFunction& phi, int bound) {
    const int n = phi.n();
    if (n > bound)
        throw BoundError("decompose: n = " + std::to_string(n) + " exceeds " + std::to_string(bound));
    const TauCoefficients a = to_tau_basis(phi);
    IrrepDecomposition out{n, {}};
    for (const auto& lambda : partitions_of(n)) {
        const auto m = descent_distribution(lambda, bound);
        Rational b = 0;
        for (int k = 1; k <= n; ++k) b += a[k] * m[k - 1];
        if (b != 0) out.entries.emplace(lambda, std::move(b));
    }
    return out;
}

// ------------------------------------------------------------ verification

CheckResult verify_duality(int n) {
    CheckResult result;
    for (const auto& lambda : partitions_of(n)) {
        const auto m = descent_distribution(lambda);
        const auto m_conj = descent_distribution(conjugate(lambda));
        for (int k = 1; k <= n; ++k) {
            ++result.cases;
            if (m_conj[k - 1] != m[n - k])
                return CheckResult::fail("m_" + std::to_string(k) + conjugate(lambda).to_string() + " = " +
                                             m_conj[k - 1].get_str() + " but m_" + std::to_string(n + 1 - k) +
                                             lambda.to_string() + " = " + m[n - k].get_str(),
                                         result.cases);
        }
    }
    return result;
}

CheckResult verify_ms_inversion(int n) {
    CheckResult result;
    for (const auto& lambda : partitions_of(n)) {
        const auto m = descent_distribution(lambda);
        std::vector<BigInt> s(n + 1);
        for (int k = 1; k <= n; ++k) s[k] = s_count_content(lambda, k);
        for (int k = 1; k <= n; ++k) {
            ++result.cases;
            BigInt m_from_s = 0;
            BigInt s_from_m = 0;
            for (int j = 0; j <= k - 1; ++j) {
                const BigInt term = binomial(n + 1, j) * s[k - j];
                m_from_s += j % 2 ? BigInt(-term) : term;
                s_from_m += binomial(n + j, j) * m[k - j - 1];
            }
            if (m_from_s != m[k - 1] || s_from_m != s[k])
                return CheckResult::fail("inversion fails at lambda=" + lambda.to_string() + ", k=" +
                                             std::to_string(k) + ": m=" + m[k - 1].get_str() + " vs " +
                                             m_from_s.get_str() + ", s=" + s[k].get_str() + " vs " +
                                             s_from_m.get_str(),
                                         result.cases);
        }
    }
    return result;
}

CheckResult verify_admissible_bijection(int n, bool check_bijection) {
    CheckResult result;
    for (const auto& lambda : partitions_of(n)) {
        const auto tableaux = enumerate_syt(lambda);
        for (int k = 1; k <= n; ++k) {
            std::set<std::vector<std::vector<int>>> images;
            std::size_t pairs = 0;
            for (const auto& t : tableaux) {
                ++result.cases;
                BigInt counted = 0;
                bool round_trip_ok = true;
                for_each_admissible(t, k, [&](const AdmissibleSequence& x) {
                    ++counted;
                    if (!check_bijection) return;
                    ++pairs;
                    const Tableau y = admissible_to_ssyt(t, x);
                    images.insert(y.rows());
                    const auto back = ssyt_to_admissible(y, k);
                    if (!(back.standard == t) || back.sequence.values != x.values) round_trip_ok = false;
                });
                if (counted != count_admissible(t, k))
                    return CheckResult::fail("admissible count for T of shape " + lambda.to_string() + ", k=" +
                                                 std::to_string(k) + ": enumerated " + counted.get_str() +
                                                 ", expected " + count_admissible(t, k).get_str(),
                                             result.cases);
                if (!round_trip_ok)
                    return CheckResult::fail("Y_{T,X} round trip fails for shape " + lambda.to_string() +
                                                 ", k=" + std::to_string(k),
                                             result.cases);
            }
            if (check_bijection) {
                BigInt ssyt = 0;
                bool all_hit = true;
                for_each_ssyt(lambda, k, [&](const Tableau& y) {
                    ++ssyt;
                    if (!images.contains(y.rows())) all_hit = false;
                });
                if (!all_hit || pairs != images.size() || ssyt != BigInt(static_cast<unsigned long>(images.size())))
                    return CheckResult::fail("Y_{T,X} is not a bijection onto SSYT for shape " +
                                                 lambda.to_string() + ", k=" + std::to_string(k),
                                             result.cases);
            }
        }
    }
    return result;
}

}  // namespace blockchar
