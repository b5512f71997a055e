#pragma once

// Multiplicities of irreducible characters inside block characters.
//
// m_k(lambda) counts standard tableaux of shape lambda with k-1 descents and
// is the multiplicity of chi^lambda in tau_k^n; s_k(lambda) counts
// semistandard tableaux with entries in {1..k} and is the multiplicity in
// sigma_k^n. The two are tied by s_k = sum_j binom(n+j, j) m_{k-j}, which is
// realised by the (T, X) -> Y_{T,X} bijection below.

#include "blockchar/block_function.hpp"
#include "blockchar/check_result.hpp"
#include "blockchar/combinatorics.hpp"

#include <functional>
#include <map>
#include <span>
#include <vector>

namespace blockchar {

/// Largest |lambda| accepted by the descent-distribution dynamic program.
inline constexpr int kDescentDpBound = 40;

/// Number of standard tableaux of shape lambda with exactly d descents,
/// d = 0..n-1, by a dynamic program over growing subdiagrams.
std::vector<BigInt> descent_distribution(const Partition& lambda, int bound = kDescentDpBound);

/// m_k(lambda) for 1 <= k <= |lambda|. Hooks use the closed form, other
/// shapes the descent dynamic program (BoundError above `bound`).
BigInt m_count(const Partition& lambda, int k, int bound = kDescentDpBound);
/// m_k(lambda) by filtering an explicit SYT enumeration.
BigInt m_count_by_enumeration(const Partition& lambda, int k, int bound = kDefaultSytBound);

/// s_k(lambda) from the m_k via s_k = sum_{j<k} binom(n+j, j) m_{k-j}.
BigInt s_count_from_descents(const Partition& lambda, int k, int bound = kDescentDpBound);
/// s_k(lambda) by the hook-content product prod (k + c(x)) / h(x); any size.
BigInt s_count_content(const Partition& lambda, int k);
/// Primary entry point: the descent route when |lambda| fits the dynamic
/// program, the content product beyond it.
BigInt s_count(const Partition& lambda, int k);

/// Non-decreasing X_1..X_n with 1 <= X_1, X_n <= bound.
struct AdmissibleSequence {
    std::vector<int> values;
    int bound = 0;
};

/// X is T-admissible: weakly increasing within [1, k], strictly increasing
/// across every descent of T.
bool is_admissible(const Tableau& t, const AdmissibleSequence& x);

/// Y_{T,X}: the semistandard tableau with Y(T^{-1}(j)) = X_j.
/// Throws std::invalid_argument if X is not T-admissible.
Tableau admissible_to_ssyt(const Tableau& t, const AdmissibleSequence& x);

struct StandardizedTableau {
    Tableau standard;
    AdmissibleSequence sequence;
};

/// Inverse of admissible_to_ssyt: standardize Y (equal entries numbered left
/// to right) and read off the sorted entries.
StandardizedTableau ssyt_to_admissible(const Tableau& y, int bound);

/// Every T-admissible sequence with entries <= k, lexicographically.
void for_each_admissible(const Tableau& t, int k, const std::function<void(const AdmissibleSequence&)>& visit);

/// Closed-form count binom(n + j, j) with j = k - 1 - d(T) (zero if j < 0).
BigInt count_admissible(const Tableau& t, int k);

/// Every semistandard tableau of the given shape with entries in {1..k}.
void for_each_ssyt(const Partition& lambda, int k, const std::function<void(const Tableau&)>& visit);

struct IrrepDecomposition {
    int n = 0;
    /// Nonzero multiplicities, iterated in canonical (reverse lexicographic) order.
    std::map<Partition, Rational, CanonicalOrder> entries;

    [[nodiscard]] Rational multiplicity(const Partition& lambda) const;
    /// sum_lambda b(lambda) dim(lambda); equals phi(e).
    [[nodiscard]] Rational total_dimension() const;
};

/// b(lambda) = sum_k a_k m_k(lambda) where a are the tau coefficients of phi.
IrrepDecomposition decompose(const BlockFunction& phi, int bound = kDescentDpBound);

/// m_k(lambda') == m_{n+1-k}(lambda) for every lambda of n and k.
CheckResult verify_duality(int n);
/// Both directions of the m/s inversion for every lambda of n and k <= n.
CheckResult verify_ms_inversion(int n);
/// T-admissible counts equal binom(n+j, j) for every SYT of size n and k <= n.
/// With `check_bijection`, also confirms (T,X) -> Y_{T,X} hits every SSYT with
/// entries <= k exactly once.
CheckResult verify_admissible_bijection(int n, bool check_bijection);

}  // namespace blockchar
