#pragma once

// Partitions, permutations, tableaux, RSK and the integer sequences
// (Eulerian, Stirling, SYT counts) the rest of the library consumes.

#include "blockchar/rational.hpp"

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blockchar {

/// Default size bound for exhaustive standard-tableau enumeration.
inline constexpr int kDefaultSytBound = 14;

/// Integer partition / Young diagram. Parts are positive and weakly decreasing.
///
/// The default three-way comparison is lexicographic on the parts. The
/// canonical listing order used across the library is *reverse*
/// lexicographic, e.g. (3), (2,1), (1,1,1); use `CanonicalOrder` (or
/// `std::greater<>`) as the comparator of ordered containers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] std::span<const int> parts() const { return parts_; }
    /// 1-based row length; zero past the last row.
    [[nodiscard]] int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    [[nodiscard]] bool is_hook() const { return parts_.size() <= 1 || parts_[1] <= 1; }

    /// Hook length of the box in row i, column j (both 1-based).
    [[nodiscard]] int hook_length(int i, int j) const;

    /// "(4,3,1)"; the empty partition prints as "()".
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

using CanonicalOrder = std::greater<Partition>;

/// All partitions of n (optionally with at most `max_parts` rows) in reverse
/// lexicographic order.
std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt);

Partition conjugate(const Partition& lambda);

/// Hook diagram (n-k+1, 1^{k-1}) with k rows.
Partition hook_partition(int n, int k);

/// Permutation in one-row notation g(1), ..., g(n).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_row);
    Permutation(std::initializer_list<int> one_row) : Permutation(std::vector<int>(one_row)) {}

    static Permutation identity(int n);
    /// Permutation whose cycle lengths are the parts of `cycle_type`.
    static Permutation with_cycle_type(const Partition& cycle_type);

    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    /// g(i), 1-based.
    [[nodiscard]] int operator()(int i) const { return values_[i - 1]; }
    [[nodiscard]] std::span<const int> values() const { return values_; }

    [[nodiscard]] Permutation inverse() const;
    /// Composition (this ∘ other)(i) = this(other(i)).
    [[nodiscard]] Permutation compose(const Permutation& other) const;
    /// The same permutation viewed in S_{n+extra} (fixing the new points).
    [[nodiscard]] Permutation embed(int extra) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// All of S_n in lexicographic order of one-row words.
std::vector<Permutation> all_permutations(int n);

int cycle_count(const Permutation& g);
/// Multiset of cycle lengths, as a partition.
Partition cycle_type(const Permutation& g);
/// c(g) = n - cycle_count(g); unchanged when fixed points are appended.
int decrement(const Permutation& g);

/// Positions j in 1..n-1 with g(j+1) < g(j), ascending.
std::vector<int> descent_set(const Permutation& g);
int descent_number(const Permutation& g);
/// d_i(g) = |D(g) ∩ {i..n}| for i = 1..n (index 0 holds d_1).
std::vector<int> descent_suffix_counts(const Permutation& g);

/// Young tableau stored row by row (English convention, row 1 on top).
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    [[nodiscard]] Partition shape() const;
    [[nodiscard]] int size() const;
    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// Entry in row i, column j (1-based).
    [[nodiscard]] int at(int i, int j) const { return rows_[i - 1][j - 1]; }

    /// Rows weakly increase, columns strictly increase, entries positive.
    [[nodiscard]] bool is_semistandard() const;
    /// Semistandard with entries exactly {1..n} (rows then strictly increase too).
    [[nodiscard]] bool is_standard() const;

    /// For a standard tableau: row (1-based) holding each entry 1..n.
    [[nodiscard]] std::vector<int> rows_of_entries() const;
    /// Reflection T'(i,j) = T(j,i).
    [[nodiscard]] Tableau transpose() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Descents of a standard tableau: entries i with i+1 in a strictly lower row.
/// Throws std::invalid_argument for a non-standard tableau.
std::vector<int> tableau_descents(const Tableau& t);
/// d_i(T) = |D(T) ∩ {i..n}|, index 0 holds d_1.
std::vector<int> tableau_descent_suffix_counts(const Tableau& t);

/// Calls `visit` once for every standard Young tableau of shape lambda.
/// Throws BoundError when |lambda| > bound.
void for_each_syt(const Partition& lambda, const std::function<void(const Tableau&)>& visit,
                  int bound = kDefaultSytBound);
std::vector<Tableau> enumerate_syt(const Partition& lambda, int bound = kDefaultSytBound);

/// Number of standard tableaux by the hook-length product.
BigInt dim_syt(const Partition& lambda);
/// Same count obtained by exhaustive enumeration (bounded).
BigInt dim_syt_by_enumeration(const Partition& lambda, int bound = kDefaultSytBound);

struct RskPair {
    Tableau insertion;  // P
    Tableau recording;  // Q
};

/// Row-insertion RSK of a permutation.
RskPair rsk(const Permutation& g);
/// RSK of a word over positive letters; each letter bumps the leftmost entry
/// strictly greater than it, so P is semistandard and Q standard.
RskPair rsk_word(std::span<const int> word);
/// Inverse of `rsk` for a pair of same-shape standard tableaux.
Permutation inverse_rsk(const RskPair& pair);
/// Shape of the RSK insertion tableau without building the recording tableau.
Partition rsk_shape(std::span<const int> word);

/// Eulerian numbers A(n,1..n) (index 0 holds k = 1) by the recursion
/// A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1), A(1,1) = 1.
std::vector<BigInt> eulerian_row(int n);
/// A(n,k): permutations of n with k-1 descents; zero for k outside 1..n.
BigInt eulerian(int n, int k);

/// Number of permutations of n with exactly `cycles` cycles; zero out of range.
BigInt stirling_first_unsigned(int n, int cycles);
/// Stirling number of the second kind S(n, k).
BigInt stirling_second(int n, int k);

}  // namespace blockchar
