#include "blockchar/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blockchar {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::hook_length(int i, int j) const {
    const Partition transposed = conjugate(*this);
    return row(i) - j + transposed.row(j) - i + 1;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    out << ')';
    return out.str();
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (parts_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_parts) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, max_parts.value_or(n + 1), prefix, out);
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> columns(lambda.row(1), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++columns[j];
    return Partition(std::move(columns));
}

Partition hook_partition(int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("hook_partition: need 1 <= k <= n");
    std::vector<int> parts(k, 1);
    parts[0] = n - k + 1;
    return Partition(std::move(parts));
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_row) : values_(std::move(one_row)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    return Permutation(std::move(values));
}

Permutation Permutation::with_cycle_type(const Partition& type) {
    std::vector<int> values(type.size());
    int start = 0;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i) values[start + i] = start + (i + 1) % len + 1;
        start += len;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (other.size() != size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> out(values_.size());
    for (int i = 1; i <= size(); ++i) out[i - 1] = (*this)(other(i));
    return Permutation(std::move(out));
}

Permutation Permutation::embed(int extra) const {
    std::vector<int> out = values_;
    for (int i = 1; i <= extra; ++i) out.push_back(size() + i);
    return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

Partition cycle_type(const Permutation& g) {
    const int n = g.size();
    std::vector<bool> seen(n + 1, false);
    std::vector<int> lengths;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int i = start; !seen[i]; i = g(i)) {
            seen[i] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

int cycle_count(const Permutation& g) { return cycle_type(g).length(); }

int decrement(const Permutation& g) { return g.size() - cycle_count(g); }

std::vector<int> descent_set(const Permutation& g) {
    std::vector<int> out;
    for (int j = 1; j < g.size(); ++j)
        if (g(j + 1) < g(j)) out.push_back(j);
    return out;
}

int descent_number(const Permutation& g) { return static_cast<int>(descent_set(g).size()); }

namespace {

std::vector<int> suffix_counts(int n, const std::vector<int>& descents) {
    std::vector<int> d(n, 0);
    for (int j : descents)
        for (int i = 1; i <= j; ++i) ++d[i - 1];
    return d;
}

}  // namespace

std::vector<int> descent_suffix_counts(const Permutation& g) { return suffix_counts(g.size(), descent_set(g)); }

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("tableau rows must have weakly decreasing lengths");
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool Tableau::is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] < 1) return false;
            if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : rows_)
        for (int v : r) {
            if (v > n || seen[v]) return false;
            seen[v] = true;
        }
    return true;
}

std::vector<int> Tableau::rows_of_entries() const {
    std::vector<int> where(size() + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int v : rows_[i]) where[v] = static_cast<int>(i) + 1;
    return where;
}

Tableau Tableau::transpose() const {
    std::vector<std::vector<int>> cols;
    for (std::size_t j = 0; !rows_.empty() && j < rows_[0].size(); ++j) {
        std::vector<int> col;
        for (const auto& r : rows_)
            if (j < r.size()) col.push_back(r[j]);
        cols.push_back(std::move(col));
    }
    return Tableau(std::move(cols));
}

std::vector<int> tableau_descents(const Tableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("tableau_descents: tableau is not standard");
    const auto where = t.rows_of_entries();
    std::vector<int> out;
    for (int i = 1; i < t.size(); ++i)
        if (where[i + 1] > where[i]) out.push_back(i);
    return out;
}

std::vector<int> tableau_descent_suffix_counts(const Tableau& t) {
    return suffix_counts(t.size(), tableau_descents(t));
}

// ------------------------------------------------------------- SYT counting

namespace {

void fill_syt(const Partition& shape, std::vector<std::vector<int>>& rows, int next, int n,
              const std::function<void(const Tableau&)>& visit) {
    if (next > n) {
        visit(Tableau(rows));
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        const auto len = static_cast<int>(rows[r].size());
        if (len >= shape.row(r + 1)) continue;
        if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
        rows[r].push_back(next);
        fill_syt(shape, rows, next + 1, n, visit);
        rows[r].pop_back();
    }
}

}  // namespace

void for_each_syt(const Partition& lambda, const std::function<void(const Tableau&)>& visit, int bound) {
    if (lambda.size() > bound)
        throw BoundError("standard tableau enumeration bound exceeded: |lambda| = " +
                         std::to_string(lambda.size()) + " > " + std::to_string(bound));
    std::vector<std::vector<int>> rows(lambda.length());
    fill_syt(lambda, rows, 1, lambda.size(), visit);
}

std::vector<Tableau> enumerate_syt(const Partition& lambda, int bound) {
    std::vector<Tableau> out;
    for_each_syt(lambda, [&](const Tableau& t) { out.push_back(t); }, bound);
    return out;
}

BigInt dim_syt(const Partition& lambda) {
    const Partition transposed = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) hooks *= lambda.row(i) - j + transposed.row(j) - i + 1;
    return factorial(lambda.size()) / hooks;
}

BigInt dim_syt_by_enumeration(const Partition& lambda, int bound) {
    BigInt count = 0;
    for_each_syt(lambda, [&](const Tableau&) { ++count; }, bound);
    return count;
}

// ---------------------------------------------------------------------- RSK

namespace {

// Inserts `letter`, bumping the leftmost strictly greater entry; returns the
// row (0-based) where the insertion terminated.
int row_insert(std::vector<std::vector<int>>& rows, int letter) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({letter});
            return static_cast<int>(r);
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), letter);
        if (it == row.end()) {
            row.push_back(letter);
            return static_cast<int>(r);
        }
        std::swap(*it, letter);
    }
}

}  // namespace

RskPair rsk_word(std::span<const int> word) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    int step = 0;
    for (int letter : word) {
        if (letter < 1) throw std::invalid_argument("rsk_word: letters must be positive");
        const int r = row_insert(p, letter);
        if (r == static_cast<int>(q.size())) q.emplace_back();
        q[r].push_back(++step);
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
}

RskPair rsk(const Permutation& g) { return rsk_word(g.values()); }

Permutation inverse_rsk(const RskPair& pair) {
    if (!pair.insertion.is_standard() || !pair.recording.is_standard() ||
        pair.insertion.shape() != pair.recording.shape())
        throw std::invalid_argument("inverse_rsk: need two standard tableaux of one shape");
    auto p = pair.insertion.rows();
    auto q = pair.recording.rows();
    const int n = pair.insertion.size();
    std::vector<int> word(n);
    for (int m = n; m >= 1; --m) {
        std::size_t r = 0;
        while (q[r].back() != m) ++r;
        q[r].pop_back();
        int letter = p[r].back();
        p[r].pop_back();
        for (std::size_t up = r; up-- > 0;) {
            auto& row = p[up];
            // Largest entry strictly smaller than the letter moving up.
            auto it = std::lower_bound(row.begin(), row.end(), letter);
            --it;
            std::swap(*it, letter);
        }
        if (q[r].empty()) {
            q.pop_back();
            p.pop_back();
        }
        word[m - 1] = letter;
    }
    return Permutation(std::move(word));
}

Partition rsk_shape(std::span<const int> word) {
    std::vector<std::vector<int>> rows;
    for (int letter : word) row_insert(rows, letter);
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

// ------------------------------------------------------- integer sequences

std::vector<BigInt> eulerian_row(int n) {
    if (n < 1) return {};
    std::vector<BigInt> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(m);
        for (int k = 1; k <= m; ++k) {
            BigInt value = 0;
            if (k <= m - 1) value += k * row[k - 1];
            if (k >= 2) value += (m - k + 1) * row[k - 2];
            next[k - 1] = std::move(value);
        }
        row = std::move(next);
    }
    return row;
}

BigInt eulerian(int n, int k) {
    if (n < 1 || k < 1 || k > n) return 0;
    return eulerian_row(n)[k - 1];
}

BigInt stirling_first_unsigned(int n, int cycles) {
    if (n < 0 || cycles < 0 || cycles > n) return 0;
    std::vector<BigInt> row{1};  // n = 0
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, 0);
        for (int l = 1; l <= m; ++l) {
            next[l] = row[l - 1];
            if (l <= m - 1) next[l] += (m - 1) * row[l];
        }
        row = std::move(next);
    }
    return row[cycles];
}

BigInt stirling_second(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<BigInt> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, 0);
        for (int j = 1; j <= m; ++j) {
            next[j] = row[j - 1];
            if (j <= m - 1) next[j] += j * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace blockchar
