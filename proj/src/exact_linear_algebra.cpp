#include "blockchar/exact_linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace blockchar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            const Rational factor = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<RationalMatrix> inverse(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        const Rational scale = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            if (m(col, j) != 0) m(col, j) *= scale;
            if (inv(col, j) != 0) inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == 0) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (m(col, j) != 0) m(i, j) -= factor * m(col, j);
                if (inv(col, j) != 0) inv(i, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("solve: singular matrix");
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
            b[i] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

bool is_positive_semidefinite(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_positive_semidefinite: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;
    while (!active.empty()) {
        // Largest remaining diagonal entry as pivot.
        std::size_t best = 0;
        for (std::size_t t = 1; t < active.size(); ++t)
            if (m(active[t], active[t]) > m(active[best], active[best])) best = t;
        const std::size_t p = active[best];
        const Rational pivot = m(p, p);
        if (pivot < 0) return false;
        if (pivot == 0) {
            // All diagonals are <= 0 here; PSD forces the remaining block to vanish.
            for (std::size_t i : active)
                for (std::size_t j : active)
                    if (m(i, j) != 0) return false;
            return true;
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        for (std::size_t i : active) {
            if (m(i, p) == 0) continue;
            const Rational factor = m(i, p) / pivot;
            for (std::size_t j : active)
                if (m(p, j) != 0) m(i, j) -= factor * m(p, j);
        }
    }
    return true;
}

}  // namespace blockchar
