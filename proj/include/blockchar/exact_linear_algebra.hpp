#pragma once

// Dense linear algebra over the rationals. Every decision (rank, pivots,
// definiteness) is exact.

#include "blockchar/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace blockchar {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] RationalMatrix operator*(const RationalMatrix& rhs) const;
    [[nodiscard]] std::vector<Rational> operator*(std::span<const Rational> v) const;
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(RationalMatrix m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(RationalMatrix m);

/// Unique solution of a square system; throws std::domain_error when singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

/// Symmetric elimination with diagonal pivoting. Returns true iff the
/// symmetric matrix is positive semidefinite: every pivot is >= 0 and a zero
/// pivot only ever meets an all-zero remaining row.
bool is_positive_semidefinite(RationalMatrix m);

}  // namespace blockchar
