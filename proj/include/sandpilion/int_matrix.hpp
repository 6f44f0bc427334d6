#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sandpilion/bigint.hpp"

namespace sandpilion {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const BigInt> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<BigInt>& entries() const { return data_; }

    std::vector<BigInt> column(std::size_t c) const;
    /// Copy with one row and one column removed.
    IntMatrix without(std::size_t row, std::size_t col) const;
    IntMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    /// Horizontal concatenation [this | other].
    IntMatrix hcat(const IntMatrix& other) const;
    IntMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<BigInt> operator*(const IntMatrix& a, std::span<const BigInt> v);

std::string to_string(const IntMatrix& m);

}  // namespace sandpilion
