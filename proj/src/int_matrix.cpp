#include "sandpilion/int_matrix.hpp"

#include <sstream>

#include "sandpilion/errors.hpp"

namespace sandpilion {

BigInt from_decimal(const std::string& text) {
    BigInt x;
    if (text.empty() || x.set_str(text, 10) != 0) throw InvalidArgument("not a decimal integer: '" + text + "'");
    return x;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::without(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw InvalidArgument("row/column index out of range");
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == row) continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == col) continue;
            out(rr, cc++) = (*this)(r, c);
        }
        ++rr;
    }
    return out;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const {
    if (rows_ != other.rows_) throw InvalidArgument("hcat: row counts differ");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product: inner dimensions differ");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::vector<BigInt> operator*(const IntMatrix& a, std::span<const BigInt> v) {
    if (a.cols() != v.size()) throw InvalidArgument("matrix-vector product: dimension mismatch");
    std::vector<BigInt> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace sandpilion
