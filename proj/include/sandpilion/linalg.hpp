#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sandpilion/bigint.hpp"
#include "sandpilion/int_matrix.hpp"

namespace sandpilion {

/// Nonzero invariant factors lambda_1 | lambda_2 | ... | lambda_rank, all positive.
struct SnfResult {
    std::vector<BigInt> diag;
    std::size_t rank = 0;

    bool operator==(const SnfResult&) const = default;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Smith normal form by gcd pivoting with a divisibility fix-up pass. Total: any shape, any rank.
SnfResult smith_normal_form(const IntMatrix& m);

/// Column-style Hermite form: a matrix H with the same integer column span as m, whose
/// nonzero columns come first, each with a positive pivot strictly below the previous
/// column's pivot, zeros above the pivot, and entries to the left of a pivot reduced into
/// [0, pivot).
struct ColumnHermiteForm {
    IntMatrix basis;                     // rows x rank
    std::vector<std::size_t> pivot_rows; // pivot row of each basis column
};
ColumnHermiteForm column_hermite_form(const IntMatrix& m);

/// True iff v lies in the integer column span of m.
bool in_image(const IntMatrix& m, std::span<const BigInt> v);

/// Determinant of m with one row and one column removed; 1 for a 1x1 input.
BigInt minor_delete(const IntMatrix& m, std::size_t row, std::size_t col);

}  // namespace sandpilion
