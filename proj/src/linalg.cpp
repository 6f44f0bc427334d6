#include "sandpilion/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "sandpilion/errors.hpp"

namespace sandpilion {

BigInt determinant(const IntMatrix& m) {
    if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
    const auto n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    BigInt previous_pivot = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Sylvester's identity makes this division exact.
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), previous_pivot.get_mpz_t());
            }
            a(i, k) = 0;
        }
        previous_pivot = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Smallest-magnitude nonzero entry of the trailing block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& a, std::size_t t,
                                                                    bool cross_only) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (cross_only && i != t && j != t) continue;
            if (a(i, j) == 0) continue;
            BigInt mag = abs_value(a(i, j));
            if (!best || mag < best_abs) {
                best = {i, j};
                best_abs = mag;
            }
        }
    }
    return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    SnfResult result;
    const auto limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
        auto pivot = smallest_nonzero(a, t, false);
        if (!pivot) break;
        a.swap_rows(t, pivot->first);
        a.swap_cols(t, pivot->second);
        for (;;) {
            bool residue = false;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                a.add_row_multiple(i, t, -floor_div(a(i, t), a(t, t)));
                residue = residue || a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                a.add_col_multiple(j, t, -floor_div(a(t, j), a(t, t)));
                residue = residue || a(t, j) != 0;
            }
            if (residue) {
                auto next = smallest_nonzero(a, t, true);
                a.swap_rows(t, next->first);
                a.swap_cols(t, next->second);
                continue;
            }
            // Row and column t are clear; the pivot must divide the rest of the block.
            std::optional<std::size_t> offending_row;
            for (std::size_t i = t + 1; i < a.rows() && !offending_row; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j)
                    if (!divides(a(t, t), a(i, j))) {
                        offending_row = i;
                        break;
                    }
            if (!offending_row) break;
            a.add_row_multiple(t, *offending_row, 1);
        }
        result.diag.push_back(abs_value(a(t, t)));
        ++result.rank;
    }
    return result;
}

ColumnHermiteForm column_hermite_form(const IntMatrix& m) {
    IntMatrix h = m;
    std::vector<std::size_t> pivot_rows;
    std::size_t k = 0;
    for (std::size_t r = 0; r < h.rows() && k < h.cols(); ++r) {
        for (std::size_t j = k + 1; j < h.cols(); ++j) {
            if (h(r, j) == 0) continue;
            if (h(r, k) == 0) {
                h.swap_cols(k, j);
                continue;
            }
            BigInt g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, k).get_mpz_t(), h(r, j).get_mpz_t());
            const BigInt a_over_g = h(r, k) / g;
            const BigInt b_over_g = h(r, j) / g;
            // [col_k col_j] * [[s, -b/g], [t, a/g]] has determinant 1.
            for (std::size_t i = 0; i < h.rows(); ++i) {
                BigInt ck = h(i, k);
                BigInt cj = h(i, j);
                h(i, k) = s * ck + t * cj;
                h(i, j) = a_over_g * cj - b_over_g * ck;
            }
        }
        if (h(r, k) == 0) continue;
        if (h(r, k) < 0)
            for (std::size_t i = 0; i < h.rows(); ++i) h(i, k) = -h(i, k);
        for (std::size_t j = 0; j < k; ++j) h.add_col_multiple(j, k, -floor_div(h(r, j), h(r, k)));
        pivot_rows.push_back(r);
        ++k;
    }
    std::vector<std::size_t> all_rows(h.rows());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    std::vector<std::size_t> basis_cols(k);
    for (std::size_t j = 0; j < k; ++j) basis_cols[j] = j;
    return {h.submatrix(all_rows, basis_cols), std::move(pivot_rows)};
}

bool in_image(const IntMatrix& m, std::span<const BigInt> v) {
    if (v.size() != m.rows()) throw InvalidArgument("in_image: vector length differs from row count");
    const auto hnf = column_hermite_form(m);
    std::vector<BigInt> residual(v.begin(), v.end());
    for (std::size_t k = 0; k < hnf.pivot_rows.size(); ++k) {
        const auto r = hnf.pivot_rows[k];
        const BigInt& pivot = hnf.basis(r, k);
        if (!divides(pivot, residual[r])) return false;
        const BigInt q = residual[r] / pivot;
        for (std::size_t i = r; i < residual.size(); ++i) residual[i] -= q * hnf.basis(i, k);
    }
    return std::all_of(residual.begin(), residual.end(), [](const BigInt& x) { return x == 0; });
}

BigInt minor_delete(const IntMatrix& m, std::size_t row, std::size_t col) {
    if (!m.square()) throw InvalidArgument("minor of a non-square matrix");
    if (row >= m.rows() || col >= m.cols()) throw InvalidArgument("minor index out of range");
    return determinant(m.without(row, col));
}

}  // namespace sandpilion
