#pragma once

/// \file linalg.hpp
/// Exact dense linear algebra over the rationals.

#include "jackbern/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace jackbern {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Clear denominators row by row and run Bareiss elimination on the
/// (possibly augmented) integer matrix. Returns the rank; `rows` is left in
/// row echelon form with the first `rank` pivots on the leading diagonal
/// positions recorded in `pivot_cols`.
inline int bareiss(std::vector<std::vector<Integer>>& rows, std::size_t ncols, std::vector<std::size_t>& pivot_cols)
{
    const std::size_t nrows = rows.size();
    Integer prev = 1;
    std::size_t rank = 0;
    pivot_cols.clear();
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t p = rank;
        while (p < nrows && rows[p][col] == 0)
            ++p;
        if (p == nrows)
            continue;
        std::swap(rows[p], rows[rank]);
        const Integer& piv = rows[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            for (std::size_t j = col + 1; j < rows[i].size(); ++j) {
                Integer t = rows[i][j] * piv - rows[i][col] * rows[rank][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                rows[i][j] = t;
            }
            rows[i][col] = 0;
        }
        prev = piv;
        pivot_cols.push_back(col);
        ++rank;
    }
    return static_cast<int>(rank);
}

inline std::vector<Integer> integer_row(const std::vector<Rational>& row, const Rational* extra)
{
    Integer lcm = 1;
    for (const auto& x : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    if (extra)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), extra->get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(row.size() + 1);
    for (const auto& x : row)
        out.emplace_back(x.get_num() * (lcm / x.get_den()));
    if (extra)
        out.emplace_back(extra->get_num() * (lcm / extra->get_den()));
    return out;
}

} // namespace detail

/// Rank of a rational matrix.
inline int exact_rank(const RationalMatrix& a)
{
    if (a.empty())
        return 0;
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : a)
        rows.push_back(detail::integer_row(row, nullptr));
    std::vector<std::size_t> pivots;
    return detail::bareiss(rows, a.front().size(), pivots);
}

/// Solve the square system a x = b by fraction-free elimination. Throws
/// SingularSystem when a is not invertible.
inline std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_exact: right-hand side has the wrong length");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_exact: matrix is not square");
    std::vector<std::vector<Integer>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(detail::integer_row(a[i], &b[i]));
    std::vector<std::size_t> pivots;
    if (detail::bareiss(rows, n, pivots) != static_cast<int>(n))
        throw SingularSystem("linear system is singular");
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(rows[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j)
            acc -= Rational(rows[ii][j]) * x[j];
        x[ii] = acc / Rational(rows[ii][ii]);
    }
    return x;
}

} // namespace jackbern
