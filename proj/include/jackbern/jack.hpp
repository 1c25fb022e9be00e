#pragma once

/// \file jack.hpp
/// Jack polynomials P_m(z; d/2), their Phi / Psi normalizations, special
/// values, Pieri coefficients and the monomial <-> Jack basis change.
///
/// P_m is obtained as the monic, dominance-triangular eigenfunction of D_2:
/// writing D_2 m_mu = sum_nu a(mu, nu) m_nu (triangular, a(nu, nu) equal to
/// the eigenvalue of nu), the coefficients of P_m = sum_k c_k m_k satisfy
///
///     (lambda(m) - lambda(nu)) c_nu = sum_{nu < k <= m} c_k a(k, nu),
///
/// solved for nu in lexicographically descending order.

#include "jackbern/memo.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/sympoly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace jackbern {

inline void require_positive_d(const Rational& d)
{
    if (d <= 0)
        throw std::domain_error("parameter d must be a positive rational, got " + to_string(d));
}

inline void require_fits(const Partition& m, int r)
{
    if (r < 1)
        throw std::invalid_argument("number of variables must be at least 1");
    if (!m.fits(r))
        throw std::invalid_argument("partition " + m.str() + " has more than " + std::to_string(r) + " parts");
}

/// Eigenvalue of D_2 on P_m: sum_j m_j (m_j - 1 + d (r - j)).
///
/// This is the value produced by applying D_2 as written; the opposite sign in
/// front of d(r - j) would contradict D_2 m_(1) = d m_(1) for r = 2.
inline Rational jack_eigenvalue(const Partition& m, int r, const Rational& d)
{
    Rational acc = 0;
    for (int j = 0; j < m.length(); ++j)
        acc += Rational(m[j]) * (Rational(m[j] - 1) + d * (r - 1 - j));
    return acc;
}

namespace detail {
inline MemoTable<TableKey, SymPoly>& d2_action_table()
{
    static MemoTable<TableKey, SymPoly> table;
    return table;
}
inline MemoTable<TableKey, SymPoly>& jack_table()
{
    static MemoTable<TableKey, SymPoly> table;
    return table;
}
} // namespace detail

/// D_2 applied to the monomial symmetric polynomial m_mu.
inline SymPoly d2_action(const Partition& mu, int r, const Rational& d)
{
    return detail::d2_action_table().get_or_compute(
        TableKey(r, d, mu), [&] { return apply_D2(SymPoly::monomial(r, mu), d); });
}

/// Memo table for P_m, exposed for the on-disk cache.
inline MemoTable<TableKey, SymPoly>& jack_memo() { return detail::jack_table(); }

/// Jack polynomial P_m(z; d/2) in r variables, monic on m_m.
inline SymPoly jack_P(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    return detail::jack_table().get_or_compute(TableKey(r, d, m), [&] {
        const Rational lambda_m = jack_eigenvalue(m, r, d);
        std::map<Partition, Rational> c;
        c.emplace(m, Rational(1));
        // Lexicographically descending, so every k with nu < k <= m is done
        // before nu.
        for (const auto& nu : partitions_of_weight(m.weight(), r)) {
            if (!dominance_less(nu, m))
                continue;
            Rational rhs = 0;
            for (const auto& [k, ck] : c)
                rhs += ck * d2_action(k, r, d).coeff(nu);
            if (rhs == 0)
                continue;
            Rational pivot = lambda_m - jack_eigenvalue(nu, r, d);
            if (pivot == 0)
                throw std::runtime_error("eigenvalue collision between " + m.str() + " and " + nu.str());
            c.emplace(nu, rhs / pivot);
        }
        SymPoly p(r);
        for (const auto& [k, ck] : c)
            p.add_term(k, ck);
        return p;
    });
}

/// P_m(1; d/2) as the product over cells (i,j) of
/// (j - 1 + (d/2)(r - i + 1)) / (m_i - j + (d/2)(m'_j - i + 1)).
inline Rational jack_special_value_one(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    const Partition mc = conjugate(m);
    const Rational half = d / 2;
    Rational acc = 1;
    for (int i = 1; i <= m.length(); ++i)
        for (int j = 1; j <= m[i - 1]; ++j)
            acc *= (Rational(j - 1) + half * (r - i + 1)) / (Rational(m[i - 1] - j) + half * (mc[j - 1] - i + 1));
    return acc;
}

/// The same special value through the pairwise form
/// prod_{i<j} ((d/2)(j-i+1))_{m_i-m_j} / ((d/2)(j-i))_{m_i-m_j}.
inline Rational jack_special_value_one_pairwise(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    const Rational half = d / 2;
    Rational acc = 1;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            int gap = m[i - 1] - m[j - 1];
            acc *= rising(half * (j - i + 1), gap) / rising(half * (j - i), gap);
        }
    return acc;
}

/// P^ip_m(m + (d/2) delta; d/2), in the form
/// prod_j ((d/2)(r-j)+1)_{m_j} prod_{i<j} ((d/2)(j-i-1)+1)_{m_i-m_j} / ((d/2)(j-i)+1)_{m_i-m_j}.
inline Rational psi_normalizer(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    const Rational half = d / 2;
    Rational acc = 1;
    for (int j = 1; j <= r; ++j)
        acc *= rising(half * (r - j) + 1, m[j - 1]);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            int gap = m[i - 1] - m[j - 1];
            acc *= rising(half * (j - i - 1) + 1, gap) / rising(half * (j - i) + 1, gap);
        }
    return acc;
}

/// The cell-product form prod_{(i,j)} (m_i - j + 1 + (d/2)(m'_j - i)).
inline Rational psi_normalizer_cells(const Partition& m, const Rational& d)
{
    const Partition mc = conjugate(m);
    const Rational half = d / 2;
    Rational acc = 1;
    for (int i = 1; i <= m.length(); ++i)
        for (int j = 1; j <= m[i - 1]; ++j)
            acc *= Rational(m[i - 1] - j + 1) + half * (mc[j - 1] - i);
    return acc;
}

/// Phi_m = P_m / P_m(1).
inline SymPoly jack_Phi(const Partition& m, int r, const Rational& d)
{
    return jack_P(m, r, d) / jack_special_value_one(m, r, d);
}

/// Psi_m = P_m / P^ip_m(m + (d/2) delta).
inline SymPoly jack_Psi(const Partition& m, int r, const Rational& d)
{
    return jack_P(m, r, d) / psi_normalizer(m, r, d);
}

/// h_{+-,i}(n) = prod_{k != i} (n_i - n_k - (d/2)(i-k) +- d/2) / (n_i - n_k - (d/2)(i-k)),
/// with zero-based row index.
inline Rational h_factor(const Partition& n, int row, int r, const Rational& d, int sign)
{
    const Rational half = d / 2;
    Rational acc = 1;
    for (int k = 0; k < r; ++k) {
        if (k == row)
            continue;
        Rational base = Rational(n[row] - n[k]) - half * (row - k);
        acc *= (base + half * sign) / base;
    }
    return acc;
}

/// Coefficient of Psi_{m + e_row} in |u| Psi_m:
/// (m_row + 1 + (d/2)(r - row)) h_{-,row}(m + e_row), rows one-based in that formula.
inline Rational pieri_coefficient(const Partition& m, int row, int r, const Rational& d)
{
    require_fits(m, r);
    auto up = add_box(m, row, r);
    if (!up)
        throw std::invalid_argument("adding a box to row " + std::to_string(row + 1) + " of " + m.str() +
                                    " does not give a partition with at most " + std::to_string(r) + " parts");
    return (Rational(m[row] + 1) + d / 2 * (r - 1 - row)) * h_factor(*up, row, r, d, -1);
}

/// (m_row + (d/2)(r - row)) h_{-,row}(m): the weight attached to m - e_row in
/// the difference and differential identities. Zero when m - e_row is not a
/// partition.
inline Rational lowering_coefficient(const Partition& m, int row, int r, const Rational& d)
{
    auto down = remove_box(m, row);
    if (!down || row >= r)
        return 0;
    return (Rational(m[row]) + d / 2 * (r - 1 - row)) * h_factor(m, row, r, d, -1);
}

enum class JackBasis { P, Psi };

/// Coefficients of a symmetric polynomial in the P or Psi basis.
struct JackExpansion {
    int r = 1;
    Rational d = 2;
    JackBasis basis = JackBasis::P;
    std::map<Partition, Rational> coeffs;

    Rational coeff(const Partition& m) const
    {
        auto it = coeffs.find(m);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
};

/// Invert the triangular change of basis degree by degree: peel off the
/// lexicographically largest monomial, which is the leading term of its P.
inline JackExpansion monomial_to_P(const SymPoly& f, const Rational& d)
{
    require_positive_d(d);
    JackExpansion out{f.r(), d, JackBasis::P, {}};
    SymPoly rest = f;
    while (!rest.is_zero()) {
        // Within the largest remaining degree, the first key in listing order
        // is the lexicographically largest.
        const int deg = rest.degree();
        Partition lead;
        for (const auto& [k, c] : rest.terms())
            if (k.weight() == deg) {
                lead = k;
                break;
            }
        Rational c = rest.coeff(lead);
        out.coeffs.emplace(lead, c);
        rest -= c * jack_P(lead, f.r(), d);
    }
    return out;
}

inline JackExpansion monomial_to_psi(const SymPoly& f, const Rational& d)
{
    JackExpansion out = monomial_to_P(f, d);
    out.basis = JackBasis::Psi;
    for (auto& [m, c] : out.coeffs)
        c *= psi_normalizer(m, out.r, d);
    return out;
}

inline SymPoly expansion_to_monomial(const JackExpansion& e)
{
    SymPoly out(e.r);
    for (const auto& [m, c] : e.coeffs)
        out += c * (e.basis == JackBasis::P ? jack_P(m, e.r, e.d) : jack_Psi(m, e.r, e.d));
    return out;
}

/// Scalars relating the common normalizations of Jack polynomials.
struct NormalizationFactors {
    /// d_m, the pairwise product relating the Psi and Phi normalizations.
    Rational d_m;
    /// (n/r)_m with n = r + (d/2) r (r-1).
    Rational n_over_r_pochhammer;
    /// J_m = stanley_factor * P_m.
    Rational stanley_factor;
    /// C_m = kaneko_factor * P_m, equivalently C_m = |m|! Psi_m.
    Rational kaneko_factor;
};

inline NormalizationFactors normalization_factors(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    const Rational half = d / 2;
    NormalizationFactors out;

    out.d_m = 1;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            int gap = m[i - 1] - m[j - 1];
            out.d_m *= (Rational(gap) + half * (j - i)) / (half * (j - i));
            out.d_m *= rising(half * (j - i + 1), gap) / rising(half * (j - i - 1) + 1, gap);
        }

    const Rational n = Rational(r) + half * r * (r - 1);
    out.n_over_r_pochhammer = gen_pochhammer(n / r, m, d);

    const Partition mc = conjugate(m);
    out.stanley_factor = power(2 / d, m.weight());
    for (int i = 1; i <= m.length(); ++i)
        for (int j = 1; j <= m[i - 1]; ++j)
            out.stanley_factor *= Rational(m[i - 1] - j) + half * (mc[j - 1] - i + 1);

    out.kaneko_factor = Rational(factorial(m.weight())) / psi_normalizer(m, r, d);
    return out;
}

} // namespace jackbern
