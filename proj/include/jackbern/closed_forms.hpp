#pragma once

/// \file closed_forms.hpp
/// Independent closed forms used as oracles: determinant formulas at d = 2,
/// terminating hypergeometric sums at r = 2, and classical multiple Bernoulli
/// polynomials at r = 1.
///
/// Determinant/Vandermonde quotients are computed by exact division of the
/// alternant, one factor (z_i - z_j) at a time.

#include "jackbern/bernoulli.hpp"
#include "jackbern/jack.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/series.hpp"
#include "jackbern/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace jackbern {

/// pFq data with rational parameters.
struct HypergeometricSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    /// True when some upper parameter is a nonpositive integer.
    bool terminating() const
    {
        return std::any_of(upper.begin(), upper.end(), [](const Rational& a) { return a <= 0 && a.get_den() == 1; });
    }

    /// Number of nonzero terms when terminating.
    int length() const
    {
        int best = -1;
        for (const auto& a : upper)
            if (a <= 0 && a.get_den() == 1) {
                int n = static_cast<int>(-a.get_num().get_si());
                best = best < 0 ? n : std::min(best, n);
            }
        if (best < 0)
            throw std::logic_error("hypergeometric series does not terminate");
        return best + 1;
    }

    /// prod (a)_k / prod (b)_k / k!.
    Rational term(int k) const
    {
        Rational t = 1;
        for (const auto& a : upper)
            t *= rising(a, k);
        for (const auto& b : lower) {
            Rational den = rising(b, k);
            if (den == 0)
                throw std::domain_error("hypergeometric lower parameter hits a pole");
            t /= den;
        }
        return t / Rational(factorial(k));
    }
};

namespace detail {

/// Sum over permutations sigma of sign(sigma) prod_i entry(i, sigma(i)).
template <class T, class Entry>
T leibniz_det(int r, const T& zero, const T& one, Entry entry)
{
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero;
    do {
        int inversions = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
        T prod = one;
        for (int i = 0; i < r; ++i)
            prod = prod * entry(i, perm[static_cast<std::size_t>(i)]);
        if (inversions % 2)
            total = total - prod;
        else
            total = total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// det(entry(i, j)) / Delta(z) for an alternating determinant whose row i
/// depends on z_i only.
inline SymPoly alternant_quotient(int r, const std::function<RawPoly(int, int)>& entry)
{
    RawPoly det = leibniz_det<RawPoly>(r, RawPoly(r), RawPoly::constant(r, 1), entry);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            det = divide_by_difference(det, i, j);
    return from_raw(det);
}

/// Univariate polynomial given by coefficients, placed in variable i.
inline RawPoly in_variable(int r, int i, const std::vector<Rational>& coeffs)
{
    return RawPoly::univariate(r, i, coeffs);
}

/// Coefficients of the falling factorial x (x-1) ... (x-n+1).
inline std::vector<Rational> falling_coeffs(int n)
{
    std::vector<Rational> c{Rational(1)};
    for (int k = 0; k < n; ++k) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t e = 0; e < c.size(); ++e) {
            next[e + 1] += c[e];
            next[e] -= c[e] * k;
        }
        c = std::move(next);
    }
    return c;
}

inline Rational vandermonde(std::span<const Rational> x)
{
    Rational v = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            v *= x[i] - x[j];
    return v;
}

} // namespace detail

/// s_m(z) = det(z_i^{m_j + r - j}) / Delta(z).
inline SymPoly schur_det(const Partition& m, int r)
{
    require_fits(m, r);
    return detail::alternant_quotient(r, [&](int i, int j) {
        std::vector<Rational> c(static_cast<std::size_t>(m[j] + r - 1 - j) + 1);
        c.back() = 1;
        return detail::in_variable(r, i, c);
    });
}

/// Shifted Schur polynomial in the variables z = x + delta:
/// det((z_i)_{falling, m_j + r - j}) / Delta(z). Vanishes at mu + delta unless
/// m is contained in mu.
inline SymPoly shifted_schur_det(const Partition& m, int r)
{
    require_fits(m, r);
    return detail::alternant_quotient(r, [&](int i, int j) {
        return detail::in_variable(r, i, detail::falling_coeffs(m[j] + r - 1 - j));
    });
}

/// P_m(z; d/2) at r = 2 as z1^{m1} z2^{m2} 2F1(-m1+m2, d/2; 1-m1+m2-d/2; z2/z1).
inline SymPoly jack_r2_closed(const Partition& m, const Rational& d)
{
    require_fits(m, 2);
    require_positive_d(d);
    const int gap = m[0] - m[1];
    HypergeometricSpec f{{Rational(-gap), d / 2}, {Rational(1 - gap) - d / 2}};
    RawPoly p(2);
    for (int k = 0; k <= gap; ++k)
        p.add_term({m[0] - k, m[1] + k}, f.term(k));
    return from_raw(p);
}

/// P^ip_m(z; d/2) at r = 2 from the terminating 3F2 at unit argument. The
/// factor (-z2)_{m1} / (-m1+1+z2)_k is expanded as (-1)^{m1} (z2)_{falling, m1-k}.
inline SymPoly shifted_jack_r2_closed(const Partition& m, const Rational& d)
{
    require_fits(m, 2);
    require_positive_d(d);
    const int m1 = m[0], m2 = m[1], gap = m1 - m2;
    const Rational half = d / 2;
    auto shifted_var = [](int i, const Rational& shift) {
        return RawPoly::variable(2, i) + RawPoly::constant(2, shift);
    };
    // (-1)^{m1+m2} (-z1)_{m2} (-1)^{m1} = (z1)_{falling, m2}; the signs cancel.
    const RawPoly lead = RawPoly::univariate(2, 0, detail::falling_coeffs(m2));
    RawPoly sum(2);
    for (int k = 0; k <= gap; ++k) {
        Rational c = rising(Rational(-gap), k) * rising(half, k) / rising(Rational(1 - gap) - half, k) /
                     Rational(factorial(k));
        if (c == 0)
            continue;
        RawPoly term = RawPoly::constant(2, c);
        for (int i = 0; i < k; ++i)
            term = term * shifted_var(0, Rational(1 - m1 + i) - half);
        term = term * RawPoly::univariate(2, 1, detail::falling_coeffs(m1 - k));
        sum += term;
    }
    return from_raw(lead * sum);
}

/// binom(m, k) at d = 2: det(C(m_i + r - i, k_j + r - j)) Delta(k + delta) / Delta(m + delta).
inline Rational binomial_det_d2(const Partition& m, const Partition& k, int r)
{
    require_fits(m, r);
    require_fits(k, r);
    auto det = detail::leibniz_det<Rational>(r, Rational(0), Rational(1), [&](int i, int j) {
        return Rational(binomial_int(m[i] + r - 1 - i, k[j] + r - 1 - j));
    });
    std::vector<Rational> ms, ks;
    for (int i = 0; i < r; ++i) {
        ms.emplace_back(m[i] + r - 1 - i);
        ks.emplace_back(k[i] + r - 1 - i);
    }
    return det * detail::vandermonde(ks) / detail::vandermonde(ms);
}

/// binom(m, k) at r = 2 from the 3F2 display, reading its lower parameter as
/// 1 - k1 + k2 - d/2. Used only to flag disagreement.
inline Rational binomial_r2_hypergeometric(const Partition& m, const Partition& k, const Rational& d)
{
    require_fits(m, 2);
    require_fits(k, 2);
    require_positive_d(d);
    const Rational half = d / 2;
    const int k1 = k[0], k2 = k[1], gap = k1 - k2;
    const Rational z1 = m[0], z2 = m[1];
    Rational pre = rising(half + 1, gap) / (rising(half + 1, k1) * Rational(factorial(gap)) * Rational(factorial(k2)));
    // (-1)^{k1+k2} (-z1-d/2)_{k2} (-z2)_{k1} / (-k1+1+z2)_j
    //   = (-1)^{k2} (-z1-d/2)_{k2} (z2)_{falling, k1-j}
    Rational lead = ((k2 % 2) ? -1 : 1) * rising(-z1 - half, k2);
    Rational sum = 0;
    for (int j = 0; j <= gap; ++j) {
        Rational c = rising(Rational(-gap), j) * rising(half, j) * rising(Rational(1 - k1) + z1, j) /
                     (rising(Rational(1 - k1 + k2) - half, j) * Rational(factorial(j)));
        sum += c * falling(z2, k1 - j);
    }
    return pre * lead * sum;
}

/// 0F0(z, u) at r = 2 as e^{z.u} 1F1(d/2; d; -(z1-z2)(u1-u2)), both factors
/// truncated at total u-degree max_degree.
inline Rational f00_r2_closed(std::span<const Rational> zpoint, std::span<const Rational> upoint, const Rational& d,
                              int max_degree)
{
    if (zpoint.size() != 2 || upoint.size() != 2)
        throw std::invalid_argument("f00_r2_closed works with two variables");
    require_positive_d(d);
    // Series in a scale s: u -> s u, then sum the coefficients up to max_degree.
    ScalarSeries e = exp_series(zpoint[0] * upoint[0] + zpoint[1] * upoint[1], max_degree);
    ScalarSeries f(max_degree);
    const Rational x = -(zpoint[0] - zpoint[1]) * (upoint[0] - upoint[1]);
    HypergeometricSpec h{{d / 2}, {d}};
    for (int k = 0; k <= max_degree; ++k)
        f[k] = h.term(k) * power(x, k);
    ScalarSeries prod = e * f;
    return std::accumulate(prod.coeffs().begin(), prod.coeffs().end(), Rational(0));
}

/// 0F0(z, u) at d = 2 as prod_{j<r} j! det(e^{z_i u_j}) / (Delta(z) Delta(u)),
/// truncated at total u-degree max_degree. Both points need distinct
/// coordinates.
inline Rational f00_d2_det(std::span<const Rational> zpoint, std::span<const Rational> upoint, int max_degree)
{
    const int r = static_cast<int>(zpoint.size());
    if (static_cast<int>(upoint.size()) != r || r < 1)
        throw std::invalid_argument("f00_d2_det: points of different lengths");
    const Rational dz = detail::vandermonde(zpoint), du = detail::vandermonde(upoint);
    if (dz == 0 || du == 0)
        throw std::domain_error("f00_d2_det needs distinct coordinates");
    const int offset = r * (r - 1) / 2;
    const int top = max_degree + offset;
    ScalarSeries det = detail::leibniz_det<ScalarSeries>(r, ScalarSeries(top), exp_series(0, top), [&](int i, int j) {
        return exp_series(zpoint[static_cast<std::size_t>(i)] * upoint[static_cast<std::size_t>(j)], top);
    });
    Rational sum = 0;
    for (int n = 0; n <= max_degree; ++n)
        sum += det[n + offset];
    Rational scale = 1;
    for (int j = 1; j < r; ++j)
        scale *= Rational(factorial(j));
    return scale * sum / (dz * du);
}

/// det(B_{m_i + r - i}(z_j)) / Delta(z), the Jacobi-Trudi type determinant of
/// classical Bernoulli polynomials.
inline SymPoly jacobi_trudi_Btilde(const Partition& m, int r)
{
    require_fits(m, r);
    return detail::alternant_quotient(r, [&](int i, int j) {
        const SymPoly b = bernoulli_poly_classical(m[j] + r - 1 - j);
        std::vector<Rational> c(static_cast<std::size_t>(b.degree()) + 1);
        for (const auto& [k, v] : b.terms())
            c[static_cast<std::size_t>(k.weight())] = v;
        return detail::in_variable(r, i, c);
    });
}

/// Coefficient of Psi_m(u) in prod_j u_j/(e^{u_j}-1) 0F0(z, u), as a
/// polynomial in z.
inline SymPoly btilde_generating(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    const int w = m.weight();
    // prod_j sum_k B_k u_j^k / k! = sum_lambda prod_i (B_{lambda_i}/lambda_i!) m_lambda(u)
    auto product_component = [&](int n) {
        SymPoly out(r);
        for (const auto& lambda : partitions_of_weight(n, r)) {
            Rational c = 1;
            for (int i = 0; i < lambda.length(); ++i)
                c *= bernoulli_number(lambda[i]) / Rational(factorial(lambda[i]));
            out.add_term(lambda, c);
        }
        return out;
    };
    SymPoly out(r);
    for (const auto& n : enumerate_partitions(r, w)) {
        SymPoly series_part = multiply(product_component(w - n.weight()), jack_Phi(n, r, d));
        Rational c = monomial_to_psi(series_part, d).coeff(m);
        if (c != 0)
            out += c * jack_Psi(n, r, d);
    }
    return out;
}

/// s_m(1): the determinant divided by this factor is the generating-function
/// coefficient at d = 2.
inline Rational btilde_determinant_factor(const Partition& m, int r)
{
    return jack_special_value_one(m, r, 2);
}

/// B_{n,m}(z | omega) in one variable with n = omega.size():
/// sum_k C(m, k) c_{m-k} z^k where sum_N c_N t^N/N! = prod_j t/(e^{omega_j t}-1).
inline SymPoly multiple_bernoulli_classical(int m, const OmegaTuple& omega)
{
    if (m < 0)
        throw std::invalid_argument("degree must be nonnegative");
    const ScalarSeries s = scalar_product_series(omega, m);
    SymPoly out(1);
    for (int k = 0; k <= m; ++k)
        out.add_term(Partition{k}, Rational(binomial_int(m, k)) * s[m - k] * Rational(factorial(m - k)));
    return out;
}

} // namespace jackbern
