#pragma once

/// \file sympoly.hpp
/// Symmetric polynomials over the rationals in the monomial symmetric basis.
///
/// A `SymPoly` stores coefficients of m_lambda(z_1..z_r). Operations that are
/// awkward in that basis (products, derivatives, substitutions, division by
/// z_j - z_l) pass through a transient `RawPoly`, an ordinary sparse
/// multivariate polynomial, and are collected back afterwards.

#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackbern {

using Exponent = std::vector<int>;

/// Sparse polynomial in r variables; the map never holds zero coefficients.
class RawPoly {
public:
    explicit RawPoly(int r = 0) : r_(r) {}

    int r() const { return r_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    RawPoly& operator+=(const RawPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    RawPoly& operator-=(const RawPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    RawPoly& operator*=(const Rational& s)
    {
        if (s == 0)
            terms_.clear();
        else
            for (auto& [e, c] : terms_)
                c *= s;
        return *this;
    }

    friend RawPoly operator+(RawPoly a, const RawPoly& b) { return a += b; }
    friend RawPoly operator-(RawPoly a, const RawPoly& b) { return a -= b; }

    friend RawPoly operator*(const RawPoly& a, const RawPoly& b)
    {
        RawPoly out(a.r_);
        Exponent e(static_cast<std::size_t>(a.r_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const RawPoly& a, const RawPoly& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

    static RawPoly constant(int r, const Rational& c)
    {
        RawPoly p(r);
        p.add_term(Exponent(static_cast<std::size_t>(r), 0), c);
        return p;
    }

    /// z_i (zero-based).
    static RawPoly variable(int r, int i)
    {
        RawPoly p(r);
        Exponent e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, 1);
        return p;
    }

    /// Univariate polynomial sum_k coeffs[k] z_i^k embedded in r variables.
    static RawPoly univariate(int r, int i, std::span<const Rational> coeffs)
    {
        RawPoly p(r);
        Exponent e(static_cast<std::size_t>(r), 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            e[static_cast<std::size_t>(i)] = static_cast<int>(k);
            p.add_term(e, coeffs[k]);
        }
        return p;
    }

    Rational evaluate(std::span<const Rational> point) const
    {
        if (static_cast<int>(point.size()) != r_)
            throw std::invalid_argument("evaluation point has the wrong number of coordinates");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i])
                    t *= power(point[i], e[i]);
            acc += t;
        }
        return acc;
    }

private:
    int r_;
    std::map<Exponent, Rational> terms_;
};

/// Quotient of p by (z_j - z_l - shift); throws std::logic_error when the
/// division is not exact.
inline RawPoly divide_by_difference(const RawPoly& p, int j, int l, const Rational& shift = 0)
{
    const int r = p.r();
    const auto uj = static_cast<std::size_t>(j);
    const auto ul = static_cast<std::size_t>(l);
    // p = sum_k a_k z_j^k with a_k free of z_j.
    int top = -1;
    for (const auto& [e, c] : p.terms())
        top = std::max(top, e[uj]);
    if (top < 0)
        return RawPoly(r);
    std::vector<RawPoly> a(static_cast<std::size_t>(top) + 1, RawPoly(r));
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[uj] = 0;
        a[static_cast<std::size_t>(e[uj])].add_term(f, c);
    }
    // Multiplication by the root (z_l + shift).
    auto times_root = [&](const RawPoly& q) {
        RawPoly out(r);
        for (const auto& [e, c] : q.terms()) {
            Exponent f = e;
            ++f[ul];
            out.add_term(f, c);
            out.add_term(e, c * shift);
        }
        return out;
    };
    // Synthetic division: b_{k-1} = a_k + root * b_k.
    RawPoly quotient(r);
    RawPoly carry(r);
    for (int k = top; k >= 1; --k) {
        carry = a[static_cast<std::size_t>(k)] + times_root(carry);
        for (const auto& [e, c] : carry.terms()) {
            Exponent f = e;
            f[uj] = k - 1;
            quotient.add_term(f, c);
        }
    }
    RawPoly remainder = a[0] + times_root(carry);
    if (!remainder.is_zero())
        throw std::logic_error("inexact division by a variable difference");
    return quotient;
}

/// Symmetric polynomial in r variables, as coefficients of m_lambda.
class SymPoly {
public:
    explicit SymPoly(int r = 1) : r_(r)
    {
        if (r < 1)
            throw std::invalid_argument("SymPoly needs at least one variable");
    }

    static SymPoly constant(int r, const Rational& c)
    {
        SymPoly p(r);
        p.add_term(Partition{}, c);
        return p;
    }

    static SymPoly monomial(int r, const Partition& lambda, const Rational& c = 1)
    {
        SymPoly p(r);
        p.add_term(lambda, c);
        return p;
    }

    int r() const { return r_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Partition{}); }

    /// Keys with more than r parts vanish identically in r variables and are
    /// dropped.
    void add_term(const Partition& lambda, const Rational& c)
    {
        if (c == 0 || lambda.length() > r_)
            return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

    SymPoly homogeneous_component(int n) const
    {
        SymPoly out(r_);
        for (const auto& [k, c] : terms_)
            if (k.weight() == n)
                out.terms_.emplace(k, c);
        return out;
    }

    SymPoly& operator+=(const SymPoly& o)
    {
        check_same_r(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }

    SymPoly& operator-=(const SymPoly& o)
    {
        check_same_r(o);
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }

    SymPoly& operator*=(const Rational& s)
    {
        if (s == 0)
            terms_.clear();
        else
            for (auto& [k, c] : terms_)
                c *= s;
        return *this;
    }

    SymPoly& operator/=(const Rational& s)
    {
        if (s == 0)
            throw std::domain_error("division of a polynomial by zero");
        return *this *= 1 / s;
    }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }
    friend SymPoly operator*(const Rational& s, SymPoly a) { return a *= s; }
    friend SymPoly operator/(SymPoly a, const Rational& s) { return a /= s; }
    friend SymPoly operator-(SymPoly a) { return a *= -1; }

    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

private:
    void check_same_r(const SymPoly& o) const
    {
        if (o.r_ != r_)
            throw std::invalid_argument("symmetric polynomials in different numbers of variables");
    }

    int r_;
    std::map<Partition, Rational> terms_;
};

/// Distinct permutations of lambda padded to r entries.
inline std::vector<Exponent> monomial_orbit(const Partition& lambda, int r)
{
    Exponent e = lambda.padded(r);
    std::sort(e.begin(), e.end());
    std::vector<Exponent> out;
    do {
        out.push_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline RawPoly to_raw(const SymPoly& f)
{
    RawPoly out(f.r());
    for (const auto& [k, c] : f.terms())
        for (const auto& e : monomial_orbit(k, f.r()))
            out.add_term(e, c);
    return out;
}

inline bool is_weakly_decreasing(const Exponent& e)
{
    return std::is_sorted(e.begin(), e.end(), std::greater<>());
}

/// Collect a symmetric raw polynomial back into the monomial basis. With
/// `check` set, every raw coefficient is compared with its orbit
/// representative and a non-symmetric input is rejected.
inline SymPoly from_raw(const RawPoly& p, bool check = true)
{
    SymPoly out(p.r());
    for (const auto& [e, c] : p.terms()) {
        if (is_weakly_decreasing(e)) {
            out.add_term(Partition(e), c);
        } else if (check) {
            Exponent s = e;
            std::sort(s.begin(), s.end(), std::greater<>());
            auto it = p.terms().find(s);
            if (it == p.terms().end() || it->second != c)
                throw std::logic_error("polynomial is not symmetric");
        }
    }
    return out;
}

/// Exact product in the monomial basis. Only the weakly decreasing exponents
/// of the raw product are accumulated, since they carry every coefficient.
inline SymPoly multiply(const SymPoly& f, const SymPoly& g)
{
    if (f.r() != g.r())
        throw std::invalid_argument("multiply: polynomials in different numbers of variables");
    const int r = f.r();
    RawPoly acc(r);
    Exponent e(static_cast<std::size_t>(r));
    std::vector<std::pair<std::vector<Exponent>, Rational>> gorbits;
    for (const auto& [k, c] : g.terms())
        gorbits.emplace_back(monomial_orbit(k, r), c);
    for (const auto& [kf, cf] : f.terms()) {
        auto forbit = monomial_orbit(kf, r);
        for (const auto& [gorbit, cg] : gorbits) {
            Rational c = cf * cg;
            for (const auto& a : forbit)
                for (const auto& b : gorbit) {
                    for (std::size_t i = 0; i < e.size(); ++i)
                        e[i] = a[i] + b[i];
                    if (is_weakly_decreasing(e))
                        acc.add_term(e, c);
                }
        }
    }
    return from_raw(acc, false);
}

inline Rational evaluate(const SymPoly& f, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) != f.r())
        throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(f.r()));
    Rational acc = 0;
    for (const auto& [k, c] : f.terms()) {
        Rational orbit_sum = 0;
        for (const auto& e : monomial_orbit(k, f.r())) {
            Rational t = 1;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i])
                    t *= power(point[i], e[i]);
            orbit_sum += t;
        }
        acc += c * orbit_sum;
    }
    return acc;
}

/// E_0 = sum_j d/dz_j.
inline SymPoly apply_E0(const SymPoly& f)
{
    RawPoly raw = to_raw(f);
    RawPoly out(f.r());
    for (const auto& [e, c] : raw.terms())
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) {
                Exponent g = e;
                --g[j];
                out.add_term(g, c * e[j]);
            }
    return from_raw(out);
}

/// D_2 = sum_j z_j^2 d^2/dz_j^2 + d sum_{j != l} z_j^2/(z_j - z_l) d/dz_j.
///
/// The second sum is taken pairwise, (z_j^2 f_j - z_l^2 f_l)/(z_j - z_l),
/// which is a polynomial for symmetric f.
inline SymPoly apply_D2(const SymPoly& f, const Rational& d)
{
    const int r = f.r();
    RawPoly raw = to_raw(f);
    RawPoly out(r);
    for (const auto& [e, c] : raw.terms()) {
        Rational diag = 0;
        for (int x : e)
            diag += x * (x - 1);
        out.add_term(e, c * diag);
    }
    for (int j = 0; j < r; ++j)
        for (int l = j + 1; l < r; ++l) {
            RawPoly numerator(r);
            for (const auto& [e, c] : raw.terms()) {
                const auto uj = static_cast<std::size_t>(j);
                const auto ul = static_cast<std::size_t>(l);
                if (e[uj] > 0) {
                    Exponent g = e;
                    ++g[uj];
                    numerator.add_term(g, c * e[uj]);
                }
                if (e[ul] > 0) {
                    Exponent g = e;
                    ++g[ul];
                    numerator.add_term(g, -c * e[ul]);
                }
            }
            RawPoly q = divide_by_difference(numerator, j, l);
            q *= d;
            out += q;
        }
    return from_raw(out);
}

/// f(a z_1 + b, ..., a z_r + b), re-expanded in the monomial basis.
inline SymPoly affine_substitute(const SymPoly& f, const Rational& a, const Rational& b)
{
    const int r = f.r();
    RawPoly acc(r);
    // Coefficient of z^k in (a z + b)^e, cached per (e, k).
    std::map<std::pair<int, int>, Rational> univariate;
    auto coeff = [&](int e, int k) -> const Rational& {
        auto [it, inserted] = univariate.try_emplace({e, k});
        if (inserted)
            it->second = Rational(binomial_int(e, k)) * power(a, k) * power(b, e - k);
        return it->second;
    };
    Exponent k(static_cast<std::size_t>(r));
    for (const auto& [lambda, c] : f.terms())
        for (const auto& e : monomial_orbit(lambda, r)) {
            // Enumerate weakly decreasing k with k_i <= e_i; the image is
            // symmetric so those coefficients determine it.
            auto rec = [&](auto&& self, std::size_t i, Rational partial) -> void {
                if (partial == 0)
                    return;
                if (i == k.size()) {
                    acc.add_term(k, partial);
                    return;
                }
                int hi = e[i];
                if (i > 0)
                    hi = std::min(hi, k[i - 1]);
                for (int v = 0; v <= hi; ++v) {
                    k[i] = v;
                    self(self, i + 1, partial * coeff(e[i], v));
                }
            };
            rec(rec, 0, c);
        }
    return from_raw(acc, false);
}

/// (m_(1))^n = |z|^n.
inline SymPoly power_sum_one_power(int r, int n)
{
    SymPoly out = SymPoly::constant(r, 1);
    SymPoly z1 = SymPoly::monomial(r, Partition{1});
    for (int i = 0; i < n; ++i)
        out = multiply(out, z1);
    return out;
}

} // namespace jackbern
