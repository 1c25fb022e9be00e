#pragma once

/// \file series.hpp
/// Truncated formal power series: scalar series in t (standing for |u|) and
/// graded symmetric series in u = (u_1, ..., u_r).
///
/// Every series carries the degree up to which its coefficients are exact.
/// Binary operations demand equal truncation degrees.

#include "jackbern/jack.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/sympoly.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackbern {

class ScalarSeries {
public:
    explicit ScalarSeries(int max_degree) : coeffs_(static_cast<std::size_t>(check_degree(max_degree)) + 1) {}

    ScalarSeries(int max_degree, std::vector<Rational> coeffs) : ScalarSeries(max_degree)
    {
        if (coeffs.size() > coeffs_.size())
            throw std::invalid_argument("more coefficients than the truncation degree allows");
        std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
    }

    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

    friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b)
    {
        a.check_compatible(b);
        ScalarSeries out(a.max_degree());
        for (int i = 0; i <= a.max_degree(); ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; i + j <= a.max_degree(); ++j)
                out[i + j] += a[i] * b[j];
        }
        return out;
    }

    friend ScalarSeries operator+(const ScalarSeries& a, const ScalarSeries& b)
    {
        a.check_compatible(b);
        ScalarSeries out = a;
        for (int i = 0; i <= a.max_degree(); ++i)
            out[i] += b[i];
        return out;
    }

    friend ScalarSeries operator-(const ScalarSeries& a, const ScalarSeries& b)
    {
        a.check_compatible(b);
        ScalarSeries out = a;
        for (int i = 0; i <= a.max_degree(); ++i)
            out[i] -= b[i];
        return out;
    }

    friend ScalarSeries operator*(const Rational& s, ScalarSeries a)
    {
        for (auto& c : a.coeffs_)
            c *= s;
        return a;
    }

    friend bool operator==(const ScalarSeries&, const ScalarSeries&) = default;

    /// Multiplicative inverse; the constant term must be nonzero.
    ScalarSeries inverse() const
    {
        if (coeffs_[0] == 0)
            throw std::domain_error("series with zero constant term has no inverse");
        ScalarSeries out(max_degree());
        out[0] = 1 / coeffs_[0];
        for (int n = 1; n <= max_degree(); ++n) {
            Rational acc = 0;
            for (int k = 1; k <= n; ++k)
                acc += coeffs_[static_cast<std::size_t>(k)] * out[n - k];
            out[n] = -acc / coeffs_[0];
        }
        return out;
    }

private:
    static int check_degree(int n)
    {
        if (n < 0)
            throw std::invalid_argument("negative truncation degree");
        return n;
    }

    void check_compatible(const ScalarSeries& o) const
    {
        if (o.max_degree() != max_degree())
            throw std::invalid_argument("scalar series truncated at different degrees (" +
                                        std::to_string(max_degree()) + " vs " + std::to_string(o.max_degree()) + ")");
    }

    std::vector<Rational> coeffs_;
};

/// e^{c t}.
inline ScalarSeries exp_series(const Rational& c, int max_degree)
{
    ScalarSeries out(max_degree);
    Rational term = 1;
    for (int n = 0; n <= max_degree; ++n) {
        out[n] = term;
        term *= c / (n + 1);
    }
    return out;
}

/// t / (e^{omega t} - 1) = sum_N B_N omega^{N-1} t^N / N!, obtained by
/// inverting (e^{omega t} - 1)/t.
inline ScalarSeries bernoulli_scalar_series(const Rational& omega, int max_degree)
{
    if (omega == 0)
        throw std::domain_error("omega must be nonzero");
    ScalarSeries quotient(max_degree);
    Rational term = omega; // omega^{n+1} / (n+1)!
    for (int n = 0; n <= max_degree; ++n) {
        quotient[n] = term;
        term *= omega / (n + 2);
    }
    return quotient.inverse();
}

/// sum_{i<count} e^{(i/count) t}.
inline ScalarSeries exp_geometric_sum(int count, int max_degree)
{
    ScalarSeries out(max_degree);
    for (int i = 0; i < count; ++i)
        out = out + exp_series(rational(i, count), max_degree);
    return out;
}

/// Graded series in u; component n is a homogeneous symmetric polynomial of
/// degree n.
class GradedSeries {
public:
    GradedSeries(int r, int max_degree) : r_(r)
    {
        if (max_degree < 0)
            throw std::invalid_argument("negative truncation degree");
        components_.assign(static_cast<std::size_t>(max_degree) + 1, SymPoly(r));
    }

    /// Split a polynomial into its homogeneous parts, dropping degrees above
    /// the truncation.
    static GradedSeries from_polynomial(const SymPoly& f, int max_degree)
    {
        GradedSeries out(f.r(), max_degree);
        for (const auto& [k, c] : f.terms())
            if (k.weight() <= max_degree)
                out.components_[static_cast<std::size_t>(k.weight())].add_term(k, c);
        return out;
    }

    int r() const { return r_; }
    int max_degree() const { return static_cast<int>(components_.size()) - 1; }
    const std::vector<SymPoly>& components() const { return components_; }
    const SymPoly& component(int n) const { return components_.at(static_cast<std::size_t>(n)); }

    /// Adds f into component n; f must be homogeneous of degree n.
    void add_to_component(int n, const SymPoly& f)
    {
        for (const auto& [k, c] : f.terms())
            if (k.weight() != n)
                throw std::invalid_argument("component " + std::to_string(n) + " received a term of degree " +
                                            std::to_string(k.weight()));
        components_.at(static_cast<std::size_t>(n)) += f;
    }

    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b)
    {
        a.check_compatible(b);
        for (std::size_t n = 0; n < a.components_.size(); ++n)
            a.components_[n] += b.components_[n];
        return a;
    }

    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b)
    {
        a.check_compatible(b);
        for (std::size_t n = 0; n < a.components_.size(); ++n)
            a.components_[n] -= b.components_[n];
        return a;
    }

    friend GradedSeries operator*(const Rational& s, GradedSeries a)
    {
        for (auto& c : a.components_)
            c *= s;
        return a;
    }

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

    /// Graded product, truncated.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
    {
        a.check_compatible(b);
        GradedSeries out(a.r_, a.max_degree());
        for (int i = 0; i <= a.max_degree(); ++i) {
            if (a.component(i).is_zero())
                continue;
            for (int j = 0; i + j <= a.max_degree(); ++j)
                if (!b.component(j).is_zero())
                    out.components_[static_cast<std::size_t>(i + j)] += multiply(a.component(i), b.component(j));
        }
        return out;
    }

    /// Sum of all components at a point u.
    Rational evaluate_at(std::span<const Rational> u) const
    {
        Rational acc = 0;
        for (const auto& c : components_)
            acc += evaluate(c, u);
        return acc;
    }

    void check_compatible(const GradedSeries& o) const
    {
        if (o.r_ != r_)
            throw std::invalid_argument("graded series in different numbers of variables");
        if (o.max_degree() != max_degree())
            throw std::invalid_argument("graded series truncated at different degrees (" +
                                        std::to_string(max_degree()) + " vs " + std::to_string(o.max_degree()) + ")");
    }

private:
    int r_;
    std::vector<SymPoly> components_;
};

/// Truncation of 0F0(z, u) = sum_m Psi_m(z) Phi_m(u) at a rational point z.
inline GradedSeries f00_truncated(std::span<const Rational> zpoint, int r, const Rational& d, int max_degree)
{
    if (static_cast<int>(zpoint.size()) != r)
        throw std::invalid_argument("f00_truncated: point has the wrong number of coordinates");
    require_positive_d(d);
    GradedSeries out(r, max_degree);
    for (const auto& m : enumerate_partitions(r, max_degree)) {
        Rational w = evaluate(jack_Psi(m, r, d), zpoint);
        if (w != 0)
            out.add_to_component(m.weight(), w * jack_Phi(m, r, d));
    }
    return out;
}

/// The series ss(|u|) * gs(u): component n is sum_N ss[N] |u|^N gs[n-N].
inline GradedSeries multiply_scalar(const GradedSeries& gs, const ScalarSeries& ss)
{
    if (gs.max_degree() != ss.max_degree())
        throw std::invalid_argument("multiply_scalar: truncation degrees differ (" + std::to_string(gs.max_degree()) +
                                    " vs " + std::to_string(ss.max_degree()) + ")");
    const int top = gs.max_degree();
    GradedSeries out(gs.r(), top);
    SymPoly abs_u_power = SymPoly::constant(gs.r(), 1);
    const SymPoly abs_u = SymPoly::monomial(gs.r(), Partition{1});
    for (int N = 0; N <= top; ++N) {
        if (ss[N] != 0)
            for (int k = 0; N + k <= top; ++k)
                if (!gs.component(k).is_zero())
                    out.add_to_component(N + k, ss[N] * multiply(abs_u_power, gs.component(k)));
        if (N < top)
            abs_u_power = multiply(abs_u_power, abs_u);
    }
    return out;
}

/// Coefficients of the series in the Psi basis, degree by degree.
inline std::map<Partition, Rational> psi_coefficients(const GradedSeries& gs, const Rational& d)
{
    std::map<Partition, Rational> out;
    for (const auto& comp : gs.components())
        for (const auto& [m, c] : monomial_to_psi(comp, d).coeffs)
            out.emplace(m, c);
    return out;
}

} // namespace jackbern
