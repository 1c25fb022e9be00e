#pragma once

/// \file bernoulli.hpp
/// Classical Bernoulli numbers and polynomials, multivariate Bernoulli
/// polynomials B_m(z) and their multiple analogues B_{n,m}(z | omega), with
/// exact checks of their structural identities.
///
/// Both multivariate families are built from the explicit formula
///   B_{n,m}(z | omega) = sum_{k in m} c_{|m|-|k|} binom(m, k) Phi_k(z),
/// where sum_N c_N t^N / N! = prod_j t / (e^{omega_j t} - 1). The series
/// routes below evaluate the defining generating function independently.

#include "jackbern/format.hpp"
#include "jackbern/jack.hpp"
#include "jackbern/memo.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/report.hpp"
#include "jackbern/series.hpp"
#include "jackbern/shifted.hpp"
#include "jackbern/sympoly.hpp"

#include <cstdint>
#include <mutex>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackbern {

namespace detail {
inline std::vector<Rational>& bernoulli_numbers()
{
    static std::vector<Rational> table{Rational(1)};
    return table;
}
inline std::mutex& bernoulli_numbers_mutex()
{
    static std::mutex m;
    return m;
}
inline MemoTable<TableKey, SymPoly>& mv_bernoulli_table()
{
    static MemoTable<TableKey, SymPoly> table;
    return table;
}
} // namespace detail

inline MemoTable<TableKey, SymPoly>& mv_bernoulli_memo() { return detail::mv_bernoulli_table(); }

/// B_N from t/(e^t - 1), using sum_{k<=N} C(N+1, k) B_k = 0 for N >= 1.
inline Rational bernoulli_number(int N)
{
    if (N < 0)
        throw std::invalid_argument("Bernoulli index must be nonnegative");
    std::lock_guard lock(detail::bernoulli_numbers_mutex());
    auto& table = detail::bernoulli_numbers();
    while (static_cast<int>(table.size()) <= N) {
        const long n = static_cast<long>(table.size());
        Rational acc = 0;
        for (long k = 0; k < n; ++k)
            acc += Rational(binomial_int(n + 1, k)) * table[static_cast<std::size_t>(k)];
        table.push_back(-acc / (n + 1));
    }
    return table[static_cast<std::size_t>(N)];
}

/// B_m(z) = sum_n C(m, n) B_n z^{m-n}, as a one-variable SymPoly.
inline SymPoly bernoulli_poly_classical(int m)
{
    if (m < 0)
        throw std::invalid_argument("Bernoulli polynomial index must be nonnegative");
    SymPoly out(1);
    for (int n = 0; n <= m; ++n)
        out.add_term(Partition{m - n}, Rational(binomial_int(m, n)) * bernoulli_number(n));
    return out;
}

/// Periods omega_1, ..., omega_n, all nonzero. n = 0 is allowed and stands for
/// the empty product.
class OmegaTuple {
public:
    OmegaTuple() = default;

    explicit OmegaTuple(std::vector<Rational> entries) : entries_(std::move(entries))
    {
        for (const auto& w : entries_)
            if (w == 0)
                throw std::domain_error("omega entries must be nonzero");
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<Rational>& entries() const { return entries_; }
    const Rational& operator[](std::size_t j) const { return entries_.at(j); }

    Rational sum() const
    {
        Rational s = 0;
        for (const auto& w : entries_)
            s += w;
        return s;
    }

    /// omega with entry j removed (zero-based).
    OmegaTuple hat(std::size_t j) const
    {
        OmegaTuple out = *this;
        out.entries_.erase(out.entries_.begin() + static_cast<std::ptrdiff_t>(checked(j)));
        return out;
    }

    /// omega with entry j negated (zero-based).
    OmegaTuple neg(std::size_t j) const
    {
        OmegaTuple out = *this;
        out.entries_[checked(j)] = -out.entries_[j];
        return out;
    }

    OmegaTuple scaled(const Rational& c) const
    {
        if (c == 0)
            throw std::domain_error("scaling omega by zero");
        OmegaTuple out = *this;
        for (auto& w : out.entries_)
            w *= c;
        return out;
    }

    /// "1,2,3"
    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i)
                s += ',';
            s += to_string(entries_[i]);
        }
        return s;
    }

    friend bool operator==(const OmegaTuple&, const OmegaTuple&) = default;

private:
    std::size_t checked(std::size_t j) const
    {
        if (j >= entries_.size())
            throw std::out_of_range("omega index out of range");
        return j;
    }

    std::vector<Rational> entries_;
};

/// prod_j t / (e^{omega_j t} - 1); the empty product is 1.
inline ScalarSeries scalar_product_series(const OmegaTuple& omega, int max_degree)
{
    ScalarSeries out(max_degree);
    out[0] = 1;
    for (const auto& w : omega.entries())
        out = out * bernoulli_scalar_series(w, max_degree);
    return out;
}

namespace detail {

/// sum_{k in m} weights[|m|-|k|] (|m|-|k|)! binom(m, k) Phi_k.
inline SymPoly explicit_formula(const Partition& m, int r, const Rational& d, const ScalarSeries& weights)
{
    SymPoly out(r);
    for (const auto& k : subpartitions(m)) {
        const int gap = m.weight() - k.weight();
        Rational c = weights[gap] * Rational(factorial(gap));
        if (c == 0)
            continue;
        out += c * binomial(m, k, r, d) * jack_Phi(k, r, d);
    }
    return out;
}

/// Psi-coefficient at m of ss(|u|) 0F0(zpoint, u).
inline Rational series_coefficient(std::span<const Rational> zpoint, const Partition& m, int r, const Rational& d,
                                   const ScalarSeries& ss)
{
    const int n = m.weight();
    GradedSeries f = f00_truncated(zpoint, r, d, n);
    GradedSeries prod = multiply_scalar(f, ss);
    return monomial_to_psi(prod.component(n), d).coeff(m);
}

} // namespace detail

/// B_m(z) with d the Jack parameter, via the explicit formula.
inline SymPoly mv_bernoulli(const Partition& m, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    return detail::mv_bernoulli_table().get_or_compute(TableKey(r, d, m), [&] {
        return detail::explicit_formula(m, r, d, bernoulli_scalar_series(1, m.weight()));
    });
}

/// B_m(zpoint) read off the generating function |u|/(e^{|u|}-1) 0F0(z, u).
inline Rational mv_bernoulli_eval_via_series(std::span<const Rational> zpoint, const Partition& m, int r,
                                             const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    return detail::series_coefficient(zpoint, m, r, d, bernoulli_scalar_series(1, m.weight()));
}

/// B_{n,m}(z | omega) with n = omega.size().
inline SymPoly multiple_mv_bernoulli(const Partition& m, const OmegaTuple& omega, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    return detail::explicit_formula(m, r, d, scalar_product_series(omega, m.weight()));
}

inline Rational multiple_mv_bernoulli_eval_via_series(std::span<const Rational> zpoint, const Partition& m,
                                                      const OmegaTuple& omega, int r, const Rational& d)
{
    require_fits(m, r);
    require_positive_d(d);
    return detail::series_coefficient(zpoint, m, r, d, scalar_product_series(omega, m.weight()));
}

/// Deterministic source of small-height rationals num/den with
/// num in [-bound, bound] and den in [1, bound].
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, int bound = 5) : engine_(seed), bound_(bound) {}

    Rational next()
    {
        const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
        long num = static_cast<long>(engine_() % span) - bound_;
        long den = static_cast<long>(engine_() % static_cast<std::uint64_t>(bound_)) + 1;
        return rational(num, den);
    }

    std::vector<Rational> point(int r)
    {
        std::vector<Rational> p;
        for (int i = 0; i < r; ++i)
            p.push_back(next());
        return p;
    }

private:
    std::mt19937_64 engine_;
    int bound_;
};

namespace detail {

inline std::string point_str(std::span<const Rational> p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += to_string(p[i]);
    }
    return s + ")";
}

/// sum_i lowering(m, i) term(m - e_i), skipping rows where m - e_i is not a
/// partition.
template <class Term>
SymPoly lowering_sum(const Partition& m, int r, const Rational& d, Term term)
{
    SymPoly out(r);
    for (int i = 0; i < r; ++i) {
        auto down = remove_box(m, i);
        if (!down)
            continue;
        out += lowering_coefficient(m, i, r, d) * term(*down);
    }
    return out;
}

inline VerificationReport compare(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                                  const Partition& m, const SymPoly& lhs, const SymPoly& rhs)
{
    VerificationReport rep{std::move(identity), std::move(params), true, std::nullopt};
    if (lhs != rhs)
        rep.fail(m.str(), format_plain(lhs), format_plain(rhs));
    return rep;
}

} // namespace detail

/// Identities (1)-(8) for every partition with at most r parts and weight at
/// most max_weight. Reports are ordered by partition, then identity.
inline std::vector<VerificationReport> verify_theorem1(int r, const Rational& d, int max_weight,
                                                       std::uint64_t seed = 0)
{
    require_positive_d(d);
    std::vector<VerificationReport> out;
    RationalSampler sampler(seed);
    for (const auto& m : enumerate_partitions(r, max_weight)) {
        const std::vector<std::pair<std::string, std::string>> params = {
            {"r", std::to_string(r)}, {"d", to_string(d)}, {"partition", m.str()}};
        const SymPoly B = mv_bernoulli(m, r, d);
        const int w = m.weight();

        out.push_back(detail::compare("thm1.1", params, m, SymPoly::constant(r, B.constant_term()),
                                      SymPoly::constant(r, bernoulli_number(w))));

        out.push_back(detail::compare("thm1.2", params, m, affine_substitute(B, 1, 1) - B,
                                      detail::lowering_sum(m, r, d, [&](const Partition& k) {
                                          return jack_Phi(k, r, d);
                                      })));

        out.push_back(detail::compare("thm1.3", params, m, apply_E0(B), detail::lowering_sum(m, r, d, [&](const Partition& k) {
                                          return mv_bernoulli(k, r, d);
                                      })));

        out.push_back(detail::compare("thm1.4", params, m, affine_substitute(B, -1, 1),
                                      (w % 2 ? Rational(-1) : Rational(1)) * B));

        {
            VerificationReport rep{"thm1.5", params, true, std::nullopt};
            for (int t = 0; t < 3; ++t) {
                auto z = sampler.point(r);
                Rational lhs = evaluate(B, z);
                Rational rhs = mv_bernoulli_eval_via_series(z, m, r, d);
                if (lhs != rhs)
                    rep.fail(m.str() + " at z=" + detail::point_str(z), format_rational_plain(lhs),
                             format_rational_plain(rhs));
            }
            out.push_back(std::move(rep));
        }

        {
            SymPoly rhs(r);
            for (const auto& n : subpartitions(m))
                rhs += binomial(m, n, r, d) / (w - n.weight() + 1) * mv_bernoulli(n, r, d);
            out.push_back(detail::compare("thm1.6", params, m, jack_Phi(m, r, d), rhs));
        }

        {
            VerificationReport rep{"thm1.7", params, true, std::nullopt};
            for (int N : {2, 3}) {
                SymPoly lhs(r);
                for (int i = 0; i < N; ++i)
                    lhs += affine_substitute(B, 1, rational(i, N));
                SymPoly rhs = power(Rational(N), 1 - w) * affine_substitute(B, N, 0);
                if (lhs != rhs)
                    rep.fail(m.str() + " with N=" + std::to_string(N), format_plain(lhs), format_plain(rhs));
            }
            out.push_back(std::move(rep));
        }

        {
            SymPoly rhs(r);
            for (const auto& n : subpartitions(m))
                rhs += binomial(m, n, r, d) * mv_bernoulli(n, r, d);
            out.push_back(detail::compare("thm1.8", params, m, affine_substitute(B, 1, 1), rhs));
        }
    }
    return out;
}

/// Identities (1)-(6) for the multiple family. Identities indexed by j are
/// checked for every j; identity (1) for c in {2, -3}.
inline std::vector<VerificationReport> verify_theorem2(int r, const Rational& d, const OmegaTuple& omega,
                                                       int max_weight)
{
    require_positive_d(d);
    if (omega.size() == 0)
        throw std::invalid_argument("verify_theorem2 needs at least one period");
    std::vector<VerificationReport> out;
    const std::size_t n = omega.size();
    for (const auto& m : enumerate_partitions(r, max_weight)) {
        const std::vector<std::pair<std::string, std::string>> base = {{"r", std::to_string(r)},
                                                                       {"d", to_string(d)},
                                                                       {"n", std::to_string(n)},
                                                                       {"omega", omega.str()},
                                                                       {"partition", m.str()}};
        auto with = [&](std::string key, std::string value) {
            auto p = base;
            p.emplace_back(std::move(key), std::move(value));
            return p;
        };
        const int w = m.weight();
        const SymPoly B = multiple_mv_bernoulli(m, omega, r, d);
        const Rational sign = w % 2 ? -1 : 1;

        for (int c : {2, -3}) {
            SymPoly lhs = affine_substitute(multiple_mv_bernoulli(m, omega.scaled(c), r, d), c, 0);
            SymPoly rhs = power(Rational(c), w - static_cast<long>(n)) * B;
            out.push_back(detail::compare("thm2.1", with("c", std::to_string(c)), m, lhs, rhs));
        }

        out.push_back(detail::compare("thm2.2", base, m, affine_substitute(B, -1, omega.sum()), sign * B));

        for (std::size_t j = 0; j < n; ++j) {
            const std::string jstr = std::to_string(j + 1);
            const OmegaTuple hat = omega.hat(j);
            const SymPoly shifted = affine_substitute(B, 1, omega[j]);
            const SymPoly lowered = detail::lowering_sum(m, r, d, [&](const Partition& k) {
                return multiple_mv_bernoulli(k, hat, r, d);
            });
            const SymPoly Bneg = multiple_mv_bernoulli(m, omega.neg(j), r, d);
            out.push_back(detail::compare("thm2.3", with("j", jstr), m, shifted - B, lowered));
            out.push_back(detail::compare("thm2.4", with("j", jstr), m, Bneg, -shifted));
            out.push_back(detail::compare("thm2.5", with("j", jstr), m, B + Bneg, -lowered));
        }

        out.push_back(detail::compare("thm2.6", base, m, apply_E0(B), detail::lowering_sum(m, r, d, [&](const Partition& k) {
                                          return multiple_mv_bernoulli(k, omega, r, d);
                                      })));
    }
    return out;
}

} // namespace jackbern
