#pragma once

/// \file suites.hpp
/// Named groups of identity checks shared by the command-line tool and the
/// test programs. Every suite returns reports in a deterministic order.

#include "jackbern/bernoulli.hpp"
#include "jackbern/closed_forms.hpp"
#include "jackbern/format.hpp"
#include "jackbern/jack.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/report.hpp"
#include "jackbern/series.hpp"
#include "jackbern/shifted.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jackbern {

struct SuiteParams {
    int r = 2;
    Rational d = 2;
    int max_weight = 4;
    /// Empty means the prefixes (1), (1,2), (1,2,3).
    std::vector<Rational> omega;
    std::uint64_t seed = 0;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"thm1", "thm2", "pieri", "special-values", "closed-forms", "all"};
    return names;
}

namespace detail {

using Params = std::vector<std::pair<std::string, std::string>>;

inline Params base_params(int r, const Rational& d) { return {{"r", std::to_string(r)}, {"d", to_string(d)}}; }

inline Params with_partition(Params p, const Partition& m)
{
    p.emplace_back("partition", m.str());
    return p;
}

inline VerificationReport check_scalar(std::string id, Params params, const std::string& where, const Rational& lhs,
                                       const Rational& rhs)
{
    VerificationReport rep{std::move(id), std::move(params), true, std::nullopt};
    if (lhs != rhs)
        rep.fail(where, format_rational_plain(lhs), format_rational_plain(rhs));
    return rep;
}

inline VerificationReport check_poly(std::string id, Params params, const std::string& where, const SymPoly& lhs,
                                     const SymPoly& rhs)
{
    VerificationReport rep{std::move(id), std::move(params), true, std::nullopt};
    if (lhs != rhs)
        rep.fail(where, format_plain(lhs), format_plain(rhs));
    return rep;
}

inline std::vector<Rational> all_ones(int r) { return std::vector<Rational>(static_cast<std::size_t>(r), Rational(1)); }

/// Sample a point whose coordinates are pairwise distinct.
inline std::vector<Rational> distinct_point(RationalSampler& s, int r)
{
    for (;;) {
        auto p = s.point(r);
        if (vandermonde(p) != 0)
            return p;
    }
}

inline std::vector<OmegaTuple> omega_tuples(const std::vector<Rational>& omega)
{
    if (!omega.empty())
        return {OmegaTuple(omega)};
    return {OmegaTuple({Rational(1)}), OmegaTuple({Rational(1), Rational(2)}),
            OmegaTuple({Rational(1), Rational(2), Rational(3)})};
}

inline void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more)
{
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

} // namespace detail

/// Defining properties of P and P^ip, special values, and the normalization
/// dictionary.
inline std::vector<VerificationReport> verify_special_values(int r, const Rational& d, int max_weight)
{
    require_positive_d(d);
    std::vector<VerificationReport> out;
    const auto ones = detail::all_ones(r);
    for (const auto& m : enumerate_partitions(r, max_weight)) {
        const auto params = detail::with_partition(detail::base_params(r, d), m);
        const SymPoly P = jack_P(m, r, d);

        out.push_back(detail::check_poly("jack.eigen", params, m.str(), apply_D2(P, d), jack_eigenvalue(m, r, d) * P));

        {
            VerificationReport rep{"jack.triangular", params, true, std::nullopt};
            if (P.coeff(m) != 1)
                rep.fail(m.str(), "leading coefficient " + format_rational_plain(P.coeff(m)), "1");
            for (const auto& [k, c] : P.terms())
                if (k.weight() != m.weight() || (k != m && !dominance_less(k, m)))
                    rep.fail(m.str(), "term " + k.str(), "dominated by " + m.str());
            out.push_back(std::move(rep));
        }

        const Rational at_one = evaluate(P, ones);
        out.push_back(detail::check_scalar("special.one", params, m.str(), at_one, jack_special_value_one(m, r, d)));
        out.push_back(
            detail::check_scalar("special.one_pairwise", params, m.str(), at_one, jack_special_value_one_pairwise(m, r, d)));

        const Rational at_m = evaluate(shifted_jack(m, r, d).poly, shifted_point(m, r, d));
        out.push_back(detail::check_scalar("special.shifted", params, m.str(), at_m, psi_normalizer(m, r, d)));
        out.push_back(detail::check_scalar("special.shifted_cells", params, m.str(), at_m, psi_normalizer_cells(m, d)));

        out.push_back(detail::check_poly("shifted.top_degree", params, m.str(),
                                         shifted_jack(m, r, d).poly.homogeneous_component(m.weight()), P));

        const NormalizationFactors f = normalization_factors(m, r, d);
        if (f.n_over_r_pochhammer != 0)
            out.push_back(detail::check_poly("normalization.psi_phi", params, m.str(), jack_Psi(m, r, d),
                                             f.d_m / f.n_over_r_pochhammer * jack_Phi(m, r, d)));
        out.push_back(detail::check_scalar("normalization.ratio", params, m.str(),
                                           f.d_m / f.n_over_r_pochhammer,
                                           jack_special_value_one(m, r, d) / psi_normalizer(m, r, d)));
        if (m.weight() <= r) {
            // J_m has coefficient |m|! on m_{(1^|m|)}.
            Partition ones_partition(std::vector<int>(static_cast<std::size_t>(m.weight()), 1));
            out.push_back(detail::check_scalar("normalization.stanley", params, m.str(),
                                               f.stanley_factor * P.coeff(ones_partition),
                                               Rational(factorial(m.weight()))));
        }

        out.push_back(verify_vanishing(m, r, d, 2));

        {
            VerificationReport rep{"binomial.support", params, true, std::nullopt};
            for (const auto& k : enumerate_partitions(r, m.weight())) {
                const bool zero = binomial(m, k, r, d) == 0;
                if (zero == contains(m, k))
                    rep.fail(m.str() + " over " + k.str(), zero ? "0" : "nonzero", contains(m, k) ? "nonzero" : "0");
            }
            out.push_back(std::move(rep));
        }
    }
    return out;
}

/// Pieri-type expansions and the series identities of the 0F0 kernel.
inline std::vector<VerificationReport> verify_pieri(int r, const Rational& d, int max_weight, std::uint64_t seed = 0)
{
    require_positive_d(d);
    std::vector<VerificationReport> out;
    const SymPoly abs_u = SymPoly::monomial(r, Partition{1});

    for (const auto& m : enumerate_partitions(r, max_weight)) {
        const auto params = detail::with_partition(detail::base_params(r, d), m);
        const SymPoly psi = jack_Psi(m, r, d);

        {
            SymPoly rhs(r);
            VerificationReport rep{"pieri.box_coefficient", params, true, std::nullopt};
            for (int i = 0; i < r; ++i) {
                auto up = add_box(m, i, r);
                if (!up)
                    continue;
                const Rational c = pieri_coefficient(m, i, r, d);
                const Rational b = binomial(*up, m, r, d);
                if (c != b)
                    rep.fail(up->str() + " over " + m.str(), format_rational_plain(c), format_rational_plain(b));
                rhs += c * jack_Psi(*up, r, d);
            }
            out.push_back(std::move(rep));
            out.push_back(detail::check_poly("pieri.one_box", params, m.str(), multiply(abs_u, psi), rhs));
        }

        if (m.weight() <= 3) {
            VerificationReport rep{"pieri.power", params, true, std::nullopt};
            SymPoly power_times = psi;
            for (int N = 1; N <= 3; ++N) {
                power_times = multiply(abs_u, power_times);
                SymPoly rhs(r);
                for (const auto& n : partitions_of_weight(m.weight() + N, r))
                    rhs += binomial(n, m, r, d) * jack_Psi(n, r, d);
                const SymPoly lhs = power_times / Rational(factorial(N));
                if (lhs != rhs)
                    rep.fail(m.str() + " with N=" + std::to_string(N), format_plain(lhs), format_plain(rhs));
            }
            out.push_back(std::move(rep));
        }

        {
            const int top = m.weight() + 3;
            GradedSeries lhs = multiply_scalar(GradedSeries::from_polynomial(psi, top), exp_series(1, top));
            GradedSeries rhs(r, top);
            for (const auto& n : enumerate_partitions(r, top))
                if (contains(n, m))
                    rhs.add_to_component(n.weight(), binomial(n, m, r, d) * jack_Psi(n, r, d));
            VerificationReport rep{"pieri.exponential", params, true, std::nullopt};
            for (int n = 0; n <= top; ++n)
                if (lhs.component(n) != rhs.component(n)) {
                    rep.fail(m.str() + " at degree " + std::to_string(n), format_plain(lhs.component(n)),
                             format_plain(rhs.component(n)));
                    break;
                }
            out.push_back(std::move(rep));
        }
    }

    for (int N = 0; N <= max_weight; ++N) {
        auto params = detail::base_params(r, d);
        params.emplace_back("N", std::to_string(N));
        SymPoly rhs(r);
        for (const auto& m : partitions_of_weight(N, r))
            rhs += jack_Psi(m, r, d);
        out.push_back(detail::check_poly("series.power_sum", params, "N=" + std::to_string(N), power_sum_one_power(r, N),
                                         Rational(factorial(N)) * rhs));
    }

    // Kernel identities at seeded rational points.
    RationalSampler sampler(seed);
    for (int t = 0; t < 3; ++t) {
        const auto z = sampler.point(r);
        auto params = detail::base_params(r, d);
        params.emplace_back("z", detail::point_str(z));
        params.emplace_back("max_degree", std::to_string(max_weight));
        const GradedSeries f = f00_truncated(z, r, d, max_weight);

        std::vector<Rational> z1 = z;
        for (auto& x : z1)
            x += 1;
        const GradedSeries shifted = f00_truncated(z1, r, d, max_weight);
        const GradedSeries rhs = multiply_scalar(f, exp_series(1, max_weight));
        VerificationReport index{"series.index_law", params, true, std::nullopt};
        for (int n = 0; n <= max_weight; ++n)
            if (shifted.component(n) != rhs.component(n)) {
                index.fail("degree " + std::to_string(n), format_plain(shifted.component(n)),
                           format_plain(rhs.component(n)));
                break;
            }
        out.push_back(std::move(index));

        // E_0 in z: sum_m (E_0 Psi_m)(z) Phi_m(u) = |u| 0F0(z, u).
        GradedSeries e0(r, max_weight);
        for (const auto& m : enumerate_partitions(r, max_weight)) {
            const Rational c = evaluate(apply_E0(jack_Psi(m, r, d)), z);
            if (c != 0)
                e0.add_to_component(m.weight(), c * jack_Phi(m, r, d));
        }
        ScalarSeries t_series(max_weight);
        if (max_weight >= 1)
            t_series[1] = 1;
        const GradedSeries times_t = multiply_scalar(f, t_series);
        VerificationReport e0rep{"series.euler_operator", params, true, std::nullopt};
        for (int n = 0; n <= max_weight; ++n)
            if (e0.component(n) != times_t.component(n)) {
                e0rep.fail("degree " + std::to_string(n), format_plain(e0.component(n)),
                           format_plain(times_t.component(n)));
                break;
            }
        out.push_back(std::move(e0rep));

        // Read in the Psi basis, the kernel has coefficient Phi_m(z) at Psi_m(u).
        const auto coeffs = psi_coefficients(f, d);
        VerificationReport read{"series.psi_reading", params, true, std::nullopt};
        for (const auto& m : enumerate_partitions(r, max_weight)) {
            auto it = coeffs.find(m);
            const Rational got = it == coeffs.end() ? Rational(0) : it->second;
            const Rational want = evaluate(jack_Phi(m, r, d), z);
            if (got != want) {
                read.fail(m.str(), format_rational_plain(got), format_rational_plain(want));
                break;
            }
        }
        out.push_back(std::move(read));
    }

    {
        VerificationReport rep{"series.geometric_sum", detail::base_params(r, d), true, std::nullopt};
        const int top = std::max(max_weight, 1);
        const ScalarSeries num = exp_series(1, top + 1) - exp_series(0, top + 1);
        for (int N : {2, 3, 4}) {
            // (e^t - 1)/(e^{t/N} - 1) with both sides divided by t.
            ScalarSeries a(top), b(top);
            for (int k = 0; k <= top; ++k) {
                a[k] = num[k + 1];
                b[k] = (exp_series(rational(1, N), top + 1) - exp_series(0, top + 1))[k + 1];
            }
            const ScalarSeries lhs = exp_geometric_sum(N, top);
            const ScalarSeries rhs = a * b.inverse();
            if (lhs != rhs)
                rep.fail("N=" + std::to_string(N), "geometric sum", "quotient");
        }
        out.push_back(std::move(rep));
    }
    return out;
}

/// Cross-checks against closed forms; only those applicable to (r, d) run.
inline std::vector<VerificationReport> verify_closed_forms(int r, const Rational& d, int max_weight,
                                                           std::uint64_t seed = 0)
{
    require_positive_d(d);
    std::vector<VerificationReport> out;
    RationalSampler sampler(seed);

    if (d == 2) {
        for (const auto& m : enumerate_partitions(r, max_weight)) {
            const auto params = detail::with_partition(detail::base_params(r, d), m);
            out.push_back(detail::check_poly("closed.schur", params, m.str(), jack_P(m, r, 2), schur_det(m, r)));
            if (m.weight() <= 4) {
                out.push_back(detail::check_poly("closed.shifted_schur", params, m.str(), shifted_jack(m, r, 2).poly,
                                                 shifted_schur_det(m, r)));
                VerificationReport rep{"closed.binomial_det", params, true, std::nullopt};
                for (const auto& k : enumerate_partitions(r, 4)) {
                    const Rational a = binomial(m, k, r, 2), b = binomial_det_d2(m, k, r);
                    if (a != b)
                        rep.fail(m.str() + " over " + k.str(), format_rational_plain(a), format_rational_plain(b));
                }
                out.push_back(std::move(rep));
            }
        }
        const int degree = std::min(max_weight, 4);
        for (int t = 0; t < 5; ++t) {
            const auto z = detail::distinct_point(sampler, r), u = detail::distinct_point(sampler, r);
            auto params = detail::base_params(r, d);
            params.emplace_back("z", detail::point_str(z));
            params.emplace_back("u", detail::point_str(u));
            params.emplace_back("max_degree", std::to_string(degree));
            out.push_back(detail::check_scalar("closed.kernel_det", params, "point",
                                               f00_truncated(z, r, 2, degree).evaluate_at(u), f00_d2_det(z, u, degree)));
        }
    }

    if (r == 2) {
        for (const auto& m : enumerate_partitions(2, max_weight)) {
            const auto params = detail::with_partition(detail::base_params(r, d), m);
            out.push_back(detail::check_poly("closed.jack_2f1", params, m.str(), jack_P(m, 2, d), jack_r2_closed(m, d)));
            if (m.weight() <= 4)
                out.push_back(detail::check_poly("closed.shifted_jack_3f2", params, m.str(), shifted_jack(m, 2, d).poly,
                                                 shifted_jack_r2_closed(m, d)));
        }
        const int degree = std::min(max_weight, 4);
        for (int t = 0; t < 5; ++t) {
            const auto z = sampler.point(2), u = sampler.point(2);
            auto params = detail::base_params(r, d);
            params.emplace_back("z", detail::point_str(z));
            params.emplace_back("u", detail::point_str(u));
            params.emplace_back("max_degree", std::to_string(degree));
            out.push_back(detail::check_scalar("closed.kernel_1f1", params, "point",
                                               f00_truncated(z, 2, d, degree).evaluate_at(u),
                                               f00_r2_closed(z, u, d, degree)));
        }
    }

    if (d == 2 && r >= 2) {
        // Determinant of Bernoulli polynomials against the product-type
        // generating function, and the two families being distinct.
        bool differs = false;
        for (const auto& m : enumerate_partitions(r, std::min(max_weight, 3))) {
            const auto params = detail::with_partition(detail::base_params(r, d), m);
            const SymPoly gen = btilde_generating(m, r, 2);
            out.push_back(detail::check_poly("closed.btilde_determinant", params, m.str(),
                                             jacobi_trudi_Btilde(m, r) / btilde_determinant_factor(m, r), gen));
            differs = differs || gen != mv_bernoulli(m, r, 2);
        }
        if (max_weight >= 2) {
            VerificationReport rep{"closed.btilde_differs", detail::base_params(r, d), true, std::nullopt};
            if (!differs)
                rep.fail("weight <= " + std::to_string(std::min(max_weight, 3)), "all equal", "some differ");
            out.push_back(std::move(rep));
        }
    }

    if (r == 1) {
        for (int m = 0; m <= std::max(max_weight, 8); ++m) {
            const Partition p{m};
            out.push_back(detail::check_poly("closed.classical_reduction", detail::with_partition(detail::base_params(1, d), p),
                                             p.str(), mv_bernoulli(p, 1, d), bernoulli_poly_classical(m)));
        }
        const std::vector<Rational> periods{1, 2, 3};
        for (std::size_t n = 1; n <= 3; ++n) {
            const OmegaTuple omega(std::vector<Rational>(periods.begin(), periods.begin() + static_cast<long>(n)));
            for (int m = 0; m <= std::min(max_weight, 5); ++m) {
                auto params = detail::base_params(1, d);
                params.emplace_back("n", std::to_string(n));
                params.emplace_back("omega", omega.str());
                params.emplace_back("m", std::to_string(m));
                const std::string where = "m=" + std::to_string(m);
                const SymPoly B = multiple_bernoulli_classical(m, omega);
                const Rational sign = m % 2 ? -1 : 1;
                auto lower = [&](const OmegaTuple& w) {
                    return m == 0 ? SymPoly(1) : Rational(m) * multiple_bernoulli_classical(m - 1, w);
                };

                out.push_back(detail::check_poly("multiple.reduction", params, where,
                                                 multiple_mv_bernoulli(Partition{m}, omega, 1, d), B));
                for (int c : {2, -3})
                    out.push_back(detail::check_poly("multiple.scaling", params, where + " c=" + std::to_string(c),
                                                     affine_substitute(multiple_bernoulli_classical(m, omega.scaled(c)), c, 0),
                                                     power(Rational(c), m - static_cast<long>(n)) * B));
                out.push_back(detail::check_poly("multiple.symmetry", params, where, affine_substitute(B, -1, omega.sum()),
                                                 sign * B));
                for (std::size_t j = 0; j < n; ++j) {
                    const std::string wj = where + " j=" + std::to_string(j + 1);
                    const SymPoly shifted = affine_substitute(B, 1, omega[j]);
                    const SymPoly neg = multiple_bernoulli_classical(m, omega.neg(j));
                    out.push_back(detail::check_poly("multiple.difference", params, wj, shifted - B, lower(omega.hat(j))));
                    out.push_back(detail::check_poly("multiple.negation", params, wj, neg, -shifted));
                    out.push_back(detail::check_poly("multiple.sum", params, wj, B + neg, -lower(omega.hat(j))));
                }
                out.push_back(detail::check_poly("multiple.derivative", params, where, apply_E0(B), lower(omega)));
            }
        }
    }
    return out;
}

/// Disagreements between the interpolation binomial and the r = 2
/// hypergeometric display (read with k2 in its lower parameter). Reported,
/// never asserted.
inline std::vector<std::string> binomial_hypergeometric_flags(const Rational& d, int max_weight)
{
    std::vector<std::string> flags;
    for (const auto& m : enumerate_partitions(2, max_weight))
        for (const auto& k : enumerate_partitions(2, max_weight)) {
            const Rational a = binomial(m, k, 2, d), b = binomial_r2_hypergeometric(m, k, d);
            if (a != b)
                flags.push_back("binom(" + m.str() + ", " + k.str() + "): " + to_string(a) + " vs " + to_string(b));
        }
    return flags;
}

inline std::vector<VerificationReport> run_suite(const std::string& name, const SuiteParams& p)
{
    std::vector<VerificationReport> out;
    const bool all = name == "all";
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    if (all || name == "special-values")
        detail::append(out, verify_special_values(p.r, p.d, p.max_weight));
    if (all || name == "pieri")
        detail::append(out, verify_pieri(p.r, p.d, p.max_weight, p.seed));
    if (all || name == "thm1")
        detail::append(out, verify_theorem1(p.r, p.d, p.max_weight, p.seed));
    if (all || name == "thm2")
        for (const auto& omega : detail::omega_tuples(p.omega))
            detail::append(out, verify_theorem2(p.r, p.d, omega, std::min(p.max_weight, all ? 3 : p.max_weight)));
    if (all || name == "closed-forms")
        detail::append(out, verify_closed_forms(p.r, p.d, p.max_weight, p.seed));
    return out;
}

} // namespace jackbern
