#pragma once

/// \file shifted.hpp
/// Shifted (interpolation) Jack polynomials and generalized binomial
/// coefficients.
///
/// P^ip_k is found by an exact interpolation solve. Unknowns are the
/// coefficients of P_mu for every |mu| <= |k| other than k, with the
/// coefficient of P_k pinned to one; the equations are
/// P^ip_k(mu + (d/2) delta) = 0 for the same set of mu. The system is square.
/// Vanishing at heavier non-containing partitions is not imposed and is
/// checked separately by `verify_vanishing`.

#include "jackbern/format.hpp"
#include "jackbern/jack.hpp"
#include "jackbern/linalg.hpp"
#include "jackbern/memo.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/report.hpp"
#include "jackbern/sympoly.hpp"

#include <vector>

namespace jackbern {

struct ShiftedJack {
    Partition k;
    int r;
    Rational d;
    /// Inhomogeneous, degree |k|.
    SymPoly poly;
};

namespace detail {
inline MemoTable<TableKey, SymPoly>& shifted_table()
{
    static MemoTable<TableKey, SymPoly> table;
    return table;
}
} // namespace detail

inline MemoTable<TableKey, SymPoly>& shifted_memo() { return detail::shifted_table(); }

/// The interpolation system for P^ip_k: matrix rows are points, columns are
/// the P_mu unknowns (in `enumerate_partitions` order, k removed), and the
/// right-hand side is -P_k at each point.
struct InterpolationSystem {
    std::vector<Partition> unknowns;
    RationalMatrix matrix;
    std::vector<Rational> rhs;
};

inline InterpolationSystem interpolation_system(const Partition& k, int r, const Rational& d)
{
    require_fits(k, r);
    require_positive_d(d);
    InterpolationSystem sys;
    for (const auto& mu : enumerate_partitions(r, k.weight()))
        if (mu != k)
            sys.unknowns.push_back(mu);
    const SymPoly top = jack_P(k, r, d);
    for (const auto& point_mu : sys.unknowns) {
        auto point = shifted_point(point_mu, r, d);
        std::vector<Rational> row;
        row.reserve(sys.unknowns.size());
        for (const auto& mu : sys.unknowns)
            row.push_back(evaluate(jack_P(mu, r, d), point));
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(-evaluate(top, point));
    }
    return sys;
}

/// P^ip_k(z; d/2).
inline ShiftedJack shifted_jack(const Partition& k, int r, const Rational& d)
{
    require_fits(k, r);
    require_positive_d(d);
    SymPoly poly = detail::shifted_table().get_or_compute(TableKey(r, d, k), [&] {
        InterpolationSystem sys = interpolation_system(k, r, d);
        SymPoly p = jack_P(k, r, d);
        if (!sys.unknowns.empty()) {
            std::vector<Rational> x;
            try {
                x = solve_exact(sys.matrix, sys.rhs);
            } catch (const SingularSystem&) {
                throw SingularSystem("interpolation system for " + k.str() + " is singular");
            }
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] != 0)
                    p += x[i] * jack_P(sys.unknowns[i], r, d);
        }
        return p;
    });
    return ShiftedJack{k, r, d, std::move(poly)};
}

/// Generalized binomial coefficient binom(m, k) =
/// P^ip_k(m + (d/2) delta) / P^ip_k(k + (d/2) delta).
///
/// Always evaluated; the zero for k not inside m comes out of the
/// interpolation polynomial rather than being short-circuited.
inline Rational binomial(const Partition& m, const Partition& k, int r, const Rational& d)
{
    require_fits(m, r);
    require_fits(k, r);
    const ShiftedJack ip = shifted_jack(k, r, d);
    return evaluate(ip.poly, shifted_point(m, r, d)) / psi_normalizer(k, r, d);
}

/// Check P^ip_k(m + (d/2) delta) = 0 for every m with |m| <= |k| + extra_weight
/// that does not contain k.
inline VerificationReport verify_vanishing(const Partition& k, int r, const Rational& d, int extra_weight)
{
    VerificationReport rep;
    rep.identity = "shifted.vanishing";
    rep.params = {{"r", std::to_string(r)},
                  {"d", to_string(d)},
                  {"partition", k.str()},
                  {"max_weight", std::to_string(k.weight() + extra_weight)}};
    const ShiftedJack ip = shifted_jack(k, r, d);
    for (const auto& m : enumerate_partitions(r, k.weight() + extra_weight)) {
        if (contains(m, k))
            continue;
        Rational v = evaluate(ip.poly, shifted_point(m, r, d));
        if (v != 0)
            rep.fail(m.str(), format_rational_plain(v), "0");
    }
    return rep;
}

} // namespace jackbern
