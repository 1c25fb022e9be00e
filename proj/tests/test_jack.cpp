#include "support.hpp"

using namespace jackbern;
using namespace jackbern::testing;

TEST(Jack, SmallExamples)
{
    for (const auto& d : d_grid())
        EXPECT_EQ(jack_P(Partition{1, 1}, 2, d), poly(2, {{{1, 1}, q(1)}}));
    EXPECT_EQ(jack_P(Partition{2}, 2, q(1)), poly(2, {{{2}, q(1)}, {{1, 1}, q(2, 3)}}));
    EXPECT_EQ(jack_P(Partition{2}, 2, q(2)), poly(2, {{{2}, q(1)}, {{1, 1}, q(1)}}));
    EXPECT_EQ(jack_P(Partition{}, 3, q(2)), SymPoly::constant(3, q(1)));
}

TEST(Jack, RejectsBadParameters)
{
    EXPECT_THROW(jack_P(Partition{1}, 2, q(0)), std::domain_error);
    EXPECT_THROW(jack_P(Partition{1}, 2, q(-1)), std::domain_error);
    EXPECT_THROW(jack_P(Partition{1, 1, 1}, 2, q(1)), std::invalid_argument);
}

TEST(Jack, Eigenvalue)
{
    for (const auto& d : d_grid()) {
        EXPECT_EQ(jack_eigenvalue(Partition{1}, 2, d), d);
        EXPECT_EQ(jack_eigenvalue(Partition{2}, 2, d), 2 + 2 * d);
        EXPECT_EQ(jack_eigenvalue(Partition{}, 3, d), q(0));
    }
}

// Eigen-equation and unitriangularity over the full grid.
TEST(Jack, EigenfunctionAndTriangular)
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_grid())
            for (const auto& m : enumerate_partitions(r, 6)) {
                const SymPoly p = jack_P(m, r, d);
                ASSERT_EQ(apply_D2(p, d), jack_eigenvalue(m, r, d) * p) << m.str() << " r=" << r;
                ASSERT_EQ(p.coeff(m), q(1));
                for (const auto& [k, c] : p.terms())
                    ASSERT_TRUE(k == m || dominance_less(k, m)) << k.str() << " in P" << m.str();
            }
}

TEST(Jack, SpecialValueAtOne)
{
    EXPECT_EQ(jack_special_value_one(Partition{1}, 2, q(2)), q(2));
    EXPECT_EQ(jack_special_value_one(Partition{2}, 2, q(1)), q(8, 3));
    EXPECT_EQ(jack_special_value_one(Partition{}, 3, q(1, 2)), q(1));
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_grid())
            for (const auto& m : enumerate_partitions(r, 6)) {
                const std::vector<Rational> ones(static_cast<std::size_t>(r), q(1));
                const Rational direct = evaluate(jack_P(m, r, d), ones);
                ASSERT_EQ(jack_special_value_one(m, r, d), direct) << m.str();
                ASSERT_EQ(jack_special_value_one_pairwise(m, r, d), direct) << m.str();
            }
}

TEST(Jack, PsiNormalizer)
{
    EXPECT_EQ(psi_normalizer(Partition{3}, 1, q(2)), q(6));
    EXPECT_EQ(psi_normalizer(Partition{}, 2, q(3)), q(1));
    // Interpolation-solve oracle.
    const auto k = Partition{1, 1};
    const auto point = shifted_point(k, 2, q(2));
    EXPECT_EQ(psi_normalizer(k, 2, q(2)), evaluate(shifted_jack(k, 2, q(2)).poly, point));
    for (const auto& d : d_grid())
        for (const auto& m : enumerate_partitions(3, 5))
            EXPECT_EQ(psi_normalizer(m, 3, d), psi_normalizer_cells(m, d)) << m.str();
}

TEST(Jack, PhiAndPsi)
{
    EXPECT_EQ(jack_Phi(Partition{1}, 2, q(2)), poly(2, {{{1}, q(1, 2)}}));
    for (int m = 0; m <= 5; ++m)
        EXPECT_EQ(jack_Psi(Partition{m}, 1, q(3)), poly(1, {{{m}, Rational(1) / Rational(factorial(m))}}));
    EXPECT_EQ(jack_Phi(Partition{}, 2, q(1)), SymPoly::constant(2, q(1)));
    EXPECT_EQ(jack_Psi(Partition{}, 2, q(1)), SymPoly::constant(2, q(1)));
}

TEST(Jack, PieriCoefficient)
{
    for (const auto& d : d_grid()) {
        EXPECT_EQ(pieri_coefficient(Partition{}, 0, 2, d), q(1));
        EXPECT_EQ(pieri_coefficient(Partition{1}, 0, 2, d), q(2));
    }
    for (int m = 0; m <= 6; ++m)
        EXPECT_EQ(pieri_coefficient(Partition{m}, 0, 1, q(2)), q(m + 1));
    EXPECT_THROW(pieri_coefficient(Partition{1, 1}, 1, 2, q(1)), std::invalid_argument);
}

// |u| Psi_m = sum_i pieri(m, i) Psi_{m + e_i}
TEST(Jack, PieriRuleHolds)
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_grid())
            for (const auto& m : enumerate_partitions(r, 4)) {
                SymPoly rhs(r);
                for (int i = 0; i < r; ++i)
                    if (auto up = add_box(m, i, r))
                        rhs += pieri_coefficient(m, i, r, d) * jack_Psi(*up, r, d);
                ASSERT_EQ(multiply(SymPoly::monomial(r, Partition{1}), jack_Psi(m, r, d)), rhs) << m.str();
            }
}

TEST(Jack, BasisConversion)
{
    const auto e = monomial_to_psi(jack_Psi(Partition{2}, 2, q(1)), q(1));
    EXPECT_EQ(e.coeffs, (std::map<Partition, Rational>{{Partition{2}, q(1)}}));
    for (const auto& d : d_grid()) {
        const auto sq = monomial_to_psi(power_sum_one_power(2, 2), d);
        EXPECT_EQ(sq.coeffs, (std::map<Partition, Rational>{{Partition{2}, q(2)}, {Partition{1, 1}, q(2)}}));
        const auto lin = monomial_to_psi(SymPoly::monomial(2, Partition{1}), d);
        EXPECT_EQ(lin.coeffs, (std::map<Partition, Rational>{{Partition{1}, psi_normalizer(Partition{1}, 2, d)}}));
    }
    const SymPoly f = poly(3, {{{3}, q(2)}, {{2, 1}, q(-1, 3)}, {{1, 1}, q(5)}, {{}, q(1)}});
    EXPECT_EQ(expansion_to_monomial(monomial_to_P(f, q(1, 2))), f);
    EXPECT_EQ(expansion_to_monomial(monomial_to_psi(f, q(3))), f);
}

TEST(Jack, PowerSumInPsiBasis)
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_grid())
            for (int N = 0; N <= 5; ++N) {
                const auto e = monomial_to_psi(power_sum_one_power(r, N), d);
                const auto parts = partitions_of_weight(N, r);
                ASSERT_EQ(e.coeffs.size(), parts.size());
                for (const auto& m : parts)
                    ASSERT_EQ(e.coeff(m), Rational(factorial(N))) << m.str();
            }
}

TEST(Jack, NormalizationDictionary)
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_grid())
            for (const auto& m : enumerate_partitions(r, 6)) {
                const auto f = normalization_factors(m, r, d);
                if (f.n_over_r_pochhammer == 0)
                    continue;
                ASSERT_EQ(jack_Psi(m, r, d), f.d_m / f.n_over_r_pochhammer * jack_Phi(m, r, d)) << m.str();
            }
    const auto f0 = normalization_factors(Partition{}, 2, q(1));
    EXPECT_EQ(f0.d_m, q(1));
    EXPECT_EQ(f0.n_over_r_pochhammer, q(1));
    EXPECT_EQ(f0.stanley_factor, q(1));
    EXPECT_EQ(f0.kaneko_factor, q(1));
    for (int m = 0; m <= 5; ++m) {
        const auto f = normalization_factors(Partition{m}, 1, q(2));
        EXPECT_EQ(f.d_m, q(1));
        EXPECT_EQ(f.n_over_r_pochhammer, Rational(factorial(m)));
    }
    const auto f1 = normalization_factors(Partition{1}, 2, q(2));
    EXPECT_EQ(f1.d_m / f1.n_over_r_pochhammer,
              jack_special_value_one(Partition{1}, 2, q(2)) / psi_normalizer(Partition{1}, 2, q(2)));
}

TEST(Jack, MemoIsConsistent)
{
    const SymPoly a = jack_P(Partition{3, 1}, 3, q(3, 2));
    jack_memo().clear();
    EXPECT_EQ(jack_P(Partition{3, 1}, 3, q(3, 2)), a);
    EXPECT_GT(jack_memo().size(), 0u);
}
