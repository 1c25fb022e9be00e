#include "support.hpp"

using namespace jackbern;
using namespace jackbern::testing;

TEST(ClosedForms, SchurExamples)
{
    EXPECT_EQ(schur_det(Partition{2, 1}, 2), poly(2, {{{2, 1}, q(1)}}));
    EXPECT_EQ(schur_det(Partition{1}, 2), poly(2, {{{1}, q(1)}}));
    EXPECT_EQ(schur_det(Partition{2}, 2), jack_P(Partition{2}, 2, q(2)));
}

TEST(ClosedForms, SchurIsJackAtDTwo)
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : enumerate_partitions(r, 6))
            ASSERT_EQ(schur_det(m, r), jack_P(m, r, q(2))) << m.str();
}

TEST(ClosedForms, ShiftedSchur)
{
    EXPECT_EQ(shifted_schur_det(Partition{1}, 2), poly(2, {{{1}, q(1)}, {{}, q(-1)}}));
    EXPECT_EQ(shifted_schur_det(Partition{}, 3), SymPoly::constant(3, q(1)));
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : enumerate_partitions(r, 4))
            ASSERT_EQ(shifted_schur_det(m, r), shifted_jack(m, r, q(2)).poly) << m.str();
}

TEST(ClosedForms, TwoVariableJack)
{
    for (const auto& d : d_grid())
        EXPECT_EQ(jack_r2_closed(Partition{1, 1}, d), poly(2, {{{1, 1}, q(1)}}));
    EXPECT_EQ(jack_r2_closed(Partition{2}, q(1)), poly(2, {{{2}, q(1)}, {{1, 1}, q(2, 3)}}));
    EXPECT_EQ(jack_r2_closed(Partition{2, 1}, q(2)), schur_det(Partition{2, 1}, 2));
    for (const auto& d : d_grid())
        for (const auto& m : enumerate_partitions(2, 6))
            ASSERT_EQ(jack_r2_closed(m, d), jack_P(m, 2, d)) << m.str();
}

TEST(ClosedForms, TwoVariableShiftedJack)
{
    for (const auto& d : d_grid())
        for (const auto& m : enumerate_partitions(2, 4))
            ASSERT_EQ(shifted_jack_r2_closed(m, d), shifted_jack(m, 2, d).poly) << m.str();
}

TEST(ClosedForms, BinomialDeterminant)
{
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : enumerate_partitions(r, 4))
            for (const auto& k : enumerate_partitions(r, 4))
                ASSERT_EQ(binomial_det_d2(m, k, r), binomial(m, k, r, q(2))) << m.str() << k.str();
}

// The hypergeometric display of the two-variable binomial is read with k2 in
// its lower parameter; disagreements are logged for the record, not asserted.
TEST(ClosedForms, BinomialHypergeometricReadingIsLogged)
{
    std::size_t total = 0;
    for (const auto& d : d_grid()) {
        const auto flags = binomial_hypergeometric_flags(d, 4);
        total += flags.size();
        for (const auto& f : flags)
            std::cout << "[note] d=" << to_string(d) << " " << f << '\n';
    }
    std::cout << "[note] hypergeometric binomial disagreements: " << total << '\n';
    SUCCEED();
}

TEST(ClosedForms, KernelTwoVariables)
{
    for (const auto& d : d_grid()) {
        EXPECT_EQ(f00_r2_closed(std::vector<Rational>{q(0), q(0)}, std::vector<Rational>{q(3), q(-1, 2)}, d, 4), q(1));
        // z1 = z2 collapses the confluent factor to 1.
        const std::vector<Rational> u{q(1, 3), q(2)};
        Rational expect = 0;
        const ScalarSeries e = exp_series(u[0] + u[1], 4);
        for (int n = 0; n <= 4; ++n)
            expect += e[n];
        EXPECT_EQ(f00_r2_closed(std::vector<Rational>{q(1), q(1)}, u, d, 4), expect);
    }
    const std::vector<Rational> z{q(1), q(0)}, u{q(1), q(0)};
    EXPECT_EQ(f00_r2_closed(z, u, q(2), 3), f00_truncated(z, 2, q(2), 3).evaluate_at(u));
    RationalSampler s(29);
    for (const auto& d : d_grid())
        for (int t = 0; t < 5; ++t) {
            const auto zz = s.point(2), uu = s.point(2);
            ASSERT_EQ(f00_r2_closed(zz, uu, d, 4), f00_truncated(zz, 2, d, 4).evaluate_at(uu));
        }
}

TEST(ClosedForms, KernelDeterminantAtDTwo)
{
    RationalSampler s(31);
    for (int r = 2; r <= 3; ++r)
        for (int t = 0; t < 3; ++t) {
            std::vector<Rational> z, u;
            do
                z = s.point(r);
            while (detail::vandermonde(z) == 0);
            do
                u = s.point(r);
            while (detail::vandermonde(u) == 0);
            ASSERT_EQ(f00_d2_det(z, u, 4), f00_truncated(z, r, q(2), 4).evaluate_at(u));
        }
}

TEST(ClosedForms, BtildeExamples)
{
    EXPECT_EQ(jacobi_trudi_Btilde(Partition{1}, 2), poly(2, {{{1}, q(1)}, {{}, q(-1)}}));
    EXPECT_EQ(jacobi_trudi_Btilde(Partition{}, 2), SymPoly::constant(2, q(1)));
    EXPECT_NE(jacobi_trudi_Btilde(Partition{1}, 2).constant_term(), bernoulli_number(1));
    EXPECT_EQ(mv_bernoulli(Partition{1}, 2, q(2)), poly(2, {{{1}, q(1, 2)}, {{}, q(-1, 2)}}));
}

TEST(ClosedForms, BtildeGeneratingFunctionIsNormalizedDeterminant)
{
    for (int r = 2; r <= 3; ++r)
        for (const auto& m : enumerate_partitions(r, 3))
            ASSERT_EQ(btilde_generating(m, r, q(2)), jacobi_trudi_Btilde(m, r) / btilde_determinant_factor(m, r))
                << m.str();
}

TEST(ClosedForms, MultipleClassical)
{
    for (int m = 0; m <= 8; ++m)
        EXPECT_EQ(multiple_bernoulli_classical(m, OmegaTuple(std::vector<Rational>{q(1)})), bernoulli_poly_classical(m));
    EXPECT_EQ(multiple_bernoulli_classical(0, OmegaTuple(std::vector<Rational>{q(1), q(2)})), SymPoly::constant(1, q(1, 2)));
    EXPECT_EQ(multiple_bernoulli_classical(1, OmegaTuple(std::vector<Rational>{q(2)})), poly(1, {{{1}, q(1, 2)}, {{}, q(-1, 2)}}));
}

TEST(ClosedForms, Suites)
{
    for (const auto& [r, d] : std::vector<std::pair<int, Rational>>{{1, q(2)}, {2, q(2)}, {2, q(1, 2)}, {3, q(2)}})
        EXPECT_TRUE(reports_pass(verify_closed_forms(r, d, 4))) << "r=" << r << " d=" << to_string(d);
}

TEST(Suites, SpecialValuesAndPieri)
{
    for (const auto& d : d_grid()) {
        EXPECT_TRUE(reports_pass(verify_special_values(2, d, 4)));
        EXPECT_TRUE(reports_pass(verify_pieri(2, d, 4)));
    }
}

TEST(Suites, UnknownNameThrows)
{
    EXPECT_THROW(run_suite("nope", SuiteParams{}), std::invalid_argument);
}
