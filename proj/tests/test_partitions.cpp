#include "support.hpp"

using namespace jackbern;
using namespace jackbern::testing;

TEST(Rational, ParsesAndPrintsLowestTerms)
{
    EXPECT_EQ(parse_rational("6/4"), q(3, 2));
    EXPECT_EQ(parse_rational("-1/30"), q(-1, 30));
    EXPECT_EQ(parse_rational("−1/30"), q(-1, 30));
    EXPECT_EQ(to_string(q(4, -8)), "-1/2");
    EXPECT_EQ(to_string(q(7)), "7");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, FactorialsAndBinomials)
{
    EXPECT_EQ(rising(q(2), 3), q(24));
    EXPECT_EQ(falling(q(5), 2), q(20));
    EXPECT_EQ(rising(q(7), 0), q(1));
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(binomial_int(5, 2), 10);
    EXPECT_EQ(power(q(-2, 3), 3), q(-8, 27));
}

TEST(Partition, TrailingZerosAreCanonical)
{
    EXPECT_EQ((Partition{2, 1, 0, 0}), (Partition{2, 1}));
    EXPECT_EQ((Partition{0}), Partition{});
    EXPECT_EQ((Partition{3, 1}).weight(), 4);
    EXPECT_THROW((Partition{1, 2}), std::invalid_argument);
    EXPECT_THROW((Partition{-1}), std::invalid_argument);
    EXPECT_EQ((Partition{2}).padded(3), (std::vector<int>{2, 0, 0}));
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(conjugate(Partition{0}), Partition{});
    EXPECT_EQ(conjugate(Partition{2, 2, 1}), (Partition{3, 2}));
    for (const auto& m : enumerate_partitions(4, 7))
        EXPECT_EQ(conjugate(conjugate(m)), m);
}

TEST(Partition, DominanceIsStrict)
{
    EXPECT_TRUE(dominance_less(Partition{1, 1}, Partition{2, 0}));
    EXPECT_FALSE(dominance_less(Partition{2, 0}, Partition{2, 0}));
    EXPECT_TRUE(dominance_less(Partition{2, 1, 1}, Partition{3, 1, 0}));
    EXPECT_FALSE(dominance_less(Partition{3, 3}, Partition{4, 1, 1}));
    EXPECT_FALSE(dominance_less(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST(Partition, Containment)
{
    EXPECT_TRUE(contains(Partition{2, 1}, Partition{1, 1}));
    EXPECT_FALSE(contains(Partition{2, 0}, Partition{1, 1}));
    EXPECT_TRUE(contains(Partition{3, 2, 1}, Partition{3, 2, 1}));
}

TEST(Partition, EnumerationOrder)
{
    EXPECT_EQ(enumerate_partitions(2, 2), (std::vector<Partition>{{}, {1}, {2}, {1, 1}}));
    EXPECT_EQ(enumerate_partitions(1, 3), (std::vector<Partition>{{}, {1}, {2}, {3}}));
    const auto r3 = enumerate_partitions(3, 3);
    ASSERT_EQ(r3.size(), 7u);
    EXPECT_EQ(r3.back(), (Partition{1, 1, 1}));
    // Counts of partitions of n into at most 4 parts.
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 6, 9};
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(partitions_of_weight(n, 4).size(), counts[static_cast<std::size_t>(n)]);
}

TEST(Partition, BoxMoves)
{
    EXPECT_EQ(add_box(Partition{1}, 1, 2), (Partition{1, 1}));
    EXPECT_FALSE(add_box(Partition{1}, 1, 1));
    EXPECT_FALSE(add_box(Partition{1, 1}, 1, 2));
    EXPECT_EQ(remove_box(Partition{2, 1}, 0), (Partition{1, 1}));
    EXPECT_FALSE(remove_box(Partition{1, 1}, 0));
    EXPECT_EQ(subpartitions(Partition{2, 1}).size(), 5u);
}

TEST(Partition, GeneralizedPochhammer)
{
    EXPECT_EQ(gen_pochhammer(q(2), Partition{2, 1}, q(2)), q(6));
    EXPECT_EQ(gen_pochhammer(q(17, 3), Partition{}, q(5)), q(1));
    EXPECT_EQ(gen_pochhammer(q(1), Partition{1, 1}, q(2)), q(0));
    // One row is the ordinary rising factorial.
    EXPECT_EQ(gen_pochhammer(q(3, 2), Partition{3}, q(7)), rising(q(3, 2), 3));
}

TEST(Partition, ShiftedPoint)
{
    EXPECT_EQ(shifted_point(Partition{2}, 3, q(2)), (std::vector<Rational>{q(4), q(1), q(0)}));
}
