#pragma once

#include "jackbern/jackbern.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <utility>

namespace jackbern::testing {

using Term = std::pair<Partition, Rational>;

/// A symmetric polynomial from (partition, coefficient) pairs.
inline SymPoly poly(int r, std::initializer_list<Term> terms)
{
    SymPoly out(r);
    for (const auto& [k, c] : terms)
        out.add_term(k, c);
    return out;
}

inline Rational q(long num, long den = 1) { return rational(num, den); }

/// The parameter values exercised by most property tests.
inline std::vector<Rational> d_grid() { return {q(1, 2), q(1), q(2), q(3)}; }

inline ::testing::AssertionResult reports_pass(const std::vector<VerificationReport>& reports)
{
    for (const auto& rep : reports)
        if (!rep.pass)
            return ::testing::AssertionFailure()
                   << rep.identity << " failed at " << rep.counterexample->partition << ": " << rep.counterexample->lhs
                   << " != " << rep.counterexample->rhs;
    return ::testing::AssertionSuccess() << reports.size() << " reports";
}

} // namespace jackbern::testing
