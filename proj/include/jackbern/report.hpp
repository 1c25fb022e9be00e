#pragma once

/// \file report.hpp
/// Pass/fail records produced by the identity checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jackbern {

struct Counterexample {
    std::string partition;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string identity;
    /// Ordered (name, value) pairs, serialized in this order.
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    /// Record a failure; only the first counterexample is kept.
    void fail(std::string partition, std::string lhs, std::string rhs)
    {
        if (pass)
            counterexample = Counterexample{std::move(partition), std::move(lhs), std::move(rhs)};
        pass = false;
    }
};

inline bool all_pass(const std::vector<VerificationReport>& reports)
{
    for (const auto& r : reports)
        if (!r.pass)
            return false;
    return true;
}

} // namespace jackbern
