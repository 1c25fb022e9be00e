#pragma once

/// \file partition.hpp
/// Integer partitions and the scalar combinatorics attached to them.

#include "jackbern/rational.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackbern {

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros so that (2,0) and (2) compare equal.
///
/// The total order (`operator<=>`) is the one used for every map and every
/// printed listing: weight ascending, then lexicographically descending. It is
/// a linear extension of the reversed dominance order within each weight.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition has a negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    /// Zero-based access; zero beyond the stored length.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    const std::vector<int>& parts() const { return parts_; }

    std::vector<int> padded(int r) const
    {
        if (length() > r)
            throw std::invalid_argument("partition " + str() + " has more than " + std::to_string(r) + " parts");
        std::vector<int> out(parts_);
        out.resize(static_cast<std::size_t>(r), 0);
        return out;
    }

    bool fits(int r) const { return length() <= r; }

    /// "(2,1)" ; "()" for the empty partition.
    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (a.weight_ != b.weight_)
            return a.weight_ <=> b.weight_;
        // Lexicographically larger comes first.
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// m' with m'_j = #{i : m_i >= j}.
inline Partition conjugate(const Partition& m)
{
    std::vector<int> out(static_cast<std::size_t>(m[0]), 0);
    for (int p : m.parts())
        for (int j = 0; j < p; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// Strict dominance k < m. Only meaningful for equal weights; anything else
/// is reported as misuse.
inline bool dominance_less(const Partition& k, const Partition& m)
{
    if (k.weight() != m.weight())
        throw std::invalid_argument("dominance comparison of " + k.str() + " and " + m.str() +
                                    " with different weights");
    if (k == m)
        return false;
    int len = std::max(k.length(), m.length());
    int sk = 0, sm = 0;
    for (int i = 0; i < len; ++i) {
        sk += k[i];
        sm += m[i];
        if (sk > sm)
            return false;
    }
    return true;
}

/// k ⊂ m as Young diagrams.
inline bool contains(const Partition& m, const Partition& k)
{
    if (k.length() > m.length())
        return false;
    for (int i = 0; i < k.length(); ++i)
        if (k[i] > m[i])
            return false;
    return true;
}

namespace detail {
inline void partitions_of(int n, int max_part, int max_len, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (max_len == 0)
        return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_of(n - p, p, max_len - 1, prefix, out);
        prefix.pop_back();
    }
}
} // namespace detail

/// Partitions of exactly `n` with at most `r` parts, lexicographically descending.
inline std::vector<Partition> partitions_of_weight(int n, int r)
{
    std::vector<Partition> out;
    std::vector<int> prefix;
    if (n >= 0 && r >= 0)
        detail::partitions_of(n, n, r, prefix, out);
    return out;
}

/// All partitions with at most r parts and weight <= max_weight, in the
/// canonical listing order.
inline std::vector<Partition> enumerate_partitions(int r, int max_weight)
{
    if (r < 1)
        throw std::invalid_argument("enumerate_partitions needs r >= 1");
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto level = partitions_of_weight(n, r);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Sub-diagrams k ⊂ m (k fits automatically in m's length).
inline std::vector<Partition> subpartitions(const Partition& m)
{
    std::vector<Partition> out;
    for (const auto& k : enumerate_partitions(std::max(1, m.length()), m.weight()))
        if (contains(m, k))
            out.push_back(k);
    return out;
}

/// m + e_i (i zero-based) if that is still a partition with at most r parts.
inline std::optional<Partition> add_box(const Partition& m, int i, int r)
{
    if (i < 0 || i >= r)
        return std::nullopt;
    if (i > 0 && m[i] + 1 > m[i - 1])
        return std::nullopt;
    std::vector<int> p = m.padded(r);
    ++p[static_cast<std::size_t>(i)];
    return Partition(std::move(p));
}

/// m - e_i (i zero-based) if that is still a partition.
inline std::optional<Partition> remove_box(const Partition& m, int i)
{
    if (i < 0 || m[i] == 0 || m[i] - 1 < m[i + 1])
        return std::nullopt;
    std::vector<int> p = m.padded(std::max(m.length(), i + 1));
    --p[static_cast<std::size_t>(i)];
    return Partition(std::move(p));
}

/// The shifted point m + (d/2) delta with delta = (r-1, ..., 1, 0).
inline std::vector<Rational> shifted_point(const Partition& m, int r, const Rational& d)
{
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(r));
    Rational half = d / 2;
    for (int j = 0; j < r; ++j)
        out.push_back(Rational(m[j]) + half * (r - 1 - j));
    return out;
}

/// Generalized Pochhammer symbol prod_j (a - (d/2)(j-1))_{m_j}.
inline Rational gen_pochhammer(const Rational& a, const Partition& m, const Rational& d)
{
    Rational acc = 1;
    Rational half = d / 2;
    for (int j = 0; j < m.length(); ++j)
        acc *= rising(a - half * j, m[j]);
    return acc;
}

} // namespace jackbern
