#pragma once

/// \file memo.hpp
/// Thread-safe memo tables for the polynomial families.

#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

namespace jackbern {

/// (r, d, partition). d is kept in its canonical string form so the key is
/// cheap to order and to serialize.
struct TableKey {
    int r;
    std::string d;
    Partition m;

    TableKey(int r_, const Rational& d_, Partition m_) : r(r_), d(to_string(d_)), m(std::move(m_)) {}

    friend auto operator<=>(const TableKey& a, const TableKey& b)
    {
        return std::tie(a.r, a.d, a.m) <=> std::tie(b.r, b.d, b.m);
    }
    friend bool operator==(const TableKey&, const TableKey&) = default;
};

/// Readers share the lock; a missing entry is computed outside the lock and
/// inserted afterwards. Two threads may compute the same entry; the first
/// insert wins and both results are identical.
template <class Key, class Value>
class MemoTable {
public:
    std::optional<Value> find(const Key& key) const
    {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    Value insert(const Key& key, Value value)
    {
        std::unique_lock lock(mu_);
        auto [it, inserted] = map_.try_emplace(key, std::move(value));
        return it->second;
    }

    template <class Compute>
    Value get_or_compute(const Key& key, Compute&& compute)
    {
        if (auto hit = find(key))
            return *hit;
        return insert(key, compute());
    }

    std::size_t size() const
    {
        std::shared_lock lock(mu_);
        return map_.size();
    }

    void clear()
    {
        std::unique_lock lock(mu_);
        map_.clear();
    }

    std::vector<std::pair<Key, Value>> snapshot() const
    {
        std::shared_lock lock(mu_);
        return {map_.begin(), map_.end()};
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, Value> map_;
};

} // namespace jackbern
