#pragma once

/// \file cache.hpp
/// On-disk store of computed Jack and shifted Jack polynomials.
///
/// One file per (r, d, family, partition). A file is trusted only when its
/// schema version matches and the FNV-1a hash of its payload checks out;
/// anything else is treated as absent and recomputed.

#include "jackbern/jack.hpp"
#include "jackbern/json.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/shifted.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace jackbern {

inline constexpr int kCacheSchemaVersion = 1;

struct CacheIOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "P" for jack_P, "Pip" for shifted_jack.
struct CacheKey {
    int r;
    Rational d;
    std::string family;
    Partition m;

    friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
    int schema_version = kCacheSchemaVersion;
    CacheKey key;
    Json payload;
    std::string hash;
};

/// 64-bit FNV-1a as 16 lowercase hex digits.
inline std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

inline CacheEntry make_cache_entry(const CacheKey& key, const SymPoly& poly)
{
    CacheEntry e{kCacheSchemaVersion, key, sympoly_to_json(poly, key.family), {}};
    e.hash = fnv1a_hex(e.payload.dump());
    return e;
}

inline Json cache_entry_to_json(const CacheEntry& e)
{
    Json j;
    j["schema_version"] = e.schema_version;
    j["key"] = Json{{"r", e.key.r},
                    {"d", rational_to_json(e.key.d)},
                    {"family", e.key.family},
                    {"partition", partition_to_json(e.key.m, e.key.r)}};
    j["payload"] = e.payload;
    j["hash"] = e.hash;
    return j;
}

/// Throws JsonFormatError on structural problems; version and hash are
/// checked by the caller.
inline CacheEntry cache_entry_from_json(const Json& j)
{
    CacheEntry e;
    e.schema_version = detail::require_int(j, "schema_version");
    const Json& key = detail::require_field(j, "key");
    e.key.r = detail::require_int(key, "r");
    e.key.d = rational_from_json(detail::require_field(key, "d"));
    e.key.family = detail::require_string(key, "family");
    e.key.m = partition_from_json(detail::require_field(key, "partition"));
    e.payload = detail::require_field(j, "payload");
    e.hash = detail::require_string(j, "hash");
    return e;
}

class CoefficientCache {
public:
    explicit CoefficientCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Explicit path, else $JACKBERN_CACHE, else $XDG_CACHE_HOME/jackbern,
    /// else ~/.cache/jackbern.
    static std::filesystem::path resolve_dir(const std::optional<std::string>& explicit_dir)
    {
        if (explicit_dir && !explicit_dir->empty())
            return *explicit_dir;
        if (const char* env = std::getenv("JACKBERN_CACHE"); env && *env)
            return env;
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
            return std::filesystem::path(xdg) / "jackbern";
        if (const char* home = std::getenv("HOME"); home && *home)
            return std::filesystem::path(home) / ".cache" / "jackbern";
        return std::filesystem::path(".jackbern-cache");
    }

    const std::filesystem::path& dir() const { return dir_; }

    static std::string file_name(const CacheKey& key)
    {
        std::string d = to_string(key.d);
        for (auto& c : d)
            if (c == '/')
                c = '_';
        std::string parts;
        for (int i = 0; i < key.m.length(); ++i)
            parts += (i ? "-" : "") + std::to_string(key.m[i]);
        return key.family + "_r" + std::to_string(key.r) + "_d" + d + "_p" + (parts.empty() ? "0" : parts) + ".json";
    }

    /// Create the directory and confirm it accepts files.
    void ensure_writable() const
    {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_))
            throw CacheIOError("cannot create cache directory " + dir_.string());
        const auto probe = dir_ / ".write-probe";
        {
            std::ofstream out(probe);
            if (!(out << "ok"))
                throw CacheIOError("cache directory " + dir_.string() + " is not writable");
        }
        std::filesystem::remove(probe, ec);
    }

    void write(const CacheEntry& e) const
    {
        const auto path = dir_ / file_name(e.key);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!(out << cache_entry_to_json(e).dump() << '\n'))
                throw CacheIOError("cannot write " + tmp);
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec)
            throw CacheIOError("cannot move " + tmp + " into place");
    }

    /// The stored entry if present, current and intact.
    std::optional<CacheEntry> read(const std::filesystem::path& path) const
    {
        std::ifstream in(path);
        if (!in)
            return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            CacheEntry e = cache_entry_from_json(Json::parse(buf.str()));
            if (e.schema_version != kCacheSchemaVersion || fnv1a_hex(e.payload.dump()) != e.hash)
                return std::nullopt;
            if (sympoly_from_json(e.payload).r() != e.key.r)
                return std::nullopt;
            return e;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    std::optional<SymPoly> lookup(const CacheKey& key) const
    {
        auto e = read(dir_ / file_name(key));
        if (!e || !(e->key == key))
            return std::nullopt;
        return sympoly_from_json(e->payload);
    }

    std::vector<std::filesystem::path> entry_files() const
    {
        std::vector<std::filesystem::path> out;
        std::error_code ec;
        if (!std::filesystem::is_directory(dir_, ec))
            return out;
        for (const auto& f : std::filesystem::directory_iterator(dir_, ec))
            if (f.is_regular_file() && f.path().extension() == ".json")
                out.push_back(f.path());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Valid entries grouped by (r, d, family).
    std::map<std::tuple<int, std::string, std::string>, std::size_t> stats() const
    {
        std::map<std::tuple<int, std::string, std::string>, std::size_t> out;
        for (const auto& f : entry_files())
            if (auto e = read(f))
                ++out[{e->key.r, to_string(e->key.d), e->key.family}];
        return out;
    }

    std::size_t clear() const
    {
        std::size_t removed = 0;
        for (const auto& f : entry_files()) {
            std::error_code ec;
            if (std::filesystem::remove(f, ec))
                ++removed;
            else if (ec)
                throw CacheIOError("cannot remove " + f.string());
        }
        return removed;
    }

    struct WarmResult {
        std::size_t hits = 0;
        std::size_t written = 0;
    };

    /// Ensure P and P^ip entries exist for every partition up to max_weight.
    WarmResult warm(int r, const Rational& d, int max_weight) const
    {
        ensure_writable();
        preload();
        WarmResult res;
        for (const auto& m : enumerate_partitions(r, max_weight))
            for (const char* family : {"P", "Pip"}) {
                CacheKey key{r, d, family, m};
                if (lookup(key)) {
                    ++res.hits;
                    continue;
                }
                const SymPoly poly = key.family == "P" ? jack_P(m, r, d) : shifted_jack(m, r, d).poly;
                write(make_cache_entry(key, poly));
                ++res.written;
            }
        return res;
    }

    /// FNV-1a over the stored hashes of the entries `warm` would produce, in
    /// enumeration order; "missing" stands in for absent entries.
    std::string digest(int r, const Rational& d, int max_weight) const
    {
        std::string all;
        for (const auto& m : enumerate_partitions(r, max_weight))
            for (const char* family : {"P", "Pip"}) {
                CacheKey key{r, d, family, m};
                auto e = read(dir_ / file_name(key));
                all += (e && e->key == key) ? e->hash : std::string("missing");
                all += '\n';
            }
        return fnv1a_hex(all);
    }

    /// Seed the in-memory tables from every valid entry; returns the count.
    std::size_t preload() const
    {
        std::size_t loaded = 0;
        for (const auto& f : entry_files()) {
            auto e = read(f);
            if (!e || f.filename() != file_name(e->key))
                continue;
            SymPoly poly = sympoly_from_json(e->payload);
            TableKey key(e->key.r, e->key.d, e->key.m);
            if (e->key.family == "P")
                jack_memo().insert(key, std::move(poly));
            else if (e->key.family == "Pip")
                shifted_memo().insert(key, std::move(poly));
            else
                continue;
            ++loaded;
        }
        return loaded;
    }

private:
    std::filesystem::path dir_;
};

} // namespace jackbern
