#pragma once

// Command-line front end. Exit codes: 0 success, 1 identity failure,
// 2 usage, 3 unsupported parameter domain, 4 I/O.

#include "jackbern/jackbern.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jackbern::cli {

enum ExitCode { kOk = 0, kIdentityFailure = 1, kUsage = 2, kDomain = 3, kIO = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    if (s.empty())
        return out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Rational parse_rational_flag(const std::string& flag, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": expected a rational such as 3 or 1/2, got '" + text + "'");
    }
}

/// "2,1" -> (2,1); "" and "0" give the empty partition.
inline Partition parse_partition_flag(const std::string& flag, const std::string& text)
{
    std::vector<int> parts;
    for (const auto& piece : split_commas(text)) {
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos || piece.size() > 6)
            throw UsageError(flag + ": expected comma-separated nonnegative integers, got '" + text + "'");
        parts.push_back(std::stoi(piece));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

inline std::vector<Rational> parse_omega_flag(const std::string& text)
{
    std::vector<Rational> out;
    for (const auto& piece : split_commas(text))
        out.push_back(parse_rational_flag("--omega", piece));
    if (out.empty())
        throw UsageError("--omega: expected comma-separated rationals");
    for (const auto& w : out)
        if (w == 0)
            throw DomainError("--omega: entries must be nonzero");
    return out;
}

inline void check_domain(int r, const Rational& d)
{
    if (r < 1)
        throw DomainError("--r: the number of variables must be at least 1");
    if (d <= 0)
        throw DomainError("--d: only positive d is supported, got " + to_string(d));
}

inline void check_fits(const std::string& flag, const Partition& m, int r)
{
    if (m.length() > r)
        throw DomainError(flag + ": partition " + m.str() + " has more than r = " + std::to_string(r) + " parts");
}

/// Loads cached tables unless disabled; a missing directory is not an error.
inline void preload_cache(const std::string& dir, bool disabled)
{
    if (disabled)
        return;
    CoefficientCache cache(CoefficientCache::resolve_dir(dir.empty() ? std::nullopt : std::optional<std::string>(dir)));
    cache.preload();
}

struct ComputeOptions {
    int r = 0;
    std::string d;
    std::string partition;
    std::string of;
    std::string omega;
    std::string family = "P";
    std::string format = "plain";
    std::string cache_dir;
    bool no_cache = false;
};

inline void emit_poly(std::ostream& out, const SymPoly& f, const std::optional<std::string>& family,
                      const std::string& format)
{
    if (format == "json")
        out << sympoly_to_json(f, family).dump() << '\n';
    else if (format == "latex")
        out << format_latex(f) << '\n';
    else
        out << format_plain(f) << '\n';
}

inline int run_compute(const std::string& what, const ComputeOptions& o, std::ostream& out)
{
    const Rational d = parse_rational_flag("--d", o.d);
    const Partition m = parse_partition_flag("--partition", o.partition);
    check_domain(o.r, d);
    check_fits("--partition", m, o.r);
    preload_cache(o.cache_dir, o.no_cache);

    if (what == "jack") {
        SymPoly f = o.family == "P" ? jack_P(m, o.r, d) : o.family == "Phi" ? jack_Phi(m, o.r, d) : jack_Psi(m, o.r, d);
        emit_poly(out, f, o.family, o.format);
    } else if (what == "shifted-jack") {
        emit_poly(out, shifted_jack(m, o.r, d).poly, "Pip", o.format);
    } else if (what == "bernoulli") {
        emit_poly(out, mv_bernoulli(m, o.r, d), "B", o.format);
    } else if (what == "multi-bernoulli") {
        if (o.omega.empty())
            throw UsageError("--omega: required for multi-bernoulli");
        const OmegaTuple omega(parse_omega_flag(o.omega));
        emit_poly(out, multiple_mv_bernoulli(m, omega, o.r, d), "Bmulti", o.format);
    } else if (what == "binom") {
        const Partition k = parse_partition_flag("--of", o.of);
        check_fits("--of", k, o.r);
        const Rational v = binomial(m, k, o.r, d);
        if (o.format == "json") {
            Json j;
            j["r"] = o.r;
            j["d"] = rational_to_json(d);
            j["partition"] = partition_to_json(m, o.r);
            j["of"] = partition_to_json(k, o.r);
            j["value"] = rational_to_json(v);
            out << j.dump() << '\n';
        } else if (o.format == "latex") {
            out << format_rational_latex(v) << '\n';
        } else {
            out << format_rational_plain(v) << '\n';
        }
    }
    return kOk;
}

struct VerifyOptions {
    std::string suite;
    int r = 2;
    std::string d = "2";
    int max_weight = 4;
    std::string omega;
    std::uint64_t seed = 0;
    std::string cache_dir;
    bool no_cache = false;
};

inline int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err)
{
    SuiteParams p;
    p.r = o.r;
    p.d = parse_rational_flag("--d", o.d);
    p.max_weight = o.max_weight;
    p.seed = o.seed;
    if (!o.omega.empty())
        p.omega = parse_omega_flag(o.omega);
    check_domain(p.r, p.d);
    if (p.max_weight < 0)
        throw UsageError("--max-weight: must be nonnegative");
    preload_cache(o.cache_dir, o.no_cache);

    const auto reports = run_suite(o.suite, p);
    for (const auto& rep : reports)
        out << report_to_json(rep).dump() << '\n';
    if (p.r == 2 && (o.suite == "closed-forms" || o.suite == "all"))
        for (const auto& flag : binomial_hypergeometric_flags(p.d, std::min(p.max_weight, 4)))
            err << "note: hypergeometric binomial display disagrees: " << flag << '\n';
    return all_pass(reports) ? kOk : kIdentityFailure;
}

struct ConvertOptions {
    std::string to = "monomial";
    std::string d;
    std::string format = "json";
};

inline int run_convert(const ConvertOptions& o, std::istream& in, std::ostream& out)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw std::ios_base::failure("cannot read standard input");
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("stdin: malformed JSON: ") + e.what());
    }
    const std::string basis = detail::require_string(j, "basis");

    std::optional<SymPoly> mono;
    std::optional<std::string> family;
    Rational d;
    if (basis == "monomial") {
        mono = sympoly_from_json(j);
        if (j.contains("family") && j["family"].is_string())
            family = j["family"].get<std::string>();
        if (o.to != "monomial") {
            if (o.d.empty())
                throw UsageError("--d: required to convert into the " + o.to + " basis");
            d = parse_rational_flag("--d", o.d);
        }
    } else {
        JackExpansion e = expansion_from_json(j);
        d = e.d;
        check_domain(e.r, d);
        if (o.to == "monomial" || o.to != basis)
            mono = expansion_to_monomial(e);
        if (o.to == basis) {
            if (o.format == "json")
                out << expansion_to_json(e).dump() << '\n';
            else
                out << (o.format == "latex" ? format_latex(e) : format_plain(e)) << '\n';
            return kOk;
        }
    }

    if (o.to == "monomial") {
        emit_poly(out, *mono, family, o.format);
        return kOk;
    }
    check_domain(mono->r(), d);
    const JackExpansion e = o.to == "P" ? monomial_to_P(*mono, d) : monomial_to_psi(*mono, d);
    if (o.format == "json")
        out << expansion_to_json(e).dump() << '\n';
    else
        out << (o.format == "latex" ? format_latex(e) : format_plain(e)) << '\n';
    return kOk;
}

struct CacheOptions {
    std::string dir;
    int r = 2;
    std::string d = "2";
    int max_weight = 4;
};

inline int run_cache(const std::string& action, const CacheOptions& o, std::ostream& out)
{
    CoefficientCache cache(CoefficientCache::resolve_dir(o.dir.empty() ? std::nullopt : std::optional<std::string>(o.dir)));
    if (action == "warm") {
        const Rational d = parse_rational_flag("--d", o.d);
        check_domain(o.r, d);
        if (o.max_weight < 0)
            throw UsageError("--max-weight: must be nonnegative");
        const auto res = cache.warm(o.r, d, o.max_weight);
        out << "hits=" << res.hits << " written=" << res.written << " digest=" << cache.digest(o.r, d, o.max_weight)
            << '\n';
    } else if (action == "clear") {
        out << "removed=" << cache.clear() << '\n';
    } else {
        std::size_t total = 0;
        for (const auto& [key, count] : cache.stats()) {
            const auto& [r, d, family] = key;
            out << "r=" << r << " d=" << d << " family=" << family << " entries=" << count << '\n';
            total += count;
        }
        out << "total=" << total << '\n';
    }
    return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin)
{
    CLI::App app{"Exact Jack polynomials, generalized binomial coefficients and multivariate Bernoulli polynomials",
                 "jackbern"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "latex", "plain"};

    ComputeOptions co;
    auto* compute = app.add_subcommand("compute", "Compute a polynomial or coefficient");
    compute->require_subcommand(1);
    std::string compute_what;
    for (const char* name : {"jack", "shifted-jack", "binom", "bernoulli", "multi-bernoulli"}) {
        auto* sub = compute->add_subcommand(name);
        sub->add_option("--r", co.r, "Number of variables")->required();
        sub->add_option("--d", co.d, "Parameter d as p/q")->required();
        sub->add_option("--partition", co.partition, "Partition as a,b,c")->required();
        sub->add_option("--format", co.format)->check(CLI::IsMember(formats));
        sub->add_option("--cache-dir", co.cache_dir, "Cache directory to preload");
        sub->add_flag("--no-cache", co.no_cache, "Ignore the on-disk cache");
        if (std::string(name) == "jack")
            sub->add_option("--family", co.family)->check(CLI::IsMember({"P", "Phi", "Psi"}));
        if (std::string(name) == "binom")
            sub->add_option("--of", co.of, "Lower partition k in binom(m, k)")->required();
        if (std::string(name) == "multi-bernoulli")
            sub->add_option("--omega", co.omega, "Periods as w1,w2,...")->required();
        sub->callback([&compute_what, name] { compute_what = name; });
    }

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run identity checks and print JSON-lines reports");
    verify->add_option("--suite", vo.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--r", vo.r);
    verify->add_option("--d", vo.d);
    verify->add_option("--max-weight", vo.max_weight);
    verify->add_option("--omega", vo.omega);
    verify->add_option("--seed", vo.seed);
    verify->add_option("--cache-dir", vo.cache_dir);
    verify->add_flag("--no-cache", vo.no_cache);

    ConvertOptions cvo;
    auto* convert = app.add_subcommand("convert", "Re-express JSON from standard input in another basis");
    convert->add_option("--to", cvo.to)->check(CLI::IsMember({"monomial", "P", "Psi"}));
    convert->add_option("--d", cvo.d);
    convert->add_option("--format", cvo.format)->check(CLI::IsMember(formats));

    CacheOptions cao;
    auto* cache = app.add_subcommand("cache", "Manage the on-disk coefficient cache");
    cache->require_subcommand(1);
    cache->add_option("--dir", cao.dir, "Cache directory");
    std::string cache_action;
    for (const char* name : {"warm", "clear", "stats"}) {
        auto* sub = cache->add_subcommand(name);
        if (std::string(name) == "warm") {
            sub->add_option("--r", cao.r);
            sub->add_option("--d", cao.d);
            sub->add_option("--max-weight", cao.max_weight);
        }
        sub->add_option("--dir", cao.dir, "Cache directory");
        sub->callback([&cache_action, name] { cache_action = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed())
            return run_compute(compute_what, co, out);
        if (verify->parsed())
            return run_verify(vo, out, err);
        if (convert->parsed())
            return run_convert(cvo, in, out);
        if (cache->parsed())
            return run_cache(cache_action, cao, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const JsonFormatError& e) {
        err << "error: stdin: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const CacheIOError& e) {
        err << "error: " << e.what() << '\n';
        return kIO;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kIO;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

} // namespace jackbern::cli
