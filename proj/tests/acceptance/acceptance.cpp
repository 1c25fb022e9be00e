// Acceptance checks. Prints one PASS/FAIL line per criterion; `--only N` runs a
// single criterion. Exit status is nonzero when any selected criterion fails.

#include "jackbern/jackbern.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jackbern;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Grid {
    int r;
    Rational d;
    int max_weight;
};

std::string grid_str(int r, const Rational& d) { return "r=" + std::to_string(r) + " d=" + to_string(d); }

const std::vector<Rational>& d_values()
{
    static const std::vector<Rational> v{rational(1, 2), rational(1), rational(2), rational(3)};
    return v;
}

void absorb(Outcome& o, const std::vector<VerificationReport>& reports, std::size_t& count)
{
    count += reports.size();
    for (const auto& rep : reports)
        if (!rep.pass) {
            std::string where;
            for (const auto& [k, v] : rep.params)
                where += k + "=" + v + " ";
            o.fail(rep.identity + " " + where + "at " + rep.counterexample->partition + ": " + rep.counterexample->lhs +
                   " vs " + rep.counterexample->rhs);
        }
}

Outcome thm1_suite()
{
    Outcome o;
    std::size_t n = 0;
    for (const auto& g : std::vector<Grid>{{1, 2, 5}, {2, 1, 5}, {2, 2, 5}, {2, rational(1, 2), 5}, {3, 2, 4}, {3, 1, 4}})
        absorb(o, verify_theorem1(g.r, g.d, g.max_weight), n);
    if (o.pass)
        o.detail = std::to_string(n) + " identity checks";
    return o;
}

Outcome thm2_suite()
{
    Outcome o;
    std::size_t n = 0;
    const std::vector<Rational> periods{1, 2, 3};
    for (const auto& [r, d] : std::vector<std::pair<int, Rational>>{{1, 2}, {2, 2}, {2, 1}})
        for (std::size_t len = 1; len <= 3; ++len)
            absorb(o, verify_theorem2(r, d, OmegaTuple({periods.begin(), periods.begin() + static_cast<long>(len)}), 3), n);
    if (o.pass)
        o.detail = std::to_string(n) + " identity checks";
    return o;
}

Outcome eigen_triangular()
{
    Outcome o;
    std::size_t n = 0;
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_values())
            for (const auto& m : enumerate_partitions(r, 6)) {
                const SymPoly p = jack_P(m, r, d);
                if (apply_D2(p, d) != jack_eigenvalue(m, r, d) * p)
                    o.fail("eigen-equation " + grid_str(r, d) + " " + m.str());
                if (p.coeff(m) != 1)
                    o.fail("leading coefficient " + grid_str(r, d) + " " + m.str());
                for (const auto& [k, c] : p.terms())
                    if (!(k == m || dominance_less(k, m)))
                        o.fail("term " + k.str() + " in P" + m.str() + " " + grid_str(r, d));
                ++n;
            }
    if (o.pass)
        o.detail = std::to_string(n) + " polynomials";
    return o;
}

Outcome special_values()
{
    Outcome o;
    std::size_t n = 0;
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_values())
            for (const auto& m : enumerate_partitions(r, 6)) {
                const std::vector<Rational> ones(static_cast<std::size_t>(r), Rational(1));
                if (jack_special_value_one(m, r, d) != evaluate(jack_P(m, r, d), ones))
                    o.fail("P(1) " + grid_str(r, d) + " " + m.str());
                if (psi_normalizer(m, r, d) != evaluate(shifted_jack(m, r, d).poly, shifted_point(m, r, d)))
                    o.fail("shifted value " + grid_str(r, d) + " " + m.str());
                n += 2;
            }
    if (o.pass)
        o.detail = std::to_string(n) + " values";
    return o;
}

Outcome pieri()
{
    Outcome o;
    std::size_t n = 0;
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_values()) {
            const SymPoly sum1 = SymPoly::monomial(r, Partition{1});
            // N = 1
            for (const auto& m : enumerate_partitions(r, 5)) {
                SymPoly rhs(r);
                for (int i = 0; i < r; ++i)
                    if (auto up = add_box(m, i, r))
                        rhs += binomial(*up, m, r, d) * jack_Psi(*up, r, d);
                if (multiply(sum1, jack_Psi(m, r, d)) != rhs)
                    o.fail("N=1 " + grid_str(r, d) + " " + m.str());
                ++n;
            }
            // |u|^N Psi_k = N! sum_{|m| = |k| + N} binom(m, k) Psi_m
            for (const auto& k : enumerate_partitions(r, 3))
                for (int N = 0; N <= 3; ++N) {
                    SymPoly rhs(r);
                    for (const auto& m : partitions_of_weight(k.weight() + N, r))
                        rhs += binomial(m, k, r, d) * jack_Psi(m, r, d);
                    rhs *= Rational(factorial(N));
                    if (multiply(power_sum_one_power(r, N), jack_Psi(k, r, d)) != rhs)
                        o.fail("power N=" + std::to_string(N) + " " + grid_str(r, d) + " " + k.str());
                    ++n;
                }
            // e^{|u|} Psi_k = sum_m binom(m, k) Psi_m through degree |k| + 3
            for (const auto& k : enumerate_partitions(r, 3)) {
                const int top = k.weight() + 3;
                SymPoly lhs(r), rhs(r);
                for (int N = 0; N <= 3; ++N)
                    lhs += multiply(power_sum_one_power(r, N), jack_Psi(k, r, d)) / Rational(factorial(N));
                for (const auto& m : enumerate_partitions(r, top))
                    if (contains(m, k))
                        rhs += binomial(m, k, r, d) * jack_Psi(m, r, d);
                if (lhs != rhs)
                    o.fail("exponential " + grid_str(r, d) + " " + k.str());
                ++n;
            }
        }
    if (o.pass)
        o.detail = std::to_string(n) + " expansions";
    return o;
}

Outcome power_sum()
{
    Outcome o;
    std::size_t n = 0;
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_values())
            for (int N = 0; N <= 5; ++N) {
                SymPoly rhs(r);
                for (const auto& m : partitions_of_weight(N, r))
                    rhs += jack_Psi(m, r, d);
                if (power_sum_one_power(r, N) != Rational(factorial(N)) * rhs)
                    o.fail("N=" + std::to_string(N) + " " + grid_str(r, d));
                ++n;
            }
    if (o.pass)
        o.detail = std::to_string(n) + " identities";
    return o;
}

std::vector<Rational> distinct_point(RationalSampler& s, int r)
{
    for (;;) {
        auto p = s.point(r);
        bool ok = true;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                ok = ok && p[static_cast<std::size_t>(i)] != p[static_cast<std::size_t>(j)];
        if (ok)
            return p;
    }
}

Outcome closed_forms()
{
    Outcome o;
    std::size_t n = 0;
    for (int r = 1; r <= 3; ++r) {
        for (const auto& m : enumerate_partitions(r, 6)) {
            if (schur_det(m, r) != jack_P(m, r, 2))
                o.fail("Schur " + std::to_string(r) + " " + m.str());
            ++n;
        }
        for (const auto& m : enumerate_partitions(r, 4)) {
            if (shifted_schur_det(m, r) != shifted_jack(m, r, 2).poly)
                o.fail("shifted Schur r=" + std::to_string(r) + " " + m.str());
            for (const auto& k : enumerate_partitions(r, 4))
                if (binomial_det_d2(m, k, r) != binomial(m, k, r, 2))
                    o.fail("binomial determinant r=" + std::to_string(r) + " " + m.str() + " " + k.str());
            n += 2;
        }
    }
    RationalSampler s(2024);
    for (const auto& d : d_values()) {
        for (const auto& m : enumerate_partitions(2, 6)) {
            if (jack_r2_closed(m, d) != jack_P(m, 2, d))
                o.fail("2F1 d=" + to_string(d) + " " + m.str());
            ++n;
        }
        for (int t = 0; t < 5; ++t) {
            const auto z = s.point(2), u = s.point(2);
            if (f00_r2_closed(z, u, d, 4) != f00_truncated(z, 2, d, 4).evaluate_at(u))
                o.fail("1F1 kernel d=" + to_string(d));
            ++n;
        }
    }
    if (o.pass)
        o.detail = std::to_string(n) + " comparisons";
    return o;
}

Outcome route_independence()
{
    Outcome o;
    std::size_t n = 0;
    RationalSampler s(7);
    for (int r = 1; r <= 2; ++r)
        for (const auto& d : d_values())
            for (const auto& m : enumerate_partitions(r, 5)) {
                const SymPoly b = mv_bernoulli(m, r, d);
                for (int t = 0; t < 3; ++t) {
                    const auto z = s.point(r);
                    if (evaluate(b, z) != mv_bernoulli_eval_via_series(z, m, r, d))
                        o.fail(grid_str(r, d) + " " + m.str());
                    ++n;
                }
            }
    if (o.pass)
        o.detail = std::to_string(n) + " point evaluations";
    return o;
}

Outcome classical_reduction()
{
    Outcome o;
    std::size_t n = 0;
    for (const auto& d : d_values())
        for (int m = 0; m <= 8; ++m) {
            if (mv_bernoulli(Partition{m}, 1, d) != bernoulli_poly_classical(m))
                o.fail("r=1 d=" + to_string(d) + " m=" + std::to_string(m));
            ++n;
        }
    std::vector<VerificationReport> multiple;
    for (const auto& rep : verify_closed_forms(1, 2, 5))
        if (rep.identity.rfind("multiple.", 0) == 0)
            multiple.push_back(rep);
    absorb(o, multiple, n);
    if (multiple.empty())
        o.fail("no multiple-Bernoulli checks ran");
    if (o.pass)
        o.detail = std::to_string(n) + " checks";
    return o;
}

Outcome normalization()
{
    Outcome o;
    std::size_t n = 0, skipped = 0;
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : d_values())
            for (const auto& m : enumerate_partitions(r, 6)) {
                const auto f = normalization_factors(m, r, d);
                if (f.n_over_r_pochhammer == 0) {
                    ++skipped;
                    continue;
                }
                if (jack_Psi(m, r, d) != f.d_m / f.n_over_r_pochhammer * jack_Phi(m, r, d))
                    o.fail(grid_str(r, d) + " " + m.str());
                ++n;
            }
    if (o.pass)
        o.detail = std::to_string(n) + " partitions, " + std::to_string(skipped) + " skipped";
    return o;
}

Outcome btilde_determinant()
{
    Outcome o;
    std::string literal_mismatch, normalized_mismatch;
    for (const auto& m : enumerate_partitions(2, 3)) {
        const SymPoly det = jacobi_trudi_Btilde(m, 2), gen = btilde_generating(m, 2, 2);
        if (det != gen && literal_mismatch.empty())
            literal_mismatch = m.str() + ": determinant " + format_plain(det) + ", extraction " + format_plain(gen);
        if (det / btilde_determinant_factor(m, 2) != gen && normalized_mismatch.empty())
            normalized_mismatch = m.str();
    }
    const Partition one{1};
    const SymPoly det1 = jacobi_trudi_Btilde(one, 2), gen1 = btilde_generating(one, 2, 2), b1 = mv_bernoulli(one, 2, 2);
    const bool det_differs = det1 != b1, gen_differs = gen1 != b1;
    std::string gen_gap;
    for (const auto& m : enumerate_partitions(2, 3))
        if (gen_gap.empty() && btilde_generating(m, 2, 2) != mv_bernoulli(m, 2, 2))
            gen_gap = m.str();

    if (!literal_mismatch.empty())
        o.fail("determinant != extraction at " + literal_mismatch);
    if (!det_differs)
        o.fail("determinant B~(1,0) equals B(1,0)");
    o.detail += "; normalized determinant (divided by s_m(1)) == extraction: " +
                std::string(normalized_mismatch.empty() ? "yes" : "no, at " + normalized_mismatch);
    o.detail += "; determinant B~(1,0) = " + format_plain(det1) + (det_differs ? " != " : " == ") + "B(1,0) = " +
                format_plain(b1);
    o.detail += "; extraction B~(1,0) " + std::string(gen_differs ? "!=" : "==") + " B(1,0), first difference at " +
                (gen_gap.empty() ? "none" : gen_gap);
    if (o.pass)
        o.detail = "determinant == extraction for |m| <= 3" + o.detail;
    return o;
}

std::string cli_path() { return JACKBERN_CLI_PATH; }

std::pair<int, std::string> shell(const std::string& command)
{
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe)
        return {-1, out};
    std::array<char, 4096> buf{};
    while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), k);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract()
{
    Outcome o;
    std::random_device rd;
    const auto base = std::filesystem::temp_directory_path() / ("jackbern-acceptance-" + std::to_string(rd()));
    const std::string exe = "'" + cli_path() + "'";
    auto with_cache = [&](const std::string& name) {
        return "JACKBERN_CACHE='" + (base / name).string() + "' " + exe;
    };

    const std::vector<Grid> grids{{1, 2, 6},  {1, rational(1, 2), 5}, {2, 1, 5}, {2, 2, 5}, {2, rational(1, 2), 5},
                                  {2, 3, 5},  {3, 2, 4},             {3, 1, 4}, {3, rational(1, 2), 4}, {3, 3, 4}};
    std::size_t lines = 0;
    for (const auto& g : grids) {
        const std::string args = " verify --suite all --r " + std::to_string(g.r) + " --d " + to_string(g.d) +
                                 " --max-weight " + std::to_string(g.max_weight) + " 2>/dev/null";
        const auto cold = shell(with_cache("cold") + args);
        if (cold.first != 0)
            o.fail("verify --suite all exited " + std::to_string(cold.first) + " at " + grid_str(g.r, g.d));
        const auto rerun = shell(with_cache("cold") + args);
        if (rerun.second != cold.second)
            o.fail("rerun differs at " + grid_str(g.r, g.d));
        lines += static_cast<std::size_t>(std::count(cold.second.begin(), cold.second.end(), '\n'));
    }

    // Cold against warm: identical reports and identical computed objects.
    for (const auto& g : std::vector<Grid>{{2, 2, 4}, {3, rational(1, 2), 4}}) {
        const std::string r = std::to_string(g.r), d = to_string(g.d);
        const auto warm = shell(with_cache("warm") + " cache warm --r " + r + " --d " + d + " --max-weight 5");
        if (warm.first != 0)
            o.fail("cache warm exited " + std::to_string(warm.first));
        const auto again = shell(with_cache("warm") + " cache warm --r " + r + " --d " + d + " --max-weight 5");
        if (again.second.find(" written=0 ") == std::string::npos ||
            again.second.substr(again.second.find("digest")) != warm.second.substr(warm.second.find("digest")))
            o.fail("second warm was not all hits with an identical digest");
        for (const std::string& cmd :
             {" verify --suite all --r " + r + " --d " + d + " --max-weight 4 2>/dev/null",
              " compute jack --family Psi --r " + r + " --d " + d + " --partition 3,1 --format json",
              " compute shifted-jack --r " + r + " --d " + d + " --partition 2,2 --format json",
              " compute binom --r " + r + " --d " + d + " --partition 3,2 --of 2,1"}) {
            const auto cold = shell(with_cache("empty") + cmd), hot = shell(with_cache("warm") + cmd);
            if (cold != hot)
                o.fail("cold and warm cache disagree on" + cmd);
        }
    }
    std::filesystem::remove_all(base);
    if (o.pass)
        o.detail = std::to_string(grids.size()) + " grids, " + std::to_string(lines) +
                   " report lines, reruns byte-identical, cold == warm";
    return o;
}

struct Criterion {
    const char* title;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {"thm1 suite", thm1_suite},
        {"thm2 suite", thm2_suite},
        {"eigen-equation and triangularity", eigen_triangular},
        {"special-value product formulas", special_values},
        {"Pieri expansions via interpolation binomials", pieri},
        {"power sum in the Psi basis", power_sum},
        {"closed-form oracles", closed_forms},
        {"route independence of mv_bernoulli", route_independence},
        {"classical reduction and multiple Bernoulli identities", classical_reduction},
        {"normalization dictionary", normalization},
        {"Bernoulli determinant against product generating function", btilde_determinant},
        {"CLI contract", cli_contract},
    };

    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--only")
            only = std::stoi(argv[i + 1]);

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (only && id != only)
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].title << "): " << o.detail
             << " [" << static_cast<int>(secs * 1000) << " ms]";
        std::cout << line.str() << std::endl;
        all_ok = all_ok && o.pass;
    }
    return all_ok ? 0 : 1;
}
