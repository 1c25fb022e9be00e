#pragma once

/// \file format.hpp
/// Human-readable renderings of scalars and symmetric polynomials.
///
/// Plain text uses the middle dot for products and U+2212 for minus signs,
/// e.g. "1/2·m[1] − 1/2". Terms are listed by descending degree and, within a
/// degree, lexicographically descending partitions.

#include "jackbern/jack.hpp"
#include "jackbern/partition.hpp"
#include "jackbern/rational.hpp"
#include "jackbern/sympoly.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace jackbern {

inline constexpr const char* kMinus = "−";
inline constexpr const char* kDot = "·";

inline std::string format_rational_plain(const Rational& x)
{
    if (x < 0)
        return std::string(kMinus) + to_string(-x);
    return to_string(x);
}

inline std::string format_rational_latex(const Rational& x)
{
    Rational a = abs(x);
    std::string body = a.get_den() == 1 ? a.get_num().get_str() : "\\frac{" + a.get_num().get_str() + "}{" +
                                                                     a.get_den().get_str() + "}";
    return x < 0 ? "-" + body : body;
}

namespace detail {

/// Terms in display order.
inline std::vector<std::pair<Partition, Rational>> display_terms(const SymPoly& f)
{
    std::vector<std::pair<Partition, Rational>> out;
    for (int n = f.degree(); n >= 0; --n)
        for (const auto& [k, c] : f.terms())
            if (k.weight() == n)
                out.emplace_back(k, c);
    return out;
}

inline std::string join_parts(const Partition& k)
{
    std::string s;
    for (int i = 0; i < k.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(k[i]);
    }
    return s;
}

} // namespace detail

inline std::string format_plain(const SymPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : detail::display_terms(f)) {
        Rational a = abs(c);
        if (first)
            out += c < 0 ? kMinus : "";
        else
            out += c < 0 ? std::string(" ") + kMinus + " " : " + ";
        first = false;
        if (k.empty()) {
            out += to_string(a);
            continue;
        }
        if (a != 1)
            out += to_string(a) + kDot;
        out += "m[" + detail::join_parts(k) + "]";
    }
    return out;
}

inline std::string format_latex(const SymPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : detail::display_terms(f)) {
        Rational a = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (k.empty()) {
            out += format_rational_latex(a);
            continue;
        }
        if (a != 1)
            out += format_rational_latex(a) + " ";
        out += "m_{(" + detail::join_parts(k) + ")}";
    }
    return out;
}

namespace detail {

/// Shared layout for sums of indexed basis elements; `symbol` renders the
/// basis element for a partition.
template <class Symbol>
std::string format_sum(const std::map<Partition, Rational>& terms, bool latex, Symbol symbol)
{
    if (terms.empty())
        return "0";
    std::vector<std::pair<Partition, Rational>> ordered;
    int top = 0;
    for (const auto& [k, c] : terms)
        top = std::max(top, k.weight());
    for (int n = top; n >= 0; --n)
        for (const auto& [k, c] : terms)
            if (k.weight() == n)
                ordered.emplace_back(k, c);
    const std::string minus = latex ? "-" : kMinus;
    std::string out;
    bool first = true;
    for (const auto& [k, c] : ordered) {
        Rational a = abs(c);
        if (first)
            out += c < 0 ? minus : "";
        else
            out += c < 0 ? " " + minus + " " : " + ";
        first = false;
        if (k.empty()) {
            out += latex ? format_rational_latex(a) : to_string(a);
            continue;
        }
        if (a != 1)
            out += latex ? format_rational_latex(a) + " " : to_string(a) + kDot;
        out += symbol(k);
    }
    return out;
}

} // namespace detail

/// "P[2] + 2/3·P[1,1]"; the empty partition prints as its bare coefficient.
inline std::string format_plain(const JackExpansion& e)
{
    const char* name = e.basis == JackBasis::P ? "P" : "Psi";
    return detail::format_sum(e.coeffs, false, [&](const Partition& k) {
        return std::string(name) + "[" + detail::join_parts(k) + "]";
    });
}

inline std::string format_latex(const JackExpansion& e)
{
    const char* name = e.basis == JackBasis::P ? "P" : "\\Psi";
    return detail::format_sum(e.coeffs, true, [&](const Partition& k) {
        return std::string(name) + "_{(" + detail::join_parts(k) + ")}";
    });
}

} // namespace jackbern
