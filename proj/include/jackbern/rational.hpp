#pragma once

/// \file rational.hpp
/// Exact rational scalars backed by GMP.
///
/// Every coefficient in the library is a `Rational`. GMP keeps mpq values in
/// lowest terms with a positive denominator as long as they are built through
/// the arithmetic operators or `canonicalize()`; the helpers here never hand
/// out non-canonical values.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jackbern {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "p/q", "p" or "-p/q"; the sign may also be U+2212. Whitespace is
/// not accepted.
inline Rational parse_rational(std::string_view text)
{
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (text.starts_with(unicode_minus)) {
        std::string ascii = "-" + std::string(text.substr(unicode_minus.size()));
        if (ascii.size() > 1 && (ascii[1] == '-' || ascii[1] == '+'))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return parse_rational(ascii);
    }
    auto valid_int = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer n(num, 10);
    Integer q(den, 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, q);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x)
{
    return x.get_str(10);
}

inline Rational rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1.
inline Rational rising(const Rational& x, int k)
{
    if (k < 0)
        throw std::invalid_argument("rising factorial with negative length");
    Rational acc = 1;
    for (int i = 0; i < k; ++i)
        acc *= x + i;
    return acc;
}

/// Falling factorial x (x-1) ... (x-k+1).
inline Rational falling(const Rational& x, int k)
{
    Rational acc = 1;
    for (int i = 0; i < k; ++i)
        acc *= x - i;
    return acc;
}

inline Integer factorial(int n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Integer binomial_int(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

/// Binomial coefficient C(x, k) for rational top argument.
inline Rational binomial_rational(const Rational& x, int k)
{
    if (k < 0)
        return 0;
    return falling(x, k) / Rational(factorial(k));
}

/// x^e for any integer e (x must be nonzero when e < 0).
inline Rational power(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0)
            throw std::domain_error("zero raised to a negative power");
        return 1 / power(x, -e);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

} // namespace jackbern
