#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bellseq {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps lowest terms with a positive
// denominator, which is exactly the invariant the rest of the library relies on.
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k) for nonnegative integer n. Out-of-range k yields 0.
inline Int binomial(const Int& n, long k) {
    if (k < 0 || n < k) return 0;
    Int num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// Falling factorial (t)_k = t (t-1) ... (t-k+1) for rational t.
inline Rational falling_factorial(const Rational& t, long k) {
    Rational p = 1;
    for (long j = 0; j < k; ++j) p *= t - j;
    return p;
}

inline Rational rational_pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("rational_pow: 0 to negative power");
        Rational inv = Rational(1) / r;
        return rational_pow(inv, -e);
    }
    Rational p = 1, base = r;
    for (long i = e; i > 0; i >>= 1) {
        if (i & 1) p *= base;
        base *= base;
    }
    return p;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Renders "p" or "p/q"; lossless.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p" or "p/q" with optional sign; rejects anything else.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("parse_rational: bad token '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    auto slash = s.find('/');
    auto check_int = [&](std::string_view t) {
        if (t.empty()) fail();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) fail();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') fail();
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(Int(std::string(s)));
    }
    auto p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    Int den{std::string(q)};
    if (den == 0) throw std::domain_error("parse_rational: zero denominator");
    return Rational(Int(std::string(p)), den);
}

}  // namespace bellseq
