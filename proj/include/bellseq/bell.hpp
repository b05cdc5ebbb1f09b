#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "bellseq/rational.hpp"
#include "bellseq/sequence.hpp"

namespace bellseq {

// Triangular table of partial Bell polynomials B_{n,k}(z_1,...,z_{n-k+1}) for
// a fixed input sequence, built once by the standard recurrence
//   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) z_i B_{n-i, k-1},
// seeded with B_{0,0} = 1 and B_{n,0} = 0 for n >= 1. Write-once, then read-only.
class BellTable {
public:
    BellTable(const Sequence& z, std::size_t n_max) : n_(n_max), rows_(n_max + 1) {
        if (n_max > 0 && z.size() < n_max) {
            // B_{n,k} needs z_1..z_{n-k+1}; the k=1 entry of the last row needs z_{n}.
            throw std::length_error("BellTable: input has fewer than n_max terms");
        }
        rows_[0] = {Rational(1)};
        for (std::size_t n = 1; n <= n_max; ++n) {
            rows_[n].assign(n + 1, Rational(0));
            for (std::size_t k = 1; k <= n; ++k) {
                Rational s = 0;
                for (std::size_t i = 1; i + k <= n + 1; ++i)
                    s += Rational(binomial(Int(n - 1), static_cast<long>(i - 1))) * z.at(i) *
                         rows_[n - i][k - 1];
                rows_[n][k] = s;
            }
        }
    }

    std::size_t n_max() const { return n_; }

    const Rational& at(std::size_t n, std::size_t k) const {
        if (n > n_) throw std::domain_error("BellTable: row out of range");
        if (k > n) throw std::domain_error("BellTable: k out of 0..n");
        return rows_[n][k];
    }

private:
    std::size_t n_;
    std::vector<std::vector<Rational>> rows_;
};

// B_{n,k}(z) via the triangular recurrence.
inline Rational partial_bell(std::size_t n, std::size_t k, const Sequence& z) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("partial_bell: need 1 <= k <= n");
    if (z.size() < n - k + 1) throw std::length_error("partial_bell: need z_1..z_{n-k+1}");
    // The recurrence touches z_1..z_n in general; extend with zeros beyond what
    // the (n,k) entry can actually use so short-but-sufficient prefixes work.
    std::vector<Rational> ext = z.terms();
    ext.resize(n, Rational(0));
    return BellTable(Sequence(std::move(ext)), n).at(n, k);
}

// B_{n,k}(z) evaluated as the explicit sum over multi-indices alpha in pi(n,k)
// (alpha_1+alpha_2+... = k and alpha_1+2 alpha_2+... = n). Exponential cost;
// used as an independent oracle against the recurrence.
inline Rational partial_bell_direct(std::size_t n, std::size_t k, const Sequence& z) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("partial_bell_direct: need 1 <= k <= n");
    const std::size_t m = n - k + 1;
    if (z.size() < m) throw std::length_error("partial_bell_direct: need z_1..z_{n-k+1}");
    Rational total = 0;
    std::function<void(std::size_t, long, long, Rational)> rec =
        [&](std::size_t i, long rem_k, long rem_n, Rational coef) {
            if (i > m) {
                if (rem_k == 0 && rem_n == 0) total += coef;
                return;
            }
            const long max_a = std::min<long>(rem_k, rem_n / static_cast<long>(i));
            Rational zi_over_ifact = z.at(i) / Rational(factorial(static_cast<long>(i)));
            Rational c = coef;
            for (long a = 0; a <= max_a; ++a) {
                rec(i + 1, rem_k - a, rem_n - a * static_cast<long>(i), c);
                c *= zi_over_ifact;
                c /= a + 1;
            }
        };
    rec(1, static_cast<long>(k), static_cast<long>(n), Rational(factorial(static_cast<long>(n))));
    return total;
}

// !x = (1!x_1, 2!x_2, ...).
inline Sequence factorial_weight(const Sequence& x) {
    std::vector<Rational> out;
    out.reserve(x.size());
    for (std::size_t i = 1; i <= x.size(); ++i) out.push_back(Rational(factorial(static_cast<long>(i))) * x.at(i));
    return Sequence(std::move(out));
}

// Logarithmic polynomial L_n = sum_k (-1)^{k-1} (k-1)! B_{n,k}(g).
inline Rational log_polynomial(std::size_t n, const Sequence& g) {
    if (n < 1) throw std::domain_error("log_polynomial: n >= 1");
    if (g.size() < n) throw std::length_error("log_polynomial: need g_1..g_n");
    BellTable B(g.prefix(n), n);
    Rational s = 0;
    int sign = 1;
    Rational fact = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        s += sign * fact * B.at(n, k);
        sign = -sign;
        fact *= static_cast<long>(k);
    }
    return s;
}

// Potential polynomial P_n^{(r)} = sum_k (r)_k B_{n,k}(g).
inline Rational potential_polynomial(std::size_t n, const Rational& r, const Sequence& g) {
    if (n < 1) throw std::domain_error("potential_polynomial: n >= 1");
    if (g.size() < n) throw std::length_error("potential_polynomial: need g_1..g_n");
    BellTable B(g.prefix(n), n);
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k)
        s += falling_factorial(r, static_cast<long>(k)) * B.at(n, k);
    return s;
}

struct SeriesWithConstant {
    Rational constant;   // h_0
    Sequence tail;       // h_1..h_N, exponential-coefficient convention
};

// Faa di Bruno composition on exponential coefficients: f has constant f_0 and
// coefficients f_k (k >= 1); g_m are the coefficients of a series with zero
// constant term. Returns h_0 = f_0 and h_n = sum_k f_k B_{n,k}(g).
inline SeriesWithConstant faa_di_bruno_compose(const SeriesWithConstant& f, const Sequence& g,
                                               std::size_t n_max) {
    if (g.size() < n_max) throw std::length_error("faa_di_bruno_compose: need g_1..g_N");
    BellTable B(g.prefix(n_max), n_max);
    std::vector<Rational> h;
    h.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n && k <= f.tail.size(); ++k) s += f.tail.at(k) * B.at(n, k);
        h.push_back(s);
    }
    return {f.constant, Sequence(std::move(h))};
}

// f_j = 3 (2j-1)! 2^j / ((j-1)! (j+2)!), the A000257 closed form.
inline Rational bicubic_map_term(std::size_t j) {
    if (j < 1) throw std::domain_error("bicubic_map_term: j >= 1");
    const long jl = static_cast<long>(j);
    Rational num = Rational(3) * Rational(factorial(2 * jl - 1)) * rational_pow(Rational(2), jl);
    return num / (Rational(factorial(jl - 1)) * Rational(factorial(jl + 2)));
}

// Triple-binomial closed form for (k!/n!) B_{n,k}(!f) with f_j = bicubic_map_term(j),
// evaluated exactly as printed: leading binomial term, single-sum term, triple-sum term.
inline Rational closed_form_f_bell(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("closed_form_f_bell: need 1 <= k <= n");
    const long N = static_cast<long>(n), K = static_cast<long>(k);
    Rational two = 2;

    Rational lead = rational_pow(two, N + 1) * Rational(binomial(Int(2 * N - 1), N - K)) *
                    Rational(K, N + K);

    Rational single = 0;
    for (long i = 0; i <= K; ++i) {
        const Int c = binomial(Int(K - 1), K - i);
        if (c == 0) continue;
        const Rational term = Rational(binomial(Int(2 * N + 2 * i - 1), N - 1)) * Rational(c);
        single += (i % 2 == 0 ? term : -term);
    }
    single *= rational_pow(two, N + 1 - 2 * K) * Rational(K, N);

    Rational triple = 0;
    for (long j = 1; j <= N - 1; ++j)
        for (long i = 1; i <= K - 1; ++i) {
            const Rational pw = rational_pow(two, N + 1 - 2 * i) * Rational(binomial(Int(K), i));
            for (long l = 0; l <= i; ++l) {
                const Int c1 = binomial(Int(i - 1), i - l);
                if (c1 == 0) continue;
                const Int c3 = binomial(Int(2 * N - 2 * j - 1), N - j - K + i);
                if (c3 == 0) continue;
                Rational term = pw * Rational(c1) * Rational(binomial(Int(2 * j + 2 * l), j)) *
                                Rational(c3) *
                                Rational(i * (K - i), (j + l) * (N - j + K - i));
                triple += (l % 2 == 0 ? term : -term);
            }
        }

    return lead + single + triple;
}

}  // namespace bellseq
