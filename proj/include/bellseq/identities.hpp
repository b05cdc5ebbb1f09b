#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellseq/bell.hpp"
#include "bellseq/rational.hpp"
#include "bellseq/sequence.hpp"
#include "bellseq/series.hpp"
#include "bellseq/transform.hpp"

namespace bellseq {

// Result of one machine-checked identity. pass is true iff every compared
// coefficient/term is exactly equal; on failure the first divergent index and
// both side values are kept as the witness.
struct CheckReport {
    std::string name;
    std::string params;
    std::size_t order = 0;
    bool pass = true;
    std::optional<std::size_t> fail_index;
    Rational lhs, rhs;

    void record(std::size_t idx, const Rational& l, const Rational& r) {
        if (!pass) return;
        if (l != r) {
            pass = false;
            fail_index = idx;
            lhs = l;
            rhs = r;
        }
    }

    std::string str() const {
        std::string s = name + " " + params + " N=" + std::to_string(order) + ": " +
                        (pass ? "PASS" : "FAIL");
        if (!pass)
            s += " at index " + std::to_string(*fail_index) + " (lhs=" + to_string(lhs) +
                 ", rhs=" + to_string(rhs) + ")";
        return s;
    }
};

// Interpolation identity for y = Y_{a,b,c,d}(x), c != 0:
//   sum_k [prod_{j<k} (lambda - d j + d)] B_{n,k}(!y)
//     = sum_k [prod_{j<k} (a n + b k + c j + d + lambda)] B_{n,k}(!x).
inline CheckReport check_interpolation(const BellParams& p, const Sequence& x,
                                       const Rational& lambda, std::size_t n) {
    if (p.c == 0) throw std::domain_error("check_interpolation: requires c != 0");
    if (x.size() < n) throw std::length_error("check_interpolation: prefix shorter than n");
    Sequence y = bell_transform(p, x.prefix(n));
    BellTable By(factorial_weight(y), n);
    BellTable Bx(factorial_weight(x.prefix(n)), n);
    Rational lhs = 0, rhs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational wl = 1, wr = 1;
        for (std::size_t j = 1; j < k; ++j) {
            wl *= lambda - p.d * static_cast<long>(j) + p.d;
            wr *= p.a * static_cast<long>(n) + p.b * static_cast<long>(k) +
                  p.c * static_cast<long>(j) + p.d + lambda;
        }
        lhs += wl * By.at(n, k);
        rhs += wr * Bx.at(n, k);
    }
    CheckReport rep;
    rep.name = "interpolation";
    rep.params = p.str() + " lambda=" + to_string(lambda);
    rep.order = n;
    rep.record(n, lhs, rhs);
    return rep;
}

enum class AppendixKind { lemma, minus1, gamma };

// The appendix interpolation family. y is built from x by the stated
// binomial-weighted Bell sums (plain B_{n,k}(x), no factorial weights):
//   lemma : y_n = sum_k (alpha n + beta k)_{k-1} B_{n,k}(x)
//   minus1: y_n = sum_k (alpha n + beta k - 1)_{k-1} B_{n,k}(x)
//   gamma : y_n = sum_k (alpha n + beta k + gamma - 1)_{k-1} B_{n,k}(x)
// with (t)_{k-1} the falling factorial (= C(t,k-1)(k-1)!), then the two-sided
// lambda identity is verified for the given n.
inline CheckReport check_appendix_interp(AppendixKind kind, const Rational& alpha,
                                         const Rational& beta, std::optional<Rational> gamma,
                                         const Sequence& x, const Rational& lambda,
                                         std::size_t n) {
    if (kind == AppendixKind::gamma) {
        if (!gamma) throw std::invalid_argument("check_appendix_interp: gamma required");
        if (*gamma == 0) throw std::domain_error("check_appendix_interp: gamma must be nonzero");
    }
    if (x.size() < n) throw std::length_error("check_appendix_interp: prefix shorter than n");

    const Rational offset = kind == AppendixKind::lemma ? Rational(0)
                            : kind == AppendixKind::minus1 ? Rational(-1)
                                                           : *gamma - 1;
    BellTable Bx(x.prefix(n), n);
    std::vector<Rational> y;
    y.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        BellTable Bm(x.prefix(m), m);
        Rational s = 0;
        for (std::size_t k = 1; k <= m; ++k)
            s += falling_factorial(alpha * static_cast<long>(m) + beta * static_cast<long>(k) + offset,
                                   static_cast<long>(k) - 1) *
                 Bm.at(m, k);
        y.push_back(s);
    }
    BellTable By(Sequence(std::move(y)), n);

    Rational lhs = 0, rhs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational wl;
        switch (kind) {
            case AppendixKind::lemma:
                wl = falling_factorial(lambda, static_cast<long>(k) - 1);
                break;
            case AppendixKind::minus1:
                wl = rational_pow(lambda, static_cast<long>(k) - 1);
                break;
            case AppendixKind::gamma:
                wl = rational_pow(*gamma, static_cast<long>(k) - 1) *
                     falling_factorial(lambda / *gamma, static_cast<long>(k) - 1);
                break;
        }
        lhs += wl * By.at(n, k);
        rhs += falling_factorial(alpha * static_cast<long>(n) + beta * static_cast<long>(k) +
                                     offset + lambda,
                                 static_cast<long>(k) - 1) *
               Bx.at(n, k);
    }
    const char* kname = kind == AppendixKind::lemma ? "appendix-lemma"
                        : kind == AppendixKind::minus1 ? "appendix-minus1"
                                                       : "appendix-gamma";
    CheckReport rep;
    rep.name = kname;
    rep.params = "alpha=" + to_string(alpha) + " beta=" + to_string(beta) +
                 (gamma ? " gamma=" + to_string(*gamma) : "") + " lambda=" + to_string(lambda);
    rep.order = n;
    rep.record(n, lhs, rhs);
    return rep;
}

// Generating-function functional equation for y = Y_{a,b,c,d}(x), dispatching
// on the zero pattern of (c,d):
//   c!=0,d!=0: X(t(1+dY)^{a/d}) = (1/c)[1-(1+dY)^{-c/d}](1+dY)^{-b/d}
//   c=0, d!=0: X(t(1+dY)^{a/d}) = (1/d)log(1+dY)(1+dY)^{-b/d}
//   c!=0,d=0 : X(t e^{aY}) = (1/c)[1-e^{-cY}]e^{-bY}
//   c=0, d=0 : X(t e^{aY}) = Y e^{-bY}
inline CheckReport check_gf(const BellParams& p, const Sequence& x, std::size_t order) {
    if (x.size() < order) throw std::length_error("check_gf: prefix shorter than order");
    Sequence xp = x.prefix(order);
    Sequence y = bell_transform(p, xp);
    Series X = Series::from_sequence(xp);
    Series Y = Series::from_sequence(y);
    Series one = Series::one(order);
    Series t = Series::t(order);

    Series lhs, rhs;
    if (p.d != 0) {
        Series Z = add(one, scale(Y, p.d));
        lhs = compose(X, mul(t, pow(Z, p.a / p.d)));
        if (p.c != 0)
            rhs = mul(scale(sub(one, pow(Z, -p.c / p.d)), Rational(1) / p.c), pow(Z, -p.b / p.d));
        else
            rhs = mul(scale(log1p(Z), Rational(1) / p.d), pow(Z, -p.b / p.d));
    } else {
        lhs = compose(X, mul(t, exp0(scale(Y, p.a))));
        if (p.c != 0)
            rhs = mul(scale(sub(one, exp0(scale(Y, -p.c))), Rational(1) / p.c),
                      exp0(scale(Y, -p.b)));
        else
            rhs = mul(Y, exp0(scale(Y, -p.b)));
    }

    CheckReport rep;
    rep.name = "gf";
    rep.params = p.str();
    rep.order = order;
    for (std::size_t i = 0; i <= order && rep.pass; ++i) rep.record(i, lhs.coeff(i), rhs.coeff(i));
    return rep;
}

// Convolution formula (d != 0): with yhat = d Y_{a,b,c,d}(x), yhat_0 = 1,
//   sum_{m_1+...+m_r=n} yhat_{m_1}...yhat_{m_r}
//     = d r sum_k (1/n!) [prod_{j<k} (a n + b k + c j + d r)] B_{n,k}(!x).
inline Sequence convolve_bell(const BellParams& p, const Sequence& x, std::size_t r) {
    if (p.d == 0) throw std::domain_error("convolve_bell: requires d != 0");
    if (r < 1) throw std::domain_error("convolve_bell: r >= 1");
    const std::size_t N = x.size();
    BellTable B(factorial_weight(x), N);
    const Rational dr = p.d * static_cast<long>(r);
    std::vector<Rational> out;
    out.reserve(N);
    Rational invfact = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        invfact /= static_cast<long>(n);
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            Rational w = 1;
            for (std::size_t j = 1; j < k; ++j)
                w *= p.a * static_cast<long>(n) + p.b * static_cast<long>(k) +
                     p.c * static_cast<long>(j) + dr;
            s += w * B.at(n, k);
        }
        out.push_back(dr * s * invfact);
    }
    return Sequence(std::move(out));
}

// r-fold self-convolution of (1, y_1, y_2, ...) by direct polynomial powering;
// the brute-force side of the convolution pair.
inline Sequence convolution_power(const Sequence& yhat_tail, std::size_t r) {
    const std::size_t N = yhat_tail.size();
    std::vector<Rational> cur(N + 1, Rational(0));
    cur[0] = 1;
    for (std::size_t rep = 0; rep < r; ++rep) {
        std::vector<Rational> next(N + 1, Rational(0));
        for (std::size_t i = 0; i <= N; ++i) {
            if (cur[i] == 0) continue;
            next[i] += cur[i];  // j = 0 term, yhat_0 = 1
            for (std::size_t j = 1; i + j <= N; ++j) next[i + j] += cur[i] * yhat_tail.at(j);
        }
        cur = std::move(next);
    }
    return Sequence(std::vector<Rational>(cur.begin() + 1, cur.end()));
}

// Recurrence route for Y_{a,b,-1,1} with a,b in N0, not both zero:
//   y_n = sum_l x_l [t^{n-l}] (1 + sum_m y_m t^m)^{a l + b},  y_0 = 1.
inline Sequence ab_recurrence(long a, long b, const Sequence& x) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
        throw std::domain_error("ab_recurrence: need a,b >= 0, not both zero");
    const std::size_t N = x.size();
    std::vector<Rational> y(N + 1, Rational(0));
    y[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational s = 0;
        for (std::size_t l = 1; l <= n; ++l) {
            const long e = a * static_cast<long>(l) + b;
            const std::size_t m = n - l;
            // coefficient of t^m in (sum_{i>=0} y_i t^i)^e
            std::vector<Rational> cur(m + 1, Rational(0));
            cur[0] = 1;
            for (long rep = 0; rep < e; ++rep) {
                std::vector<Rational> next(m + 1, Rational(0));
                for (std::size_t i = 0; i <= m; ++i) {
                    if (cur[i] == 0) continue;
                    for (std::size_t j = 0; i + j <= m; ++j) next[i + j] += cur[i] * y[j];
                }
                cur = std::move(next);
            }
            s += x.at(l) * cur[m];
        }
        y[n] = s;
    }
    return Sequence(std::vector<Rational>(y.begin() + 1, y.end()));
}

enum class AlgebraicCheck { a257_closed_form, a257_quadratic, av_cubic };

// Polynomial relations satisfied by the bicubic-map series F (A000257) and the
// Av(2413,3412) series. a257_closed_form expands (1-8t)^{3/2} and compares
// F = (1/32t^2)(-1+12t-24t^2+(1-8t)^{3/2}) against the f_j closed form;
// the other two assert a zero polynomial residual to the given order.
inline CheckReport check_algebraic_gf(AlgebraicCheck which, std::size_t order) {
    if (order < 4) throw std::domain_error("check_algebraic_gf: order >= 4");

    // F series from the closed form expansion
    Series p32 = pow(Series({1, -8}, order + 2), Rational(3, 2));
    Series num = add(Series({-1, 12, -24}, order + 2), p32);
    // num must be divisible by 32 t^2
    std::vector<Rational> fc(order + 1, Rational(0));
    for (std::size_t i = 1; i <= order; ++i) fc[i] = num.coeff(i + 2) / 32;
    Series F(std::move(fc), order);

    CheckReport rep;
    rep.name = "algebraic";
    rep.order = order;
    switch (which) {
        case AlgebraicCheck::a257_closed_form: {
            rep.params = "A257_closed_form";
            rep.record(0, num.coeff(0), Rational(0));
            rep.record(1, num.coeff(1), Rational(0));
            rep.record(2, num.coeff(2), Rational(0));
            for (std::size_t j = 1; j <= order && rep.pass; ++j)
                rep.record(j, F.coeff(j), bicubic_map_term(j));
            break;
        }
        case AlgebraicCheck::a257_quadratic: {
            rep.params = "A257_quadratic";
            Series Fc = add(Series::one(order), F);  // 1 + F
            Series res = add(sub(mul(Series({0, 0, 16}, order), mul(Fc, Fc)),
                                 mul(Series({-1, 12, 8}, order), Fc)),
                             Series({-1, 11, 1}, order));
            for (std::size_t i = 0; i <= order && rep.pass; ++i)
                rep.record(i, res.coeff(i), Rational(0));
            break;
        }
        case AlgebraicCheck::av_cubic: {
            rep.params = "Av_cubic";
            // Av(2413,3412) via the transform route: R∘Av = Y_{-1,0,-1,-1}(f)
            std::vector<Rational> f;
            for (std::size_t j = 1; j <= order + 1; ++j) f.push_back(bicubic_map_term(j));
            Sequence u = bell_transform({-1, 0, -1, -1}, Sequence(std::move(f)));
            rep.record(1, u.at(1), Rational(1));  // the prepended R term
            std::vector<Rational> ac(order + 1, Rational(0));
            ac[0] = 1;
            for (std::size_t n = 1; n <= order; ++n) ac[n] = u.at(n + 1);
            Series A(std::move(ac), order);
            Series A2 = mul(A, A);
            Series res = add(add(mul(Series({0, 0, 0, 0, 1}, order), mul(A2, A)),
                                 mul(Series({0, 0, -11, 5}, order), A2)),
                             add(mul(Series({-1, 10, 3}, order), A), Series({1, -9}, order)));
            for (std::size_t i = 0; i <= order && rep.pass; ++i)
                rep.record(i, res.coeff(i), Rational(0));
            break;
        }
    }
    return rep;
}

}  // namespace bellseq
