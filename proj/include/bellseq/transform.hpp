#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bellseq/bell.hpp"
#include "bellseq/rational.hpp"
#include "bellseq/sequence.hpp"

namespace bellseq {

// Parameter quadruple (a,b,c,d) of the four-parameter sequence transform
//   y_n = sum_{k=1}^n (1/n!) [prod_{j=1}^{k-1} (a n + b k + c j + d)] B_{n,k}(!x).
struct BellParams {
    Rational a, b, c, d;

    bool operator==(const BellParams& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // (a,b,c,d) and (a,b+c,-c,d) define the same transform; pick the
    // representative with c > 0, leaving c = 0 as-is.
    BellParams canonical() const {
        if (c < 0) return {a, b + c, -c, d};
        return *this;
    }

    std::string str() const {
        return "(" + to_string(a) + "," + to_string(b) + "," + to_string(c) + "," + to_string(d) + ")";
    }
};

namespace detail {
// prod_{j=1}^{k-1} (a n + b k + c j + d)
inline Rational weight_product(const BellParams& p, std::size_t n, std::size_t k) {
    Rational base = p.a * static_cast<long>(n) + p.b * static_cast<long>(k) + p.d;
    Rational prod = 1;
    for (std::size_t j = 1; j < k; ++j) prod *= base + p.c * static_cast<long>(j);
    return prod;
}

// q_{n,k}(t) = t prod_{j=1}^{k-1} (a n + d j + t)
inline Rational q_poly(const BellParams& p, std::size_t n, std::size_t k, const Rational& t) {
    Rational prod = t;
    for (std::size_t j = 1; j < k; ++j) prod *= p.a * static_cast<long>(n) + p.d * static_cast<long>(j) + t;
    return prod;
}

// q'_{n,k}(t) by the product rule: q = t P(t), q' = P + t sum_i prod_{j != i}(...).
inline Rational q_poly_derivative(const BellParams& p, std::size_t n, std::size_t k, const Rational& t) {
    const Rational an = p.a * static_cast<long>(n);
    Rational P = 1;
    for (std::size_t j = 1; j < k; ++j) P *= an + p.d * static_cast<long>(j) + t;
    Rational dP = 0;
    for (std::size_t i = 1; i < k; ++i) {
        Rational prod = 1;
        for (std::size_t j = 1; j < k; ++j)
            if (j != i) prod *= an + p.d * static_cast<long>(j) + t;
        dP += prod;
    }
    return P + t * dP;
}
}  // namespace detail

inline Sequence bell_transform(const BellParams& p, const Sequence& x) {
    const std::size_t N = x.size();
    BellTable B(factorial_weight(x), N);
    std::vector<Rational> y;
    y.reserve(N);
    Rational invfact = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        invfact /= static_cast<long>(n);
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += detail::weight_product(p, n, k) * B.at(n, k);
        y.push_back(s * invfact);
    }
    return Sequence(std::move(y));
}

// Per-k summand matrix T[n][k] (1 <= k <= n); row sums equal bell_transform.
inline std::vector<std::vector<Rational>> bell_transform_k_slices(const BellParams& p,
                                                                  const Sequence& x) {
    const std::size_t N = x.size();
    BellTable B(factorial_weight(x), N);
    std::vector<std::vector<Rational>> T(N);
    Rational invfact = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        invfact /= static_cast<long>(n);
        T[n - 1].reserve(n);
        for (std::size_t k = 1; k <= n; ++k)
            T[n - 1].push_back(detail::weight_product(p, n, k) * B.at(n, k) * invfact);
    }
    return T;
}

// Explicit inverse: x_n = sum_k ((-1)^{k-1}/n!) w_{n,k} B_{n,k}(!y) where
// w_{n,k} = (q_{n,k}(b+c) - q_{n,k}(b))/c when c != 0, and w_{n,k} = q'_{n,k}(b)
// when c = 0 (the derivative evaluated exactly, not as a limit).
inline Sequence bell_inverse(const BellParams& p, const Sequence& y) {
    const std::size_t N = y.size();
    BellTable B(factorial_weight(y), N);
    std::vector<Rational> x;
    x.reserve(N);
    Rational invfact = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        invfact /= static_cast<long>(n);
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            Rational w;
            if (p.c != 0)
                w = (detail::q_poly(p, n, k, p.b + p.c) - detail::q_poly(p, n, k, p.b)) / p.c;
            else
                w = detail::q_poly_derivative(p, n, k, p.b);
            Rational term = w * B.at(n, k);
            s += (k % 2 == 1) ? term : -term;
        }
        x.push_back(s * invfact);
    }
    return Sequence(std::move(x));
}

// ----- operator words -----

struct BellOp { BellParams params; };
struct InverseBellOp { BellParams params; };
struct LeftShiftOp {};             // L: (x_1,x_2,...) -> (x_2,x_3,...)
struct RightShiftOp {};            // R: (x_1,x_2,...) -> (1,x_1,x_2,...)
struct AlternateSignOp {};         // I: (x_1,x_2,...) -> (x_1,-x_2,x_3,...)
struct AddToFirstOp { Rational nu; };  // S_nu: (x_1+nu, x_2, ...)
struct BinomialOp { long power; };     // binomial^power on the 0-indexed reading

using OperatorAtom = std::variant<BellOp, InverseBellOp, LeftShiftOp, RightShiftOp,
                                  AlternateSignOp, AddToFirstOp, BinomialOp>;

// Ordered list of atoms in composition order; application is right-to-left,
// matching the written form "R ∘ Y ∘ I ∘ L".
using OperatorWord = std::vector<OperatorAtom>;

namespace detail {
inline Sequence apply_binomial_once(const Sequence& x, bool inverse) {
    // x read 0-indexed: x_{i+1} holds a_i; b_n = sum_k C(n,k) a_k (signed for inverse).
    const std::size_t N = x.size();
    std::vector<Rational> out(N);
    for (std::size_t n = 0; n < N; ++n) {
        Rational s = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational term = Rational(binomial(Int(n), static_cast<long>(k))) * x.at(k + 1);
            if (inverse && (n - k) % 2 == 1) term = -term;
            s += term;
        }
        out[n] = s;
    }
    return Sequence(std::move(out));
}

inline Sequence apply_atom(const OperatorAtom& atom, const Sequence& x) {
    return std::visit(
        [&](const auto& op) -> Sequence {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, BellOp>) {
                return bell_transform(op.params, x);
            } else if constexpr (std::is_same_v<T, InverseBellOp>) {
                return bell_inverse(op.params, x);
            } else if constexpr (std::is_same_v<T, LeftShiftOp>) {
                if (x.size() < 2) throw std::length_error("apply_word: L on a length-1 prefix");
                std::vector<Rational> t(x.terms().begin() + 1, x.terms().end());
                return Sequence(std::move(t));
            } else if constexpr (std::is_same_v<T, RightShiftOp>) {
                std::vector<Rational> t;
                t.reserve(x.size() + 1);
                t.push_back(Rational(1));
                t.insert(t.end(), x.terms().begin(), x.terms().end());
                return Sequence(std::move(t));
            } else if constexpr (std::is_same_v<T, AlternateSignOp>) {
                std::vector<Rational> t = x.terms();
                for (std::size_t i = 1; i < t.size(); i += 2) t[i] = -t[i];
                return Sequence(std::move(t));
            } else if constexpr (std::is_same_v<T, AddToFirstOp>) {
                std::vector<Rational> t = x.terms();
                if (t.empty()) throw std::length_error("apply_word: S_nu on an empty prefix");
                t[0] += op.nu;
                return Sequence(std::move(t));
            } else {
                static_assert(std::is_same_v<T, BinomialOp>);
                Sequence cur = x;
                const long reps = op.power < 0 ? -op.power : op.power;
                for (long i = 0; i < reps; ++i) cur = apply_binomial_once(cur, op.power < 0);
                return cur;
            }
        },
        atom);
}
}  // namespace detail

inline Sequence apply_word(const OperatorWord& word, const Sequence& x) {
    if (word.empty()) throw std::invalid_argument("apply_word: empty word");
    Sequence cur = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = detail::apply_atom(*it, cur);
    return cur;
}

inline std::string word_str(const OperatorWord& word) {
    std::string out;
    for (const auto& atom : word) {
        if (!out.empty()) out += "∘";
        out += std::visit(
            [](const auto& op) -> std::string {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, BellOp>) return "Y" + op.params.str();
                else if constexpr (std::is_same_v<T, InverseBellOp>) return "Y^-1" + op.params.str();
                else if constexpr (std::is_same_v<T, LeftShiftOp>) return "L";
                else if constexpr (std::is_same_v<T, RightShiftOp>) return "R";
                else if constexpr (std::is_same_v<T, AlternateSignOp>) return "I";
                else if constexpr (std::is_same_v<T, AddToFirstOp>) return "S(" + to_string(op.nu) + ")";
                else return "binomial^" + std::to_string(op.power);
            },
            atom);
    }
    return out;
}

// Named transforms of the family, keyed as the CLI exposes them.
inline Sequence named_transform(const std::string& name, std::optional<Rational> param,
                                const Sequence& x) {
    auto require = [&](const char* what) -> Rational {
        if (!param) throw std::invalid_argument(std::string("named_transform: '") + name +
                                                "' needs parameter " + what);
        return *param;
    };
    auto int_param = [&](const char* what) -> long {
        Rational r = require(what);
        if (!is_integer(r)) throw std::invalid_argument(std::string("named_transform: '") + name +
                                                        "' needs integer " + what);
        return numerator(r).convert_to<long>();
    };

    if (name == "identity") return bell_transform({0, 0, 0, 0}, x);
    if (name == "invert") {
        Rational m = param.value_or(Rational(1));
        return bell_transform({0, 0, m, m}, x);
    }
    if (name == "exp") return bell_transform({0, 0, 0, 1}, x);
    if (name == "exp_bs95") {
        // BS95 convention: (b_n) is exp of (a_n) iff (b_n/n!) = Y_{0,0,0,1}((a_n/n!)).
        std::vector<Rational> scaled;
        scaled.reserve(x.size());
        for (std::size_t n = 1; n <= x.size(); ++n)
            scaled.push_back(x.at(n) / Rational(factorial(static_cast<long>(n))));
        Sequence y = bell_transform({0, 0, 0, 1}, Sequence(std::move(scaled)));
        std::vector<Rational> out;
        out.reserve(y.size());
        for (std::size_t n = 1; n <= y.size(); ++n)
            out.push_back(y.at(n) * Rational(factorial(static_cast<long>(n))));
        return Sequence(std::move(out));
    }
    if (name == "conv") {
        Rational m = require("m");
        return bell_transform({0, 0, -1, m}, x);
    }
    if (name == "revert")
        return apply_word({RightShiftOp{}, AlternateSignOp{}, BellOp{{-1, 0, -1, -1}}, LeftShiftOp{}}, x);
    if (name == "ncp") {
        Rational m = param.value_or(Rational(1));
        return bell_transform({m, 0, -1, 1}, x);
    }
    if (name == "dissection") return bell_transform({1, 0, 1, 1}, x);
    if (name == "binomial") return apply_word({BinomialOp{int_param("power")}}, x);
    if (name == "L") return apply_word({LeftShiftOp{}}, x);
    if (name == "R") return apply_word({RightShiftOp{}}, x);
    if (name == "I") return apply_word({AlternateSignOp{}}, x);
    if (name == "S") return apply_word({AddToFirstOp{require("nu")}}, x);
    throw std::invalid_argument("named_transform: unknown name '" + name + "'");
}

}  // namespace bellseq
