#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellseq/bell.hpp"
#include "bellseq/rational.hpp"
#include "bellseq/sequence.hpp"

namespace bellseq {

// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over Rational,
// ordinary coefficients. The truncation order N is explicit and carried by the
// value; binary operations truncate to the minimum of the two orders.
class Series {
public:
    Series() : coeffs_(1, Rational(0)) {}
    Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Rational(0));
    }

    static Series zero(std::size_t order) { return Series({}, order); }
    static Series one(std::size_t order) { return Series({Rational(1)}, order); }
    static Series t(std::size_t order) { return Series({Rational(0), Rational(1)}, order); }

    // c_0 = 0, c_n = x_n.
    static Series from_sequence(const Sequence& x) {
        std::vector<Rational> c(x.size() + 1, Rational(0));
        for (std::size_t n = 1; n <= x.size(); ++n) c[n] = x.at(n);
        return Series(std::move(c), x.size());
    }

    // Requires c_0 = 0; returns (c_1..c_N).
    Sequence to_sequence() const {
        if (coeffs_[0] != 0) throw std::invalid_argument("Series::to_sequence: nonzero constant term");
        return Sequence(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& coeff(std::size_t n) const {
        if (n >= coeffs_.size()) throw std::domain_error("Series::coeff: beyond truncation order");
        return coeffs_[n];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Series truncate(std::size_t order) const {
        std::vector<Rational> c(coeffs_.begin(),
                                coeffs_.begin() + std::min(coeffs_.size(), order + 1));
        return Series(std::move(c), order);
    }

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ",";
            out += to_string(coeffs_[i]);
        }
        return out;
    }

private:
    std::vector<Rational> coeffs_;
};

inline Series add(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Series(std::move(c), n);
}

inline Series sub(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Series(std::move(c), n);
}

inline Series scale(const Series& a, const Rational& r) {
    std::vector<Rational> c(a.coeffs());
    for (auto& v : c) v *= r;
    return Series(std::move(c), a.order());
}

// Cauchy product truncated at min(order_a, order_b).
inline Series mul(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    }
    return Series(std::move(c), n);
}

// F(G(t)); requires G(0) = 0 so powers of G gain a factor of t each.
inline Series compose(const Series& f, const Series& g) {
    if (g.coeff(0) != 0) throw std::invalid_argument("compose: inner series must have zero constant term");
    const std::size_t n = std::min(f.order(), g.order());
    Series out({f.coeff(0)}, n);
    Series p = Series::one(n);
    for (std::size_t k = 1; k <= n; ++k) {
        p = mul(p, g);
        out = add(out, scale(p, f.coeff(k)));
    }
    return out;
}

// log S for S with constant term 1, via log(1+u) = sum (-1)^{k-1} u^k / k.
inline Series log1p(const Series& s) {
    if (s.coeff(0) != 1) throw std::invalid_argument("log1p: constant term must be 1");
    const std::size_t n = s.order();
    std::vector<Rational> uc(s.coeffs());
    uc[0] = 0;
    Series u(std::move(uc), n);
    Series out = Series::zero(n);
    Series p = Series::one(n);
    for (std::size_t k = 1; k <= n; ++k) {
        p = mul(p, u);
        Rational c(1, static_cast<long>(k));
        if (k % 2 == 0) c = -c;
        out = add(out, scale(p, c));
    }
    return out;
}

// exp S for S with zero constant term.
inline Series exp0(const Series& s) {
    if (s.coeff(0) != 0) throw std::invalid_argument("exp0: constant term must be 0");
    const std::size_t n = s.order();
    Series out = Series::one(n);
    Series p = Series::one(n);
    Rational invfact = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        p = mul(p, s);
        invfact /= static_cast<long>(k);
        out = add(out, scale(p, invfact));
    }
    return out;
}

// S^r = exp(r log S) for S with constant term 1 and any rational r.
inline Series pow(const Series& s, const Rational& r) {
    if (s.coeff(0) != 1) throw std::invalid_argument("pow: constant term must be 1");
    return exp0(scale(log1p(s), r));
}

// Compositional inverse via the Bell-polynomial reversion formula: with
// S = t(1 + sum alpha_r t^r / r!) the inverse is u(1 + sum beta_n u^n / n!),
//   beta_n = sum_k (-1)^k (n+k)!/(n+1)! B_{n,k}(alpha).
// General c_1 != 1 handled by conjugating with the linear scaling.
inline Series revert(const Series& s) {
    if (s.coeff(0) != 0) throw std::invalid_argument("revert: constant term must be 0");
    if (s.coeff(1) == 0) throw std::domain_error("revert: vanishing linear coefficient");
    const std::size_t n_ord = s.order();
    const Rational c1 = s.coeff(1);

    std::vector<Rational> alpha;  // alpha_r = r! * (s/c1)_{r+1}
    for (std::size_t r = 1; r + 1 <= n_ord; ++r)
        alpha.push_back(Rational(factorial(static_cast<long>(r))) * (s.coeff(r + 1) / c1));
    Sequence a(std::move(alpha));

    std::vector<Rational> out(n_ord + 1, Rational(0));
    out[1] = 1;
    if (n_ord >= 2) {
        BellTable B(a, n_ord - 1);
        for (std::size_t n = 1; n + 1 <= n_ord; ++n) {
            Rational beta = 0;
            Rational coef = 1;  // (n+k)!/(n+1)!, starting at k = 1
            for (std::size_t k = 1; k <= n; ++k) {
                if (k > 1) coef *= static_cast<long>(n + k);
                Rational term = coef * B.at(n, k);
                beta += (k % 2 == 0) ? term : -term;
            }
            out[n + 1] = beta / Rational(factorial(static_cast<long>(n)));
        }
    }
    // S^{-1}(u) = V^{-1}(u/c1) where V = S/c1.
    Rational p = 1;
    for (std::size_t n = 1; n <= n_ord; ++n) {
        p /= c1;
        out[n] *= p;
    }
    return Series(std::move(out), n_ord);
}

// Independent reversion path: solve S(T) = t coefficient by coefficient.
inline Series revert_iterative(const Series& s) {
    if (s.coeff(0) != 0) throw std::invalid_argument("revert_iterative: constant term must be 0");
    if (s.coeff(1) == 0) throw std::domain_error("revert_iterative: vanishing linear coefficient");
    const std::size_t n_ord = s.order();
    std::vector<Rational> t(n_ord + 1, Rational(0));
    t[1] = Rational(1) / s.coeff(1);
    for (std::size_t n = 2; n <= n_ord; ++n) {
        Series comp = compose(s, Series(std::vector<Rational>(t), n_ord));
        t[n] -= comp.coeff(n) / s.coeff(1);
    }
    return Series(std::move(t), n_ord);
}

}  // namespace bellseq
