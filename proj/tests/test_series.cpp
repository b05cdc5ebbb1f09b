#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bellseq/series.hpp"
#include "test_util.hpp"

using namespace bellseq;
using testutil::Rng;

namespace {
Series random_series_c0(Rng& rng, std::size_t order, const Rational& c0) {
    std::vector<Rational> c(order + 1);
    c[0] = c0;
    for (std::size_t i = 1; i <= order; ++i) c[i] = testutil::random_rational(rng, -3, 3, 3);
    return Series(std::move(c), order);
}
}  // namespace

TEST_CASE("sequence round trip") {
    Sequence x{1, 1, 1};
    Series s = Series::from_sequence(x);
    CHECK(s.order() == 3);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(3) == 1);
    CHECK(s.to_sequence() == x);
    CHECK_THROWS_AS(Series({1, 1}, 1).to_sequence(), std::invalid_argument);
}

TEST_CASE("mul") {
    Series a({1, 1}, 3), b({1, -1}, 3);
    CHECK(mul(a, b) == Series({1, 0, -1}, 3));
    CHECK(mul(Series::t(3), Series::t(3)) == Series({0, 0, 1}, 3));
    Series cat({1, 1, 2, 5}, 3);
    CHECK(mul(cat, cat).coeff(2) == 5);
}

TEST_CASE("binary operations truncate to the minimum order") {
    Series a({1, 1, 1, 1, 1}, 4), b({1, 2}, 2);
    CHECK(add(a, b).order() == 2);
    CHECK(mul(a, b).order() == 2);
    CHECK(sub(a, b) == Series({0, -1, 1}, 2));
    CHECK(scale(b, Rational(1, 2)) == Series({Rational(1, 2), 1, 0}, 2));
}

TEST_CASE("compose") {
    Series geom({1, 1, 1, 1, 1, 1}, 5);
    CHECK(compose(geom, Series::t(5)) == geom);
    CHECK(compose(Series({0, 1, 1}, 2), Series({0, 2}, 2)) == Series({0, 2, 4}, 2));
    // X = t/(1-t); X(X(t)) = t/(1-2t)
    Series X({0, 1, 1, 1, 1, 1, 1}, 6);
    Series XX = compose(X, X);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(XX.coeff(n) == rational_pow(Rational(2), static_cast<long>(n) - 1));
    CHECK_THROWS_AS(compose(X, geom), std::invalid_argument);
}

TEST_CASE("log1p and exp0") {
    Series l = log1p(Series({1, 1}, 4));
    CHECK(l == Series({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)}, 4));
    Series e = exp0(Series::t(4));
    CHECK(e == Series({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}, 4));
    Series s({1, 1, 3}, 5);
    CHECK(exp0(log1p(s)) == s.truncate(5));
    CHECK_THROWS_AS(log1p(Series::t(3)), std::invalid_argument);
    CHECK_THROWS_AS(exp0(Series::one(3)), std::invalid_argument);
}

TEST_CASE("pow") {
    CHECK(pow(Series({1, 1}, 2), 2) == Series({1, 2, 1}, 2));
    Series p = pow(Series({1, -8}, 3), Rational(3, 2));
    CHECK(p == Series({1, -12, 24, 32}, 3));
    // integer power agrees with repeated multiplication
    Rng rng(29);
    Series s = random_series_c0(rng, 8, 1);
    CHECK(pow(s, 3) == mul(s, mul(s, s)));
    // cube-root round trip
    CHECK(pow(pow(s, Rational(1, 3)), 3) == s);
    CHECK_THROWS_AS(pow(Series::t(3), 2), std::invalid_argument);
}

TEST_CASE("pow multiplicativity") {
    Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        Series s = random_series_c0(rng, 8, 1);
        Rational r = testutil::random_rational(rng), q = testutil::random_rational(rng);
        CHECK(mul(pow(s, r), pow(s, q)) == pow(s, r + q));
    }
}

TEST_CASE("revert basic values") {
    CHECK(revert(Series::t(5)) == Series::t(5));
    // revert(t/(1-t)) = t/(1+t)
    Series X({0, 1, 1, 1, 1, 1}, 5);
    Series T = revert(X);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(T.coeff(n) == (n % 2 == 1 ? 1 : -1));
    // revert(t e^t) = t - t^2 + (3/2) t^3 - ...
    Series te({0, 1, 1, Rational(1, 2), Rational(1, 6)}, 4);
    Series W = revert(te);
    CHECK(W.coeff(1) == 1);
    CHECK(W.coeff(2) == -1);
    CHECK(W.coeff(3) == Rational(3, 2));
    CHECK_THROWS_AS(revert(Series::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(revert(Series({0, 0, 1}, 3)), std::domain_error);
}

TEST_CASE("revert round trips through compose") {
    Rng rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        Series s = random_series_c0(rng, 12, 0);
        std::vector<Rational> c = s.coeffs();
        c[1] = 1;
        Series u(std::move(c), 12);
        Series v = revert(u);
        CHECK(compose(u, v) == Series::t(12));
        CHECK(compose(v, u) == Series::t(12));
    }
}

TEST_CASE("two reversion routes agree, including c1 != 1") {
    Rng rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        Series s = random_series_c0(rng, 12, 0);
        std::vector<Rational> c = s.coeffs();
        c[1] = testutil::random_nonzero_rational(rng);
        Series u(std::move(c), 12);
        CHECK(revert(u) == revert_iterative(u));
        CHECK(compose(u, revert(u)) == Series::t(12));
    }
}
