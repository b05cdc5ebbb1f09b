#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bellseq/catalog.hpp"
#include "bellseq/identities.hpp"
#include "test_util.hpp"

using namespace bellseq;
using testutil::Rng;

TEST_CASE("interpolation identity, fixed examples") {
    CHECK(check_interpolation({1, 0, -1, 1}, Sequence::ones(5), 0, 5).pass);
    CHECK(check_interpolation({1, 0, -1, 1}, Sequence::ones(5), 7, 5).pass);
    CHECK(check_interpolation({2, 3, Rational(1, 2), -1}, Sequence{1, 2, 3, 4, 5, 6},
                              Rational(-5, 3), 6)
              .pass);
    CHECK_THROWS_AS(check_interpolation({1, 0, 0, 1}, Sequence::ones(5), 1, 5),
                    std::domain_error);
    CHECK_THROWS_AS(check_interpolation({1, 0, -1, 1}, Sequence::ones(3), 1, 5),
                    std::length_error);
}

TEST_CASE("interpolation identity, randomized") {
    Rng rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        BellParams p{testutil::random_rational(rng), testutil::random_rational(rng),
                     testutil::random_nonzero_rational(rng), testutil::random_rational(rng)};
        Sequence x = testutil::random_rational_sequence(rng, 6);
        Rational lambda = testutil::random_rational(rng);
        std::size_t n = 1 + static_cast<std::size_t>(testutil::random_int(rng, 0, 5));
        auto rep = check_interpolation(p, x, lambda, n);
        INFO(rep.str());
        CHECK(rep.pass);
    }
}

TEST_CASE("appendix interpolation, fixed examples") {
    CHECK(check_appendix_interp(AppendixKind::lemma, 1, 0, std::nullopt, Sequence::ones(4), 0, 4)
              .pass);
    CHECK(check_appendix_interp(AppendixKind::minus1, 1, 1, std::nullopt, Sequence::ones(5), 1, 5)
              .pass);
    CHECK(check_appendix_interp(AppendixKind::gamma, 0, 1, Rational(2), Sequence{2, -1, 3, 1, 4},
                                3, 5)
              .pass);
    CHECK_THROWS_AS(
        check_appendix_interp(AppendixKind::gamma, 1, 1, Rational(0), Sequence::ones(4), 1, 4),
        std::domain_error);
    CHECK_THROWS_AS(
        check_appendix_interp(AppendixKind::gamma, 1, 1, std::nullopt, Sequence::ones(4), 1, 4),
        std::invalid_argument);
}

TEST_CASE("appendix interpolation, randomized") {
    Rng rng(103);
    for (AppendixKind kind : {AppendixKind::lemma, AppendixKind::minus1, AppendixKind::gamma}) {
        for (int trial = 0; trial < 10; ++trial) {
            Rational alpha = testutil::random_rational(rng), beta = testutil::random_rational(rng);
            std::optional<Rational> gamma;
            if (kind == AppendixKind::gamma) gamma = testutil::random_nonzero_rational(rng);
            Sequence x = testutil::random_rational_sequence(rng, 5);
            Rational lambda = testutil::random_rational(rng);
            std::size_t n = 1 + static_cast<std::size_t>(testutil::random_int(rng, 0, 4));
            auto rep = check_appendix_interp(kind, alpha, beta, gamma, x, lambda, n);
            INFO(rep.str());
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("generating-function equations, named cases N=12") {
    const std::size_t N = 12;
    Sequence ones = Sequence::ones(N);
    CHECK(check_gf({0, 0, 1, 1}, ones, N).pass);    // invert
    CHECK(check_gf({1, 0, -1, 1}, ones, N).pass);   // noncrossing partition
    CHECK(check_gf({0, 0, -1, 2}, ones, N).pass);   // conv(2)
    CHECK(check_gf({-1, 0, -1, -1}, ones, N).pass); // revert core
    CHECK(check_gf({1, 0, 1, 1}, ones, N).pass);    // dissection

    // exp: c = 0, d != 0 branch, on x_n = 1/n!
    std::vector<Rational> invfact;
    for (long n = 1; n <= static_cast<long>(N); ++n)
        invfact.push_back(Rational(1, Int(factorial(n))));
    CHECK(check_gf({0, 0, 0, 1}, Sequence(std::move(invfact)), N).pass);
}

TEST_CASE("generating-function equations cover all four (c,d) patterns") {
    Rng rng(107);
    Sequence x = testutil::random_rational_sequence(rng, 10);
    CHECK(check_gf({1, 2, -1, 1}, x, 10).pass);  // c!=0, d!=0
    CHECK(check_gf({1, 2, 0, 1}, x, 10).pass);   // c=0,  d!=0
    CHECK(check_gf({1, 2, -1, 0}, x, 10).pass);  // c!=0, d=0
    CHECK(check_gf({1, 2, 0, 0}, x, 10).pass);   // c=0,  d=0
}

TEST_CASE("Tutte planar map equation on pinned prefixes") {
    Registry reg = Registry::standard();
    Sequence b = reg.get_prefix("A000139", 12);
    CHECK(check_gf({2, 0, -1, 1}, b, 12).pass);
    CHECK(bell_transform({2, 0, -1, 1}, b) == reg.get_prefix("A000168", 12));
}

TEST_CASE("invert of ones has closed-form image 2^{n-1}") {
    Sequence y = bell_transform({0, 0, 1, 1}, Sequence::ones(8));
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(y.at(n) == rational_pow(Rational(2), static_cast<long>(n) - 1));
}

TEST_CASE("convolution formula vs brute force") {
    // fixed example: Catalan convolution at r=2, n=2 gives 5
    Sequence ones = Sequence::ones(8);
    CHECK(convolve_bell({1, 0, -1, 1}, ones, 2).at(2) == 5);
    CHECK_THROWS_AS(convolve_bell({1, 0, -1, 0}, ones, 2), std::domain_error);
    CHECK_THROWS_AS(convolve_bell({1, 0, -1, 1}, ones, 0), std::domain_error);

    Rng rng(109);
    for (BellParams p : {BellParams{1, 0, -1, 1}, BellParams{0, 1, -1, 1},
                         BellParams{2, -1, 1, Rational(1, 2)}}) {
        Sequence x = testutil::random_rational_sequence(rng, 8);
        Sequence y = bell_transform(p, x);
        std::vector<Rational> yhat;
        for (std::size_t n = 1; n <= 8; ++n) yhat.push_back(p.d * y.at(n));
        Sequence tail(std::move(yhat));
        for (std::size_t r = 1; r <= 4; ++r)
            CHECK(convolve_bell(p, x, r) == convolution_power(tail, r));
    }
}

TEST_CASE("convolution at r=1 is yhat itself") {
    Rng rng(113);
    BellParams p{1, 1, -1, 2};
    Sequence x = testutil::random_rational_sequence(rng, 6);
    Sequence y = bell_transform(p, x);
    Sequence c = convolve_bell(p, x, 1);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(c.at(n) == p.d * y.at(n));
}

TEST_CASE("ab recurrence") {
    CHECK(ab_recurrence(1, 0, Sequence::ones(4)) == Sequence{1, 2, 5, 14});
    CHECK(ab_recurrence(0, 1, Sequence::ones(5)) == Sequence{1, 2, 4, 8, 16});
    CHECK(ab_recurrence(2, 0, Sequence::ones(4)) == Sequence{1, 3, 12, 55});
    CHECK_THROWS_AS(ab_recurrence(0, 0, Sequence::ones(4)), std::domain_error);
    CHECK_THROWS_AS(ab_recurrence(-1, 1, Sequence::ones(4)), std::domain_error);

    Rng rng(127);
    Sequence x = testutil::random_rational_sequence(rng, 10);
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            CHECK(ab_recurrence(a, b, x) ==
                  bell_transform({Rational(a), Rational(b), -1, 1}, x));
        }
}

TEST_CASE("algebraic relations of the map series") {
    auto cf = check_algebraic_gf(AlgebraicCheck::a257_closed_form, 6);
    INFO(cf.str());
    CHECK(cf.pass);
    auto quad = check_algebraic_gf(AlgebraicCheck::a257_quadratic, 12);
    INFO(quad.str());
    CHECK(quad.pass);
    auto cubic = check_algebraic_gf(AlgebraicCheck::av_cubic, 12);
    INFO(cubic.str());
    CHECK(cubic.pass);
    CHECK_THROWS_AS(check_algebraic_gf(AlgebraicCheck::a257_quadratic, 3), std::domain_error);
}

TEST_CASE("CheckReport records the first witness") {
    CheckReport rep;
    rep.name = "demo";
    rep.record(1, 1, 1);
    CHECK(rep.pass);
    rep.record(2, 3, 4);
    rep.record(3, 9, 9);
    CHECK_FALSE(rep.pass);
    CHECK(*rep.fail_index == 2);
    CHECK(rep.lhs == 3);
    CHECK(rep.rhs == 4);
    CHECK(rep.str().find("FAIL") != std::string::npos);
}
