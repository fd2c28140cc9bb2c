#include <random>

#include <gtest/gtest.h>

#include "secv/series.hpp"

using namespace secv;

namespace {

TruncatedSeries series_of(std::vector<Rational> coeff) {
    return TruncatedSeries::from_coefficients(std::move(coeff));
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    TruncatedSeries s(order);
    for (int i = 0; i <= order; ++i)
        s.set_coefficient(i, Rational(num(rng)) / den(rng));
    if (unit_constant)
        while (s[0] == 0)
            s.set_coefficient(0, Rational(num(rng)) / den(rng));
    return s;
}

} // namespace

TEST(Series, Multiply) {
    const auto a = series_of({1, 1, 0});  // 1 + t
    const auto b = series_of({1, -1, 0}); // 1 - t
    EXPECT_EQ(a * b, series_of({1, 0, -1}));

    const auto c = series_of({1, 1, 1});
    EXPECT_EQ(c * TruncatedSeries::constant(1, 2), c);

    // truncation to the smaller order
    const auto d = series_of({1, Rational(-1) / 2, Rational(1) / 4});
    const auto e = series_of({1, Rational(1) / 2});
    EXPECT_EQ(d * e, series_of({1, 0}));
}

TEST(Series, Inverse) {
    // total Chern class of the tangent sheaf of the projective plane
    const auto chern = series_of({1, 3, 3});
    const auto segre = inverse(chern);
    EXPECT_EQ(segre, series_of({1, -3, 6}));
    EXPECT_EQ(chern * segre, series_of({1, 0, 0}));

    EXPECT_EQ(inverse(TruncatedSeries::constant(2, 3)),
              TruncatedSeries::constant(Rational(1) / 2, 3));

    EXPECT_THROW(inverse(series_of({0, 1})), NonUnitConstantTerm);
}

TEST(Series, InverseIsInvolution) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_series(rng, 8, true);
        ASSERT_EQ(inverse(inverse(s)), s);
    }
}

TEST(Series, ExpScaled) {
    EXPECT_EQ(exp_scaled(-1, 3),
              series_of({1, -1, Rational(1) / 2, Rational(-1) / 6}));
    EXPECT_EQ(exp_scaled(0, 5), TruncatedSeries::constant(1, 5));

    // (1/2)(1 + e^{-t}) = 1 - t/2 + t^2/4 - t^3/12 + ...
    const auto half_sum =
        Rational(1, 2) * (TruncatedSeries::constant(1, 3) + exp_scaled(-1, 3));
    EXPECT_EQ(half_sum,
              series_of({1, Rational(-1) / 2, Rational(1) / 4, Rational(-1) / 12}));
}

TEST(Series, DivideByVariable) {
    const auto s = series_of({0, 1, 2, 3});
    EXPECT_EQ(divide_by_variable(s), series_of({1, 2, 3}));
    EXPECT_THROW(divide_by_variable(series_of({1, 2})), InvalidArgument);
    EXPECT_THROW(divide_by_variable(series_of({5})), InvalidArgument);
}

TEST(Series, ToddIdentity) {
    EXPECT_TRUE(todd_identity_check(1));
    EXPECT_TRUE(todd_identity_check(12));
    EXPECT_TRUE(todd_identity_check(20));
    for (int k = 1; k <= 24; ++k)
        ASSERT_TRUE(todd_identity_check(k)) << "order " << k;
    EXPECT_THROW(todd_identity_check(0), InvalidArgument);
}

TEST(Series, DegreeOneExtraction) {
    // The t-coefficient of (1 + t) * (1/2)(1 + e^{-t}) is 1 - 1/2: with the
    // pushforward conventions rho_*(pullback of h_1) = H and rho_* E =
    // 2 delta, this is the first Chern class H - delta of the rank-2
    // tautological bundle.
    const auto half_sum =
        Rational(1, 2) * (TruncatedSeries::constant(1, 3) + exp_scaled(-1, 3));
    const auto product = series_of({1, 1, 0, 0}) * half_sum;
    EXPECT_EQ(product[1], Rational(1) - Rational(1) / 2);
}

TEST(Series, SegreFromChern) {
    const std::vector<Rational> plane = {1, 3, 3};
    EXPECT_EQ(segre_from_chern(plane, 2), (std::vector<Rational>{1, -3, 6}));

    const std::vector<Rational> trivial = {1};
    EXPECT_EQ(segre_from_chern(trivial, 3), (std::vector<Rational>{1, 0, 0, 0}));

    // projective line: deg s_1(T_C) = 2g - 2 = -2 at g = 0
    const std::vector<Rational> line = {1, 2};
    EXPECT_EQ(segre_from_chern(line, 1), (std::vector<Rational>{1, -2}));

    EXPECT_THROW(segre_from_chern({2, 1}, 2), InvalidArgument);
    EXPECT_THROW(segre_from_chern({}, 2), InvalidArgument);
    EXPECT_THROW(segre_from_chern({1, 1, 1, 1}, 2), InvalidArgument);
}

TEST(Series, ChernSegreRoundTrip) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto chern = random_series(rng, n, false);
        chern.set_coefficient(0, 1);
        std::vector<Rational> chern_coeff;
        for (int i = 0; i <= n; ++i)
            chern_coeff.push_back(chern[i]);
        const auto segre = segre_from_chern(chern_coeff, n);
        const auto back = segre_from_chern(segre, n);
        ASSERT_EQ(back, chern_coeff);
    }
}
