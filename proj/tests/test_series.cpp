#include "schubert/series.hpp"

#include <doctest.h>

using namespace schubert;

TEST_CASE("square root series") {
    const auto s = PowerSeries::sqrt_one_minus_4t(6);
    const std::vector<long> expected = {1, -2, -2, -4, -10, -28, -84};
    for (int k = 0; k <= 6; ++k) CHECK(s.coefficients()[k] == expected[k]);
    // Squaring recovers 1 - 4t.
    const auto sq = s * s;
    CHECK(sq.coefficients()[0] == 1);
    CHECK(sq.coefficients()[1] == -4);
    for (int k = 2; k <= 6; ++k) CHECK(sq.coefficients()[k] == 0);
}

TEST_CASE("series division") {
    // (1 - t)^{-1}.
    const auto geo = PowerSeries::constant(8, 1) / PowerSeries::polynomial(8, {1, -1});
    for (int k = 0; k <= 8; ++k) CHECK(geo.coefficients()[k] == 1);
    CHECK_THROWS_AS(PowerSeries::polynomial(4, {1}) / PowerSeries::polynomial(4, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("catalan series") {
    const auto c = gf_series(SeriesKind::catalan, 5);
    CHECK(c == std::vector<BigInt>{1, 1, 2, 5, 14, 42});
}

TEST_CASE("smooth count series") {
    const auto v = gf_series(SeriesKind::smooth, 8);
    CHECK(v == std::vector<BigInt>{1, 1, 2, 6, 22, 88, 366, 1552, 6652});
}

TEST_CASE("factorial count series") {
    const auto f = gf_series(SeriesKind::factorial, 8);
    CHECK(f == std::vector<BigInt>{0, 1, 2, 6, 22, 89, 379, 1661, 7405});
}

TEST_CASE("nmax guard") {
    CHECK_THROWS_AS(gf_series(SeriesKind::smooth, 65), std::invalid_argument);
    CHECK_THROWS_AS(gf_series(SeriesKind::smooth, -1), std::invalid_argument);
}

TEST_CASE("series kind names") {
    CHECK(series_kind_from_name("inclusions") == SeriesKind::inclusions);
    CHECK_THROWS_AS(series_kind_from_name("unknown"), std::invalid_argument);
}
