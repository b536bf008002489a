#include "schubert/enumerate.hpp"

#include "schubert/series.hpp"

#include <doctest.h>

using namespace schubert;

TEST_CASE("count mode equals list length for every property up to n=6") {
    for (const auto& name : enumerable_properties())
        for (int n = 1; n <= 6; ++n)
            CHECK(count_property(name, n) == BigInt(list_property(name, n).size()));
}

TEST_CASE("counts are thread-count independent") {
    for (int threads : {1, 2, 5}) {
        CHECK(count_property("smooth", 7, threads) == 1552);
        CHECK(count_property("factorial", 6, threads) == 379);
    }
}

TEST_CASE("expected counts") {
    CHECK(expected_count("smooth", 6) == BigInt(366));
    CHECK(expected_count("boolean", 5) == BigInt(34));
    CHECK(expected_count("inclusions", 4) == count_property("inclusions", 4));
    CHECK(!expected_count("lci", 4).has_value());
}

TEST_CASE("list output is lexicographically sorted") {
    const auto ws = list_property("boolean", 4);
    CHECK(std::is_sorted(ws.begin(), ws.end()));
}

TEST_CASE("hyperoctahedral smoothness counts") {
    // W(B_1) is all smooth; in W(B_2) only (-2,-1) is singular.
    CHECK(count_bn_smooth(1) == 2);
    CHECK(count_bn_smooth(2) == 7);
    CHECK(count_bn_smooth(3, 2) == count_bn_smooth(3));
    CHECK(count_bn_smooth(3) == BigInt(list_bn_smooth(3).size()));
    const auto report = run_enumerate("bn_smooth", 3);
    CHECK(report.rows.back().actual == count_bn_smooth(3));
    CHECK_THROWS_AS(count_bn_smooth(8), budget_error);
}

TEST_CASE("budget and unknown-property errors") {
    CHECK_THROWS_AS(count_property("smooth", 10), budget_error);
    CHECK_THROWS_AS(count_property("mystery", 4), std::invalid_argument);
}

TEST_CASE("run_enumerate reports") {
    const VerificationReport r = run_enumerate("smooth", 5, 2);
    CHECK(r.passed);
    CHECK(r.rows.size() == 5);
    CHECK(r.rows.back().actual == 88);
    REQUIRE(r.rows.back().expected.has_value());
    CHECK(*r.rows.back().expected == 88);
}
