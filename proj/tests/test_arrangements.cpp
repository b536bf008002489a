#include "schubert/arrangements.hpp"

#include "schubert/bruhat.hpp"
#include "schubert/properties.hpp"

#include <doctest.h>

using namespace schubert;

TEST_CASE("region counts") {
    CHECK(region_count(parse_permutation("321")) == 6);
    CHECK(region_count(Permutation::identity(4)) == 1);
    CHECK(region_count(parse_permutation("3412")) == 14);
    CHECK(BruhatInterval(Permutation::identity(4), parse_permutation("3412")).size() == 14);
    CHECK_THROWS_AS(region_count(parse_permutation("654321"), 10), budget_error);
}

TEST_CASE("region distance generating function") {
    CHECK(region_distance_gf(parse_permutation("321")) ==
          IntPolynomial(std::vector<BigInt>{1, 2, 2, 1}));
    CHECK(region_distance_gf(parse_permutation("321")) == poincare(parse_permutation("321")));
    CHECK(region_distance_gf(Permutation::identity(3)) == IntPolynomial(1));
    CHECK(region_distance_gf(parse_permutation("3412")) != poincare(parse_permutation("3412")));

    // R_w(1) equals the region count.
    for (const auto& w : all_permutations(4))
        CHECK(region_distance_gf(w).evaluate(1) == region_count(w));
}

TEST_CASE("region orientations are acyclic and the tsv is well formed") {
    const Permutation w = parse_permutation("4231");
    const auto rs = regions(w);
    CHECK(BigInt(rs.size()) == region_count(w));
    const std::string tsv = regions_tsv(w);
    CHECK(tsv.find("1,2") == 0);
    // One header plus one row per region.
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == static_cast<long>(rs.size()) + 1);
}

TEST_CASE("hlss equality hits exactly the four-pattern class, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            const BigInt r = region_count(w);
            const BigInt b = BruhatInterval(Permutation::identity(n), w).size();
            CHECK(r <= b);
            CHECK((r == b) == is_defined_by_inclusions(w));
        }
}

TEST_CASE("matrix counting over small fields") {
    CHECK(matcount_fq(2, {}, 2, 2) == 6);
    CHECK(matcount_fq(3, {}, 2, 3) == 168);
    // A fully forbidden row kills full rank.
    CHECK(matcount_fq(3, {{1, 1}, {1, 2}, {1, 3}}, 2, 3) == 0);
    // Transposing the forbidden set preserves every rank count.
    const std::vector<std::pair<int, int>> cells = {{1, 2}, {2, 3}, {3, 3}};
    std::vector<std::pair<int, int>> transposed;
    for (auto [i, j] : cells) transposed.emplace_back(j, i);
    for (int r = 0; r <= 3; ++r)
        CHECK(matcount_fq(3, cells, 3, r) == matcount_fq(3, transposed, 3, r));
    CHECK_THROWS_AS(matcount_fq(3, {}, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(matcount_fq(5, {}, 5, 5), budget_error);
}

TEST_CASE("rank counts sum to the full space") {
    BigInt total = 0;
    for (int r = 0; r <= 3; ++r) total += matcount_fq(3, {{1, 1}}, 2, r);
    CHECK(total == BigInt(1) << 8);
}

TEST_CASE("lewis-morales identity") {
    // Identity in S2 at q = 2: both sides are 6.
    const auto rep = lewis_morales_reports(Permutation::identity(2), {2});
    REQUIRE(rep.size() == 1);
    CHECK(rep[0].lhs == 6);
    CHECK(rep[0].rhs == 6);

    for (const auto& w : all_permutations(3)) CHECK(lewis_morales_check(w, {2, 3, 5}));

    // 1324 contains the reversed-pattern obstruction; the identity must fail.
    CHECK(!lewis_morales_check(parse_permutation("1324"), {2}));
}
