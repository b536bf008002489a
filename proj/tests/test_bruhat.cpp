#include "schubert/bruhat.hpp"

#include "schubert/patterns.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace schubert;

namespace {

std::set<Permutation> to_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

// Subword-property oracle: the lower interval of w is everything reachable by
// products of subwords of one reduced word.
PermSet subword_interval(const Permutation& w) {
    PermSet elems;
    elems.insert(Permutation::identity(w.size()));
    for (int i : first_reduced_word(w)) {
        std::vector<Permutation> bumped;
        for (const auto& v : elems) bumped.push_back(v.swap_positions(i, i + 1));
        for (auto& v : bumped) elems.insert(std::move(v));
    }
    return elems;
}

}  // namespace

TEST_CASE("bruhat_leq basics") {
    CHECK(bruhat_leq(parse_permutation("1324"), parse_permutation("3412")));
    CHECK(!bruhat_leq(parse_permutation("231"), parse_permutation("312")));
    CHECK(!bruhat_leq(parse_permutation("312"), parse_permutation("231")));
    const Permutation w = parse_permutation("45312");
    CHECK(bruhat_leq(w, w));
    CHECK(bruhat_leq(parse_permutation("21"), parse_permutation("4321")));  // size embedding
}

TEST_CASE("bruhat_leq matches the subword criterion up to n=6") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            const PermSet below = subword_interval(w);
            for (const auto& x : all_permutations(n))
                CHECK(bruhat_leq(x, w) == (below.count(x) > 0));
        }
}

TEST_CASE("covers_down") {
    CHECK(to_set(covers_down(parse_permutation("3412"))) ==
          to_set({parse_permutation("3142"), parse_permutation("3214"),
                  parse_permutation("1432"), parse_permutation("2413")}));
    CHECK(covers_down(Permutation::identity(4)).empty());
    CHECK(covers_down(parse_permutation("4231")).size() == 4);

    // Oracle: all w t_ij one length step down.
    for (const auto& w : all_permutations(5)) {
        std::set<Permutation> expected;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                const Permutation v = w.swap_positions(i, j);
                if (v.length() == w.length() - 1) expected.insert(v);
            }
        CHECK(to_set(covers_down(w)) == expected);
    }
}

TEST_CASE("intervals") {
    const BruhatInterval i3412(Permutation::identity(4), parse_permutation("3412"));
    CHECK(i3412.size() == 14);
    CHECK(i3412.rank_sizes() == std::vector<BigInt>{1, 3, 5, 4, 1});

    const Permutation w = parse_permutation("45312");
    CHECK(BruhatInterval(w, w).size() == 1);
    CHECK(BruhatInterval(Permutation::identity(4), parse_permutation("4321")).size() == 24);
    CHECK_THROWS_AS(BruhatInterval(parse_permutation("231"), parse_permutation("312")),
                    std::invalid_argument);

    // Graded: every cover drops length by exactly one.
    const BruhatInterval upper(parse_permutation("1324"), parse_permutation("3412"));
    for (const auto& [v, u] : upper.covers()) CHECK(u.length() + 1 == v.length());
    for (const auto& v : upper.elements()) CHECK(bruhat_leq(parse_permutation("1324"), v));
}

TEST_CASE("poincare polynomials") {
    CHECK(poincare(parse_permutation("3412")) ==
          IntPolynomial(std::vector<BigInt>{1, 3, 5, 4, 1}));
    CHECK(poincare(parse_permutation("4321")) ==
          IntPolynomial(std::vector<BigInt>{1, 3, 5, 6, 5, 3, 1}));
    CHECK(poincare(Permutation::identity(3)) == IntPolynomial(1));
    CHECK(is_palindromic(poincare(parse_permutation("4321"))));
    CHECK(!is_palindromic(poincare(parse_permutation("3412"))));

    auto f4321 = factor_q_integers(poincare(parse_permutation("4321")));
    REQUIRE(f4321.has_value());
    CHECK(*f4321 == std::vector<int>{3, 2, 1});
    CHECK(!factor_q_integers(poincare(parse_permutation("3412"))).has_value());
}

TEST_CASE("tangent dimensions") {
    CHECK(tangent_dimension(Permutation::identity(4), parse_permutation("4231")) == 6);
    CHECK(tangent_dimension(parse_permutation("2143"), parse_permutation("4231")) == 6);
    for (const auto& w : all_permutations(3)) CHECK(tangent_dimension(w, w) == w.length());
    CHECK_THROWS_AS(tangent_dimension(parse_permutation("4231"), parse_permutation("2143")),
                    std::invalid_argument);
}

TEST_CASE("bruhat graph") {
    const BruhatGraph g4321 = bruhat_graph(parse_permutation("4321"));
    CHECK(g4321.vertices.size() == 24);
    CHECK(g4321.is_regular_of_degree(6));

    const BruhatGraph trivial = bruhat_graph(Permutation::identity(3));
    CHECK(trivial.vertices.size() == 1);
    CHECK(trivial.edges.empty());

    const BruhatGraph g4231 = bruhat_graph(parse_permutation("4231"));
    const auto it = std::find(g4231.vertices.begin(), g4231.vertices.end(),
                              parse_permutation("2143"));
    REQUIRE(it != g4231.vertices.end());
    CHECK(g4231.degree(static_cast<int>(it - g4231.vertices.begin())) == 6);
    CHECK(!g4231.is_regular_of_degree(parse_permutation("4231").length()));

    // degree(v) = dim T_v for every vertex.
    for (size_t k = 0; k < g4231.vertices.size(); ++k)
        CHECK(g4231.degree(static_cast<int>(k)) ==
              tangent_dimension(g4231.vertices[k], parse_permutation("4231")));
}

TEST_CASE("singular locus oracle") {
    CHECK(to_set(singular_locus(parse_permutation("4231"))) == to_set({parse_permutation("2143")}));
    CHECK(to_set(singular_locus(parse_permutation("3412"))) == to_set({parse_permutation("1324")}));
    CHECK(singular_locus(parse_permutation("4132")).empty());
    CHECK(singular_locus(Permutation::identity(5)).empty());
}

TEST_CASE("pattern construction matches the oracle up to n=7 and codimension is at least 3") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto oracle = singular_locus(w);
            CHECK(singular_locus_by_patterns(w) == oracle);
            if (n <= 6)
                for (const auto& v : oracle) CHECK(w.length() - v.length() >= 3);
        }
}

TEST_CASE("oracle and pattern construction agree on sampled S8 elements") {
    std::mt19937_64 rng(777);
    std::vector<int> e(8);
    std::iota(e.begin(), e.end(), 1);
    for (int t = 0; t < 60; ++t) {
        std::shuffle(e.begin(), e.end(), rng);
        const Permutation w(e);
        CHECK(singular_locus_by_patterns(w) == singular_locus(w));
    }
}

TEST_CASE("the rotated 6241 point of 625431 is singular, below a component") {
    const auto locus = singular_locus_by_patterns(parse_permutation("625431"));
    REQUIRE(!locus.empty());
    bool dominated = false;
    for (const auto& m : locus)
        if (bruhat_leq(parse_permutation("215634"), m)) dominated = true;
    CHECK(dominated);
}

TEST_CASE("essential sets") {
    CHECK(essential_set_E(parse_permutation("4321"), 4).empty());
    CHECK(to_set(essential_set_E(parse_permutation("2143"), 4)) ==
          to_set({parse_permutation("1324")}));
    CHECK(to_set(essential_set_E(parse_permutation("3412"), 4)) ==
          to_set({parse_permutation("2341"), parse_permutation("4123")}));

    for (int n = 2; n <= 6; ++n)
        for (const auto& w : all_permutations(n))
            for (const auto& v : essential_set_E(w, n)) CHECK(is_bigrassmannian(v));
}

TEST_CASE("essential set count matches the essential cells of the complement diagram") {
    // |E(w)| = |Ess(D(w0 w))| for the small verified instances.
    auto complement = [](const Permutation& w) {
        std::vector<int> e(w.size());
        for (int i = 1; i <= w.size(); ++i) e[i - 1] = w.size() + 1 - w(i);
        return Permutation(e);
    };
    for (const auto& text : {"2143", "3412", "1324", "4231", "2413"}) {
        const Permutation w = parse_permutation(text);
        CHECK(essential_set_E(w, 4).size() == diagram(complement(w)).essential.size());
    }
}

TEST_CASE("dot output") {
    const std::string dot = bruhat_graph(parse_permutation("321")).to_dot();
    CHECK(dot.find("graph bruhat") != std::string::npos);
    CHECK(dot.find("\"3 2 1\"") != std::string::npos);
    const std::string hasse =
        BruhatInterval(Permutation::identity(3), parse_permutation("321")).to_dot();
    CHECK(hasse.find("digraph interval") != std::string::npos);
}
