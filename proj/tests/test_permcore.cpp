#include "schubert/permutation.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace schubert;

namespace {

// Independent oracle: count standard Young tableaux by direct backtracking.
long syt_enumerate(const std::vector<int>& shape) {
    long total = 0;
    for (int part : shape) total += part;
    std::vector<std::vector<int>> grid(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) grid[i].assign(shape[i], 0);
    long count = 0;
    std::function<void(int)> place = [&](int entry) {
        if (entry > total) {
            ++count;
            return;
        }
        for (size_t i = 0; i < grid.size(); ++i)
            for (size_t j = 0; j < grid[i].size(); ++j) {
                if (grid[i][j] != 0) continue;
                if (j > 0 && grid[i][j - 1] == 0) continue;
                if (i > 0 && grid[i - 1][j] == 0) continue;
                grid[i][j] = entry;
                place(entry + 1);
                grid[i][j] = 0;
                // Only the first open cell of each row is a legal spot.
                break;
            }
    };
    place(1);
    return count;
}

}  // namespace

TEST_CASE("parse_permutation") {
    CHECK(parse_permutation("2 3 4 1").one_line() == std::vector<int>{2, 3, 4, 1});
    CHECK(parse_permutation("2,3,4,1").one_line() == std::vector<int>{2, 3, 4, 1});
    CHECK(parse_permutation("2341").one_line() == std::vector<int>{2, 3, 4, 1});
    CHECK(parse_permutation("1") == Permutation::identity(1));
    CHECK_THROWS_WITH_AS(parse_permutation("2 2 3"), "duplicate permutation value: 2",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_permutation("1 2 5"), "permutation value out of range: 5",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_permutation("  "), "empty permutation input",
                         std::invalid_argument);
}

TEST_CASE("composition conventions") {
    const Permutation w = parse_permutation("2341");
    // w t_14 swaps positions 1 and 4; t_14 w swaps the values 1 and 4.
    const Permutation t14 = Permutation::identity(4).swap_positions(1, 4);
    CHECK(w * t14 == parse_permutation("1342"));
    CHECK(t14 * w == parse_permutation("2314"));
    CHECK(w * w.inverse() == Permutation::identity(4));
}

TEST_CASE("length and inversions") {
    CHECK(parse_permutation("2341").length() == 3);
    CHECK(Permutation::identity(5).length() == 0);
    CHECK(parse_permutation("4321").length() == 6);
    const auto inv = parse_permutation("2143").inversions();
    CHECK(inv == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("rank table") {
    const RankTable rk(parse_permutation("2341"));
    const int expected[4][4] = {{0, 0, 0, 1}, {1, 1, 1, 2}, {1, 2, 2, 3}, {1, 2, 3, 4}};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(rk.at(i, j) == expected[i - 1][j - 1]);

    const RankTable id_rk(Permutation::identity(4));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(id_rk.at(i, j) == std::min(i, j));
}

TEST_CASE("rank table round-trips for every permutation up to n=7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_permutations(n)) CHECK(RankTable(w).to_permutation() == w);
}

TEST_CASE("diagram") {
    const Diagram d = diagram(parse_permutation("2341"));
    CHECK(d.cells == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}});
    CHECK(diagram(Permutation::identity(4)).cells.empty());

    const Diagram d2143 = diagram(parse_permutation("2143"));
    CHECK(d2143.cells == std::vector<std::pair<int, int>>{{1, 1}, {3, 3}});
    CHECK(d2143.essential == d2143.cells);

    // The transposed variant is the diagram of the inverse.
    const Permutation w = parse_permutation("35142");
    CHECK(diagram_transposed(w).cells == diagram(w.inverse()).cells);
}

TEST_CASE("diagram size equals length for all n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_permutations(n))
            CHECK(diagram(w).cells.size() == static_cast<size_t>(w.length()));
}

TEST_CASE("flatten") {
    CHECK(flatten({6, 2, 4, 1}) == parse_permutation("4231"));
    CHECK(flatten({1, 2, 3}) == Permutation::identity(3));
    CHECK(flatten({3, 5, 1, 2}) == parse_permutation("3412"));
    CHECK_THROWS_AS(flatten({2, 2}), std::invalid_argument);
    for (const auto& w : all_permutations(5)) CHECK(flatten(w.one_line()) == w);
}

TEST_CASE("reduced words") {
    const auto words321 = reduced_words(parse_permutation("321"));
    CHECK(words321.size() == 2);
    const std::set<ReducedWord> expected{{1, 2, 1}, {2, 1, 2}};
    CHECK(std::set<ReducedWord>(words321.begin(), words321.end()) == expected);

    CHECK(reduced_words(Permutation::identity(3)) == std::vector<ReducedWord>{{}});

    const auto words2341 = reduced_words(parse_permutation("2341"));
    CHECK(std::count(words2341.begin(), words2341.end(), ReducedWord{1, 2, 3}) == 1);

    CHECK(first_reduced_word(parse_permutation("321")) == ReducedWord{1, 2, 1});
    CHECK_THROWS_AS(reduced_words(parse_permutation("54321"), 10), budget_error);
}

TEST_CASE("every reduced word multiplies back to w, at length l(w), no duplicates") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto words = reduced_words(w);
            std::set<ReducedWord> distinct(words.begin(), words.end());
            CHECK(distinct.size() == words.size());
            CHECK(BigInt(words.size()) == reduced_word_count(w));
            for (const auto& word : words) {
                CHECK(static_cast<int>(word.size()) == w.length());
                CHECK(permutation_from_word(word, n) == w);
            }
        }
}

TEST_CASE("syt_count matches direct enumeration") {
    CHECK(syt_count({2, 1}) == 2);
    CHECK(syt_count({7}) == 1);
    CHECK(syt_count({2, 2}) == 2);
    CHECK(syt_count({}) == 1);
    for (const std::vector<int>& shape :
         {std::vector<int>{3, 1}, {3, 2}, {2, 2, 1}, {4, 2, 1}, {3, 3, 2}})
        CHECK(syt_count(shape) == syt_enumerate(shape));
    CHECK_THROWS_AS(syt_count({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(syt_count({2, 0}), std::invalid_argument);
}

TEST_CASE("shape_of_diagram") {
    CHECK(shape_of_diagram(parse_permutation("321")) == std::vector<int>{2, 1});
    CHECK(shape_of_diagram(Permutation::identity(4)).empty());
    CHECK(shape_of_diagram(parse_permutation("2341")) == std::vector<int>{1, 1, 1});
}

TEST_CASE("vexillary reduced word counts match tableau counts up to n=6") {
    // Inline 2143-avoidance scan; the full matcher lives in the patterns
    // module and is tested against its own oracle.
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            bool vexillary = true;
            const auto& e = w.one_line();
            for (int a = 0; a < n && vexillary; ++a)
                for (int b = a + 1; b < n && vexillary; ++b)
                    for (int c = b + 1; c < n && vexillary; ++c)
                        for (int d = c + 1; d < n && vexillary; ++d)
                            if (e[b] < e[a] && e[a] < e[d] && e[d] < e[c]) vexillary = false;
            if (!vexillary) continue;
            CHECK(reduced_word_count(w) == syt_count(shape_of_diagram(w)));
        }
}
