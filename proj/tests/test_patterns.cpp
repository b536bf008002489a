#include "schubert/patterns.hpp"

#include "schubert/permutation.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

using namespace schubert;

namespace {

// Oracle: enumerate all m-subsets of positions and flatten.
std::vector<Occurrence> naive_occurrences(const Permutation& host, const Permutation& pattern) {
    const int n = host.size(), m = pattern.size();
    std::vector<Occurrence> out;
    std::vector<int> idx(m);
    std::function<void(int, int)> go = [&](int k, int from) {
        if (k == m) {
            std::vector<int> vals(m);
            for (int t = 0; t < m; ++t) vals[t] = host(idx[t]);
            if (flatten(vals) == pattern) out.push_back(Occurrence{idx});
            return;
        }
        for (int p = from; p <= n; ++p) {
            idx[k] = p;
            go(k + 1, p + 1);
        }
    };
    go(0, 1);
    return out;
}

}  // namespace

TEST_CASE("classical matcher agrees with the subset oracle for n <= 7, m <= 4") {
    std::vector<Permutation> patterns;
    for (int m = 1; m <= 4; ++m)
        for (const auto& p : all_permutations(m)) patterns.push_back(p);
    for (int n = 1; n <= 7; ++n)
        for (const auto& host : all_permutations(n)) {
            size_t mismatches = 0;
            for (const auto& p : patterns)
                if (occurrences_classical(host, p) != naive_occurrences(host, p)) ++mismatches;
            REQUIRE(mismatches == 0);
        }
}

TEST_CASE("classical examples") {
    const Permutation host = parse_permutation("625431");
    const auto occ = occurrences_classical(host, parse_permutation("4231"));
    const Occurrence expected{{1, 2, 4, 6}};  // values 6 2 4 1
    CHECK(std::count(occ.begin(), occ.end(), expected) == 1);

    CHECK(occurrences_classical(parse_permutation("612543"), parse_permutation("4231")).empty());
    CHECK(occurrences_classical(parse_permutation("612543"), parse_permutation("3412")).empty());

    const Permutation w = parse_permutation("3412");
    const auto self = occurrences_classical(w, w);
    REQUIRE(self.size() == 1);
    CHECK(self.front().positions == std::vector<int>{1, 2, 3, 4});

    CHECK(occurrences_classical(parse_permutation("123"), parse_permutation("4321")).empty());
}

TEST_CASE("occurrence limit") {
    const auto some = occurrences_classical(parse_permutation("654321"), parse_permutation("21"), 3);
    CHECK(some.size() == 3);
}

TEST_CASE("adjacency containment") {
    const PatternSpec spec = parse_pattern_spec("3_41_2");
    CHECK(spec.kind == PatternKind::adjacency);
    CHECK(spec.pattern == parse_permutation("3412"));
    CHECK(spec.adjacency_pairs == std::vector<std::pair<int, int>>{{2, 3}});

    CHECK(contains_adjacency(parse_permutation("3412"), spec));
    CHECK(contains_adjacency(parse_permutation("35142"), spec));

    // Oracle comparison: an occurrence with consecutive middle positions.
    for (int n = 4; n <= 6; ++n)
        for (const auto& host : all_permutations(n)) {
            bool expected = false;
            for (const auto& occ : naive_occurrences(host, spec.pattern))
                if (occ.positions[2] == occ.positions[1] + 1) expected = true;
            CHECK(contains_adjacency(host, spec) == expected);
        }
}

TEST_CASE("bruhat-restricted containment") {
    const PatternSpec p35142 = parse_pattern_spec("35142!t15,t23");
    CHECK(p35142.kind == PatternKind::bruhat_restricted);
    CHECK(p35142.restrictions == std::vector<std::pair<int, int>>{{1, 5}, {2, 3}});
    CHECK(contains_bruhat_restricted(parse_permutation("35142"), p35142));

    const PatternSpec p42513 = parse_pattern_spec("42513!t15,t34");

    // Both underlying patterns contain 3412 or 4231, so smooth hosts avoid
    // them outright.
    for (const auto& base : {parse_permutation("35142"), parse_permutation("42513")})
        CHECK((contains_classical(base, parse_permutation("3412")) ||
               contains_classical(base, parse_permutation("4231"))));
    for (int n = 4; n <= 6; ++n)
        for (const auto& host : all_permutations(n)) {
            if (contains_classical(host, parse_permutation("3412")) ||
                contains_classical(host, parse_permutation("4231")))
                continue;
            CHECK(!contains_bruhat_restricted(host, p35142));
            CHECK(!contains_bruhat_restricted(host, p42513));
        }

    // Length-difference oracle on a bigger host.
    const Permutation host = parse_permutation("351624");
    bool expected = false;
    for (const auto& occ : naive_occurrences(host, p35142.pattern)) {
        bool ok = true;
        for (auto [a, b] : p35142.restrictions) {
            const Permutation ht = host.swap_positions(occ.positions[a - 1], occ.positions[b - 1]);
            const Permutation pt = p35142.pattern.swap_positions(a, b);
            ok = ok && (ht.length() - host.length() == pt.length() - p35142.pattern.length());
        }
        if (ok) expected = true;
    }
    CHECK(contains_bruhat_restricted(host, p35142) == expected);
}

TEST_CASE("adjacency and restriction imply classical containment") {
    const PatternSpec adj = parse_pattern_spec("3_41_2");
    const PatternSpec res = parse_pattern_spec("35142!t15,t23");
    for (const auto& host : all_permutations(5)) {
        if (contains_adjacency(host, adj)) CHECK(contains_classical(host, adj.pattern));
        if (contains_bruhat_restricted(host, res)) CHECK(contains_classical(host, res.pattern));
    }
}

TEST_CASE("interval pattern embedding") {
    const Permutation u = parse_permutation("3142"), v = parse_permutation("3412");
    auto self = interval_embeds(u, v, u, v);
    REQUIRE(self.has_value());
    CHECK(self->positions == std::vector<int>{1, 2, 3, 4});

    // Valid flattenings exist but the length gap is 3, not 1: no embedding.
    CHECK(!interval_embeds(u, v, parse_permutation("13245"), parse_permutation("34125"))
               .has_value());

    const Permutation x = parse_permutation("2143"), y = parse_permutation("4231");
    auto emb = interval_embeds(x, y, x, y);
    REQUIRE(emb.has_value());
    CHECK(emb->positions == std::vector<int>{1, 2, 3, 4});
    CHECK(y.length() - x.length() == 3);

    CHECK_THROWS_AS(interval_embeds(v, u, x, y), std::invalid_argument);
}

TEST_CASE("interval embedding output is re-checkable") {
    const Permutation u = parse_permutation("1324"), v = parse_permutation("3412");
    for (const auto& y : all_permutations(5)) {
        // Build x from y by rearranging a chosen occurrence of v to u.
        for (const auto& occ : occurrences_classical(y, v)) {
            std::vector<int> vals(4);
            for (int k = 0; k < 4; ++k) vals[k] = y(occ.positions[k]);
            std::vector<int> sorted = vals;
            std::sort(sorted.begin(), sorted.end());
            auto entries = y.one_line();
            for (int k = 0; k < 4; ++k) entries[occ.positions[k] - 1] = sorted[u(k + 1) - 1];
            const Permutation x(entries);
            if (y.length() - x.length() != v.length() - u.length()) continue;
            auto emb = interval_embeds(u, v, x, y);
            REQUIRE(emb.has_value());
            std::vector<int> xv(4), yv(4);
            for (int k = 0; k < 4; ++k) {
                xv[k] = x(emb->positions[k]);
                yv[k] = y(emb->positions[k]);
            }
            CHECK(flatten(xv) == u);
            CHECK(flatten(yv) == v);
        }
    }
}

TEST_CASE("signed containment") {
    CHECK(signed_contains(parse_signed_permutation("(-2,-1)"), parse_signed_permutation("(-2,-1)")));
    CHECK(!signed_contains(parse_signed_permutation("(-1,-2)"), parse_signed_permutation("(-2,-1)")));
    CHECK(signed_contains(parse_signed_permutation("(3,-2,1)"), parse_signed_permutation("(3,-2,1)")));
    CHECK(signed_contains(parse_signed_permutation("(4,-3,1,2)"), parse_signed_permutation("(3,-2,1)")));
    CHECK(!signed_contains(parse_signed_permutation("(1,2,3)"), parse_signed_permutation("(-1)")));
}

TEST_CASE("avoidance is downward monotone across the geometric pattern lists") {
    const std::vector<Permutation> lci = {parse_permutation("53241"), parse_permutation("52341"),
                                          parse_permutation("52431"), parse_permutation("35142"),
                                          parse_permutation("42513"), parse_permutation("426153")};
    const Permutation p3412 = parse_permutation("3412");
    const Permutation p4231 = parse_permutation("4231");
    for (const auto& q : lci)
        CHECK((contains_classical(q, p3412) || contains_classical(q, p4231)));
    // If host avoids p and q contains p, host avoids q.
    for (const auto& host : all_permutations(6)) {
        const bool smooth = !contains_classical(host, p3412) && !contains_classical(host, p4231);
        if (!smooth) continue;
        for (const auto& q : lci) CHECK(!contains_classical(host, q));
    }
}

TEST_CASE("pattern spec parsing") {
    CHECK(parse_pattern_spec("3412").kind == PatternKind::classical);
    const PatternSpec interval = parse_pattern_spec("[3142,3412]");
    CHECK(interval.kind == PatternKind::interval);
    CHECK(interval.lower == parse_permutation("3142"));
    CHECK(interval.pattern == parse_permutation("3412"));
    const PatternSpec sp = parse_pattern_spec("(-2,-1)");
    CHECK(sp.kind == PatternKind::signed_kind);
    CHECK(sp.signed_pattern == parse_signed_permutation("-2,-1"));
    CHECK_THROWS_AS(parse_pattern_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern_spec("3_41"), std::invalid_argument);
    CHECK_THROWS_AS(parse_pattern_spec("35142!x15"), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::bruhat_restricted(parse_permutation("3412"), {{3, 2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::adjacency(parse_permutation("3412"), {{2, 4}}),
                    std::invalid_argument);
}
