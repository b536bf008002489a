#include "schubert/verify.hpp"

#include "schubert/arrangements.hpp"
#include "schubert/bruhat.hpp"
#include "schubert/coxeter.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/hecke.hpp"
#include "schubert/patterns.hpp"
#include "schubert/properties.hpp"
#include "schubert/series.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

namespace schubert {

namespace {

using Clock = std::chrono::steady_clock;

bool smooth_counts(int threads) {
    const auto series = gf_series(SeriesKind::smooth, 8);
    const std::vector<BigInt> expected = {1, 1, 2, 6, 22, 88, 366, 1552, 6652};
    if (series != expected) return false;
    for (int n = 1; n <= 8; ++n)
        if (count_property("smooth", n, threads) != expected[n]) return false;
    return true;
}

bool factorial_counts(int threads) {
    const auto series = gf_series(SeriesKind::factorial, 8);
    const std::vector<BigInt> expected = {0, 1, 2, 6, 22, 89, 379, 1661, 7405};
    if (series != expected) return false;
    for (int n = 1; n <= 8; ++n)
        if (count_property("factorial", n, threads) != expected[n]) return false;
    return true;
}

bool boolean_counts(int threads) {
    const std::vector<BigInt> fib = {1, 2, 5, 13, 34, 89, 233, 610};  // F_{2n-1}
    for (int n = 1; n <= 8; ++n) {
        if (count_property("boolean", n, threads) != fib[n - 1]) return false;
        if (expected_count("boolean", n) != fib[n - 1]) return false;
    }
    return true;
}

bool s5_kl_table() {
    const std::vector<std::string> q_plus_1 = {
        "14523", "15342", "24513", "25341", "34125", "34152", "35124", "35142", "35241",
        "35412", "41523", "42315", "42351", "42513", "42531", "43512", "45132", "45213",
        "51342", "52314", "52413", "52431", "53142", "53241", "53421", "54231"};
    const std::vector<std::string> two_q_plus_1 = {"34512", "45123", "45231", "53412"};

    std::map<Permutation, IntPolynomial> expected;
    for (const auto& t : q_plus_1)
        expected[parse_permutation(t)] = IntPolynomial(std::vector<BigInt>{1, 1});
    for (const auto& t : two_q_plus_1)
        expected[parse_permutation(t)] = IntPolynomial(std::vector<BigInt>{1, 2});
    expected[parse_permutation("52341")] = IntPolynomial(std::vector<BigInt>{1, 2, 1});
    expected[parse_permutation("45312")] = IntPolynomial(std::vector<BigInt>{1, 0, 1});

    auto& ctx = symmetric_kl_context();
    const Permutation id5 = Permutation::identity(5);
    for (const auto& w : all_permutations(5)) {
        const IntPolynomial p = ctx.kl_polynomial(id5, w);
        auto it = expected.find(w);
        if (it != expected.end()) {
            if (p != it->second) return false;
        } else {
            if (p != IntPolynomial(1)) return false;
            if (!is_smooth(w)) return false;
        }
    }
    return true;
}

bool property1_equivalences() {
    auto& ctx = symmetric_kl_context();
    for (int n = 1; n <= 6; ++n) {
        const Permutation id = Permutation::identity(n);
        for (const auto& w : all_permutations(n)) {
            const bool avoid = is_smooth(w);
            const auto row = ctx.c_prime_row(w);
            const bool kl_id_trivial = row.at(id) == IntPolynomial(1);
            bool kl_all_trivial = true;
            for (const auto& [x, p] : row)
                if (p != IntPolynomial(1)) kl_all_trivial = false;
            const IntPolynomial poin = poincare(w);
            const bool palindromic = is_palindromic(poin);
            const bool factors = factor_q_integers(poin).has_value();
            const bool regular = bruhat_graph(w).is_regular_of_degree(w.length());
            const bool tangent = tangent_dimension(id, w) == w.length();
            if (avoid != kl_id_trivial || avoid != kl_all_trivial || avoid != palindromic ||
                avoid != factors || avoid != regular || avoid != tangent)
                return false;
        }
    }
    return true;
}

bool singular_locus_suite() {
    if (singular_locus(parse_permutation("4231")) !=
        std::vector<Permutation>{parse_permutation("2143")})
        return false;
    if (singular_locus(parse_permutation("3412")) !=
        std::vector<Permutation>{parse_permutation("1324")})
        return false;
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto oracle = singular_locus(w);
            if (singular_locus_by_patterns(w) != oracle) return false;
            for (const auto& v : oracle)
                if (w.length() - v.length() < 3) return false;
        }
    return true;
}

bool deodhar_suite() {
    auto& ctx = symmetric_kl_context();
    std::mt19937_64 rng(2718281828ull);
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            const bool hexagon = is_321_hexagon_avoiding(w);
            if (deodhar_identity_holds(w) != hexagon) return false;

            const auto row = ctx.c_prime_row(w);
            auto matches = [&](const ReducedWord& word) {
                const auto table = mask_defect_table(w, word);
                for (const auto& [v, p] : row) {
                    auto it = table.find(v);
                    if (it == table.end() || it->second != p) return false;
                }
                return true;
            };
            if (matches(first_reduced_word(w)) != hexagon) return false;
            if (hexagon && w.length() > 0) {
                // Sample further reduced words by random descent peeling.
                for (int extra = 0; extra < 2; ++extra) {
                    ReducedWord word;
                    Permutation v = w;
                    while (true) {
                        const auto descents = v.right_descents();
                        if (descents.empty()) break;
                        const int i = descents[rng() % descents.size()];
                        word.push_back(i);
                        v = v.swap_positions(i, i + 1);
                    }
                    std::reverse(word.begin(), word.end());
                    if (!matches(word)) return false;
                }
            }
        }
    return true;
}

bool arrangement_suite() {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            const BigInt r = region_count(w);
            const BigInt b = BruhatInterval(Permutation::identity(n), w).size();
            if (r > b) return false;
            if ((r == b) != is_defined_by_inclusions(w)) return false;
        }
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_permutations(n))
            if ((region_distance_gf(w) == poincare(w)) != is_smooth(w)) return false;
    return true;
}

bool lewis_morales_suite() {
    for (const auto& w : all_permutations(3))
        if (!lewis_morales_check(w, {2, 3, 5})) return false;

    const std::vector<Permutation> reversed_obstructions = {
        parse_permutation("1324"), parse_permutation("24153"), parse_permutation("31524"),
        parse_permutation("426153")};
    bool found_failure = false;
    for (const auto& w : all_permutations(4)) {
        const bool avoids = avoids_all(w, reversed_obstructions);
        const bool holds = lewis_morales_check(w, {2});
        if (avoids && !holds) return false;
        if (!avoids && !holds) found_failure = true;
    }
    return found_failure;
}

bool implication_lattice() {
    for (int n = 1; n <= 7; ++n)
        for (const auto& w : all_permutations(n)) {
            const bool smooth = is_smooth(w);
            const bool factorial = is_factorial(w);
            const bool gorenstein = is_gorenstein(w);
            const bool lci = is_lci(w);
            if (smooth && !factorial) return false;
            if (factorial && !gorenstein) return false;
            if (smooth && !lci) return false;
            if (lci && !gorenstein) return false;
            if (smooth && !is_defined_by_inclusions(w)) return false;
            if (is_boolean(w) && !is_321_hexagon_avoiding(w)) return false;
            if (smooth && !kl_filtration_level_le2(w)) return false;  // KL1 inside KL2
        }
    auto& ctx = symmetric_kl_context();
    for (int n = 1; n <= 6; ++n) {
        const Permutation id = Permutation::identity(n);
        for (const auto& w : all_permutations(n)) {
            const bool fast = kl_filtration_level_le2(w);
            const bool direct = ctx.kl_polynomial(id, w).evaluate(1) <= 2;
            if (fast != direct) return false;
        }
    }
    return true;
}

// Per-subsystem lookup tables: flattening by inversion trace and the Bruhat
// order on W^U by subword closure.
struct SubsystemCache {
    std::shared_ptr<RootSubsystem> sub;
    std::vector<AmbientElement> elements;
    std::map<std::uint32_t, AmbientElement> by_trace;
    std::map<AmbientElement, std::set<AmbientElement>> lower;

    explicit SubsystemCache(std::shared_ptr<RootSubsystem> s)
        : sub(std::move(s)), elements(subsystem_elements(*sub)) {
        for (const auto& u : elements) by_trace.emplace(trace(u), u);
        for (const auto& u : elements) {
            std::vector<int> word;
            AmbientElement cur = u;
            while (sub->length(cur) > 0)
                for (size_t i = 0; i < sub->simple_reflections.size(); ++i) {
                    AmbientElement next = ambient_compose(cur, sub->simple_reflections[i]);
                    if (sub->length(next) < sub->length(cur)) {
                        word.push_back(static_cast<int>(i));
                        cur = std::move(next);
                        break;
                    }
                }
            std::reverse(word.begin(), word.end());
            std::set<AmbientElement> elems{cur};  // cur is now the identity
            for (int i : word) {
                std::vector<AmbientElement> fired;
                for (const auto& e : elems)
                    fired.push_back(ambient_compose(e, sub->simple_reflections[i]));
                for (auto& e : fired) elems.insert(std::move(e));
            }
            lower.emplace(u, std::move(elems));
        }
    }

    std::uint32_t trace(const AmbientElement& z) const {
        std::uint32_t bits = 0;
        for (size_t k = 0; k < sub->positive.size(); ++k) {
            const auto& alpha = sub->positive[k];
            std::vector<int> image(z.size(), 0);
            for (size_t c = 0; c < z.size(); ++c) {
                if (alpha[c] == 0) continue;
                image[std::abs(z[c]) - 1] += (z[c] > 0 ? 1 : -1) * alpha[c];
            }
            for (int v : image) {
                if (v == 0) continue;
                if (v < 0) bits |= 1u << k;
                break;
            }
        }
        return bits;
    }

    AmbientElement flatten(const AmbientElement& z) const { return by_trace.at(trace(z)); }
    AmbientElement pattern_map(const AmbientElement& z) const {
        return ambient_inverse(flatten(ambient_inverse(z)));
    }
    bool leq(const AmbientElement& a, const AmbientElement& b) const {
        return lower.at(b).count(a) > 0;
    }
};

bool coxeter_suite() {
    std::mt19937_64 rng(31415926535ull);
    const auto a3 = std::make_shared<CoxeterGraph>(CoxeterGraph::type_a(3));
    const auto b3 = std::make_shared<CoxeterGraph>(CoxeterGraph::type_b(3));

    // Braid invariance on 10^4 random words, and the descent property
    // against reduced-word arithmetic.
    for (const auto& graph : {a3, b3}) {
        for (int trial = 0; trial < 5000; ++trial) {
            std::vector<int> word((rng() % 12) + 1);
            for (auto& letter : word) letter = 1 + static_cast<int>(rng() % graph->rank());
            const auto e = canonical_form(word, graph);
            bool rewrote = false;
            for (size_t k = 0; k + 1 < word.size() && !rewrote; ++k) {
                const int i = word[k], j = word[k + 1];
                const int m = graph->label(i, j);
                if (i == j) continue;
                if (m == 2) {
                    std::swap(word[k], word[k + 1]);
                    rewrote = true;
                } else if (m == 3 && k + 2 < word.size() && word[k + 2] == i) {
                    word[k] = j;
                    word[k + 1] = i;
                    word[k + 2] = j;
                    rewrote = true;
                } else if (m == 4 && k + 3 < word.size() && word[k + 2] == i &&
                           word[k + 3] == j) {
                    std::swap(word[k], word[k + 1]);
                    std::swap(word[k + 2], word[k + 3]);
                    rewrote = true;
                }
            }
            if (rewrote && canonical_form(word, graph) != e) return false;

            const int len = e.length();
            for (int i = 1; i <= graph->rank(); ++i) {
                const bool descent = e.values()[i - 1] < 0;
                const int next_len = e.times_generator(i).length();
                if (descent != (next_len == len - 1)) return false;
                if (!descent && next_len != len + 1) return false;
            }
        }
    }

    // W(B3): palindromic rank generating function iff trivial KL polynomial.
    {
        KLContext<HyperoctahedralOps> bctx;
        const SignedPermutation id3 = SignedPermutation::identity(3);
        for (const auto& w : all_signed_permutations(3)) {
            const bool palindromic = is_palindromic(bn_rank_generating_function(w));
            const bool trivial = bctx.kl_polynomial(id3, w) == IntPolynomial(1);
            if (palindromic != trivial) return false;
        }
    }

    // Consecutive type-A subsystems reproduce classical flattening on S5.
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            RootSubsystemSelector sel;
            sel.ambient_type = RootSystemType::A;
            sel.ambient_rank = 4;
            for (int i = a; i < b; ++i) {
                std::vector<int> root(5, 0);
                root[i - 1] = 1;
                root[i] = -1;
                sel.spanning_roots.push_back(std::move(root));
            }
            const RootSubsystem sub = root_subsystem(sel);
            for (const auto& w : all_permutations(5)) {
                const AmbientElement fl = flatten_parabolic(ambient_from_permutation(w, 5), sub);
                std::vector<int> window, image;
                for (int p = a; p <= b; ++p) {
                    window.push_back(w(p));
                    image.push_back(fl[p - 1]);
                }
                if (flatten(image) != flatten(window)) return false;
            }
        }

    // Billey-Braden comparison on 1000 sampled (U, x, w) triples in S6: the
    // summed inequality over the maximizer set M(x, w; U) for arbitrary
    // triples, and the plain corollary form when w lies in the coset of x.
    {
        auto& ctx = symmetric_kl_context();
        const auto s6 = all_permutations(6);
        for (int block = 0; block < 25; ++block) {
            std::vector<int> positions;
            while (positions.size() < 2) {
                positions.clear();
                for (int p = 1; p <= 6; ++p)
                    if (rng() & 1) positions.push_back(p);
            }
            RootSubsystemSelector sel;
            sel.ambient_type = RootSystemType::A;
            sel.ambient_rank = 5;
            for (size_t k = 0; k + 1 < positions.size(); ++k) {
                std::vector<int> root(6, 0);
                root[positions[k] - 1] = 1;
                root[positions[k + 1] - 1] = -1;
                sel.spanning_roots.push_back(std::move(root));
            }
            const auto sub = std::make_shared<RootSubsystem>(root_subsystem(sel));
            const SubsystemCache cache(sub);
            KLContext<SubsystemOps> subctx(SubsystemOps{sub});

            for (int pair = 0; pair < 20; ++pair) {
                const Permutation& w = s6[rng() % s6.size()];
                const auto row = ctx.c_prime_row(w);
                auto it = row.begin();
                std::advance(it, rng() % row.size());
                const Permutation& x = it->first;
                const AmbientElement ax = ambient_from_permutation(x, 6);
                const AmbientElement fx = cache.pattern_map(ax);

                // M(x, w; U): coset members below w whose images are maximal.
                std::vector<std::pair<AmbientElement, Permutation>> in_range;
                for (const auto& u : cache.elements) {
                    const AmbientElement z = ambient_compose(u, ax);
                    Permutation zp(std::vector<int>(z.begin(), z.end()));
                    if (!bruhat_leq(zp, w)) continue;
                    in_range.emplace_back(cache.pattern_map(z), std::move(zp));
                }
                BigInt total = 0;
                for (const auto& [fz, zp] : in_range) {
                    bool maximal = true;
                    for (const auto& [fz2, zp2] : in_range)
                        if (fz2 != fz && cache.leq(fz, fz2)) {
                            maximal = false;
                            break;
                        }
                    if (!maximal) continue;
                    const auto subrow = subctx.c_prime_row(fz);
                    auto fit = subrow.find(fx);
                    if (fit == subrow.end()) continue;
                    total += ctx.kl_polynomial(zp, w).evaluate(1) * fit->second.evaluate(1);
                }
                if (it->second.evaluate(1) < total) return false;

                // Corollary form inside the coset of x.
                for (const auto& u : cache.elements) {
                    const AmbientElement z = ambient_compose(u, ax);
                    Permutation zp(std::vector<int>(z.begin(), z.end()));
                    if (zp == x || !bruhat_leq(x, zp)) continue;
                    const auto subrow = subctx.c_prime_row(cache.pattern_map(z));
                    BigInt rhs = 0;
                    if (auto fit = subrow.find(fx); fit != subrow.end())
                        rhs = fit->second.evaluate(1);
                    if (ctx.kl_polynomial(x, zp).evaluate(1) < rhs) return false;
                    break;
                }
            }
        }
    }
    return true;
}

bool vexillary_suite() {
    for (const auto& w : all_permutations(5)) {
        if (is_vexillary(w)) {
            if (BigInt(reduced_words(w).size()) != syt_count(shape_of_diagram(w))) return false;
        }
        if (!is_2_vexillary(w)) {
            // The witness must be a genuine listed-pattern occurrence.
            bool witnessed = false;
            for (const auto& p : two_vexillary_patterns()) {
                const auto occ = occurrences_classical(w, p, 1);
                if (occ.empty()) continue;
                std::vector<int> vals;
                for (int pos : occ.front().positions) vals.push_back(w(pos));
                if (flatten(vals) == p) witnessed = true;
                break;
            }
            if (!witnessed) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<CriterionResult> run_verification(std::ostream& out, int threads) {
    struct Item {
        int number;
        std::string description;
        double time_limit;  // seconds; 0 = none
        std::function<bool()> run;
    };
    const std::vector<Item> items = {
        {1, "smooth counts n=1..8 match the closed-form series", 60.0,
         [&] { return smooth_counts(threads); }},
        {2, "factorial counts n=1..8 match the closed-form series", 0.0,
         [&] { return factorial_counts(threads); }},
        {3, "boolean counts n=1..8 are the odd-index Fibonacci numbers", 0.0,
         [&] { return boolean_counts(threads); }},
        {4, "S5 Kazhdan-Lusztig table P_{id,w} matches exactly", 120.0, s5_kl_table},
        {5, "pattern avoidance, KL triviality, palindromicity, factorization,"
            " graph regularity and tangent count agree for n<=6",
         0.0, property1_equivalences},
        {6, "singular locus: oracle equals pattern construction, codimension >= 3, n<=6", 0.0,
         singular_locus_suite},
        {7, "Deodhar suite: hexagon avoidance, the (1+t)^l identity and mask"
            " formulas agree for n<=6",
         0.0, deodhar_suite},
        {8, "inversion arrangements: region counts and distance polynomials, n<=6", 0.0,
         arrangement_suite},
        {9, "rank counts over F_q match the Poincare identity on S3 and S4", 0.0,
         lewis_morales_suite},
        {10, "implication lattice n<=7 and the KL2 fast path n<=6", 0.0, implication_lattice},
        {11, "Coxeter suite: numbers game, B3 Carrell-Peterson, flattening,"
             " Billey-Braden inequality",
         0.0, coxeter_suite},
        {12, "vexillary word counts and the 2-vexillary witness consistency on S5", 0.0,
         vexillary_suite},
    };

    std::vector<CriterionResult> results;
    for (const auto& item : items) {
        CriterionResult r;
        r.number = item.number;
        r.description = item.description;
        const auto start = Clock::now();
        try {
            r.passed = item.run();
        } catch (const std::exception& e) {
            r.passed = false;
            out << "criterion " << item.number << " raised: " << e.what() << "\n";
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (item.time_limit > 0 && r.seconds > item.time_limit) r.passed = false;
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.number << ": "
            << r.description << " (" << r.seconds << "s)\n";
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace schubert
