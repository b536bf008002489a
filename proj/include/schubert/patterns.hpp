#pragma once

#include "schubert/permutation.hpp"
#include "schubert/signed_permutation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace schubert {

/// An occurrence of a pattern in a host: the increasing position sequence
/// i_1 < ... < i_m (1-based) whose host values flatten to the pattern.
struct Occurrence {
    std::vector<int> positions;

    bool operator==(const Occurrence& o) const { return positions == o.positions; }
};

enum class PatternKind { classical, adjacency, bruhat_restricted, interval, signed_kind };

/// A pattern together with its matching regime.
struct PatternSpec {
    PatternKind kind = PatternKind::classical;
    Permutation pattern;
    SignedPermutation signed_pattern;                   // signed kind only
    std::vector<std::pair<int, int>> adjacency_pairs;   // (a, a+1) position pairs
    std::vector<std::pair<int, int>> restrictions;      // transpositions t_ab, a < b
    Permutation lower;                                  // interval kind: the u of [u,v]

    static PatternSpec classical(Permutation p);
    static PatternSpec adjacency(Permutation p, std::vector<std::pair<int, int>> pairs);
    static PatternSpec bruhat_restricted(Permutation p, std::vector<std::pair<int, int>> ts);
    static PatternSpec interval(Permutation u, Permutation v);
    static PatternSpec signed_pattern_of(SignedPermutation p);
};

/// Parse the text syntax: "3412" (classical), "3_41_2" (underscore joins
/// adjacent pattern positions), "35142!t15,t23" (Bruhat restrictions),
/// "[3142,3412]" (interval), "(-2,-1)" (signed).
PatternSpec parse_pattern_spec(const std::string& text);

/// All classical occurrences of `pattern` in `host`, in lexicographic position
/// order, stopping after `limit` when given.
std::vector<Occurrence> occurrences_classical(const Permutation& host, const Permutation& pattern,
                                              std::optional<std::uint64_t> limit = std::nullopt);

bool contains_classical(const Permutation& host, const Permutation& pattern);
bool avoids_classical(const Permutation& host, const Permutation& pattern);
bool avoids_all(const Permutation& host, const std::vector<Permutation>& patterns);

/// True iff some classical occurrence has consecutive host positions at every
/// required adjacency pair.
bool contains_adjacency(const Permutation& host, const PatternSpec& spec);

/// True iff some classical occurrence preserves the length difference
/// l(host * t_{i_a i_b}) - l(host) = l(pattern * t_ab) - l(pattern) for every
/// restriction t_ab.
bool contains_bruhat_restricted(const Permutation& host, const PatternSpec& spec);

/// First witnessing occurrence for the given PatternSpec (classical, adjacency or
/// Bruhat-restricted kinds).
std::optional<Occurrence> find_occurrence(const Permutation& host, const PatternSpec& spec);

/// Interval pattern embedding of [u,v] into [x,y]: positions where x flattens
/// to u and y to v, with x and y equal elsewhere and
/// l(v) - l(u) = l(y) - l(x).  Requires u <= v and x <= y.
std::optional<Occurrence> interval_embeds(const Permutation& u, const Permutation& v,
                                          const Permutation& x, const Permutation& y);

/// Signed containment: increasing positions with matching signs entrywise
/// whose absolute values flatten to the pattern's absolute values.
bool signed_contains(const SignedPermutation& host, const SignedPermutation& pattern);
bool signed_avoids_all(const SignedPermutation& host, const std::vector<SignedPermutation>& ps);

}  // namespace schubert
