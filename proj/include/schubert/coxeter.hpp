#pragma once

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/signed_permutation.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

namespace schubert {

/// A Coxeter graph on vertices 1..r with integer firing weights.  Edge labels
/// m(i,j) in {3,4,6,inf} carry the weights (1,1), (2,1), (3,1), (4,1); the
/// first-listed vertex of an edge fires with the larger weight.
class CoxeterGraph {
public:
    static constexpr int infinite_label = -1;

    CoxeterGraph(int rank, const std::vector<std::tuple<int, int, int>>& edges);

    /// One edge per line, "i j m"; m = 0 or "inf" for an infinite label.
    static CoxeterGraph parse(const std::string& text, int rank = 0);

    static CoxeterGraph type_a(int rank);
    /// Vertex 1 carries the label-4 edge (the sign-change end).
    static CoxeterGraph type_b(int rank);

    int rank() const { return rank_; }
    int label(int i, int j) const;
    long long firing_weight(int from, int to) const;  // 0 when not adjacent
    const std::vector<int>& neighbors(int i) const { return adj_[i - 1]; }

private:
    int rank_;
    std::vector<std::vector<int>> adj_;
    std::map<std::pair<int, int>, int> labels_;
    std::map<std::pair<int, int>, long long> weights_;
};

using GameState = std::vector<long long>;

/// One firing step.  Throws std::logic_error if a value would reach 0.
GameState numbers_game_fire(const GameState& state, int vertex, const CoxeterGraph& graph);

/// A group element keyed by its numbers-game value vector, with a stored
/// reduced word.  Two elements are equal iff their vectors agree.
class CoxeterElement {
public:
    CoxeterElement(std::shared_ptr<const CoxeterGraph> graph, GameState values,
                   std::vector<int> word);

    static CoxeterElement identity(std::shared_ptr<const CoxeterGraph> graph);

    const CoxeterGraph& graph() const { return *graph_; }
    std::shared_ptr<const CoxeterGraph> graph_ptr() const { return graph_; }
    const GameState& values() const { return values_; }
    const std::vector<int>& stored_word() const { return word_; }

    CoxeterElement times_generator(int i) const;
    std::vector<int> right_descents() const;

    /// Length and a reduced word by greedy descent stripping; throws
    /// budget_error after `max_steps` firings.
    int length(std::uint64_t max_steps = 1u << 20) const;
    std::vector<int> reduced_word(std::uint64_t max_steps = 1u << 20) const;

    bool operator==(const CoxeterElement& o) const { return values_ == o.values_; }
    bool operator!=(const CoxeterElement& o) const { return values_ != o.values_; }

private:
    std::shared_ptr<const CoxeterGraph> graph_;
    GameState values_;
    std::vector<int> word_;
};

/// Run the game from the all-ones start: the canonical form of the word.
CoxeterElement canonical_form(const std::vector<int>& word,
                              std::shared_ptr<const CoxeterGraph> graph);

struct GameStateHash {
    size_t operator()(const GameState& v) const {
        size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// (l(x), l(w), x <= w).  Bruhat comparison by the subword property: the
/// lower interval of w is closed under taking subwords of a reduced word.
std::tuple<int, int, bool> length_and_bruhat(const CoxeterElement& x, const CoxeterElement& w);

/// All elements below w, as canonical value vectors.
std::unordered_set<GameState, GameStateHash> lower_interval(const CoxeterElement& w);

enum class RootSystemType { A, B, C, D };

/// Positive roots in the e-basis.  Type A of rank n lives in R^{n+1}; types
/// B, C, D of rank n live in R^n.
std::vector<std::vector<int>> positive_roots(RootSystemType type, int rank);

/// Positive roots alpha with w(alpha) negative, for the coordinate action
/// e_i -> e_{w(i)} (type A) or e_i -> sign(w(i)) e_{|w(i)|} (signed types).
std::vector<std::vector<int>> inversion_roots(const Permutation& w, RootSystemType type);
std::vector<std::vector<int>> inversion_roots(const SignedPermutation& w, RootSystemType type);

/// A root subsystem selector: the ambient type plus a spanning set U of
/// positive roots.  The subsystem is span(U) intersected with the ambient
/// root system.
struct RootSubsystemSelector {
    RootSystemType ambient_type = RootSystemType::A;
    int ambient_rank = 0;
    std::vector<std::vector<int>> spanning_roots;
};

/// Elements of the reflection subgroup W^U act on ambient coordinates as
/// signed permutations; entry k holds the signed image of e_k.
using AmbientElement = std::vector<int>;

struct AmbientElementHash {
    size_t operator()(const AmbientElement& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x + 128));
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// (x * y)(e_k) = x(y(e_k)).
AmbientElement ambient_compose(const AmbientElement& x, const AmbientElement& y);

struct RootSubsystem {
    std::vector<std::vector<int>> positive;       // Phi^U_+ = Phi_+ in span(U)
    std::vector<std::vector<int>> simple;         // simple roots of the subsystem
    std::vector<AmbientElement> simple_reflections;
    int ambient_dim = 0;

    int length(const AmbientElement& x) const;   // inversions within Phi^U_+
};

RootSubsystem root_subsystem(const RootSubsystemSelector& selector);

/// The unique x in W^U whose subsystem inversion set equals w's inversion set
/// intersected with the subsystem.  Throws std::invalid_argument when no
/// element realizes the half-space (non-parabolic reflection subgroup).
AmbientElement flatten_parabolic(const AmbientElement& w, const RootSubsystem& sub);

AmbientElement ambient_inverse(const AmbientElement& w);

/// The left-W^U-equivariant pattern map fl with fl(ux) = u fl(x) for u in
/// W^U: the half-space match applied to w^{-1}, inverted back.  This is the
/// form entering the Kazhdan-Lusztig comparison inequalities;
/// flatten_parabolic itself matches inversion sets positionally.
AmbientElement equivariant_pattern_map(const AmbientElement& w, const RootSubsystem& sub);

AmbientElement ambient_from_permutation(const Permutation& w, int dim);
AmbientElement ambient_from_signed(const SignedPermutation& w);

/// Enumerate W^U by closure of the simple reflections.
std::vector<AmbientElement> subsystem_elements(const RootSubsystem& sub, size_t budget = 200000);

/// Group operations on W^U for the Kazhdan-Lusztig engine.
struct SubsystemOps {
    std::shared_ptr<const RootSubsystem> sub;

    using Element = AmbientElement;
    using Hash = AmbientElementHash;
    int rank(const Element&) const { return static_cast<int>(sub->simple_reflections.size()); }
    Element apply_generator(const Element& e, int i) const {
        return ambient_compose(e, sub->simple_reflections[i - 1]);
    }
    int length(const Element& e) const { return sub->length(e); }
};

/// Smoothness test for W(B_n) Schubert varieties by signed pattern avoidance.
bool bn_is_smooth(const SignedPermutation& w);
const std::vector<SignedPermutation>& bn_smooth_patterns();  // the 17 signed patterns

/// Interval [id, w] in W(B_n) as an element set, via subword closure.
std::unordered_set<SignedPermutation, SignedPermutationHash> bn_lower_interval(
    const SignedPermutation& w);

IntPolynomial bn_rank_generating_function(const SignedPermutation& w);

}  // namespace schubert
