#pragma once

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace schubert {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

/// x <= w in Bruhat order, by rank-table dominance.  Different sizes are
/// compared after embedding the smaller via fixed points.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// All v = w * t_ij with l(v) = l(w) - 1.
std::vector<Permutation> covers_down(const Permutation& w);

/// The materialized interval [x, w]: elements, covering relation and rank
/// sizes.  Built by downward BFS from w filtered to the up-set of x.
class BruhatInterval {
public:
    BruhatInterval(const Permutation& x, const Permutation& w);

    const Permutation& top() const { return top_; }
    const Permutation& bottom() const { return bottom_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const PermSet& element_set() const { return set_; }
    size_t size() const { return elements_.size(); }
    bool contains(const Permutation& v) const { return set_.count(v) > 0; }

    /// Covering pairs (v, u) with u covered by v, both inside the interval.
    const std::vector<std::pair<Permutation, Permutation>>& covers() const { return covers_; }

    /// Number of elements of each length, indexed from l(bottom).
    std::vector<BigInt> rank_sizes() const;

    /// Rank generating function, exponent = l(v) - l(bottom).
    IntPolynomial rank_generating_function() const;

    std::string to_dot() const;

private:
    Permutation top_, bottom_;
    std::vector<Permutation> elements_;  // sorted by (length, one-line)
    PermSet set_;
    std::vector<std::pair<Permutation, Permutation>> covers_;
};

/// P_w(t) = sum over v <= w of t^{l(v)}.
IntPolynomial poincare(const Permutation& w);

/// dim T_v(X_w) = #{(i < j) : v * t_ij <= w}.  Requires v <= w.
int tangent_dimension(const Permutation& v, const Permutation& w);

/// Bruhat graph on [id, w]: edges {v, v * t_ij} with both endpoints <= w.
struct BruhatGraph {
    Permutation top;
    std::vector<Permutation> vertices;
    std::vector<std::pair<int, int>> edges;  // indices into vertices

    int degree(int vertex) const;
    bool is_regular_of_degree(int d) const;
    std::string to_dot() const;
};

BruhatGraph bruhat_graph(const Permutation& w);

/// Maximal v <= w with dim T_v(X_w) > l(w); empty iff X_w is smooth.
std::vector<Permutation> singular_locus(const Permutation& w);

/// The same components generated from pattern configurations: candidates come
/// from interval embeddings of the generic-singularity models, then the
/// Bruhat-maximal ones are kept.  Agrees with singular_locus by construction
/// of the models; the equality is enforced by tests, not reconciled here.
std::vector<Permutation> singular_locus_by_patterns(const Permutation& w);

/// Bruhat-minimal elements of S_n outside [id, w].  Ambient group is fixed to
/// S_n with n = ambient_n.
std::vector<Permutation> essential_set_E(const Permutation& w, int ambient_n);

/// At most one descent, and the inverse has at most one descent.
bool is_bigrassmannian(const Permutation& w);

/// Bruhat-maximal members of a set of permutations.
std::vector<Permutation> bruhat_maximal(std::vector<Permutation> elems);

}  // namespace schubert
