#pragma once

#include "schubert/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

/// Raised when an enumeration exceeds its configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A permutation of {1..n} in one-line notation.  Immutable after
/// construction.  All public indices and values are 1-based; the composition
/// convention is (u*v)(i) = u(v(i)), so w * t_ij swaps the entries of w at
/// positions i and j, and t_ij * w swaps the values i and j.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    /// w(i) for 1 <= i <= n.
    int operator()(int i) const { return entries_[i - 1]; }
    const std::vector<int>& one_line() const { return entries_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& v) const;

    /// w * t_ij: entries at positions i < j swapped.
    Permutation swap_positions(int i, int j) const;

    /// Embed into S_m (m >= n) by appending fixed points.
    Permutation embedded(int m) const;

    int length() const;
    std::vector<std::pair<int, int>> inversions() const;

    /// Positions i with w(i) > w(i+1).
    std::vector<int> right_descents() const;

    bool is_identity() const;

    bool operator==(const Permutation& o) const { return entries_ == o.entries_; }
    bool operator!=(const Permutation& o) const { return entries_ != o.entries_; }
    bool operator<(const Permutation& o) const { return entries_ < o.entries_; }

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

struct PermutationHash {
    size_t operator()(const Permutation& w) const {
        size_t h = 1469598103934665603ull;
        for (int x : w.one_line()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Parse a permutation from text.  Accepts whitespace- or comma-separated
/// integers ("2 3 4 1", "2,3,4,1") and, for a single token of digits 1..9,
/// the compact form "2341".  Throws std::invalid_argument with a distinct
/// message for empty input, out-of-range values and duplicate values.
Permutation parse_permutation(const std::string& text);

/// rk[i][j] = #{h <= j : w(h) <= i}, 1-based.
class RankTable {
public:
    explicit RankTable(const Permutation& w);

    int size() const { return n_; }
    int at(int i, int j) const { return rk_[(i - 1) * n_ + (j - 1)]; }

    /// Recover the permutation the table was built from.
    Permutation to_permutation() const;

    /// x <= w in Bruhat order iff rk(x) >= rk(w) entrywise.
    static bool dominates(const RankTable& x, const RankTable& w);

private:
    int n_ = 0;
    std::vector<int> rk_;
};

/// The diagram D(w) = {(i,j) : w(i) > j and w^{-1}(j) > i} together with its
/// essential cells (no diagram cell immediately right or below).
struct Diagram {
    int n = 0;
    std::vector<std::pair<int, int>> cells;      // sorted, 1-based (row, col)
    std::vector<std::pair<int, int>> essential;  // subset of cells

    bool contains(int i, int j) const;
};

Diagram diagram(const Permutation& w);
/// Variant built from w^{-1}; the transpose of diagram(w).
Diagram diagram_transposed(const Permutation& w);

/// Row lengths of D(w), sorted weakly decreasing, zero rows dropped.
std::vector<int> shape_of_diagram(const Permutation& w);

/// The permutation with the same relative order as `values` (all distinct).
Permutation flatten(const std::vector<int>& values);

/// A word in the generators s_i (adjacent transpositions), applied left to
/// right starting from the identity: word (i1,...,ip) yields s_i1 * ... * s_ip.
using ReducedWord = std::vector<int>;

Permutation permutation_from_word(const ReducedWord& word, int n);

/// All reduced words of w, by right-descent peeling.  Throws budget_error when
/// more than `cap` words would be produced.
std::vector<ReducedWord> reduced_words(const Permutation& w, std::uint64_t cap = 1u << 22);

/// |R(w)| without materializing the set.
BigInt reduced_word_count(const Permutation& w);

/// Lexicographically smallest reduced word of w.
ReducedWord first_reduced_word(const Permutation& w);

/// Number of standard Young tableaux of the given shape, by the hook length
/// formula.  Throws std::invalid_argument unless the parts are positive and
/// weakly decreasing.
BigInt syt_count(const std::vector<int>& shape);

/// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubert
