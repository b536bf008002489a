#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace schubert {

/// An element of the hyperoctahedral group W(B_n): a sequence of nonzero
/// integers whose absolute values are a permutation of 1..n.  Generators act
/// on the right: s_1 negates the first entry, s_i (i >= 2) swaps the entries
/// at positions i-1 and i.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> entries);

    static SignedPermutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator()(int i) const { return entries_[i - 1]; }
    const std::vector<int>& entries() const { return entries_; }

    int num_generators() const { return size(); }
    SignedPermutation apply_generator(int i) const;

    /// Coxeter length: inversions plus the sum of the absolute values of the
    /// negative entries.
    int length() const;
    std::vector<int> right_descents() const;

    /// Reduced word obtained by greedy descent peeling.
    std::vector<int> reduced_word() const;

    bool operator==(const SignedPermutation& o) const { return entries_ == o.entries_; }
    bool operator!=(const SignedPermutation& o) const { return entries_ != o.entries_; }
    bool operator<(const SignedPermutation& o) const { return entries_ < o.entries_; }

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

struct SignedPermutationHash {
    size_t operator()(const SignedPermutation& w) const {
        size_t h = 14695981039346656037ull;
        for (int x : w.entries()) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x + 64));
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Comma-separated signed integers, e.g. "(-2,-1)" or "-2,-1".
SignedPermutation parse_signed_permutation(const std::string& text);

/// All of W(B_n), lexicographic by entries.
std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace schubert
