#pragma once

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/signed_permutation.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace schubert {

/// Group operations consumed by the Kazhdan-Lusztig engine.  An Ops type
/// provides:
///   using Element = ...;            hashable, equality-comparable
///   using Hash = ...;
///   int rank(const Element&) const;                 number of generators
///   Element apply_generator(const Element&, int i)  right multiplication
///   int length(const Element&) const;
struct SymmetricGroupOps {
    using Element = Permutation;
    using Hash = PermutationHash;
    int rank(const Element& e) const { return e.size() - 1; }
    Element apply_generator(const Element& e, int i) const { return e.swap_positions(i, i + 1); }
    int length(const Element& e) const { return e.length(); }
};

struct HyperoctahedralOps {
    using Element = SignedPermutation;
    using Hash = SignedPermutationHash;
    int rank(const Element& e) const { return e.size(); }
    Element apply_generator(const Element& e, int i) const { return e.apply_generator(i); }
    int length(const Element& e) const { return e.length(); }
};

/// Kazhdan-Lusztig polynomials via the inductive construction of the
/// (rescaled) basis elements q^{l(w)/2} C'_w = sum_{x <= w} P_{x,w}(q) T_x.
/// Stepping from v to vs uses C'_v C'_s minus the mu-correction terms over
/// x < v with xs < x.  Rows are cached per top element; reads take a shared
/// lock and construction is serialized.
template <typename Ops>
class KLContext {
public:
    using Elem = typename Ops::Element;
    using Hash = typename Ops::Hash;
    using Row = std::unordered_map<Elem, IntPolynomial, Hash>;

    explicit KLContext(Ops ops = Ops(), size_t element_budget = 50000)
        : ops_(std::move(ops)), budget_(element_budget) {}

    /// All P_{x,w} for x <= w (the support of the rescaled C'_w).
    Row c_prime_row(const Elem& w) {
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(w);
            if (it != cache_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        return build(w);
    }

    IntPolynomial kl_polynomial(const Elem& x, const Elem& w) {
        Row row = c_prime_row(w);
        auto it = row.find(x);
        if (it == row.end()) throw std::invalid_argument("kl_polynomial: x is not below w");
        return it->second;
    }

    /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero for even length
    /// difference.  Requires x < w.
    BigInt mu(const Elem& x, const Elem& w) {
        const int diff = ops_.length(w) - ops_.length(x);
        if (diff <= 0) throw std::invalid_argument("mu: need x < w");
        if (diff % 2 == 0) return 0;
        return kl_polynomial(x, w).coefficient((diff - 1) / 2);
    }

    size_t element_budget() const { return budget_; }
    void set_element_budget(size_t budget) {
        std::unique_lock lock(mutex_);
        budget_ = budget;
    }

private:
    const Row& build(const Elem& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        const int lw = ops_.length(w);
        if (lw == 0) {
            Row row;
            row.emplace(w, IntPolynomial(1));
            return cache_.emplace(w, std::move(row)).first->second;
        }
        int s = -1;
        for (int i = 1; i <= ops_.rank(w); ++i)
            if (ops_.length(ops_.apply_generator(w, i)) < lw) {
                s = i;
                break;
            }
        const Elem v = ops_.apply_generator(w, s);
        const Row& base = build(v);
        const int lv = lw - 1;

        // C'_v C'_s in the T-basis: T_x (T_s + 1) is T_{xs} + T_x going up
        // and q (T_{xs} + T_x) going down.
        Row row;
        for (const auto& [x, p] : base) {
            Elem xs = ops_.apply_generator(x, s);
            const bool up = ops_.length(xs) > ops_.length(x);
            const IntPolynomial add = up ? p : p.shifted(1);
            row[std::move(xs)] += add;
            row[x] += add;
        }
        // Correction terms mu(x, v) q^{(l(v)+1-l(x))/2} C'_x over x < v with
        // xs < x.
        for (const auto& [x, p] : base) {
            const int lx = ops_.length(x);
            if (lx >= lv) continue;
            if (ops_.length(ops_.apply_generator(x, s)) > lx) continue;
            if ((lv - lx) % 2 == 0) continue;
            const BigInt m = p.coefficient((lv - lx - 1) / 2);
            if (m == 0) continue;
            const IntPolynomial factor =
                IntPolynomial(std::vector<BigInt>{m}).shifted((lv + 1 - lx) / 2);
            for (const auto& [z, pz] : build(x)) row[z] -= factor * pz;
        }
        for (auto rit = row.begin(); rit != row.end();)
            rit = rit->second.is_zero() ? row.erase(rit) : std::next(rit);
        if (row.size() > budget_)
            throw budget_error("interval larger than the configured element budget");
        return cache_.emplace(w, std::move(row)).first->second;
    }

    Ops ops_;
    size_t budget_;
    std::unordered_map<Elem, Row, Hash> cache_;
    std::shared_mutex mutex_;
};

/// Kazhdan-Lusztig data for a fixed top element of S_n.
struct KLTable {
    Permutation top;
    std::vector<std::pair<Permutation, IntPolynomial>> rows;  // sorted by (length, one-line)

    const IntPolynomial& polynomial(const Permutation& x) const;
};

/// Process-wide engine for S_n (all n share one cache).
KLContext<SymmetricGroupOps>& symmetric_kl_context();
/// Adjust the budget of the process-wide engine.  Affects later computations.
void set_symmetric_kl_budget(size_t budget);

KLTable kl_table(const Permutation& w);
IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w);
BigInt mu(const Permutation& x, const Permutation& w);

/// sum_{v <= w} t^{l(v)} P_{v,w}(t) == (1+t)^{l(w)}.
bool deodhar_identity_holds(const Permutation& w);

/// Deodhar mask statistic: sum of t^{defect(mask)} over all masks of `word`
/// whose masked product equals v.  The defect of a mask counts the steps j
/// whose masked partial product has the letter of step j as a right descent.
/// `word` must be a reduced word for w.
IntPolynomial mask_defect_gf(const Permutation& v, const Permutation& w, const ReducedWord& word);

/// One pass over all masks: v -> defect generating function.
std::unordered_map<Permutation, IntPolynomial, PermutationHash> mask_defect_table(
    const Permutation& w, const ReducedWord& word);

/// Hecke algebra element of S_n in the T-basis with Laurent coefficients.
class HeckeElement {
public:
    HeckeElement() = default;
    static HeckeElement basis(const Permutation& w, LaurentPolynomial coeff = 1);
    static HeckeElement one(int n) { return basis(Permutation::identity(n)); }

    const std::unordered_map<Permutation, LaurentPolynomial, PermutationHash>& terms() const {
        return terms_;
    }
    LaurentPolynomial coefficient(const Permutation& w) const;

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const HeckeElement& o) const;
    HeckeElement scaled(const LaurentPolynomial& c) const;

    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    void add_term(const Permutation& w, const LaurentPolynomial& c);

    /// Right multiplication by T_{s_i}.
    HeckeElement times_generator(int i) const;

private:
    std::unordered_map<Permutation, LaurentPolynomial, PermutationHash> terms_;
};

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);
/// (T_w)^{-1}, expanded in the T-basis.
HeckeElement hecke_invert_T(const Permutation& w);
/// The bar involution: q -> q^{-1}, T_x -> (T_{x^{-1}})^{-1}.
HeckeElement hecke_involution(const HeckeElement& a);
/// Rescaled basis element q^{l(w)/2} C'_w as a Hecke element (polynomial
/// coefficients P_{x,w}(q)).
HeckeElement c_prime_element(const Permutation& w);

}  // namespace schubert
