#include "schubert/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

const IntPolynomial& KLTable::polynomial(const Permutation& x) const {
    for (const auto& [p, poly] : rows)
        if (p == x) return poly;
    throw std::invalid_argument("kl_table: element not in the interval");
}

KLContext<SymmetricGroupOps>& symmetric_kl_context() {
    static KLContext<SymmetricGroupOps> ctx;
    return ctx;
}

void set_symmetric_kl_budget(size_t budget) { symmetric_kl_context().set_element_budget(budget); }

KLTable kl_table(const Permutation& w) {
    auto row = symmetric_kl_context().c_prime_row(w);
    KLTable table;
    table.top = w;
    table.rows.assign(row.begin(), row.end());
    std::sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
        const int la = a.first.length(), lb = b.first.length();
        return la != lb ? la < lb : a.first < b.first;
    });
    return table;
}

IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
    return symmetric_kl_context().kl_polynomial(x, w);
}

BigInt mu(const Permutation& x, const Permutation& w) { return symmetric_kl_context().mu(x, w); }

bool deodhar_identity_holds(const Permutation& w) {
    const auto row = symmetric_kl_context().c_prime_row(w);
    IntPolynomial sum;
    for (const auto& [v, p] : row) sum += p.shifted(v.length());
    IntPolynomial expected(1);
    const IntPolynomial one_plus_t(std::vector<BigInt>{1, 1});
    for (int k = 0; k < w.length(); ++k) expected = expected * one_plus_t;
    return sum == expected;
}

std::unordered_map<Permutation, IntPolynomial, PermutationHash> mask_defect_table(
    const Permutation& w, const ReducedWord& word) {
    const int p = static_cast<int>(word.size());
    if (p != w.length() || permutation_from_word(word, w.size()) != w)
        throw std::invalid_argument("mask_defect_table: word is not reduced for w");
    if (p > 26) throw budget_error("mask_defect_table: word too long to enumerate masks");
    std::unordered_map<Permutation, std::vector<BigInt>, PermutationHash> counts;
    const std::uint64_t total = 1ull << p;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Permutation pi = Permutation::identity(w.size());
        int defect = 0;
        for (int j = 0; j < p; ++j) {
            const int i = word[j];
            if (pi(i) > pi(i + 1)) ++defect;
            if (mask & (1ull << j)) pi = pi.swap_positions(i, i + 1);
        }
        auto& c = counts[pi];
        if (defect >= static_cast<int>(c.size())) c.resize(defect + 1);
        c[defect] += 1;
    }
    std::unordered_map<Permutation, IntPolynomial, PermutationHash> table;
    for (auto& [v, c] : counts) table.emplace(v, IntPolynomial(std::move(c)));
    return table;
}

IntPolynomial mask_defect_gf(const Permutation& v, const Permutation& w, const ReducedWord& word) {
    auto table = mask_defect_table(w, word);
    auto it = table.find(v);
    return it == table.end() ? IntPolynomial() : it->second;
}

HeckeElement HeckeElement::basis(const Permutation& w, LaurentPolynomial coeff) {
    HeckeElement e;
    e.add_term(w, coeff);
    return e;
}

LaurentPolynomial HeckeElement::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const LaurentPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    HeckeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, LaurentPolynomial() - c);
    return r;
}

HeckeElement HeckeElement::scaled(const LaurentPolynomial& c) const {
    HeckeElement r;
    for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
    return r;
}

HeckeElement HeckeElement::times_generator(int i) const {
    // T_x T_s = T_{xs} when xs > x, else (q-1) T_x + q T_{xs}.
    HeckeElement r;
    const LaurentPolynomial q = LaurentPolynomial::monomial(1, 1);
    const LaurentPolynomial q_minus_1 = q - LaurentPolynomial(1);
    for (const auto& [x, c] : terms_) {
        const Permutation xs = x.swap_positions(i, i + 1);
        if (x(i) < x(i + 1)) {
            r.add_term(xs, c);
        } else {
            r.add_term(x, c * q_minus_1);
            r.add_term(xs, c * q);
        }
    }
    return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const { return hecke_multiply(*this, o); }

bool HeckeElement::operator==(const HeckeElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [w, c] : terms_) {
        auto it = o.terms_.find(w);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement result;
    for (const auto& [y, cy] : b.terms()) {
        HeckeElement part = a;
        for (int i : first_reduced_word(y)) part = part.times_generator(i);
        for (const auto& [x, cx] : part.terms()) result.add_term(x, cx * cy);
    }
    return result;
}

HeckeElement hecke_invert_T(const Permutation& w) {
    // (T_s)^{-1} = q^{-1} T_s - (1 - q^{-1}); multiply the letter inverses in
    // reverse word order.
    const int n = w.size();
    HeckeElement r = HeckeElement::one(n);
    ReducedWord word = first_reduced_word(w);
    std::reverse(word.begin(), word.end());
    const LaurentPolynomial qinv = LaurentPolynomial::monomial(1, -1);
    const LaurentPolynomial c0 = qinv - LaurentPolynomial(1);  // q^{-1} - 1
    for (int i : word) {
        const Permutation s = Permutation::identity(n).swap_positions(i, i + 1);
        HeckeElement si = HeckeElement::basis(s, qinv) + HeckeElement::basis(Permutation::identity(n), c0);
        r = hecke_multiply(r, si);
    }
    return r;
}

HeckeElement hecke_involution(const HeckeElement& a) {
    HeckeElement r;
    for (const auto& [x, c] : a.terms()) {
        const HeckeElement inv = hecke_invert_T(x.inverse());
        for (const auto& [y, cy] : inv.terms()) r.add_term(y, cy * c.bar());
    }
    return r;
}

HeckeElement c_prime_element(const Permutation& w) {
    const auto row = symmetric_kl_context().c_prime_row(w);
    HeckeElement e;
    for (const auto& [x, p] : row) e.add_term(x, LaurentPolynomial(p));
    return e;
}

}  // namespace schubert
