#include "schubert/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schubert {

IntPolynomial::IntPolynomial(long constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(long coeff, int exponent) {
    if (coeff == 0) return {};
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[exponent];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r += o;
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r -= o;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + k);
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPolynomial{};
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quot(degree() - divisor.degree() + 1);
    const BigInt& lead = divisor.coeffs_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt top = rem[k + divisor.degree()];
        if (top % lead != 0) return std::nullopt;
        BigInt q = top / lead;
        quot[k] = q;
        if (q != 0)
            for (int i = 0; i <= divisor.degree(); ++i) rem[k + i] -= q * divisor.coeffs_[i];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        BigInt a = abs(c);
        if (a != 1 || k == 0) out << a.str();
        if (k > 0) {
            if (a != 1) out << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

IntPolynomial q_integer(int e) {
    if (e < 0) throw std::invalid_argument("q_integer: negative exponent");
    std::vector<BigInt> c(e + 1, 1);
    return IntPolynomial(std::move(c));
}

bool is_palindromic(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    int d = p.degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (c[i] != c[d - i]) return false;
    return true;
}

namespace {

bool factor_from(const IntPolynomial& p, int emax, std::vector<int>& out) {
    if (p == IntPolynomial(1)) return true;
    for (int e = std::min(emax, p.degree()); e >= 1; --e) {
        auto q = p.divide_exact(q_integer(e));
        if (!q) continue;
        out.push_back(e);
        if (factor_from(*q, e, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> factor_q_integers(const IntPolynomial& p) {
    if (p.coefficient(0) != 1) return std::nullopt;
    std::vector<int> out;
    if (!factor_from(p, p.degree(), out)) return std::nullopt;
    return out;
}

LaurentPolynomial::LaurentPolynomial(long constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPolynomial::LaurentPolynomial(const IntPolynomial& p) {
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coefficient(k) != 0) terms_[k] = p.coefficient(k);
}

LaurentPolynomial LaurentPolynomial::monomial(long coeff, int exponent) {
    LaurentPolynomial r;
    if (coeff != 0) r.terms_[exponent] = coeff;
    return r;
}

void LaurentPolynomial::insert(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exponent, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.insert(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.insert(e1 + e2, c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::bar() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        BigInt a = abs(c);
        if (a != 1 || k == 0) out << a.str();
        if (k != 0) {
            if (a != 1) out << "*";
            out << var;
            if (k != 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

}  // namespace schubert
