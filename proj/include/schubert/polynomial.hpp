#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial in one variable with exact integer coefficients.
/// coefficients()[k] is the coefficient of t^k; trailing zeros are trimmed,
/// so the zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long constant);  // NOLINT: implicit by design
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(long coeff, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int exponent) const;

    BigInt evaluate(const BigInt& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);

    /// Multiply by t^k, k >= 0.
    IntPolynomial shifted(int k) const;

    /// Exact division; nullopt when the remainder is nonzero.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// The q-integer [e+1]_t = 1 + t + ... + t^e.
IntPolynomial q_integer(int e);

/// coeff(t^i) == coeff(t^(deg-i)) for all i.  The zero polynomial counts as
/// palindromic.
bool is_palindromic(const IntPolynomial& p);

/// Factor p as a product of q-integers (1+t+...+t^{e_i}) with sum of e_i equal
/// to deg(p).  Returns the multiset of exponents e_i sorted decreasingly, or
/// nullopt when no such factorization exists.  Requires constant term 1.
std::optional<std::vector<int>> factor_q_integers(const IntPolynomial& p);

/// Sparse Laurent polynomial: exponent of q -> coefficient, zeros never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);  // NOLINT: implicit by design
    explicit LaurentPolynomial(const IntPolynomial& p);

    static LaurentPolynomial monomial(long coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }
    BigInt coefficient(int exponent) const;

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    /// q -> q^{-1}.
    LaurentPolynomial bar() const;

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPolynomial& o) const { return terms_ != o.terms_; }

    std::string to_string(const std::string& var = "q") const;

private:
    void insert(int exponent, const BigInt& c);
    std::map<int, BigInt> terms_;
};

}  // namespace schubert
