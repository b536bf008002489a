#include "schubert/polynomial.hpp"

#include <doctest.h>

using namespace schubert;

TEST_CASE("integer polynomial arithmetic") {
    const IntPolynomial p(std::vector<BigInt>{1, 2, 1});  // (1+t)^2
    const IntPolynomial one_plus_t(std::vector<BigInt>{1, 1});
    CHECK(one_plus_t * one_plus_t == p);
    CHECK((p - p).is_zero());
    CHECK(p.coefficient(1) == 2);
    CHECK(p.coefficient(5) == 0);
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(1) == 4);
    CHECK(p.shifted(2) == IntPolynomial(std::vector<BigInt>{0, 0, 1, 2, 1}));
    CHECK(p.to_string() == "t^2 + 2*t + 1");
}

TEST_CASE("exact division") {
    const IntPolynomial p = q_integer(2) * q_integer(3);
    auto q = p.divide_exact(q_integer(3));
    REQUIRE(q.has_value());
    CHECK(*q == q_integer(2));
    CHECK(!q_integer(2).divide_exact(IntPolynomial(std::vector<BigInt>{1, 1})).has_value());
}

TEST_CASE("palindromic") {
    CHECK(is_palindromic(IntPolynomial(1)));
    CHECK(is_palindromic(q_integer(4)));
    CHECK(!is_palindromic(IntPolynomial(std::vector<BigInt>{1, 3, 5, 4, 1})));
    CHECK(is_palindromic(IntPolynomial(std::vector<BigInt>{1, 3, 5, 6, 5, 3, 1})));
}

TEST_CASE("q-integer factorization") {
    // (1+t)(1+t+t^2)(1+t+t^2+t^3), the length-6 staircase product.
    const IntPolynomial p = q_integer(1) * q_integer(2) * q_integer(3);
    auto f = factor_q_integers(p);
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<int>{3, 2, 1});

    CHECK(factor_q_integers(IntPolynomial(1)).value().empty());
    CHECK(!factor_q_integers(IntPolynomial(std::vector<BigInt>{1, 3, 5, 4, 1})).has_value());
}

TEST_CASE("laurent polynomials") {
    const LaurentPolynomial q = LaurentPolynomial::monomial(1, 1);
    const LaurentPolynomial qinv = LaurentPolynomial::monomial(1, -1);
    CHECK(q * qinv == LaurentPolynomial(1));
    CHECK(q.bar() == qinv);
    CHECK((q - q).is_zero());
    const LaurentPolynomial mix = q + LaurentPolynomial(2) + qinv;
    CHECK(mix.bar() == mix);
    CHECK(mix.coefficient(0) == 2);
    CHECK(mix.to_string() == "q + 2 + q^-1");
}
