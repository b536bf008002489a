#pragma once

#include "schubert/arrangements.hpp"
#include "schubert/polynomial.hpp"

#include <string>
#include <vector>

namespace schubert {

/// Truncated power series with exact rational coefficients; index = exponent.
class PowerSeries {
public:
    PowerSeries(int nmax, std::vector<BigRational> coeffs);
    static PowerSeries constant(int nmax, const BigRational& c);
    /// Polynomial given by low-order coefficients.
    static PowerSeries polynomial(int nmax, const std::vector<long>& coeffs);
    /// sqrt(1 - 4t) via the binomial series 1 - sum (2/n) C(2n-2, n-1) t^n.
    static PowerSeries sqrt_one_minus_4t(int nmax);

    int nmax() const { return nmax_; }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    /// Series division; common factors of t are cancelled first, and the
    /// remaining divisor must have a nonzero constant term.
    PowerSeries operator/(const PowerSeries& o) const;

private:
    int nmax_;
    std::vector<BigRational> coeffs_;
};

enum class SeriesKind { smooth, factorial, inclusions, catalan };

SeriesKind series_kind_from_name(const std::string& name);

/// Coefficients 0..nmax of the named generating function, as exact integers.
/// smooth:      (1 - 5t + 3t^2 + t^2 sqrt(1-4t)) / (1 - 6t + 8t^2 - 4t^3)
/// factorial:   ((1-t)(1-4t-2t^2) - (1-5t) sqrt(1-4t)) / (2 (1-5t+2t^2-t^3))
/// inclusions:  (1-3t-2t^2 - (1-t-2t^2) sqrt(1-4t)) / (1-3t - (1-t+2t^2) sqrt(1-4t))
/// catalan:     (1 - sqrt(1-4t)) / (2t)
std::vector<BigInt> gf_series(SeriesKind kind, int nmax);

}  // namespace schubert
