#include "schubert/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

PowerSeries::PowerSeries(int nmax, std::vector<BigRational> coeffs)
    : nmax_(nmax), coeffs_(std::move(coeffs)) {
    coeffs_.resize(nmax_ + 1);
}

PowerSeries PowerSeries::constant(int nmax, const BigRational& c) {
    std::vector<BigRational> v(nmax + 1);
    v[0] = c;
    return PowerSeries(nmax, std::move(v));
}

PowerSeries PowerSeries::polynomial(int nmax, const std::vector<long>& coeffs) {
    std::vector<BigRational> v(nmax + 1);
    for (size_t k = 0; k < coeffs.size() && k <= static_cast<size_t>(nmax); ++k) v[k] = coeffs[k];
    return PowerSeries(nmax, std::move(v));
}

PowerSeries PowerSeries::sqrt_one_minus_4t(int nmax) {
    std::vector<BigRational> v(nmax + 1);
    v[0] = 1;
    BigInt binom = 1;  // C(2n-2, n-1), starting at n = 1
    for (int n = 1; n <= nmax; ++n) {
        v[n] = BigRational(-2 * binom, n);
        // C(2n, n) = C(2n-2, n-1) * (2n-1) * 2n / n^2
        binom = binom * (2 * n - 1) * (2 * n) / (BigInt(n) * n);
    }
    return PowerSeries(nmax, std::move(v));
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    const int m = std::min(nmax_, o.nmax_);
    std::vector<BigRational> v(m + 1);
    for (int k = 0; k <= m; ++k) v[k] = coeffs_[k] + o.coeffs_[k];
    return PowerSeries(m, std::move(v));
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    const int m = std::min(nmax_, o.nmax_);
    std::vector<BigRational> v(m + 1);
    for (int k = 0; k <= m; ++k) v[k] = coeffs_[k] - o.coeffs_[k];
    return PowerSeries(m, std::move(v));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    const int m = std::min(nmax_, o.nmax_);
    std::vector<BigRational> v(m + 1);
    for (int i = 0; i <= m; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= m; ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return PowerSeries(m, std::move(v));
}

PowerSeries PowerSeries::operator/(const PowerSeries& o) const {
    const int m = std::min(nmax_, o.nmax_);
    // Cancel the common power of t.
    int val = 0;
    while (val <= m && coeffs_[val] == 0 && o.coeffs_[val] == 0) ++val;
    if (val > m || o.coeffs_[val] == 0)
        throw std::invalid_argument("series division by a series of higher valuation");
    const int mm = m - val;
    std::vector<BigRational> num(coeffs_.begin() + val, coeffs_.begin() + m + 1);
    std::vector<BigRational> den(o.coeffs_.begin() + val, o.coeffs_.begin() + m + 1);
    std::vector<BigRational> q(mm + 1);
    for (int k = 0; k <= mm; ++k) {
        BigRational acc = num[k];
        for (int i = 1; i <= k; ++i) acc -= den[i] * q[k - i];
        q[k] = acc / den[0];
    }
    return PowerSeries(mm, std::move(q));
}

SeriesKind series_kind_from_name(const std::string& name) {
    if (name == "smooth") return SeriesKind::smooth;
    if (name == "factorial") return SeriesKind::factorial;
    if (name == "inclusions") return SeriesKind::inclusions;
    if (name == "catalan") return SeriesKind::catalan;
    throw std::invalid_argument("unknown series: " + name);
}

std::vector<BigInt> gf_series(SeriesKind kind, int nmax) {
    if (nmax < 0 || nmax > 64) throw std::invalid_argument("gf_series: nmax out of range");
    // Work with extra guard terms so the valuation shifts in the divisions do
    // not truncate the requested range.
    const int m = nmax + 4;
    const PowerSeries root = PowerSeries::sqrt_one_minus_4t(m);
    PowerSeries result = PowerSeries::constant(m, 0);
    switch (kind) {
        case SeriesKind::smooth: {
            const auto num = PowerSeries::polynomial(m, {1, -5, 3}) +
                             PowerSeries::polynomial(m, {0, 0, 1}) * root;
            const auto den = PowerSeries::polynomial(m, {1, -6, 8, -4});
            result = num / den;
            break;
        }
        case SeriesKind::factorial: {
            const auto num = PowerSeries::polynomial(m, {1, -1}) *
                                 PowerSeries::polynomial(m, {1, -4, -2}) -
                             PowerSeries::polynomial(m, {1, -5}) * root;
            const auto den = PowerSeries::polynomial(m, {2, -10, 4, -2});
            result = num / den;
            break;
        }
        case SeriesKind::inclusions: {
            const auto num = PowerSeries::polynomial(m, {1, -3, -2}) -
                             PowerSeries::polynomial(m, {1, -1, -2}) * root;
            const auto den = PowerSeries::polynomial(m, {1, -3}) -
                             PowerSeries::polynomial(m, {1, -1, 2}) * root;
            result = num / den;
            break;
        }
        case SeriesKind::catalan: {
            const auto num = PowerSeries::constant(m, 1) - root;
            const auto den = PowerSeries::polynomial(m, {0, 2});
            result = num / den;
            break;
        }
    }
    std::vector<BigInt> out;
    out.reserve(nmax + 1);
    for (int k = 0; k <= nmax; ++k) {
        const BigRational& c = result.coefficients()[k];
        if (denominator(c) != 1) throw std::logic_error("gf_series: non-integer coefficient");
        out.push_back(numerator(c));
    }
    return out;
}

}  // namespace schubert
