#include "schubert/arrangements.hpp"

#include "schubert/bruhat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schubert {

InversionArrangement inversion_arrangement(const Permutation& w) {
    InversionArrangement a;
    a.n = w.size();
    a.hyperplanes = w.inversions();
    return a;
}

int Region::distance() const {
    int d = 0;
    for (int8_t o : orientation)
        if (o < 0) ++d;
    return d;
}

namespace {

struct RegionSearch {
    int n;
    const std::vector<std::pair<int, int>>& hyp;
    std::vector<std::vector<int>> out_edges;  // current strict-order digraph
    std::vector<int8_t> orientation;
    std::vector<Region>* regions_out = nullptr;
    BigInt count = 0;

    explicit RegionSearch(int n_, const std::vector<std::pair<int, int>>& h)
        : n(n_), hyp(h), out_edges(n_ + 1) {}

    bool reaches(int from, int target) const {
        if (from == target) return true;
        std::vector<char> seen(n + 1, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : out_edges[u]) {
                if (v == target) return true;
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        return false;
    }

    void search(size_t k) {
        if (k == hyp.size()) {
            ++count;
            if (regions_out) regions_out->push_back(Region{orientation});
            return;
        }
        const auto [i, j] = hyp[k];
        // +1: x_i > x_j (edge i -> j); -1: the reverse.  An orientation stays
        // realizable iff the strict-order digraph stays acyclic.
        for (int8_t sign : {int8_t(+1), int8_t(-1)}) {
            const int from = sign > 0 ? i : j;
            const int to = sign > 0 ? j : i;
            if (reaches(to, from)) continue;
            out_edges[from].push_back(to);
            orientation.push_back(sign);
            search(k + 1);
            orientation.pop_back();
            out_edges[from].pop_back();
        }
    }
};

}  // namespace

std::vector<Region> regions(const Permutation& w, int max_hyperplanes) {
    const auto arr = inversion_arrangement(w);
    if (static_cast<int>(arr.hyperplanes.size()) > max_hyperplanes)
        throw budget_error("inversion arrangement exceeds the hyperplane budget");
    RegionSearch s(arr.n, arr.hyperplanes);
    std::vector<Region> out;
    s.regions_out = &out;
    s.search(0);
    return out;
}

BigInt region_count(const Permutation& w, int max_hyperplanes) {
    const auto arr = inversion_arrangement(w);
    if (static_cast<int>(arr.hyperplanes.size()) > max_hyperplanes)
        throw budget_error("inversion arrangement exceeds the hyperplane budget");
    RegionSearch s(arr.n, arr.hyperplanes);
    s.search(0);
    return s.count;
}

IntPolynomial region_distance_gf(const Permutation& w, int max_hyperplanes) {
    std::vector<BigInt> coeffs;
    for (const auto& r : regions(w, max_hyperplanes)) {
        const int d = r.distance();
        if (d >= static_cast<int>(coeffs.size())) coeffs.resize(d + 1);
        coeffs[d] += 1;
    }
    return IntPolynomial(std::move(coeffs));
}

std::string regions_tsv(const Permutation& w, int max_hyperplanes) {
    const auto arr = inversion_arrangement(w);
    std::ostringstream out;
    for (size_t k = 0; k < arr.hyperplanes.size(); ++k) {
        if (k) out << '\t';
        out << arr.hyperplanes[k].first << ',' << arr.hyperplanes[k].second;
    }
    out << '\n';
    for (const auto& r : regions(w, max_hyperplanes)) {
        for (size_t k = 0; k < r.orientation.size(); ++k) {
            if (k) out << '\t';
            out << (r.orientation[k] > 0 ? '+' : '-');
        }
        out << '\n';
    }
    return out.str();
}

namespace {

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    const int n = static_cast<int>(m.size());
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (m[row][col] % p != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        // Normalize the pivot row.
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (m[rank][col] * x % p == 1) {
                inv = x;
                break;
            }
        for (int c = col; c < n; ++c) m[rank][c] = m[rank][c] * inv % p;
        for (int row = 0; row < n; ++row) {
            if (row == rank || m[row][col] % p == 0) continue;
            const int f = m[row][col];
            for (int c = col; c < n; ++c) m[row][c] = ((m[row][c] - f * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

BigInt matcount_fq(int n, const std::vector<std::pair<int, int>>& forbidden, int q, int r,
                   std::uint64_t max_matrices) {
    if (!is_prime(q)) throw std::invalid_argument("matcount_fq: q must be prime");
    std::vector<std::vector<char>> blocked(n, std::vector<char>(n, 0));
    for (auto [i, j] : forbidden) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::invalid_argument("matcount_fq: forbidden cell out of range");
        blocked[i - 1][j - 1] = 1;
    }
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!blocked[i][j]) free_cells.emplace_back(i, j);

    double total_log = free_cells.size() * std::log2(double(q));
    if (total_log > std::log2(double(max_matrices)))
        throw budget_error("matcount_fq: enumeration exceeds the matrix budget");

    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::vector<int> digits(free_cells.size(), 0);
    BigInt count = 0;
    while (true) {
        if (rank_mod_p(m, q) == r) ++count;
        size_t k = 0;
        for (; k < digits.size(); ++k) {
            auto [i, j] = free_cells[k];
            if (++digits[k] < q) {
                m[i][j] = digits[k];
                break;
            }
            digits[k] = 0;
            m[i][j] = 0;
        }
        if (k == digits.size()) break;
    }
    return count;
}

std::vector<MatcountIdentityReport> lewis_morales_reports(const Permutation& w,
                                                          const std::vector<int>& q_values) {
    const int n = w.size();
    const Diagram d = diagram(w);
    const int inv = w.length();

    std::vector<int> rev(n);
    for (int i = 0; i < n; ++i) rev[i] = w(n - i);
    const IntPolynomial p = poincare(Permutation(std::move(rev)));  // P_{w w0}

    std::vector<MatcountIdentityReport> reports;
    for (int q : q_values) {
        MatcountIdentityReport rep;
        rep.q = q;
        const BigInt mat = matcount_fq(n, d.cells, q, n);
        BigInt denom = 1;
        for (int k = 0; k < n; ++k) denom *= (q - 1);
        rep.lhs = BigRational(mat, denom);

        // q^{n(n-1) - inv(w)} P_{w w0}(1/q) as an exact rational.
        BigRational rhs = 0;
        const BigRational qinv = BigRational(1, q);
        BigRational power = 1;
        for (int k = 0; k <= p.degree(); ++k) {
            rhs += BigRational(p.coefficient(k)) * power;
            power *= qinv;
        }
        BigRational scale = 1;
        for (int k = 0; k < n * (n - 1) - inv; ++k) scale *= q;
        rep.rhs = rhs * scale;
        rep.equal = rep.lhs == rep.rhs;
        reports.push_back(std::move(rep));
    }
    return reports;
}

bool lewis_morales_check(const Permutation& w, const std::vector<int>& q_values) {
    const auto reports = lewis_morales_reports(w, q_values);
    return std::all_of(reports.begin(), reports.end(),
                       [](const MatcountIdentityReport& r) { return r.equal; });
}

}  // namespace schubert
