#pragma once

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace schubert {

/// The inversion arrangement of w: hyperplanes x_i - x_j = 0 over the
/// inversion pairs (i < j, w(i) > w(j)).
struct InversionArrangement {
    int n = 0;
    std::vector<std::pair<int, int>> hyperplanes;
};

InversionArrangement inversion_arrangement(const Permutation& w);

/// A region of the complement, as the side taken of each hyperplane:
/// orientation[k] = +1 means x_i > x_j on the region for hyperplane k.
struct Region {
    std::vector<int8_t> orientation;

    /// Hyperplanes separating this region from the fundamental region
    /// (the one containing x_1 > x_2 > ... > x_n).
    int distance() const;
};

/// All regions, as acyclic orientations of the inversion pairs found by
/// depth-first search with incremental cycle pruning.  Throws budget_error
/// when the arrangement has more than `max_hyperplanes` hyperplanes.
std::vector<Region> regions(const Permutation& w, int max_hyperplanes = 22);

BigInt region_count(const Permutation& w, int max_hyperplanes = 22);

/// R_w(t) = sum over regions of t^{d(r)}.
IntPolynomial region_distance_gf(const Permutation& w, int max_hyperplanes = 22);

/// Regions as sign-vector rows: one line per region, tab-separated +/- per
/// hyperplane, preceded by a header row of the hyperplane pairs.
std::string regions_tsv(const Permutation& w, int max_hyperplanes = 22);

/// Number of n x n matrices over F_q (q prime) of rank r whose support avoids
/// the forbidden cells.  Exhaustive; throws budget_error when q^(free cells)
/// exceeds the enumeration guard.
BigInt matcount_fq(int n, const std::vector<std::pair<int, int>>& forbidden, int q, int r,
                   std::uint64_t max_matrices = std::uint64_t(1) << 26);

struct MatcountIdentityReport {
    int q = 0;
    BigRational lhs;  // mat_q(n, D(w), n) / (q-1)^n
    BigRational rhs;  // q^{n(n-1) - inv(w)} P_{w w0}(1/q)
    bool equal = false;
};

/// Check mat_q(n, D(w), n)/(q-1)^n == q^{n(n-1)-inv(w)} P_{w w0}(q^{-1}) at
/// each sampled q.  Runs whether or not w satisfies the avoidance condition
/// and reports both sides.
std::vector<MatcountIdentityReport> lewis_morales_reports(const Permutation& w,
                                                          const std::vector<int>& q_values);

bool lewis_morales_check(const Permutation& w, const std::vector<int>& q_values);

}  // namespace schubert
