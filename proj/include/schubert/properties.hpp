#pragma once

#include "schubert/patterns.hpp"
#include "schubert/permutation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

bool is_smooth(const Permutation& w);
bool is_factorial(const Permutation& w);
bool is_gorenstein(const Permutation& w);
bool is_defined_by_inclusions(const Permutation& w);
bool is_lci(const Permutation& w);
bool is_321_hexagon_avoiding(const Permutation& w);
bool is_boolean(const Permutation& w);
bool is_vexillary(const Permutation& w);
bool is_2_vexillary(const Permutation& w);
/// Membership in KL_2 (P_{id,w}(1) <= 2), by the 66-pattern characterization.
bool kl_filtration_level_le2(const Permutation& w);

/// The divisor-class side of the Gorenstein test: whether the system
/// beta_{b-1} - beta_{a-1} = 1 over the covers w t_ab of w admits an integer
/// solution (the boundary divisor sum lies in the restricted Picard group).
bool gorenstein_divisor_condition(const Permutation& w);

/// Pattern lists backing the checkers.
const std::vector<Permutation>& smooth_patterns();              // 3412, 4231
const std::vector<Permutation>& inclusions_patterns();          // 4231, 35142, 42513, 351624
const std::vector<Permutation>& lci_patterns();
const std::vector<Permutation>& hexagon_patterns();
const std::vector<Permutation>& boolean_patterns();             // 321, 3412
const std::vector<Permutation>& two_vexillary_patterns();       // 35 patterns
const std::vector<Permutation>& kl2_patterns();                 // 66 patterns
const std::vector<Permutation>& kl_exactly_two_patterns();      // 6 patterns
const PatternSpec& factorial_adjacency_pattern();               // 3_41_2
const std::vector<PatternSpec>& gorenstein_restricted_patterns();

/// Aggregated report.  Every false pattern-characterized flag carries the
/// lexicographically first violating occurrence as its witness.
struct PropertyReport {
    Permutation subject;
    std::map<std::string, bool> flags;
    std::map<std::string, Occurrence> witnesses;
    bool palindromic = false;
    std::optional<std::vector<int>> factor_exponents;
    std::vector<Permutation> singular_components;

    std::string to_json() const;
};

PropertyReport classify(const Permutation& w);

}  // namespace schubert
