#pragma once

#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/signed_permutation.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

using PropertyChecker = std::function<bool(const Permutation&)>;

/// Named property checkers usable by the enumeration harness.
const std::vector<std::string>& enumerable_properties();
PropertyChecker property_checker(const std::string& name);

/// Count of elements of S_n with the property, split across `threads`
/// lexicographic blocks and merged in order.  n <= 9 in count mode.
BigInt count_property(const std::string& name, int n, int threads = 1);

/// The matching elements in lexicographic order.
std::vector<Permutation> list_property(const std::string& name, int n);

/// Hyperoctahedral smoothness enumeration over W(B_n), n <= 7.
BigInt count_bn_smooth(int n, int threads = 1);
std::vector<SignedPermutation> list_bn_smooth(int n);

/// Closed-form or generating-function prediction, when one is known.
std::optional<BigInt> expected_count(const std::string& name, int n);

struct VerificationRow {
    int n = 0;
    BigInt actual;
    std::optional<BigInt> expected;
    bool ok = true;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationRow> rows;
    bool passed = true;
    double elapsed_seconds = 0.0;
};

VerificationReport run_enumerate(const std::string& name, int n, int threads = 1);

}  // namespace schubert
