#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

struct CriterionResult {
    int number = 0;
    std::string description;
    bool passed = false;
    double seconds = 0.0;
};

/// Run the full verification suite, one line per criterion on `out`.
/// Returns the results; all passed iff every entry has passed == true.
std::vector<CriterionResult> run_verification(std::ostream& out, int threads = 1);

}  // namespace schubert
