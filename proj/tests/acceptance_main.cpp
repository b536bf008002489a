#include "schubert/verify.hpp"

#include <iostream>

int main() {
    const auto results = schubert::run_verification(std::cout);
    int failures = 0;
    for (const auto& r : results)
        if (!r.passed) ++failures;
    if (failures) std::cout << failures << " criterion(s) failed\n";
    else std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
