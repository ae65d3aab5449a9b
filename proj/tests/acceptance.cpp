// Runs every acceptance criterion with its full bounds and time limit.
#include <iostream>

#include "giambelli/verification.hpp"

int main() {
    bool ok = true;
    for (const auto& c : isotropic::criteria()) {
        const auto r = isotropic::run_criterion(c.id);
        std::cout << isotropic::format_result(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}
