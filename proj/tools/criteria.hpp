#pragma once

#include <string>
#include <vector>

namespace tsurf::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    // Failure consists only of the documented Du Val quotient deviation.
    bool known_deviation = false;
    std::string detail;
    double seconds = 0;
};

// Quick scale shrinks the sweep bounds for selftest; full scale is the
// acceptance run.
enum class Scale { Quick, Full };

CriterionResult run_criterion(int id, Scale scale);
std::vector<CriterionResult> run_all(Scale scale);

std::string format_line(const CriterionResult& r);

}  // namespace tsurf::acceptance
