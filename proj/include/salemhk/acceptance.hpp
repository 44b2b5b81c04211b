#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace salemhk {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240611);
// One "PASS"/"FAIL" line per criterion; returns true when all pass.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace salemhk
