#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hecat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long checks = 0;
    std::string detail;  // first failure, empty on success
};

// Suites "fast" and "full". Timing lines go to `progress` when given;
// results are deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(const std::string& suite, uint64_t seed, std::ostream* progress = nullptr);

// Full command line (without the program name). Returns the exit code:
// 0 success, 1 usage error, 2 mathematical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecat
