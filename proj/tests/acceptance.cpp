// Runs the acceptance criteria and prints one PASS/FAIL line per criterion, followed by its
// notes. Optional arguments select criterion ids; the exit code is 1 when any of them fails.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "planarlim/verify.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
    if (ids.empty())
        for (int id = 1; id <= planarlim::kCriterionCount; ++id) ids.push_back(id);
    int failed = 0;
    for (int id : ids) {
        planarlim::CriterionResult r = planarlim::run_criterion(id);
        if (!r.pass) ++failed;
        std::cout << planarlim::format_result(r) << std::endl;
    }
    std::cout << ids.size() - failed << " of " << ids.size() << " criteria pass" << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
