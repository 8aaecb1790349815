// Runs the full verification battery and prints one line per criterion.
// Exit status is nonzero when any assertive (non report-only) row fails.

#include <cstdio>
#include <string>

#include "permlab/acceptance.hpp"

int main(int argc, char** argv) {
    const std::string artifact_dir = argc > 1 ? argv[1] : "acceptance_artifacts";
    const auto results = permlab::run_acceptance(artifact_dir);
    bool ok = true;
    for (const auto& r : results) {
        const char* status = r.report_only ? (r.passed ? "REPORT" : "FAIL")
                                           : (r.passed ? "PASS" : "FAIL");
        if (!r.passed) ok = false;
        std::printf("[%s] criterion %2d %-38s (%.1fs) %s\n", status, r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
    }
    std::printf("%s\n", ok ? "acceptance: all criteria satisfied" : "acceptance: FAILURES present");
    return ok ? 0 : 1;
}
