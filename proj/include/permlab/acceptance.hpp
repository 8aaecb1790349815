#ifndef PERMLAB_ACCEPTANCE_HPP
#define PERMLAB_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace permlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool report_only = false;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full verification battery. Report-only rows always count as
// produced-or-failed rather than numerically asserted. Artifact CSVs are
// written under artifact_dir when nonempty.
std::vector<CriterionResult> run_acceptance(const std::string& artifact_dir = "");

}  // namespace permlab

#endif
