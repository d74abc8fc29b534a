#pragma once

#include <string>
#include <vector>

namespace modwave {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

/// Run the built-in verification checks. The quick tier covers the
/// index/root criteria; the full tier adds the Hill and Newton-solver
/// cross-checks and the diagram asymptotes.
std::vector<CriterionResult> run_acceptance(bool full);

}  // namespace modwave
