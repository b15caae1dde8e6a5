// Acceptance gate: one line per numbered criterion, nonzero exit on any
// failure. The numbered checks run at the full default bounds; the trailing
// extras are cross-checks beyond the numbered list.
#include <cstdio>
#include <vector>

#include "degform/sweep.hpp"

int main() {
    std::vector<degform::CheckResult> checks;
    try {
        checks = degform::run_all_checks();
    } catch (const std::exception& e) {
        std::printf("FAIL  acceptance run aborted: %s\n", e.what());
        return 1;
    }

    constexpr size_t numbered = 13;
    size_t failed = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        const degform::CheckResult& c = checks[i];
        if (!c.passed)
            ++failed;
        std::string label = i < numbered
                                ? std::to_string(i + 1) + ". " + c.name
                                : "extra: " + c.name;
        std::printf("%s  %s (%lld cases)%s%s\n", c.passed ? "PASS" : "FAIL",
                    label.c_str(), c.cases, c.passed ? "" : ": ",
                    c.detail.c_str());
    }
    std::printf("%zu/%zu checks passed\n", checks.size() - failed,
                checks.size());
    return failed == 0 ? 0 : 1;
}
