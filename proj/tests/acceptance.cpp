// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failures.

#include "commdet/verify.hpp"

#include <cstdio>
#include <sstream>

int main() {
    using namespace commdet;

    std::ostringstream progress;
    VerifyOutcome outcome = run_criteria(suite_criteria("all"), 7, &progress);

    int failures = 0;
    for (const auto& r : outcome.results) {
        std::printf("CRITERION %2d [%-22s] %s  (%.2f s)  %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                      : "ACCEPTANCE: FAILURES PRESENT");
    return failures;
}
