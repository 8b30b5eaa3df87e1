#pragma once

#include <string>
#include <vector>

namespace loopschub {

// One named golden check: a worked example replayed end to end.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // short mismatch report; empty when passing
};

// Golden suites.  Each function replays a family of worked examples against
// the library and returns one row per check.
std::vector<CheckResult> check_double_schubert_table();   // n=3 equivariant table
std::vector<CheckResult> check_single_schubert_table();   // n=3 ordinary table
std::vector<CheckResult> check_affine_sl3_table();        // n=3 loop classes + displays
std::vector<CheckResult> check_affine_sl4_table();        // n=4 loop classes
std::vector<CheckResult> check_lambda_hat_tables();       // coset coweights, closed form
std::vector<CheckResult> check_factorization_examples();  // alcove factorizations

// All suites concatenated, in display order.
std::vector<CheckResult> verify_all();

}  // namespace loopschub
