#ifndef SCOT_ACCEPTANCE_HPP
#define SCOT_ACCEPTANCE_HPP

#include <string>
#include <vector>

// End-to-end verification suite: each criterion exercises the library
// through its public interface and reports pass/fail with a short detail
// string. Shared by the verification binary and the CLI.

namespace scot::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

CriterionResult check_honest_correctness();   // 1
CriterionResult check_breidbart_tightness();  // 2
CriterionResult check_random_guess();         // 3
CriterionResult check_bound_compliance();     // 4
CriterionResult check_cloning_sum();          // 5
CriterionResult check_optimizer();            // 6
CriterionResult check_error_tolerance();      // 7
CriterionResult check_classical();            // 8
CriterionResult check_timelike_relay();       // 9
CriterionResult check_numerics();             // 10

std::vector<CriterionResult> run_all();

// "PASS  3  random-guess baseline  (0.01 s)  p_n = 2^-n exact" style line.
std::string format_line(const CriterionResult& r);

}  // namespace scot::acceptance

#endif
