#ifndef CARPET_ACCEPTANCE_HPP
#define CARPET_ACCEPTANCE_HPP

#include <string>
#include <utility>
#include <vector>

namespace carpet {

/// Outcome of one verification criterion. `facts` is an ordered list of
/// key/value pairs, fully determined by the seed (timings are kept out of
/// it so reports are reproducible byte for byte).
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::vector<std::pair<std::string, std::string>> facts;
};

struct AcceptanceOptions {
    unsigned long seed = 42;
    int threads = 0;  // 0: hardware default, capped by CARPET_THREADS
};

/// Runs the full verification battery in criterion order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// One-line "PASS/FAIL criterion-k name (t s): summary" form.
std::string format_line(const CriterionResult& r);

int effective_threads(int requested);

}  // namespace carpet

#endif
