#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphzz/common.hpp"

namespace graphzz {

// Differential verification of the fast algorithms against the relation
// oracle (dims 0/1) and against each other (codimension one): seeded random
// instances, multiset comparison, failing cases shrunk by prefix bisection
// and dumped as reproducer files.
struct verify_options {
    std::string dim = "0";  // "0", "1" or "codim1"
    index_t trials = 100;
    std::uint64_t seed = 1;
    index_t max_n = 12;
    index_t max_m = 40;
    int threads = 0;  // 0: take ZZ_THREADS, else 1
    bool inject_fault = false;
    std::string repro_dir = ".";
};

struct trial_failure {
    index_t trial = 0;
    std::string reproducer;
};

struct verify_report {
    index_t trials = 0;
    index_t failures = 0;
    std::vector<trial_failure> failed;
};

verify_report run_verify(const verify_options& opt, std::ostream& log);

}  // namespace graphzz
