#pragma once

// Verification suite: recomputes the reference results this library is built
// around and checks them against frozen expected values. Each check is an
// independent criterion; a failing check reports the first mismatch it found.

#include <string>
#include <vector>

#include "homcount/numeric.hpp"

namespace homcount {

struct VerifyOptions {
    // Raised above the enumeration default so the heavy divisibility sweeps
    // (genus-2 surface group into SL2(F_5), cost ~1.7e9) fit. Deliberately
    // below the cost of brute-forcing S_8, which keeps the growth check at
    // its small fallback size.
    Int budget = Int(4000000000);
    int workers = 1;
};

struct VerificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;    // summary on pass, first mismatch on failure
    long long elapsed_ms = 0;
    long long limit_ms = 0;  // 0 = no runtime bound for this check
};

// Runs all checks (never throws; failures are captured per check).
std::vector<VerificationCheck> verify_reference_results(const VerifyOptions& options = {});

}  // namespace homcount
