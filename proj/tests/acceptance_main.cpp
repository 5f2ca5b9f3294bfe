// Runs the verification suite and prints one pass/fail line per check.
// Exit status 0 only when every check passes.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "homcount/numeric.hpp"
#include "homcount/verify.hpp"

int main(int argc, char** argv) {
    homcount::VerifyOptions options;
    if (argc > 1) options.budget = homcount::Int(std::string(argv[1]));
    if (const char* env = std::getenv("HOMCOUNT_BUDGET")) options.budget = homcount::Int(env);

    auto checks = homcount::verify_reference_results(options);
    int index = 0;
    int passed = 0;
    for (const auto& c : checks) {
        ++index;
        std::printf("%s criterion %d, %s (%lld ms): %s\n", c.pass ? "PASS" : "FAIL", index,
                    c.name.c_str(), c.elapsed_ms, c.detail.c_str());
        if (c.pass) ++passed;
    }
    bool all_pass = passed == index;
    std::printf("%s: %d/%d checks passed\n", all_pass ? "OK" : "FAILED", passed, index);
    return all_pass ? 0 : 1;
}
