// Acceptance gate: runs the full verification battery at the contract
// scale and prints one line per criterion. Exit 0 only if every check
// passes.

#include <cstdio>

#include "dcx/verify.hpp"

int main() {
    dcx::RunConfig cfg; // n=2, weight 10, depth 4, seed 0
    dcx::Report rep;
    try {
        rep = dcx::verify_suite(cfg);
    } catch (const dcx::Error& e) {
        std::printf("SUITE: FAIL - unexpected error %s: %s\n",
                    dcx::errc_name(e.code()), e.what());
        return 1;
    }
    for (const auto& c : rep.checks)
        std::printf("%s: %s%s%s\n", c.id.c_str(), c.pass ? "PASS" : "FAIL",
                    c.detail.empty() ? "" : " - ", c.detail.c_str());
    for (const auto& [k, v] : rep.counts)
        std::printf("# %s = %lld\n", k.c_str(), (long long)v);
    return rep.all_pass() ? 0 : 1;
}
