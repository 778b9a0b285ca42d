#pragma once

#include <string>

namespace pathconv {

struct SelfcheckOptions {
    unsigned seed = 1;
    int max_n = 7;  // largest random-graph size for the differential suite
};

struct SelfcheckReport {
    int checks = 0;
    int failures = 0;
    std::string text;  // one line per group plus a summary line
};

// Runs the built-in differential suite: engine-vs-oracle interval agreement
// (presets plus random tuples), closed-form strategy cross-checks,
// convexity-space axioms, and gadget equivalence with a serialization
// round-trip. Deterministic for fixed options.
SelfcheckReport run_selfcheck(const SelfcheckOptions& opts = {});

}  // namespace pathconv
