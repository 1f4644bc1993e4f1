#pragma once

#include <string>
#include <vector>

namespace bpdyn {

/// One reproduction check: a named quantitative claim, the anchor describing
/// the mathematical statement being checked, and the comparison outcome.
struct ReproEntry {
    std::string name;
    std::string anchor;
    std::string expected;
    std::string computed;
    std::string status;  // "pass", "fail" or "inconclusive"
};

struct ReproReport {
    std::vector<ReproEntry> entries;
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;
};

struct ReproOptions {
    std::string only;  // substring filter on entry names; empty = run all
    int seed_cap = 0;  // cap on simulation seeds per entry; 0 = no cap
};

/// Runs the full reproduction suite: closed forms, the equilibrium table,
/// focal-value identities and sign sweeps, the two-cycle fit and its
/// simulation, the uniqueness pair, infeasibility certificates, the circle
/// integrals, and the small-alpha cycle scaling. Entries are ordered by name.
ReproReport run_repro(const ReproOptions& options);

}  // namespace bpdyn
