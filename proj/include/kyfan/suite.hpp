#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "kyfan/bounds.hpp"

namespace kyfan {

/// Aggregate verdict for one theorem over an exhaustive labeled-graph scan.
/// Equality censuses are numeric (|lhs - rhs| <= tol_eq) and, where the
/// theorem characterizes its equality class, cross-checked per graph against
/// the structural predicate; disagreements land in census_mismatch.
struct TheoremTally {
    TheoremId id{};
    long long checked = 0;   // (graph, k) pairs for per-k theorems
    long long skipped = 0;   // precondition not applicable
    long long violations = 0;
    long long equalities = 0;
    long long degenerate = 0;        // TTFREE: edgeless graphs, flagged apart
    long long census_mismatch = 0;   // CAP / TTFREE predicate disagreements
    double max_excess = -std::numeric_limits<double>::infinity(); // signed bound excess
    // equality graphs in graph6, sorted; key = k for per-k theorems, else 0
    std::map<int, std::vector<std::string>> equality_graphs;
};

// spectral identities accumulated during the same scan
struct SuiteInvariantStats {
    double max_f2_deviation = 0.0;            // |F2 max-formula - sigma1+sigma2|
    double max_bipartite_identity_dev = 0.0;  // bipartite graphs: |F2 - 2 mu1|
    long long bipartite_f2_over_n = 0;        // bipartite graphs with F2 > n + tol
};

struct SuiteReport {
    int nmax = 0;
    long long graphs_scanned = 0;
    std::vector<TheoremTally> tallies;
    SuiteInvariantStats invariants;

    long long total_violations() const;
    bool clean() const; // zero violations and zero census mismatches
};

// the theorems verify_suite can evaluate per graph
std::vector<TheoremId> suite_theorems();

// Exhaustive scan of every labeled graph with 1 <= n <= nmax (nmax <= 8). The
// enumeration is split into contiguous bitset ranges processed independently;
// merged results are deterministic for any thread count.
SuiteReport verify_suite(int nmax, const std::vector<TheoremId>& theorems,
                         const CertOptions& opts = {}, int threads = 1);

} // namespace kyfan
