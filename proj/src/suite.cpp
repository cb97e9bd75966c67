#include "kyfan/suite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <thread>

#include "kyfan/errors.hpp"

namespace kyfan {

namespace {

constexpr int kTheoremCount = 13;

bool is_suite_theorem(TheoremId id) {
    return id != TheoremId::GHK_SPREAD && id != TheoremId::MOHAR_LOWER;
}

struct ScanPlan {
    bool want[kTheoremCount] = {};
    bool need_chi = false;
    bool need_cmpi = false;
    bool need_ttfree = false;
    CertOptions opts;
};

struct LocalScan {
    TheoremTally tally[kTheoremCount];
    SuiteInvariantStats invariants;
    long long graphs = 0;
};

// one labeled graph, unpacked from its edge bitset
struct GraphFrame {
    int n = 0;
    std::uint64_t code = 0;
    int m = 0;
    double mu[8];      // non-increasing
    double sigma[8];   // |mu| non-increasing
    double psig[9];    // prefix sums of sigma
    std::uint64_t rows[8];
    int chi = -1;
    std::string g6;    // filled lazily

    const std::string& graph6() {
        if (g6.empty()) g6 = graph6_encode(Graph::from_code(n, code));
        return g6;
    }
};

void unpack(int n, std::uint64_t code, const std::pair<int, int>* pairs, int npairs,
            GraphFrame& f) {
    f.n = n;
    f.code = code;
    f.m = std::popcount(code);
    f.chi = -1;
    f.g6.clear();
    double buf[64] = {};
    for (int v = 0; v < n; ++v) f.rows[v] = 0;
    std::uint64_t bits = code;
    while (bits) {
        const int idx = std::countr_zero(bits);
        bits &= bits - 1;
        const auto [i, j] = pairs[idx];
        buf[i * n + j] = buf[j * n + i] = 1.0;
        f.rows[i] |= std::uint64_t{1} << j;
        f.rows[j] |= std::uint64_t{1} << i;
    }
    (void)npairs;
    detail::jacobi_eigenvalues(buf, n, f.mu);
    for (int i = 0; i < n; ++i) f.sigma[i] = std::fabs(f.mu[i]);
    std::sort(f.sigma, f.sigma + n, std::greater<double>());
    f.psig[0] = 0.0;
    for (int i = 0; i < n; ++i) f.psig[i + 1] = f.psig[i] + f.sigma[i];
}

int chi_of(GraphFrame& f) {
    if (f.chi < 0) f.chi = detail::chromatic_from_masks(f.rows, f.n);
    return f.chi;
}

void record_upper(TheoremTally& t, GraphFrame& f, int k, double lhs, double rhs,
                  const ScanPlan& plan) {
    ++t.checked;
    const double excess = lhs - rhs;
    t.max_excess = std::max(t.max_excess, excess);
    if (!leq(lhs, rhs, plan.opts.tol)) ++t.violations;
    if (std::fabs(excess) <= plan.opts.tol_eq) {
        ++t.equalities;
        t.equality_graphs[k].push_back(f.graph6());
    }
}

void record_lower(TheoremTally& t, GraphFrame& f, int k, double lhs, double rhs,
                  const ScanPlan& plan) {
    ++t.checked;
    const double excess = rhs - lhs;
    t.max_excess = std::max(t.max_excess, excess);
    if (!geq(lhs, rhs, plan.opts.tol)) ++t.violations;
    if (std::fabs(excess) <= plan.opts.tol_eq) {
        ++t.equalities;
        t.equality_graphs[k].push_back(f.graph6());
    }
}

void scan_graph(GraphFrame& f, const ScanPlan& plan, LocalScan& local) {
    const int n = f.n;
    ++local.graphs;

    const double mu1 = f.mu[0];
    const double sqrt_n2 = static_cast<double>(n);

    // F2 max-formula agreement (spectral invariant, free here)
    if (n >= 2) {
        const double f2 = std::max(std::fabs(f.mu[0]) + std::fabs(f.mu[1]),
                                   std::fabs(f.mu[0]) + std::fabs(f.mu[n - 1]));
        local.invariants.max_f2_deviation =
            std::max(local.invariants.max_f2_deviation, std::fabs(f2 - f.psig[2]));
        if (detail::bipartite_from_masks(f.rows, n)) {
            local.invariants.max_bipartite_identity_dev =
                std::max(local.invariants.max_bipartite_identity_dev,
                         std::fabs(f.psig[2] - 2.0 * mu1));
            if (!leq(f.psig[2], static_cast<double>(n), plan.opts.tol))
                ++local.invariants.bipartite_f2_over_n;
        }
    }

    auto want = [&](TheoremId id) { return plan.want[static_cast<int>(id)]; };

    if (want(TheoremId::TNIK) || want(TheoremId::TMOH) || want(TheoremId::KOMO)) {
        for (int k = 1; k <= n; ++k) {
            const double rhs = 0.5 * (1.0 + std::sqrt(static_cast<double>(k))) * sqrt_n2;
            const double lhs = f.psig[k];
            if (want(TheoremId::TNIK))
                record_upper(local.tally[static_cast<int>(TheoremId::TNIK)], f, k, lhs, rhs, plan);
            if (want(TheoremId::TMOH))
                record_upper(local.tally[static_cast<int>(TheoremId::TMOH)], f, k, lhs, rhs, plan);
            if (k == n && want(TheoremId::KOMO))
                record_upper(local.tally[static_cast<int>(TheoremId::KOMO)], f, k, lhs, rhs, plan);
        }
    }
    if (want(TheoremId::MO1)) {
        const double fro = std::sqrt(2.0 * f.m);
        for (int k = 1; k <= n; ++k)
            record_upper(local.tally[static_cast<int>(TheoremId::MO1)], f, k, f.psig[k],
                         std::sqrt(static_cast<double>(k)) * fro, plan);
    }
    if (want(TheoremId::MO2)) {
        const double amax = f.m > 0 ? 1.0 : 0.0;
        for (int k = 1; k <= n; ++k)
            record_upper(local.tally[static_cast<int>(TheoremId::MO2)], f, k, f.psig[k],
                         std::sqrt(static_cast<double>(k)) * sqrt_n2 * amax, plan);
    }
    if (want(TheoremId::MO3)) {
        const double amax = f.m > 0 ? 1.0 : 0.0;
        for (int k = 1; k <= n; ++k)
            record_upper(local.tally[static_cast<int>(TheoremId::MO3)], f, k, f.psig[k],
                         0.5 * (1.0 + std::sqrt(static_cast<double>(k))) * sqrt_n2 * amax,
                         plan);
    }
    if (want(TheoremId::CAP)) {
        auto& t = local.tally[static_cast<int>(TheoremId::CAP)];
        const double lhs = f.psig[n];
        const double rhs = 2.0 * mu1;
        record_lower(t, f, 0, lhs, rhs, plan);
        const bool numeric_eq = std::fabs(lhs - rhs) <= plan.opts.tol_eq;
        if (numeric_eq != detail::cmpi_from_masks(f.rows, n)) ++t.census_mismatch;
    }
    if (want(TheoremId::THOF)) {
        auto& t = local.tally[static_cast<int>(TheoremId::THOF)];
        if (f.m == 0) {
            ++t.skipped;
        } else {
            record_lower(t, f, 0, f.psig[chi_of(f)], 2.0 * mu1, plan);
        }
    }
    if (want(TheoremId::HOFFMAN)) {
        auto& t = local.tally[static_cast<int>(TheoremId::HOFFMAN)];
        if (f.m == 0) {
            ++t.skipped;
        } else {
            const int chi = chi_of(f);
            double lhs = 0.0;
            for (int i = 0; i < chi - 1; ++i) lhs += std::fabs(f.mu[n - 1 - i]);
            record_lower(t, f, 0, lhs, mu1, plan);
        }
    }
    if (want(TheoremId::TTFREE)) {
        auto& t = local.tally[static_cast<int>(TheoremId::TTFREE)];
        if (!detail::triangle_free_from_masks(f.rows, n)) {
            ++t.skipped;
        } else if (f.m == 0) {
            ++t.degenerate; // 0 = 2*sqrt(0), flagged apart from the census
        } else {
            const double lhs = n >= 2 ? f.psig[2] : f.psig[1];
            const double rhs = 2.0 * std::sqrt(static_cast<double>(f.m));
            record_upper(t, f, 0, lhs, rhs, plan);
            const bool numeric_eq = std::fabs(lhs - rhs) <= plan.opts.tol_eq;
            if (numeric_eq != detail::cbpi_from_masks(f.rows, n)) ++t.census_mismatch;
        }
    }
    if (want(TheoremId::EMNA)) {
        auto& t = local.tally[static_cast<int>(TheoremId::EMNA)];
        if (n < 2) {
            ++t.skipped;
        } else {
            record_upper(t, f, 0, std::fabs(f.mu[0]) + std::fabs(f.mu[1]),
                         (0.5 + std::sqrt(5.0 / 12.0)) * n, plan);
        }
    }
}

void merge(LocalScan& into, LocalScan&& from) {
    into.graphs += from.graphs;
    for (int i = 0; i < kTheoremCount; ++i) {
        TheoremTally& a = into.tally[i];
        TheoremTally& b = from.tally[i];
        a.checked += b.checked;
        a.skipped += b.skipped;
        a.violations += b.violations;
        a.equalities += b.equalities;
        a.degenerate += b.degenerate;
        a.census_mismatch += b.census_mismatch;
        a.max_excess = std::max(a.max_excess, b.max_excess);
        for (auto& [k, list] : b.equality_graphs) {
            auto& dst = a.equality_graphs[k];
            dst.insert(dst.end(), std::make_move_iterator(list.begin()),
                       std::make_move_iterator(list.end()));
        }
    }
    into.invariants.max_f2_deviation =
        std::max(into.invariants.max_f2_deviation, from.invariants.max_f2_deviation);
    into.invariants.max_bipartite_identity_dev =
        std::max(into.invariants.max_bipartite_identity_dev,
                 from.invariants.max_bipartite_identity_dev);
    into.invariants.bipartite_f2_over_n += from.invariants.bipartite_f2_over_n;
}

} // namespace

long long SuiteReport::total_violations() const {
    long long v = 0;
    for (const auto& t : tallies) v += t.violations;
    return v;
}

bool SuiteReport::clean() const {
    for (const auto& t : tallies)
        if (t.violations != 0 || t.census_mismatch != 0) return false;
    return true;
}

std::vector<TheoremId> suite_theorems() {
    std::vector<TheoremId> ids;
    for (TheoremId id : all_theorems())
        if (is_suite_theorem(id)) ids.push_back(id);
    return ids;
}

SuiteReport verify_suite(int nmax, const std::vector<TheoremId>& theorems,
                         const CertOptions& opts, int threads) {
    if (nmax < 1 || nmax > 8)
        throw precondition_error("verify_suite supports 1 <= nmax <= 8");
    if (theorems.empty())
        throw precondition_error("verify_suite: no theorems selected");
    ScanPlan plan;
    plan.opts = opts;
    for (TheoremId id : theorems) {
        if (!is_suite_theorem(id))
            throw precondition_error("verify_suite: " + to_string(id) +
                                     " is evaluation-only, not a per-graph check");
        plan.want[static_cast<int>(id)] = true;
    }
    threads = std::max(1, std::min(threads, 64));

    LocalScan total;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

        const auto ranges = partition_enumeration(n, threads);
        std::vector<LocalScan> locals(ranges.size());
        auto run_range = [&](size_t idx) {
            GraphFrame frame;
            for (std::uint64_t code = ranges[idx].begin; code < ranges[idx].end; ++code) {
                unpack(n, code, pairs.data(), static_cast<int>(pairs.size()), frame);
                scan_graph(frame, plan, locals[idx]);
            }
        };
        if (ranges.size() == 1) {
            run_range(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(ranges.size());
            for (size_t idx = 0; idx < ranges.size(); ++idx)
                pool.emplace_back(run_range, idx);
            for (auto& th : pool) th.join();
        }
        for (auto& local : locals) merge(total, std::move(local));
    }

    SuiteReport report;
    report.nmax = nmax;
    report.graphs_scanned = total.graphs;
    report.invariants = total.invariants;
    for (TheoremId id : theorems) {
        TheoremTally t = std::move(total.tally[static_cast<int>(id)]);
        t.id = id;
        for (auto& [k, list] : t.equality_graphs) std::sort(list.begin(), list.end());
        report.tallies.push_back(std::move(t));
    }
    return report;
}

} // namespace kyfan
