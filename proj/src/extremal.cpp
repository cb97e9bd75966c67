#include "kyfan/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <thread>

#include "kyfan/errors.hpp"

namespace kyfan {

namespace {

struct Candidate {
    std::uint64_t code;
    double value;
};

struct PartialMax {
    double best = -1.0;
    std::vector<Candidate> near; // value >= best - tol_eq

    void offer(std::uint64_t code, double value, double tol_eq) {
        if (value > best) {
            best = value;
            near.push_back({code, value});
            if (near.size() > 4096) prune(tol_eq);
        } else if (value >= best - tol_eq) {
            near.push_back({code, value});
        }
    }

    void prune(double tol_eq) {
        std::erase_if(near, [&](const Candidate& c) { return c.value < best - tol_eq; });
    }
};

SearchResult run_search(SearchKind kind, int n, int k, const CertOptions& opts,
                        int threads) {
    if (n < 1 || n > 8)
        throw precondition_error("search: n must satisfy 1 <= n <= 8");
    if (k < 1 || k > n)
        throw precondition_error("search: k must satisfy 1 <= k <= n");
    threads = std::max(1, std::min(threads, 64));

    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    const auto ranges = partition_enumeration(n, threads);
    std::vector<PartialMax> partials(ranges.size());

    auto run_range = [&](size_t idx) {
        PartialMax& part = partials[idx];
        double mu[8];
        double sigma[8];
        for (std::uint64_t code = ranges[idx].begin; code < ranges[idx].end; ++code) {
            double buf[64] = {};
            std::uint64_t bits = code;
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const auto [i, j] = pairs[b];
                buf[i * n + j] = buf[j * n + i] = 1.0;
            }
            detail::jacobi_eigenvalues(buf, n, mu);
            double value = 0.0;
            if (kind == SearchKind::XI) {
                for (int i = 0; i < n; ++i) sigma[i] = std::fabs(mu[i]);
                std::sort(sigma, sigma + n, std::greater<double>());
                for (int i = 0; i < k; ++i) value += sigma[i];
            } else {
                for (int i = 0; i < k; ++i) value += mu[i];
            }
            part.offer(code, value, opts.tol_eq);
        }
        part.prune(opts.tol_eq);
    };

    if (ranges.size() == 1) {
        run_range(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (size_t idx = 0; idx < ranges.size(); ++idx) pool.emplace_back(run_range, idx);
        for (auto& th : pool) th.join();
    }

    double best = -1.0;
    for (const auto& part : partials) best = std::max(best, part.best);
    std::vector<std::string> argmax;
    for (const auto& part : partials)
        for (const auto& c : part.near)
            if (c.value >= best - opts.tol_eq)
                argmax.push_back(graph6_encode(Graph::from_code(n, c.code)));
    std::sort(argmax.begin(), argmax.end());

    SearchResult result;
    result.n = n;
    result.k = k;
    result.kind = kind;
    result.value = best;
    result.argmax = std::move(argmax);
    result.scanned = labeled_graph_count(n);
    return result;
}

bool is_power_of_two(int x) { return x >= 1 && (x & (x - 1)) == 0; }

} // namespace

SearchResult search_xi(int n, int k, const CertOptions& opts, int threads) {
    return run_search(SearchKind::XI, n, k, opts, threads);
}

SearchResult search_tau(int n, int k, const CertOptions& opts, int threads) {
    return run_search(SearchKind::TAU, n, k, opts, threads);
}

Matrix sylvester_hadamard(int order) {
    if (!is_power_of_two(order) || order > 4096)
        throw precondition_error("sylvester_hadamard: order must be a power of two");
    Matrix h(1, 1, {1.0});
    const Matrix h2(2, 2, {1.0, 1.0, 1.0, -1.0});
    while (h.rows() < order) h = kronecker(h2, h);
    return h;
}

Graph construct_blowup_extremal(int k, int t) {
    if (k != 4)
        throw precondition_error(
            "construct_blowup_extremal: only k = 4 has a built-in base (K_4); "
            "pass an explicit base graph for other k");
    return construct_blowup_extremal(complete_graph(4), t);
}

Graph construct_blowup_extremal(const Graph& base, int t) {
    return blow_up(base, t);
}

Matrix construct_orthogonal_rows(int k, int q, double c, int r, int s) {
    if (k < 1 || q < k)
        throw precondition_error("construct_orthogonal_rows: need 1 <= k <= q");
    if (!is_power_of_two(q))
        throw precondition_error(
            "construct_orthogonal_rows: q must be a power of two (Sylvester rows)");
    if (!(c > 0.0) || !std::isfinite(c))
        throw precondition_error("construct_orthogonal_rows: c must be positive");
    if (r < 1 || s < 1)
        throw precondition_error("construct_orthogonal_rows: r, s must be positive");
    const Matrix h = sylvester_hadamard(q);
    Matrix b(k, q);
    const double scale = c / std::sqrt(static_cast<double>(q)); // row length becomes c
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < q; ++j) b(i, j) = scale * h(i, j);
    if (r == 1 && s == 1) return b;
    return kronecker(b, Matrix::ones(r, s));
}

Matrix construct_tnik_equality(int k, int r, int s) {
    if (r < 1 || s < 1)
        throw precondition_error("construct_tnik_equality: r, s must be positive");
    Matrix base(1, 1, {1.0});
    if (k == 4)
        base = complete_graph(4).adjacency();
    else if (k != 1)
        throw precondition_error("construct_tnik_equality: supported bases are k = 1 and k = 4");
    if (r == 1 && s == 1) return base;
    return kronecker(base, Matrix::ones(r, s));
}

} // namespace kyfan
