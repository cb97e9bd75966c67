#include "kyfan/bounds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kyfan/errors.hpp"

namespace kyfan {

namespace {

const char* kTheoremNames[] = {
    "TNIK", "TMOH", "KOMO", "MO1", "MO2", "MO3", "CAP",
    "THOF", "TTFREE", "EMNA", "HOFFMAN", "GHK_SPREAD", "MOHAR_LOWER",
};

bool numeric_equal(double lhs, double rhs, double tol_eq) {
    return std::fabs(lhs - rhs) <= tol_eq;
}

bool is_01_entry(double x) { return x == 0.0 || x == 1.0; }

double sum_entries(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x;
    return s;
}

// shared core of TNIK / TMOH / KOMO: the bound, the plainness residuals of
// +/-(2A - J) and the sigma profile of J - 2A
Certificate tnik_core(TheoremId id, const Matrix& input, int k, const CertOptions& opts) {
    for (double x : input.data())
        if (!is_01_entry(x))
            throw precondition_error("tnik: entries must be 0 or 1");
    // orient so rows <= cols; singular values are transpose-invariant
    const Matrix a = input.rows() <= input.cols() ? input : input.transposed();
    const int m = a.rows();
    const int n = a.cols();
    if (k < 1 || k > m)
        throw precondition_error("tnik: k must satisfy 1 <= k <= min(m, n)");

    const auto sv = singular_values(a);
    const double lhs = std::accumulate(sv.values.begin(), sv.values.begin() + k, 0.0);
    const double rhs = 0.5 * (1.0 + std::sqrt(static_cast<double>(k))) *
                       std::sqrt(static_cast<double>(m) * n);

    Matrix b(m, n); // 2A - J, a (-1,1)-matrix
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            b(i, j) = 2.0 * a(i, j) - 1.0;
    const auto sv_b = singular_values(b);
    const double sigma1_b = sv_b.values.front();
    const double inner = sum_entries(b) / std::sqrt(static_cast<double>(m) * n);
    const double residual_2amj = sigma1_b - inner;  // plainness residual of 2A - J
    const double residual_jm2a = sigma1_b + inner;  // plainness residual of J - 2A
    const bool plain_2amj =
        std::fabs(residual_2amj) <= std::max(opts.tol.abs, opts.tol.rel * sigma1_b);
    const auto profile = sigma_profile(sv_b.values, k, opts.tol_eq);

    Certificate cert;
    cert.theorem_id = id;
    cert.sense = BoundSense::Upper;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = leq(lhs, rhs, opts.tol);
    cert.is_equality = plain_2amj && profile.exactly_k_equal(k);
    cert.witnesses["m"] = static_cast<double>(m);
    cert.witnesses["n"] = static_cast<double>(n);
    cert.witnesses["k"] = static_cast<double>(k);
    cert.witnesses["gap"] = rhs - lhs;
    cert.witnesses["sigma1_2A-J"] = sigma1_b;
    cert.witnesses["plain_residual_2A-J"] = residual_2amj;
    cert.witnesses["plain_residual_J-2A"] = residual_jm2a;
    cert.witnesses["nonzero_sigma_J-2A"] = static_cast<double>(profile.nonzero_count);
    cert.witnesses["sigma_top_gap_J-2A"] = profile.top_gap;
    return cert;
}

int require_chi_at_least_2(const Graph& g, const char* what) {
    if (g.edge_count() == 0)
        throw precondition_error(std::string(what) + ": graph has no edge (chi < 2)");
    return chromatic_number(g);
}

} // namespace

std::string to_string(TheoremId id) {
    return kTheoremNames[static_cast<int>(id)];
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
    for (int i = 0; i < static_cast<int>(std::size(kTheoremNames)); ++i)
        if (name == kTheoremNames[i])
            return static_cast<TheoremId>(i);
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> ids;
    for (int i = 0; i < static_cast<int>(std::size(kTheoremNames)); ++i)
        ids.push_back(static_cast<TheoremId>(i));
    return ids;
}

PlainResult is_plain(const Matrix& a, const CertOptions& opts) {
    const auto sv = singular_values(a);
    const double sigma1 = sv.values.front();
    const double inner =
        sum_entries(a) / std::sqrt(static_cast<double>(a.rows()) * a.cols());
    PlainResult r;
    r.residual = sigma1 - inner;
    r.plain = std::fabs(r.residual) <= std::max(opts.tol.abs, opts.tol.rel * sigma1);
    return r;
}

bool is_hadamard_class(const Matrix& a, const CertOptions& opts) {
    if (a.rows() > a.cols())
        throw precondition_error("is_hadamard_class requires rows <= cols");
    const double c = std::fabs(a(0, 0));
    if (c <= opts.tol.abs) return false;
    for (double x : a.data())
        if (!close(std::fabs(x), c, opts.tol))
            return false;
    const double dot_tol = std::max(opts.tol.abs, opts.tol.rel * c * c * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.rows(); ++j) {
            double dot = 0.0;
            for (int t = 0; t < a.cols(); ++t) dot += a(i, t) * a(j, t);
            if (std::fabs(dot) > dot_tol) return false;
        }
    return true;
}

SigmaProfile sigma_profile(const std::vector<double>& sigma, int k, double tol_eq) {
    SigmaProfile p;
    p.sigma1 = sigma.empty() ? 0.0 : sigma.front();
    const double nz_threshold = p.sigma1 > 1.0 ? tol_eq * p.sigma1 : 1e-9;
    for (double s : sigma)
        if (s > nz_threshold) ++p.nonzero_count;
    if (k >= 1 && k <= static_cast<int>(sigma.size())) {
        p.sigma_k = sigma[k - 1];
        p.top_gap = p.sigma1 - p.sigma_k;
        p.top_k_equal = p.top_gap <= tol_eq * p.sigma1;
    }
    return p;
}

Certificate check_tnik(const Matrix& a, int k, const CertOptions& opts) {
    return tnik_core(TheoremId::TNIK, a, k, opts);
}

Certificate check_tmoh(const Graph& g, int k, const CertOptions& opts) {
    if (k < 1 || k > g.order())
        throw precondition_error("tmoh: k must satisfy 1 <= k <= n");
    return tnik_core(TheoremId::TMOH, g.adjacency(), k, opts);
}

Certificate check_komo(const Graph& g, const CertOptions& opts) {
    return tnik_core(TheoremId::KOMO, g.adjacency(), g.order(), opts);
}

Certificate check_mo1(const Matrix& a, int k, const CertOptions& opts) {
    const int mindim = std::min(a.rows(), a.cols());
    if (k < 1 || k > mindim)
        throw precondition_error("mo1: k must satisfy 1 <= k <= min(m, n)");
    const auto sv = singular_values(a);
    const double lhs = std::accumulate(sv.values.begin(), sv.values.begin() + k, 0.0);
    const double rhs = std::sqrt(static_cast<double>(k)) * frobenius(a);
    const auto profile = sigma_profile(sv.values, k, opts.tol_eq);

    Certificate cert;
    cert.theorem_id = TheoremId::MO1;
    cert.sense = BoundSense::Upper;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = leq(lhs, rhs, opts.tol);
    cert.is_equality = profile.exactly_k_equal(k);
    cert.witnesses["k"] = static_cast<double>(k);
    cert.witnesses["gap"] = rhs - lhs;
    cert.witnesses["nonzero_sigma"] = static_cast<double>(profile.nonzero_count);
    cert.witnesses["sigma_top_gap"] = profile.top_gap;
    return cert;
}

Certificate check_mo2(const Matrix& a, int k, const CertOptions& opts) {
    const int mindim = std::min(a.rows(), a.cols());
    if (k < 1 || k > mindim)
        throw precondition_error("mo2: k must satisfy 1 <= k <= min(m, n)");
    const auto sv = singular_values(a);
    const double lhs = std::accumulate(sv.values.begin(), sv.values.begin() + k, 0.0);
    const double amax = max_abs(a);
    const double rhs = std::sqrt(static_cast<double>(k) * a.rows() * a.cols()) * amax;
    const auto profile = sigma_profile(sv.values, k, opts.tol_eq);
    bool constant_modulus = amax > 0.0;
    for (double x : a.data())
        if (!close(std::fabs(x), amax, opts.tol)) {
            constant_modulus = false;
            break;
        }

    Certificate cert;
    cert.theorem_id = TheoremId::MO2;
    cert.sense = BoundSense::Upper;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = leq(lhs, rhs, opts.tol);
    cert.is_equality = constant_modulus && profile.exactly_k_equal(k);
    cert.witnesses["k"] = static_cast<double>(k);
    cert.witnesses["gap"] = rhs - lhs;
    cert.witnesses["max_abs"] = amax;
    cert.witnesses["constant_modulus"] = constant_modulus ? 1.0 : 0.0;
    cert.witnesses["nonzero_sigma"] = static_cast<double>(profile.nonzero_count);
    cert.witnesses["sigma_top_gap"] = profile.top_gap;
    return cert;
}

Certificate check_mo3(const Matrix& a, int k, const CertOptions& opts) {
    for (double x : a.data())
        if (x < 0.0)
            throw precondition_error("mo3: entries must be nonnegative");
    const int mindim = std::min(a.rows(), a.cols());
    if (k < 1 || k > mindim)
        throw precondition_error("mo3: k must satisfy 1 <= k <= min(m, n)");
    const auto sv = singular_values(a);
    const double lhs = std::accumulate(sv.values.begin(), sv.values.begin() + k, 0.0);
    const double amax = max_abs(a);
    const double rhs = 0.5 * (1.0 + std::sqrt(static_cast<double>(k))) *
                       std::sqrt(static_cast<double>(a.rows()) * a.cols()) * amax;

    Certificate cert;
    cert.theorem_id = TheoremId::MO3;
    cert.sense = BoundSense::Upper;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = leq(lhs, rhs, opts.tol);
    cert.witnesses["k"] = static_cast<double>(k);
    cert.witnesses["gap"] = rhs - lhs;
    cert.witnesses["max_abs"] = amax;

    bool scaled_01 = amax > 0.0;
    if (scaled_01) {
        Matrix scaled(a.rows(), a.cols());
        for (int i = 0; i < a.rows() && scaled_01; ++i)
            for (int j = 0; j < a.cols(); ++j) {
                const double x = a(i, j) / amax;
                if (std::fabs(x) <= 1e-12) {
                    scaled(i, j) = 0.0;
                } else if (std::fabs(x - 1.0) <= 1e-12) {
                    scaled(i, j) = 1.0;
                } else {
                    scaled_01 = false;
                    break;
                }
            }
        if (scaled_01) {
            const auto inner = tnik_core(TheoremId::TNIK, scaled, k, opts);
            cert.is_equality = inner.is_equality;
            cert.witnesses["plain_residual_2A-J"] = inner.witnesses.at("plain_residual_2A-J");
            cert.witnesses["nonzero_sigma_J-2A"] = inner.witnesses.at("nonzero_sigma_J-2A");
        }
    }
    cert.witnesses["scaled_01"] = scaled_01 ? 1.0 : 0.0;
    if (!scaled_01) cert.is_equality = false;
    return cert;
}

Certificate check_cap(const Graph& g, const CertOptions& opts) {
    const auto spec = graph_spectrum(g, opts.tol);
    double lhs = 0.0;
    for (double mu : spec.mu) lhs += std::fabs(mu);
    const double rhs = 2.0 * spec.mu.front();

    Certificate cert;
    cert.theorem_id = TheoremId::CAP;
    cert.sense = BoundSense::Lower;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = geq(lhs, rhs, opts.tol);
    cert.is_equality = numeric_equal(lhs, rhs, opts.tol_eq);
    cert.witnesses["mu1"] = spec.mu.front();
    cert.witnesses["m"] = static_cast<double>(g.edge_count());
    cert.witnesses["complete_multipartite_plus_isolated"] =
        is_complete_multipartite_plus_isolated(g) ? 1.0 : 0.0;
    return cert;
}

Certificate check_thof(const Graph& g, const CertOptions& opts) {
    const int chi = require_chi_at_least_2(g, "thof");
    const auto spec = graph_spectrum(g, opts.tol);
    const double lhs = ky_fan(g.adjacency(), chi, opts.tol).value;
    const double rhs = 2.0 * spec.mu.front();

    Certificate cert;
    cert.theorem_id = TheoremId::THOF;
    cert.sense = BoundSense::Lower;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = geq(lhs, rhs, opts.tol);
    cert.is_equality = numeric_equal(lhs, rhs, opts.tol_eq);
    cert.witnesses["chi"] = static_cast<double>(chi);
    cert.witnesses["mu1"] = spec.mu.front();
    return cert;
}

Certificate check_hoffman(const Graph& g, const CertOptions& opts) {
    const int chi = require_chi_at_least_2(g, "hoffman");
    const auto spec = graph_spectrum(g, opts.tol);
    const int n = spec.order();
    double lhs = 0.0;
    for (int i = 0; i < chi - 1; ++i) lhs += std::fabs(spec.mu[n - 1 - i]);
    const double rhs = spec.mu.front();

    Certificate cert;
    cert.theorem_id = TheoremId::HOFFMAN;
    cert.sense = BoundSense::Lower;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = geq(lhs, rhs, opts.tol);
    cert.is_equality = numeric_equal(lhs, rhs, opts.tol_eq);
    cert.witnesses["chi"] = static_cast<double>(chi);
    cert.witnesses["mu1"] = spec.mu.front();
    return cert;
}

Certificate check_ttfree(const Graph& g, const CertOptions& opts) {
    if (!is_triangle_free(g))
        throw precondition_error("ttfree: graph contains a triangle");
    const int m = g.edge_count();
    const auto sv = singular_values(g.adjacency());
    double lhs = sv.values.front();
    if (g.order() >= 2) lhs += sv.values[1];
    const double rhs = 2.0 * std::sqrt(static_cast<double>(m));

    Certificate cert;
    cert.theorem_id = TheoremId::TTFREE;
    cert.sense = BoundSense::Upper;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = leq(lhs, rhs, opts.tol);
    cert.is_equality = numeric_equal(lhs, rhs, opts.tol_eq);
    cert.witnesses["m"] = static_cast<double>(m);
    cert.witnesses["complete_bipartite_plus_isolated"] =
        is_complete_bipartite_plus_isolated(g) ? 1.0 : 0.0;
    // m = 0 attains 0 = 2*sqrt(0) vacuously; flagged, not a bipartite witness
    cert.witnesses["degenerate_edgeless"] = (m == 0) ? 1.0 : 0.0;
    return cert;
}

Certificate check_emna(const Graph& g, const CertOptions& opts) {
    if (g.order() < 2)
        throw precondition_error("emna: requires n >= 2");
    const auto spec = graph_spectrum(g, opts.tol);
    const double lhs = std::fabs(spec.mu[0]) + std::fabs(spec.mu[1]);
    const double rhs = (0.5 + std::sqrt(5.0 / 12.0)) * spec.order();

    Certificate cert;
    cert.theorem_id = TheoremId::EMNA;
    cert.sense = BoundSense::Upper;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.holds = leq(lhs, rhs, opts.tol);
    cert.is_equality = numeric_equal(lhs, rhs, opts.tol_eq);
    cert.witnesses["mu1"] = spec.mu[0];
    cert.witnesses["mu2"] = spec.mu[1];
    return cert;
}

MoharBounds mohar_bounds(int k, double eps) {
    if (k < 1)
        throw precondition_error("mohar_bounds: k must be >= 1");
    if (eps < 0.0)
        throw precondition_error("mohar_bounds: eps must be >= 0");
    const double sqrt_k = std::sqrt(static_cast<double>(k));
    MoharBounds b;
    b.lower = 0.5 * (0.5 + sqrt_k - eps * std::pow(static_cast<double>(k), -0.4));
    b.upper = 0.5 * (1.0 + sqrt_k);
    return b;
}

double ghk_spread_floor(int n) {
    if (n < 2)
        throw precondition_error("ghk_spread_floor: requires n >= 2");
    return (2.0 * n - 1.0) / std::sqrt(3.0);
}

} // namespace kyfan
