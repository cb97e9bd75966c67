#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kyfan/graph.hpp"
#include "kyfan/matrix.hpp"
#include "kyfan/spectral.hpp"
#include "kyfan/tolerance.hpp"

namespace kyfan {

enum class TheoremId {
    TNIK,
    TMOH,
    KOMO,
    MO1,
    MO2,
    MO3,
    CAP,
    THOF,
    TTFREE,
    EMNA,
    HOFFMAN,
    GHK_SPREAD,
    MOHAR_LOWER,
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);
std::vector<TheoremId> all_theorems();

enum class BoundSense { Upper, Lower };

using WitnessValue = std::variant<double, std::string>;

/// Verdict for one theorem on one instance: the two sides, whether the bound
/// holds, whether the theorem's equality case applies, and numeric witnesses.
struct Certificate {
    TheoremId theorem_id{};
    BoundSense sense = BoundSense::Upper;
    bool holds = false;
    bool is_equality = false;
    double lhs = 0.0;
    double rhs = 0.0;
    std::map<std::string, WitnessValue> witnesses;
};

struct CertOptions {
    Tolerance tol{};
    double tol_eq = 1e-6; // looser, both sides pass through an SVD
};

struct PlainResult {
    bool plain = false;
    double residual = 0.0; // sigma_1 - <j_m, A j_n>/sqrt(mn), signed
};

// plain: the all-ones directions attain sigma_1
PlainResult is_plain(const Matrix& a, const CertOptions& opts = {});

// constant nonzero |entries| and pairwise orthogonal rows; requires rows <= cols
bool is_hadamard_class(const Matrix& a, const CertOptions& opts = {});

// "exactly k nonzero singular values, all equal", with scale-aware thresholds
struct SigmaProfile {
    int nonzero_count = 0;
    bool top_k_equal = false;
    double sigma1 = 0.0;
    double sigma_k = 0.0;
    double top_gap = 0.0; // sigma_1 - sigma_k

    bool exactly_k_equal(int k) const { return nonzero_count == k && top_k_equal; }
};
SigmaProfile sigma_profile(const std::vector<double>& sigma, int k, double tol_eq);

Certificate check_tnik(const Matrix& a, int k, const CertOptions& opts = {});
Certificate check_tmoh(const Graph& g, int k, const CertOptions& opts = {});
Certificate check_komo(const Graph& g, const CertOptions& opts = {});
Certificate check_mo1(const Matrix& a, int k, const CertOptions& opts = {});
Certificate check_mo2(const Matrix& a, int k, const CertOptions& opts = {});
Certificate check_mo3(const Matrix& a, int k, const CertOptions& opts = {});
Certificate check_cap(const Graph& g, const CertOptions& opts = {});
Certificate check_thof(const Graph& g, const CertOptions& opts = {});
Certificate check_hoffman(const Graph& g, const CertOptions& opts = {});
Certificate check_ttfree(const Graph& g, const CertOptions& opts = {});
Certificate check_emna(const Graph& g, const CertOptions& opts = {});

struct MoharBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// lower = (1/2)(1/2 + sqrt(k) - eps*k^{-2/5}), upper = (1/2)(1 + sqrt(k));
// evaluation only, no witness graph is constructed
MoharBounds mohar_bounds(int k, double eps);

// (2n - 1)/sqrt(3)
double ghk_spread_floor(int n);

} // namespace kyfan
