#pragma once

#include <optional>
#include <vector>

#include "kyfan/eigensolve.hpp"
#include "kyfan/graph.hpp"
#include "kyfan/matrix.hpp"
#include "kyfan/tolerance.hpp"

namespace kyfan {

/// Adjacency eigenvalues mu_1 >= ... >= mu_n.
struct GraphSpectrum {
    std::vector<double> mu;

    int order() const { return static_cast<int>(mu.size()); }
};

GraphSpectrum graph_spectrum(const Graph& g, const Tolerance& tol = {});

/// Ky Fan k-norm together with the full spectrum it was computed from, so
/// bound certificates can re-examine multiplicities without recomputation.
struct NormReport {
    int k = 0;
    double value = 0.0;
    SingularSpectrum spectrum;
    std::optional<double> top_eigen_sum; // square symmetric inputs only
};

// sum of the k largest singular values; 1 <= k <= min(rows, cols)
NormReport ky_fan(const Matrix& a, int k, const Tolerance& tol = {});

// Ky Fan n-norm of the adjacency matrix (trace norm)
double energy(const Graph& g, const Tolerance& tol = {});

// max(|mu_1|+|mu_2|, |mu_1|+|mu_n|); equals the Ky Fan 2-norm for graphs
double f2_via_eigen(const GraphSpectrum& spec);

// mu_1 - mu_n (0 for a single vertex)
double spread(const GraphSpectrum& spec);

// mu_1 + ... + mu_k
double top_eigen_sum(const GraphSpectrum& spec, int k);

} // namespace kyfan
