#include "kyfan/spectral.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kyfan/errors.hpp"

namespace kyfan {

GraphSpectrum graph_spectrum(const Graph& g, const Tolerance& tol) {
    GraphSpectrum spec;
    spec.mu = sym_eigenvalues(g.adjacency(), tol);
    return spec;
}

NormReport ky_fan(const Matrix& a, int k, const Tolerance& tol) {
    const int mindim = std::min(a.rows(), a.cols());
    if (k < 1 || k > mindim)
        throw precondition_error("ky_fan: k must satisfy 1 <= k <= min(rows, cols)");
    NormReport report;
    report.k = k;
    report.spectrum = singular_values(a);
    report.value = std::accumulate(report.spectrum.values.begin(),
                                   report.spectrum.values.begin() + k, 0.0);
    if (a.is_square() && a.symmetry_gap() <= tol.abs) {
        const auto mu = sym_eigenvalues(a, tol);
        report.top_eigen_sum = std::accumulate(mu.begin(), mu.begin() + k, 0.0);
    }
    return report;
}

double energy(const Graph& g, const Tolerance& tol) {
    return ky_fan(g.adjacency(), g.order(), tol).value;
}

double f2_via_eigen(const GraphSpectrum& spec) {
    const int n = spec.order();
    if (n < 2)
        throw precondition_error("f2_via_eigen requires order >= 2");
    const double mu1 = std::fabs(spec.mu.front());
    return std::max(mu1 + std::fabs(spec.mu[1]), mu1 + std::fabs(spec.mu.back()));
}

double spread(const GraphSpectrum& spec) {
    if (spec.order() == 0)
        throw precondition_error("spread requires a non-empty spectrum");
    return spec.mu.front() - spec.mu.back();
}

double top_eigen_sum(const GraphSpectrum& spec, int k) {
    if (k < 1 || k > spec.order())
        throw precondition_error("top_eigen_sum: k must satisfy 1 <= k <= n");
    return std::accumulate(spec.mu.begin(), spec.mu.begin() + k, 0.0);
}

} // namespace kyfan
