#include "kyfan/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "kyfan/errors.hpp"

namespace kyfan {

namespace detail {

void jacobi_eigenvalues(double* a, int n, double* out) {
    if (n == 1) {
        out[0] = a[0];
        return;
    }
    double scale = 0.0;
    for (int i = 0; i < n * n; ++i) scale = std::max(scale, std::fabs(a[i]));
    if (scale == 0.0) {
        std::fill(out, out + n, 0.0);
        return;
    }
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                off = std::max(off, std::fabs(a[p * n + q]));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::fabs(apq) <= stop * 1e-2) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = a[p * n + i] = c * aip - s * aiq;
                    a[i * n + q] = a[q * n + i] = s * aip + c * aiq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
            }
        }
    }
    for (int i = 0; i < n; ++i) out[i] = a[i * n + i];
    std::sort(out, out + n, std::greater<double>());
}

void hestenes_singular_values(double* cols, int m, int n, double* out) {
    auto col = [&](int j) { return cols + static_cast<size_t>(j) * m; };

    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                const double* cj = col(j);
                const double* ck = col(k);
                for (int i = 0; i < m; ++i) {
                    alpha += cj[i] * cj[i];
                    beta += ck[i] * ck[i];
                    gamma += cj[i] * ck[i];
                }
                const double denom = std::sqrt(alpha * beta);
                if (denom == 0.0 || std::fabs(gamma) <= 1e-15 * denom) continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                double t;
                if (std::fabs(zeta) > 1e150) {
                    t = 1.0 / (2.0 * zeta);
                } else {
                    t = 1.0 / (std::fabs(zeta) + std::sqrt(zeta * zeta + 1.0));
                    if (zeta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                double* wj = col(j);
                double* wk = col(k);
                for (int i = 0; i < m; ++i) {
                    const double x = wj[i];
                    const double y = wk[i];
                    wj[i] = c * x - s * y;
                    wk[i] = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
    }
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        const double* cj = col(j);
        for (int i = 0; i < m; ++i) s += cj[i] * cj[i];
        out[j] = std::sqrt(s);
    }
    std::sort(out, out + n, std::greater<double>());
}

} // namespace detail

std::vector<double> sym_eigenvalues(const Matrix& a, const Tolerance& tol) {
    if (!a.is_square())
        throw std::invalid_argument("sym_eigenvalues requires a square matrix");
    if (a.symmetry_gap() > tol.abs)
        throw std::invalid_argument("sym_eigenvalues requires a symmetric matrix");
    const int n = a.rows();
    std::vector<double> work(a.data());
    // symmetrize so roundoff-level asymmetry cannot bias the rotations
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (work[i * n + j] + work[j * n + i]);
            work[i * n + j] = work[j * n + i] = v;
        }
    std::vector<double> out(n);
    detail::jacobi_eigenvalues(work.data(), n, out.data());
    return out;
}

SingularSpectrum singular_values(const Matrix& a) {
    const int m = std::max(a.rows(), a.cols());
    const int n = std::min(a.rows(), a.cols());
    // column-major buffer of a (or its transpose) with at least as many rows
    // as columns; sigma is transpose-invariant
    std::vector<double> work(static_cast<size_t>(m) * n);
    const bool tall = a.rows() >= a.cols();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (tall)
                work[static_cast<size_t>(j) * m + i] = a(i, j);
            else
                work[static_cast<size_t>(i) * m + j] = a(i, j);
        }
    SingularSpectrum spec;
    spec.rows = a.rows();
    spec.cols = a.cols();
    spec.values.resize(n);
    detail::hestenes_singular_values(work.data(), m, n, spec.values.data());
    return spec;
}

} // namespace kyfan
