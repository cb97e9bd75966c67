#pragma once

#include <vector>

#include "kyfan/matrix.hpp"
#include "kyfan/tolerance.hpp"

namespace kyfan {

/// Singular values of a matrix, sorted non-increasing, length min(rows, cols).
struct SingularSpectrum {
    std::vector<double> values;
    int rows = 0;
    int cols = 0;
};

// All eigenvalues of a square symmetric matrix, non-increasing. Cyclic Jacobi,
// values only. Rejects non-square input and input whose symmetry gap exceeds
// tol.abs.
std::vector<double> sym_eigenvalues(const Matrix& a, const Tolerance& tol = {});

// Singular values via one-sided (Hestenes) Jacobi applied directly to the
// matrix. Independent of the AA^T eigenvalue route, so the two can be checked
// against each other.
SingularSpectrum singular_values(const Matrix& a);

namespace detail {

// In-place cyclic Jacobi on an n-by-n row-major symmetric buffer; the buffer
// is destroyed. Writes n eigenvalues to `out`, sorted non-increasing.
void jacobi_eigenvalues(double* a, int n, double* out);

// One-sided Jacobi on an m-by-n column-major buffer (m >= n); the buffer is
// destroyed. Writes n singular values to `out`, sorted non-increasing.
void hestenes_singular_values(double* cols, int m, int n, double* out);

} // namespace detail

} // namespace kyfan
