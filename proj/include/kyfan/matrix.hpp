#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kyfan {

/// Dense real rectangular matrix, row-major. Entries are validated finite on
/// construction and when read from CSV; no NaN/Inf ever enters an operation.
class Matrix {
public:
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<double> entries);

    static Matrix ones(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

    bool is_square() const { return rows_ == cols_; }
    // max |a_ij - a_ji|; requires a square matrix
    double symmetry_gap() const;

    Matrix transposed() const;

    bool operator==(const Matrix& other) const = default;

private:
    int rows_;
    int cols_;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double c, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix kronecker(const Matrix& b, const Matrix& c);

double frobenius(const Matrix& a);
double max_abs(const Matrix& a);

// CSV: one row per line, comma-separated decimals, no header, LF endings.
// Dimensions are inferred; ragged rows are an error.
Matrix read_csv(std::istream& in);
Matrix read_csv_file(const std::string& path);
void write_csv(const Matrix& a, std::ostream& out);
void write_csv_file(const Matrix& a, const std::string& path);

} // namespace kyfan
