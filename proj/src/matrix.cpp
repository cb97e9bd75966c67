#include "kyfan/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kyfan {

namespace {

constexpr long long kMaxEntries = 1LL << 24; // size guard for products

void check_dims(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("matrix dimensions must be positive");
}

void check_finite(const std::vector<double>& entries) {
    for (double x : entries)
        if (!std::isfinite(x))
            throw std::invalid_argument("matrix entries must be finite");
}

} // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    data_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_dims(rows, cols);
    if (data_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows*cols");
    check_finite(data_);
}

Matrix Matrix::ones(int rows, int cols) {
    Matrix j(rows, cols);
    for (double& x : j.data_) x = 1.0;
    return j;
}

Matrix Matrix::identity(int n) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = 1.0;
    return a;
}

double Matrix::symmetry_gap() const {
    if (!is_square())
        throw std::invalid_argument("symmetry_gap requires a square matrix");
    double gap = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            gap = std::max(gap, std::fabs((*this)(i, j) - (*this)(j, i)));
    return gap;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shapes differ");
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shapes differ");
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator*(double c, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = c * a(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("inner dimensions differ");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r(i, j) += aik * b(k, j);
        }
    return r;
}

Matrix kronecker(const Matrix& b, const Matrix& c) {
    const long long rows = static_cast<long long>(b.rows()) * c.rows();
    const long long cols = static_cast<long long>(b.cols()) * c.cols();
    if (rows * cols > kMaxEntries)
        throw std::invalid_argument("kronecker product exceeds size guard");
    Matrix r(static_cast<int>(rows), static_cast<int>(cols));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            const double bij = b(i, j);
            for (int p = 0; p < c.rows(); ++p)
                for (int q = 0; q < c.cols(); ++q)
                    r(i * c.rows() + p, j * c.cols() + q) = bij * c(p, q);
        }
    return r;
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::fabs(x));
    return m;
}

Matrix read_csv(std::istream& in) {
    std::vector<double> entries;
    int cols = -1;
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        int ncols = 0;
        size_t pos = 0;
        while (true) {
            size_t comma = line.find(',', pos);
            std::string field = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            size_t used = 0;
            double value;
            try {
                value = std::stod(field, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("CSV parse error in row " + std::to_string(rows + 1));
            }
            while (used < field.size() && (field[used] == ' ' || field[used] == '\t')) ++used;
            if (used != field.size())
                throw std::invalid_argument("CSV parse error in row " + std::to_string(rows + 1));
            if (!std::isfinite(value))
                throw std::invalid_argument("CSV contains a non-finite value");
            entries.push_back(value);
            ++ncols;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (cols == -1) cols = ncols;
        else if (ncols != cols)
            throw std::invalid_argument("CSV has ragged rows");
        ++rows;
    }
    if (rows == 0)
        throw std::invalid_argument("CSV input is empty");
    return Matrix(rows, cols, std::move(entries));
}

Matrix read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open matrix file: " + path);
    return read_csv(in);
}

void write_csv(const Matrix& a, std::ostream& out) {
    char buf[64];
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

void write_csv_file(const Matrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    write_csv(a, out);
}

} // namespace kyfan
