#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "geneo/errors.hpp"

namespace geneo {

// Dense real matrix, row-major. Shapes here are small (operator matrices
// between finite function spaces), so no linear-algebra package is involved.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;

    Matrix(int r, int c, double fill = 0.0) : rows(r), cols(c), data(std::size_t(r) * std::size_t(c), fill) {
        if (r < 0 || c < 0) throw ShapeMismatch("matrix dimensions must be nonnegative");
    }

    double& operator()(int i, int j) { return data[std::size_t(i) * cols + j]; }
    double operator()(int i, int j) const { return data[std::size_t(i) * cols + j]; }

    bool same_shape(const Matrix& other) const { return rows == other.rows && cols == other.cols; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ShapeMismatch("matrix shapes differ");
    double d = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k) d = std::max(d, std::abs(a.data[k] - b.data[k]));
    return d;
}

inline double row_sum(const Matrix& a, int i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += a(i, j);
    return s;
}

inline double row_abs_sum(const Matrix& a, int i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += std::abs(a(i, j));
    return s;
}

}  // namespace geneo
