#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace riskpipe {

// Dense row-major double matrix. Deliberately minimal; the numeric modules
// work on raw rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return v_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }

    double* row(std::size_t r) { return v_.data() + r * cols_; }
    const double* row(std::size_t r) const { return v_.data() + r * cols_; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

    bool all_finite() const {
        for (double x : v_) {
            if (!std::isfinite(x)) return false;
        }
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> v_;
};

inline double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const double* a, std::size_t n) { return std::sqrt(dot(a, a, n)); }

inline double cosine(const double* a, const double* b, std::size_t n) {
    double na = norm2(a, n), nb = norm2(b, n);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b, n) / (na * nb);
}

}  // namespace riskpipe
