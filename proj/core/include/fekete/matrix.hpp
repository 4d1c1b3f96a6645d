#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fekete {

/// Dense row-major matrix over double or std::complex<double>.
template <typename T>
class Mat {
public:
    Mat() = default;

    Mat(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(checkedSize(rows, cols), fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    std::span<const T> row(int i) const {
        return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)};
    }
    std::span<T> row(int i) {
        return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)};
    }

    const std::vector<T>& data() const { return data_; }

private:
    static std::size_t checkedSize(int rows, int cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("Mat: dimensions must be at least 1x1");
        return std::size_t(rows) * std::size_t(cols);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Mat<double>;
using ComplexMatrix = Mat<std::complex<double>>;

template <typename T>
Mat<T> multiply(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions do not match");
    Mat<T> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        auto outRow = out.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            const auto bRow = b.row(k);
            for (int j = 0; j < b.cols(); ++j) outRow[j] += aik * bRow[j];
        }
    }
    return out;
}

template <typename T>
Mat<T> transpose(const Mat<T>& a) {
    Mat<T> out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

inline ComplexMatrix conjugateTranspose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

/// Kronecker product; block (iA,jA) of the result is A[iA,jA] * B.
/// Mixing real and complex operands is rejected at compile time.
template <typename T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("kronecker: operands must be nonempty");
    Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const T f = a(ia, ja);
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
    return out;
}

/// Largest entrywise |A - B| (complex modulus for complex matrices).
template <typename T>
double maxAbsResidual(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("maxAbsResidual: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

/// Degree-one Vandermonde matrix [1 | X] for the basis {1, x_1, ..., x_d}.
template <typename T>
Mat<T> degreeOneVandermonde(const Mat<T>& points) {
    Mat<T> v(points.rows(), points.cols() + 1);
    for (int i = 0; i < points.rows(); ++i) {
        v(i, 0) = T{1};
        for (int j = 0; j < points.cols(); ++j) v(i, j + 1) = points(i, j);
    }
    return v;
}

/// Pivot magnitudes at or below this fraction of the largest |entry| mark the
/// matrix as numerically singular.
inline constexpr double kSingularityThreshold = 1e-13;

/// Partial-pivot LU of a square matrix. Log-magnitude accumulation keeps the
/// determinant representable for orders in the hundreds.
template <typename T>
class LuFactor {
public:
    explicit LuFactor(Mat<T> a) : lu_(std::move(a)) {
        if (lu_.rows() != lu_.cols())
            throw std::invalid_argument("LuFactor: matrix must be square");
        const int n = lu_.rows();
        perm_.resize(n);
        double maxAbs = 0.0;
        for (const T& e : lu_.data()) maxAbs = std::max(maxAbs, std::abs(e));
        const double threshold = kSingularityThreshold * maxAbs;

        double logSum = 0.0;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            double best = std::abs(lu_(col, col));
            for (int r = col + 1; r < n; ++r) {
                const double mag = std::abs(lu_(r, col));
                if (mag > best) {
                    best = mag;
                    piv = r;
                }
            }
            perm_[col] = piv;
            if (piv != col)
                for (int j = 0; j < n; ++j) std::swap(lu_(col, j), lu_(piv, j));

            if (!(best > threshold)) {
                singular_ = true;
                break;
            }
            logSum += std::log(best);
            const T pivot = lu_(col, col);
            for (int r = col + 1; r < n; ++r) {
                const T f = lu_(r, col) / pivot;
                lu_(r, col) = f;
                for (int j = col + 1; j < n; ++j) lu_(r, j) -= f * lu_(col, j);
            }
        }
        logAbsDet_ = singular_ ? -std::numeric_limits<double>::infinity() : logSum;
    }

    bool singular() const { return singular_; }
    double logAbsDet() const { return logAbsDet_; }

    std::vector<T> solve(std::span<const T> rhs) const {
        const int n = lu_.rows();
        if (singular_) throw std::runtime_error("LuFactor::solve: matrix is singular");
        if (int(rhs.size()) != n)
            throw std::invalid_argument("LuFactor::solve: rhs length mismatch");
        std::vector<T> x(rhs.begin(), rhs.end());
        for (int i = 0; i < n; ++i) {
            if (perm_[i] != i) std::swap(x[i], x[perm_[i]]);
            for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
            x[i] /= lu_(i, i);
        }
        return x;
    }

private:
    Mat<T> lu_;
    std::vector<int> perm_;
    bool singular_ = false;
    double logAbsDet_ = 0.0;
};

/// log|det A|; -infinity when A is numerically singular.
template <typename T>
double logAbsDet(const Mat<T>& a) {
    return LuFactor<T>(a).logAbsDet();
}

}  // namespace fekete
