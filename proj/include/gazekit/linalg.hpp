#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <vector>

namespace gazekit {

/// Dense row-major matrix of doubles. Deliberately minimal: the model code
/// only needs products, transposed products and elementwise loops, and every
/// operation below accumulates in a fixed order so results are reproducible.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    std::size_t size() const { return a.size(); }
    void zero() { std::fill(a.begin(), a.end(), 0.0); }
};

using Vec = std::vector<double>;

/// C = A * B  (or C += A * B when accumulate). i-k-j loop order: the k-sum
/// lands in C in a fixed order and the j loop is contiguous.
inline void matmul(Mat& c, const Mat& a, const Mat& b, bool accumulate = false) {
    assert(a.cols == b.rows && c.rows == a.rows && c.cols == b.cols);
    if (!accumulate) c.zero();
    for (int i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (int k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            for (int j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
        }
    }
}

/// C = A^T * B (or += when accumulate). Used for weight gradients.
inline void matmul_at_b(Mat& c, const Mat& a, const Mat& b, bool accumulate = false) {
    assert(a.rows == b.rows && c.rows == a.cols && c.cols == b.cols);
    if (!accumulate) c.zero();
    for (int k = 0; k < a.rows; ++k) {
        const double* ak = a.row(k);
        const double* bk = b.row(k);
        for (int i = 0; i < a.cols; ++i) {
            const double aki = ak[i];
            if (aki == 0.0) continue;
            double* ci = c.row(i);
            for (int j = 0; j < b.cols; ++j) ci[j] += aki * bk[j];
        }
    }
}

/// C = A * B^T (or += when accumulate). Used to push gradients back
/// through a layer (dX = dZ * W^T).
inline void matmul_a_bt(Mat& c, const Mat& a, const Mat& b, bool accumulate = false) {
    assert(a.cols == b.cols && c.rows == a.rows && c.cols == b.rows);
    if (!accumulate) c.zero();
    for (int i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (int j = 0; j < b.rows; ++j) {
            const double* bj = b.row(j);
            // 4-way unrolled dot with a fixed reassociation.
            double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
            int k = 0;
            for (; k + 4 <= a.cols; k += 4) {
                s0 += ai[k] * bj[k];
                s1 += ai[k + 1] * bj[k + 1];
                s2 += ai[k + 2] * bj[k + 2];
                s3 += ai[k + 3] * bj[k + 3];
            }
            double s = (s0 + s1) + (s2 + s3);
            for (; k < a.cols; ++k) s += ai[k] * bj[k];
            ci[j] += s;
        }
    }
}

/// Adds a row vector to every row of m.
inline void add_bias(Mat& m, const Vec& bias) {
    assert(static_cast<int>(bias.size()) == m.cols);
    for (int i = 0; i < m.rows; ++i) {
        double* mi = m.row(i);
        for (int j = 0; j < m.cols; ++j) mi[j] += bias[j];
    }
}

/// out[j] += sum over rows of m[i][j]. Bias gradients.
inline void add_col_sums(Vec& out, const Mat& m) {
    assert(static_cast<int>(out.size()) == m.cols);
    for (int i = 0; i < m.rows; ++i) {
        const double* mi = m.row(i);
        for (int j = 0; j < m.cols; ++j) out[j] += mi[j];
    }
}

} // namespace gazekit
