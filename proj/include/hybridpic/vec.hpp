// Small fixed-size vectors/matrices and dense solves used by the transfer math.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>

namespace hybridpic {

template <int D>
struct Vec {
    std::array<double, D> v{};

    constexpr double& operator[](int i) { return v[static_cast<size_t>(i)]; }
    constexpr double operator[](int i) const { return v[static_cast<size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < D; ++i) v[i] += o.v[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < D; ++i) v[i] -= o.v[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < D; ++i) v[i] *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }

    friend double dot(const Vec& a, const Vec& b) {
        double s = 0.0;
        for (int i = 0; i < D; ++i) s += a.v[i] * b.v[i];
        return s;
    }

    double norm() const { return std::sqrt(dot(*this, *this)); }
    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < D; ++i) m = std::max(m, std::abs(v[i]));
        return m;
    }
    bool finite() const {
        for (int i = 0; i < D; ++i)
            if (!std::isfinite(v[i])) return false;
        return true;
    }

    static Vec zero() { return Vec{}; }
};

// Row-major d x d matrix. Row alpha is the per-axis derivative vector c_{p,alpha}.
template <int D>
struct Mat {
    std::array<Vec<D>, D> rows{};

    Vec<D>& row(int a) { return rows[static_cast<size_t>(a)]; }
    const Vec<D>& row(int a) const { return rows[static_cast<size_t>(a)]; }

    double& operator()(int r, int c) { return rows[static_cast<size_t>(r)][c]; }
    double operator()(int r, int c) const { return rows[static_cast<size_t>(r)][c]; }

    static Mat identity() {
        Mat m;
        for (int i = 0; i < D; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat zero() { return Mat{}; }

    friend Vec<D> operator*(const Mat& m, const Vec<D>& x) {
        Vec<D> y;
        for (int r = 0; r < D; ++r) y[r] = dot(m.rows[static_cast<size_t>(r)], x);
        return y;
    }

    bool finite() const {
        for (int i = 0; i < D; ++i)
            if (!rows[static_cast<size_t>(i)].finite()) return false;
        return true;
    }
};

inline double det2(const Mat<2>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline double det3(const Mat<3>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

template <int D>
double determinant(const Mat<D>& m) {
    if constexpr (D == 2) return det2(m);
    else return det3(m);
}

// Inverse by cofactors; caller checks the determinant.
template <int D>
Mat<D> inverse(const Mat<D>& m, double det) {
    Mat<D> inv;
    const double r = 1.0 / det;
    if constexpr (D == 2) {
        inv(0, 0) = m(1, 1) * r;
        inv(0, 1) = -m(0, 1) * r;
        inv(1, 0) = -m(1, 0) * r;
        inv(1, 1) = m(0, 0) * r;
    } else {
        inv(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) * r;
        inv(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) * r;
        inv(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) * r;
        inv(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) * r;
        inv(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) * r;
        inv(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) * r;
        inv(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) * r;
        inv(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) * r;
        inv(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) * r;
    }
    return inv;
}

// Integer grid index.
template <int D>
struct IVec {
    std::array<int, D> v{};

    constexpr int& operator[](int i) { return v[static_cast<size_t>(i)]; }
    constexpr int operator[](int i) const { return v[static_cast<size_t>(i)]; }

    friend bool operator==(const IVec& a, const IVec& b) { return a.v == b.v; }
};

// Symmetric positive (semi)definite solve via LDL^T on the leading k x k block.
// Shrinks the block while a pivot falls below rel_tol * max diagonal, zeroing the
// trailing solution entries. Returns the block size actually solved.
inline int solve_spd_leading(int n, const double* a /*n*n row-major*/, const double* b,
                             double* x, double rel_tol = 1e-12) {
    constexpr int kMaxN = 27;
    double l[kMaxN * kMaxN];
    double d[kMaxN];
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a[i * n + i]));
    const double tol = rel_tol * (max_diag > 0.0 ? max_diag : 1.0);

    // A failing pivot at index i means the leading i x i block is the largest
    // well-posed leading block, and its factors are already in place.
    int k = n;
    for (int i = 0; i < n; ++i) {
        double di = a[i * n + i];
        for (int j = 0; j < i; ++j) di -= l[i * kMaxN + j] * l[i * kMaxN + j] * d[j];
        if (!(di > tol)) {
            k = i;
            break;
        }
        d[i] = di;
        for (int r = i + 1; r < n; ++r) {
            double s = a[r * n + i];
            for (int j = 0; j < i; ++j) s -= l[r * kMaxN + j] * l[i * kMaxN + j] * d[j];
            l[r * kMaxN + i] = s / di;
        }
    }

    for (int i = 0; i < n; ++i) x[i] = 0.0;
    if (k == 0) return 0;

    double y[kMaxN];
    for (int i = 0; i < k; ++i) {
        double s = b[i];
        for (int j = 0; j < i; ++j) s -= l[i * kMaxN + j] * y[j];
        y[i] = s;
    }
    for (int i = k - 1; i >= 0; --i) {
        double s = y[i] / d[i];
        for (int j = i + 1; j < k; ++j) s -= l[j * kMaxN + i] * x[j];
        x[i] = s;
    }
    return k;
}

}  // namespace hybridpic
