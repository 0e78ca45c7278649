#pragma once

#include <array>
#include <cmath>

namespace spingeo {

struct Vec4 {
    double v[4] = {0.0, 0.0, 0.0, 0.0};

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    Vec4& operator+=(const Vec4& o) {
        for (int i = 0; i < 4; ++i) v[i] += o.v[i];
        return *this;
    }
    Vec4& operator-=(const Vec4& o) {
        for (int i = 0; i < 4; ++i) v[i] -= o.v[i];
        return *this;
    }
    Vec4& operator*=(double s) {
        for (int i = 0; i < 4; ++i) v[i] *= s;
        return *this;
    }
    double norm2() const {
        return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
    }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
inline Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
inline Vec4 operator*(double s, Vec4 a) { return a *= s; }
inline double dot(const Vec4& a, const Vec4& b) {
    return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2] + a.v[3] * b.v[3];
}

/// Dense 4x4 matrix, row major.
struct Mat4 {
    double m[4][4] = {};

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
        return r;
    }

    double* operator[](int r) { return m[r]; }
    const double* operator[](int r) const { return m[r]; }

    Mat4& operator+=(const Mat4& o) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] += o.m[r][c];
        return *this;
    }
    Mat4& operator-=(const Mat4& o) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] -= o.m[r][c];
        return *this;
    }
    Mat4& operator*=(double s) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m[r][c] *= s;
        return *this;
    }

    Mat4 transpose() const {
        Mat4 r;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) r.m[a][b] = m[b][a];
        return r;
    }
};

inline Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
inline Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
inline Mat4 operator*(double s, Mat4 a) { return a *= s; }

inline Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

inline Vec4 matvec(const Mat4& a, const Vec4& x) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        double s = a.m[i][0] * x.v[0];
        s += a.m[i][1] * x.v[1];
        s += a.m[i][2] * x.v[2];
        s += a.m[i][3] * x.v[3];
        r.v[i] = s;
    }
    return r;
}

inline double frob_dot(const Mat4& a, const Mat4& b) {
    double s = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) s += a.m[r][c] * b.m[r][c];
    return s;
}

inline double frob_norm(const Mat4& a) { return std::sqrt(frob_dot(a, a)); }

inline double max_abs(const Mat4& a) {
    double s = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) s = std::max(s, std::fabs(a.m[r][c]));
    return s;
}

/// Cholesky factor a = L L^T, L lower triangular with positive diagonal.
/// Returns false when a is not (numerically) positive definite.
bool cholesky_lower(const Mat4& a, Mat4& lower);

/// Inverse of a lower triangular matrix by forward substitution.
Mat4 invert_lower_triangular(const Mat4& lower);

/// Solves a x = rhs for symmetric positive definite a. Returns false when
/// the Cholesky factorization fails.
bool solve_spd(const Mat4& a, const Vec4& rhs, Vec4& out);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
std::array<double, 4> sym_eigenvalues(const Mat4& a);

/// Eigen-decomposition of a symmetric matrix: a = V diag(w) V^T with
/// eigenvalues ascending and V's columns the eigenvectors.
void sym_eigen(const Mat4& a, std::array<double, 4>& w, Mat4& vectors);

}  // namespace spingeo
