#pragma once

#include <cmath>
#include <stdexcept>

namespace spingeo {

/// Quaternion w + x*i + y*j + z*k over the reals.
///
/// Doubles as (a) a tangent vector of the model fiber, written in the
/// oriented orthonormal basis e0=1, e1=i, e2=j, e3=k, and (b) the label q of
/// a self-dual spinor acting on that fiber by left multiplication v -> q*v.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr Quaternion zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    /// Basis unit u_c for c in 0..3, i.e. 1, i, j, k.
    static Quaternion unit(int c) {
        switch (c) {
            case 0: return one();
            case 1: return i();
            case 2: return j();
            case 3: return k();
        }
        throw std::out_of_range("Quaternion::unit: index");
    }

    double comp(int c) const {
        switch (c) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            case 3: return z;
        }
        throw std::out_of_range("Quaternion::comp: index");
    }

    void set_comp(int c, double v) {
        switch (c) {
            case 0: w = v; return;
            case 1: x = v; return;
            case 2: y = v; return;
            case 3: z = v; return;
        }
        throw std::out_of_range("Quaternion::set_comp: index");
    }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    Quaternion im() const { return {0.0, x, y, z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    Quaternion operator-() const { return {-w, -x, -y, -z}; }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

inline Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
inline Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
inline Quaternion operator*(double s, Quaternion q) { return q *= s; }
inline Quaternion operator*(Quaternion q, double s) { return q *= s; }

// Hamilton product. Each component is summed in the order of the second
// factor's components; the matrix of v -> q*v then reproduces q*v bit for
// bit when applied row by row (asserted by the tests, relies on
// -ffp-contract=off).
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.x * q.w + p.w * q.x - p.z * q.y + p.y * q.z,
            p.y * q.w + p.z * q.x + p.w * q.y - p.x * q.z,
            p.z * q.w - p.y * q.x + p.x * q.y + p.w * q.z};
}

inline double dot(const Quaternion& p, const Quaternion& q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

inline double max_abs_comp(const Quaternion& q) {
    double m = std::fabs(q.w);
    m = std::max(m, std::fabs(q.x));
    m = std::max(m, std::fabs(q.y));
    m = std::max(m, std::fabs(q.z));
    return m;
}

}  // namespace spingeo
