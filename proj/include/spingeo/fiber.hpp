#pragma once

#include <optional>
#include <utility>

#include "spingeo/mat4.hpp"
#include "spingeo/quaternion.hpp"

namespace spingeo {

/// Self-dual spinor at a point: the endomorphism v -> q*v of the fiber.
/// Its matrix rotates two orthogonal planes by the same angle in
/// orientation-compatible directions and scales by |q|.
struct SDSpinor {
    Quaternion q;
    double norm() const { return q.norm(); }
};

/// Anti-self-dual spinor at a point: a tangent vector remembered together
/// with the complex structure J = left multiplication by the reference
/// imaginary unit.
struct ASDSpinor {
    Quaternion v;
};

/// 2-form in orthonormal frame components, antisymmetric.
/// Norm convention |w|^2 = sum_{a<b} w_ab^2, so the standard almost-complex
/// form e01+e23 has length sqrt(2).
struct TwoForm {
    double c[4][4] = {};

    static TwoForm zero() { return {}; }
    /// e^a wedge e^b.
    static TwoForm basis(int a, int b) {
        TwoForm f;
        f.set(a, b, 1.0);
        return f;
    }

    double at(int a, int b) const { return c[a][b]; }
    void set(int a, int b, double val) {
        c[a][b] = val;
        c[b][a] = -val;
    }

    double eval(const Quaternion& v, const Quaternion& w) const {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) s += c[a][b] * v.comp(a) * w.comp(b);
        return s;
    }

    double norm2() const {
        double s = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) s += c[a][b] * c[a][b];
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }

    TwoForm& operator+=(const TwoForm& o) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) c[a][b] += o.c[a][b];
        return *this;
    }
    TwoForm& operator-=(const TwoForm& o) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) c[a][b] -= o.c[a][b];
        return *this;
    }
    TwoForm& operator*=(double s) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) c[a][b] *= s;
        return *this;
    }
    double max_abs() const {
        double m = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m = std::max(m, std::fabs(c[a][b]));
        return m;
    }
};

inline TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
inline TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
inline TwoForm operator*(double s, TwoForm a) { return a *= s; }

inline double form_dot(const TwoForm& a, const TwoForm& b) {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) s += a.c[p][q] * b.c[p][q];
    return s;
}

/// Matrix of v -> q*v in the basis (1, i, j, k). Left multiplications are
/// exactly the self-dual conformal endomorphisms of the oriented fiber.
Mat4 left_mult_matrix(const Quaternion& q);

/// Matrix of v -> v*q (anti-self-dual side).
Mat4 right_mult_matrix(const Quaternion& q);

inline Mat4 endo_from_spinor(const SDSpinor& phi) {
    return left_mult_matrix(phi.q);
}

/// Applies a fiber endomorphism, accumulating in column order so that
/// endo_from_spinor followed by apply_endo reproduces q*v exactly.
inline Quaternion apply_endo(const Mat4& m, const Quaternion& v) {
    Quaternion r;
    for (int a = 0; a < 4; ++a) {
        double s = m[a][0] * v.w;
        s += m[a][1] * v.x;
        s += m[a][2] * v.y;
        s += m[a][3] * v.z;
        r.set_comp(a, s);
    }
    return r;
}

struct EndoClass {
    double scale;  // >= 0
    double angle;  // in [0, pi]
};

/// Recognizes M = scale * (self-dual rotation by angle). Returns nothing when
/// the best left-multiplication fit leaves a residual above
/// tol * max(1, |M|_F), which marks M as outside the spinor subspace.
std::optional<EndoClass> classify_endo(const Mat4& m, double tol = 1e-9);

/// Clifford multiplication of a tangent vector with a self-dual spinor,
/// which is evaluation of the spinor's endomorphism on the vector.
inline ASDSpinor clifford_mul(const Quaternion& v, const SDSpinor& phi) {
    return {phi.q * v};
}

/// Clifford multiplication back from the anti-self-dual side. The sign is
/// pinned by the relation v.(v.phi) = -|v|^2 phi.
inline SDSpinor clifford_mul(const Quaternion& v, const ASDSpinor& w) {
    return {-(w.v * v.conj())};
}

/// Hodge star on 2-forms, positive orientation e0123: *(e01) = e23.
TwoForm hodge_star(const TwoForm& w);

/// Orthogonal split w = w+ + w- with *w+ = w+, *w- = -w-.
std::pair<TwoForm, TwoForm> sd_asd_split(const TwoForm& w);

/// g-orthogonal almost-complex structure, modeled as left multiplication by
/// a unit imaginary quaternion u. Associated form: omega(v,w) = g(Jv, w).
struct AcStructure {
    Quaternion u;

    Mat4 j_matrix() const { return left_mult_matrix(u); }
    static AcStructure standard() { return {Quaternion::i()}; }
};

/// Inverse bijections between unit-length self-dual 2-forms (|omega| =
/// sqrt(2)) and g-orthogonal almost-complex structures.
/// j_from_sdform throws NotUnitSD (std::domain_error) outside tolerance.
AcStructure j_from_sdform(const TwoForm& omega, double tol = 1e-9);
TwoForm sdform_from_j(const AcStructure& j);

/// (phi^* w)(v1, v2) = w(q v1, q v2); quadratic in q.
TwoForm pullback_form(const SDSpinor& phi, const TwoForm& w);

/// Squaring map: sigma(phi) = 1/4 phi^* omega_ref. Always self-dual, with
/// |sigma(phi)| = (sqrt(2)/4) |phi|^2.
TwoForm sigma_map(const SDSpinor& phi,
                  const AcStructure& ref = AcStructure::standard());

inline double spinor_inner(const SDSpinor& a, const SDSpinor& b) {
    return dot(a.q, b.q);
}

/// Complex-structure action on spinors: left multiplication by the
/// reference unit, the side that makes Clifford multiplication C-linear.
inline SDSpinor i_action(const SDSpinor& phi) {
    return {Quaternion::i() * phi.q};
}

}  // namespace spingeo
