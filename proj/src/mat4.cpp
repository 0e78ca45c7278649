#include "spingeo/mat4.hpp"

#include <algorithm>

namespace spingeo {

bool cholesky_lower(const Mat4& a, Mat4& lower) {
    Mat4 l;
    for (int j = 0; j < 4; ++j) {
        double d = a.m[j][j];
        for (int k = 0; k < j; ++k) d -= l.m[j][k] * l.m[j][k];
        if (!(d > 0.0)) return false;
        l.m[j][j] = std::sqrt(d);
        for (int i = j + 1; i < 4; ++i) {
            double s = a.m[i][j];
            for (int k = 0; k < j; ++k) s -= l.m[i][k] * l.m[j][k];
            l.m[i][j] = s / l.m[j][j];
        }
    }
    lower = l;
    return true;
}

Mat4 invert_lower_triangular(const Mat4& lower) {
    Mat4 inv;
    for (int j = 0; j < 4; ++j) {
        inv.m[j][j] = 1.0 / lower.m[j][j];
        for (int i = j + 1; i < 4; ++i) {
            double s = 0.0;
            for (int k = j; k < i; ++k) s += lower.m[i][k] * inv.m[k][j];
            inv.m[i][j] = -s / lower.m[i][i];
        }
    }
    return inv;
}

bool solve_spd(const Mat4& a, const Vec4& rhs, Vec4& out) {
    Mat4 l;
    if (!cholesky_lower(a, l)) return false;
    Vec4 y;
    for (int i = 0; i < 4; ++i) {
        double s = rhs.v[i];
        for (int k = 0; k < i; ++k) s -= l.m[i][k] * y.v[k];
        y.v[i] = s / l.m[i][i];
    }
    for (int i = 3; i >= 0; --i) {
        double s = y.v[i];
        for (int k = i + 1; k < 4; ++k) s -= l.m[k][i] * out.v[k];
        out.v[i] = s / l.m[i][i];
    }
    return true;
}

void sym_eigen(const Mat4& a, std::array<double, 4>& w, Mat4& vectors) {
    Mat4 d = a;
    Mat4 v = Mat4::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += d.m[p][q] * d.m[p][q];
        double diag = 0.0;
        for (int p = 0; p < 4; ++p) diag += d.m[p][p] * d.m[p][p];
        if (off <= 1e-30 * std::max(diag, 1e-300)) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = d.m[p][q];
                if (apq == 0.0) continue;
                const double app = d.m[p][p];
                const double aqq = d.m[q][q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double dkp = d.m[k][p];
                    const double dkq = d.m[k][q];
                    d.m[k][p] = c * dkp - s * dkq;
                    d.m[k][q] = s * dkp + c * dkq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double dpk = d.m[p][k];
                    const double dqk = d.m[q][k];
                    d.m[p][k] = c * dpk - s * dqk;
                    d.m[q][k] = s * dpk + c * dqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v.m[k][p];
                    const double vkq = v.m[k][q];
                    v.m[k][p] = c * vkp - s * vkq;
                    v.m[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::array<int, 4> order = {0, 1, 2, 3};
    std::array<double, 4> ev = {d.m[0][0], d.m[1][1], d.m[2][2], d.m[3][3]};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return ev[i] < ev[j]; });
    for (int i = 0; i < 4; ++i) {
        w[i] = ev[order[i]];
        for (int r = 0; r < 4; ++r) vectors.m[r][i] = v.m[r][order[i]];
    }
}

std::array<double, 4> sym_eigenvalues(const Mat4& a) {
    std::array<double, 4> w;
    Mat4 v;
    sym_eigen(a, w, v);
    return w;
}

}  // namespace spingeo
