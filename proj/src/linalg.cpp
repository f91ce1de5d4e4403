#include "cyclomon/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cyclomon {

Vector vec_add(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector vec_sub(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector vec_scale(double t, const Vector& a) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = t * a[i];
    return out;
}

void vec_axpy(double t, const Vector& a, Vector& y) {
    for (std::size_t i = 0; i < a.size(); ++i) y[i] += t * a[i];
}

double norm_inf(const Vector& a) {
    double m = 0.0;
    for (double e : a) m = std::max(m, std::fabs(e));
    return m;
}

double norm2(const Vector& a) {
    double s = 0.0;
    for (double e : a) s += e * e;
    return std::sqrt(s);
}

SymmetricEigen jacobi_eigensymmetric(Matrix a, int max_sweeps) {
    const int d = static_cast<int>(a.size());
    Matrix v(d, Vector(d, 0.0));
    for (int i = 0; i < d; ++i) v[i][i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) s += a[i][j] * a[i][j];
        return std::sqrt(2.0 * s);
    };

    double scale = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) scale = std::max(scale, std::fabs(a[i][j]));
    const double stop = std::max(1e-15 * scale * d, 1e-300);

    for (int sweep = 0; sweep < max_sweeps && off_norm() > stop; ++sweep) {
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (std::fabs(a[p][q]) <= stop / (d * d + 1.0)) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < d; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < d; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    SymmetricEigen out;
    out.values.resize(d);
    for (int i = 0; i < d; ++i) out.values[i] = a[i][i];
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return out.values[i] < out.values[j]; });
    Vector sorted_vals(d);
    Matrix sorted_vecs(d, Vector(d));
    for (int k = 0; k < d; ++k) {
        sorted_vals[k] = out.values[order[k]];
        for (int i = 0; i < d; ++i) sorted_vecs[k][i] = v[i][order[k]];
    }
    out.values = std::move(sorted_vals);
    out.vectors = std::move(sorted_vecs);
    return out;
}

double min_eigenvalue_symmetric(const Matrix& a) {
    if (a.empty()) return 0.0;
    return jacobi_eigensymmetric(a).values.front();
}

Vector project_simplex(Vector v) {
    const int n = static_cast<int>(v.size());
    Vector u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    int rho = 0;
    for (int i = 0; i < n; ++i) {
        css += u[i];
        const double th = (css - 1.0) / (i + 1);
        if (u[i] - th > 0) {
            rho = i + 1;
            theta = th;
        }
    }
    (void)rho;
    for (int i = 0; i < n; ++i) v[i] = std::max(0.0, v[i] - theta);
    return v;
}

}  // namespace cyclomon
