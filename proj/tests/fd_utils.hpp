#pragma once
// Test-only finite-difference oracles, independent of the closed-form
// evaluation paths they check.
#include <algorithm>
#include <cmath>

#include "tanlift/base_geometry.hpp"
#include "tanlift/lift.hpp"
#include "tanlift/types.hpp"

namespace tanlift::testing {

// Christoffels from central differences of the chart metric:
// Γ^h_ij = 1/2 g^{hl} (∂_i g_lj + ∂_j g_li - ∂_l g_ij)
inline Ten3 fd_christoffel_base(const BaseModel& model, const Vec& x, double h = 1e-5) {
    const int n = model.dim();
    const Mat ginv = model.metric_at(x).inverse();
    std::vector<Mat> dg(n);
    for (int k = 0; k < n; ++k) {
        Vec xp = x, xm = x;
        xp(k) += h;
        xm(k) -= h;
        dg[k] = (model.metric_at(xp) - model.metric_at(xm)) / (2.0 * h);
    }
    Ten3 gamma(n);
    for (int hh = 0; hh < n; ++hh)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l)
                    acc += ginv(hh, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
                gamma(hh, i, j) = 0.5 * acc;
            }
    return gamma;
}

// Riemann tensor from differenced exact Christoffels:
// R^h_kij = ∂_i Γ^h_jk - ∂_j Γ^h_ik + Γ^h_ia Γ^a_jk - Γ^h_ja Γ^a_ik
inline Ten4 fd_riemann_base(const BaseModel& model, const Vec& x, double h = 1e-5) {
    const int n = model.dim();
    const Ten3 gamma = model.geometry_at(x).gamma;
    std::vector<Ten3> dgamma;
    for (int k = 0; k < n; ++k) {
        Vec xp = x, xm = x;
        xp(k) += h;
        xm(k) -= h;
        const Ten3 gp = model.geometry_at(xp).gamma;
        const Ten3 gm = model.geometry_at(xm).gamma;
        Ten3 d(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) d(a, b, c) = (gp(a, b, c) - gm(a, b, c)) / (2.0 * h);
        dgamma.push_back(std::move(d));
    }
    Ten4 R(n);
    for (int hh = 0; hh < n; ++hh)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = dgamma[i](hh, j, k) - dgamma[j](hh, i, k);
                    for (int a = 0; a < n; ++a)
                        acc += gamma(hh, i, a) * gamma(a, j, k) - gamma(hh, j, a) * gamma(a, i, k);
                    R(hh, k, i, j) = acc;
                }
    return R;
}

// ∇̇_l R^h_kij from differenced exact curvature plus Γ-corrections.
inline Ten5 fd_nabla_riemann_base(const BaseModel& model, const Vec& x, double h = 1e-5) {
    const int n = model.dim();
    const BaseGeometry geo = model.geometry_at(x);
    Ten5 nr(n);
    for (int l = 0; l < n; ++l) {
        Vec xp = x, xm = x;
        xp(l) += h;
        xm(l) -= h;
        const Ten4 rp = model.geometry_at(xp).riemann;
        const Ten4 rm = model.geometry_at(xm).riemann;
        for (int hh = 0; hh < n; ++hh)
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double acc = (rp(hh, k, i, j) - rm(hh, k, i, j)) / (2.0 * h);
                        for (int a = 0; a < n; ++a)
                            acc += geo.gamma(hh, l, a) * geo.riemann(a, k, i, j) -
                                   geo.gamma(a, l, k) * geo.riemann(hh, a, i, j) -
                                   geo.gamma(a, l, i) * geo.riemann(hh, k, a, j) -
                                   geo.gamma(a, l, j) * geo.riemann(hh, k, i, a);
                        nr(l, hh, k, i, j) = acc;
                    }
    }
    return nr;
}

// Central fiber differences of the metric blocks, for checking dG.
inline Ten3 fd_block_derivative(const LiftParams& params, const BaseGeometry& geom,
                                const TangentPoint& pt, int which, double h = 1e-6) {
    const int n = geom.n;
    Ten3 d(n);
    for (int i = 0; i < n; ++i) {
        TangentPoint pp = pt, pm = pt;
        pp.y(i) += h;
        pm.y(i) -= h;
        const MetricBlocks bp = metric_blocks(params, geom, pp);
        const MetricBlocks bm = metric_blocks(params, geom, pm);
        const Mat& gp = which == 1 ? bp.G1 : which == 2 ? bp.G2 : bp.G3;
        const Mat& gm = which == 1 ? bm.G1 : which == 2 ? bm.G2 : bm.G3;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) d(i, j, k) = (gp(j, k) - gm(j, k)) / (2.0 * h);
    }
    return d;
}

inline double max_abs_diff(const Ten3& a, const Ten3& b) {
    const int n = a.dim();
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m = std::max(m, std::abs(a(i, j, k) - b(i, j, k)));
    return m;
}

inline double max_abs_diff(const Ten4& a, const Ten4& b) {
    const int n = a.dim();
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    m = std::max(m, std::abs(a(i, j, k, l) - b(i, j, k, l)));
    return m;
}

}  // namespace tanlift::testing
