#include "tanlift/oracle.hpp"

#include <cmath>
#include <vector>

#include "tanlift/errors.hpp"

namespace tanlift {

namespace {

TangentPoint shifted(const TangentPoint& pt, int coord, double delta) {
    TangentPoint s = pt;
    const int n = static_cast<int>(pt.x.size());
    if (coord < n)
        s.x(coord) += delta;
    else
        s.y(coord - n) += delta;
    return s;
}

double fd_scale(const TangentPoint& pt) {
    return std::max({1.0, pt.x.cwiseAbs().maxCoeff(), pt.y.cwiseAbs().maxCoeff()});
}

}  // namespace

Mat coordinate_metric(const LiftParams& params, const BaseModel& model, const TangentPoint& pt) {
    const BaseGeometry geom = model.geometry_at(pt.x);
    const MetricBlocks b = metric_blocks(params, geom, pt);
    const int n = geom.n;

    // Γ^k_0i = y^m Γ^k_mi
    Mat gamma0(n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int m = 0; m < n; ++m) acc += pt.y(m) * geom.gamma(k, m, i);
            gamma0(k, i) = acc;
        }

    // ∂x_i = δ_i + Γ^k_0i ∂y_k:
    //   G(∂x_i,∂x_j) = G1_ij + Γ^k_0i G3_kj + Γ^k_0j G3_ik + Γ^k_0i Γ^l_0j G2_kl
    //   G(∂x_i,∂y_j) = G3_ij + Γ^k_0i G2_kj
    //   G(∂y_i,∂y_j) = G2_ij
    Mat G(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double xx = b.G1(i, j);
            for (int k = 0; k < n; ++k) {
                xx += gamma0(k, i) * b.G3(k, j) + gamma0(k, j) * b.G3(i, k);
                for (int l = 0; l < n; ++l) xx += gamma0(k, i) * gamma0(l, j) * b.G2(k, l);
            }
            double xy = b.G3(i, j);
            for (int k = 0; k < n; ++k) xy += gamma0(k, i) * b.G2(k, j);
            G(i, j) = xx;
            G(i, n + j) = xy;
            G(n + j, i) = xy;
            G(n + i, n + j) = b.G2(i, j);
        }
    return G;
}

Ten3 fd_christoffel(const LiftParams& params, const BaseModel& model, const TangentPoint& pt,
                    double step) {
    const int n2 = 2 * static_cast<int>(pt.x.size());
    const Mat g0 = coordinate_metric(params, model, pt);
    Eigen::FullPivLU<Mat> lu(g0);
    if (!lu.isInvertible()) throw SingularityError("coordinate metric singular during differencing");
    const Mat ginv = lu.inverse();

    // ∂_C G_AB by central differences
    std::vector<Mat> dg(n2);
    for (int c = 0; c < n2; ++c) {
        const Mat gp = coordinate_metric(params, model, shifted(pt, c, step));
        const Mat gm = coordinate_metric(params, model, shifted(pt, c, -step));
        dg[c] = (gp - gm) / (2.0 * step);
    }

    Ten3 gamma(n2);
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n2; ++c) {
                double acc = 0.0;
                for (int d = 0; d < n2; ++d)
                    acc += ginv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
                gamma(a, b, c) = 0.5 * acc;
            }
    return gamma;
}

Ten4 fd_riemann(const LiftParams& params, const BaseModel& model, const TangentPoint& pt,
                double step, double step_outer) {
    if (step_outer <= 0.0) step_outer = kFdStepOuterFactor * step;
    const int n2 = 2 * static_cast<int>(pt.x.size());

    const Ten3 gamma = fd_christoffel(params, model, pt, step);
    std::vector<Ten3> dgamma(n2, Ten3(n2));
    for (int c = 0; c < n2; ++c) {
        const Ten3 gp = fd_christoffel(params, model, shifted(pt, c, step_outer), step);
        const Ten3 gm = fd_christoffel(params, model, shifted(pt, c, -step_outer), step);
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n2; ++b)
                for (int d = 0; d < n2; ++d)
                    dgamma[c](a, b, d) = (gp(a, b, d) - gm(a, b, d)) / (2.0 * step_outer);
    }

    // R^A_BCD exactly mirrors the base-manifold convention R^h_kij
    Ten4 R(n2);
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n2; ++c)
                for (int d = 0; d < n2; ++d) {
                    double acc = dgamma[c](a, d, b) - dgamma[d](a, c, b);
                    for (int e = 0; e < n2; ++e)
                        acc += gamma(a, c, e) * gamma(e, d, b) - gamma(a, d, e) * gamma(e, c, b);
                    R(a, b, c, d) = acc;
                }
    return R;
}

Mat adapted_frame_matrix(const BaseGeometry& geom, const Vec& y) {
    const int n = geom.n;
    Mat F = Mat::Identity(2 * n, 2 * n);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int m = 0; m < n; ++m) acc += y(m) * geom.gamma(h, m, i);
            F(n + h, i) = -acc;  // δ_i = ∂x_i - Γ^h_0i ∂y_h
        }
    return F;
}

Ten4 adapted_full_curvature(const CurvatureComponents& K) {
    const int n = K.n;
    const int n2 = 2 * n;
    Ten4 R(n2);
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    // K(E_c, E_d) E_b = R^a_bcd E_a; X blocks first, Y blocks second
                    R(h, k, i, j) = K.XXXX(h, k, i, j);
                    R(n + h, k, i, j) = K.XXXY(h, k, i, j);
                    R(h, n + k, i, j) = K.XXYX(h, k, i, j);
                    R(n + h, n + k, i, j) = K.XXYY(h, k, i, j);
                    R(h, k, n + i, n + j) = K.YYXX(h, k, i, j);
                    R(n + h, k, n + i, n + j) = K.YYXY(h, k, i, j);
                    R(h, n + k, n + i, n + j) = K.YYYX(h, k, i, j);
                    R(n + h, n + k, n + i, n + j) = K.YYYY(h, k, i, j);
                    R(h, k, n + i, j) = K.YXXX(h, k, i, j);
                    R(n + h, k, n + i, j) = K.YXXY(h, k, i, j);
                    R(h, n + k, n + i, j) = K.YXYX(h, k, i, j);
                    R(n + h, n + k, n + i, j) = K.YXYY(h, k, i, j);
                    // (δ_i, ∂_j) arguments by antisymmetry in the last pair
                    R(h, k, j, n + i) = -K.YXXX(h, k, i, j);
                    R(n + h, k, j, n + i) = -K.YXXY(h, k, i, j);
                    R(h, n + k, j, n + i) = -K.YXYX(h, k, i, j);
                    R(n + h, n + k, j, n + i) = -K.YXYY(h, k, i, j);
                }
    return R;
}

double compare_adapted(const CurvatureComponents& K, const Ten4& fd, const BaseGeometry& geom,
                       const TangentPoint& pt) {
    const int n = geom.n;
    const int n2 = 2 * n;
    const Mat F = adapted_frame_matrix(geom, pt.y);
    const Mat Finv = F.inverse();

    // R_ad^a_bcd = (F^-1)^a_A fd^A_BCD F^B_b F^C_c F^D_d
    Ten4 tr(n2);
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n2; ++c)
                for (int d = 0; d < n2; ++d) {
                    double acc = 0.0;
                    for (int A = 0; A < n2; ++A) {
                        if (Finv(a, A) == 0.0) continue;
                        for (int B = 0; B < n2; ++B)
                            for (int C = 0; C < n2; ++C)
                                for (int D = 0; D < n2; ++D)
                                    acc += Finv(a, A) * fd(A, B, C, D) * F(B, b) * F(C, c) * F(D, d);
                    }
                    tr(a, b, c, d) = acc;
                }

    const Ten4 closed = adapted_full_curvature(K);
    double worst = 0.0;
    auto upd = [&](int a, int b, int c, int d) {
        const double t = tr(a, b, c, d);
        const double err = std::abs(closed(a, b, c, d) - t) / (1.0 + std::abs(t));
        worst = std::max(worst, err);
    };
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    upd(h, k, i, j);
                    upd(n + h, k, i, j);
                    upd(h, n + k, i, j);
                    upd(n + h, n + k, i, j);
                    upd(h, k, n + i, n + j);
                    upd(n + h, k, n + i, n + j);
                    upd(h, n + k, n + i, n + j);
                    upd(n + h, n + k, n + i, n + j);
                    upd(h, k, n + i, j);
                    upd(n + h, k, n + i, j);
                    upd(h, n + k, n + i, j);
                    upd(n + h, n + k, n + i, j);
                }
    return worst;
}

double fd_sectional_curvature(const LiftParams& params, const BaseModel& model,
                              const TangentPoint& pt, const FrameVector& X, const FrameVector& Y,
                              double step, double step_outer) {
    const int n = static_cast<int>(pt.x.size());
    const int n2 = 2 * n;
    const double scale = fd_scale(pt);
    const Ten4 R = fd_riemann(params, model, pt, step * scale,
                              step_outer > 0.0 ? step_outer * scale : -1.0);
    const BaseGeometry geom = model.geometry_at(pt.x);
    const Mat G = coordinate_metric(params, model, pt);
    const Mat F = adapted_frame_matrix(geom, pt.y);

    // plane to coordinate components
    Vec xc = Vec::Zero(n2), yc = Vec::Zero(n2);
    for (int i = 0; i < n; ++i) {
        xc += X.horizontal(i) * F.col(i) + X.vertical(i) * F.col(n + i);
        yc += Y.horizontal(i) * F.col(i) + Y.vertical(i) * F.col(n + i);
    }

    // K(X,Y)Y = R^A_BCD Y^B X^C Y^D
    Vec kv = Vec::Zero(n2);
    for (int a = 0; a < n2; ++a) {
        double acc = 0.0;
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n2; ++c)
                for (int d = 0; d < n2; ++d) acc += R(a, b, c, d) * yc(b) * xc(c) * yc(d);
        kv(a) = acc;
    }
    const double gxx = xc.dot(G * xc);
    const double gyy = yc.dot(G * yc);
    const double gxy = xc.dot(G * yc);
    const double gram = gxx * gyy - gxy * gxy;
    if (gram <= 1e-8) throw PlaneError("2-plane is numerically degenerate (Gram determinant <= 1e-8)");
    return kv.dot(G * xc) / gram;
}

}  // namespace tanlift
