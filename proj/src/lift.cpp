#include "tanlift/lift.hpp"

#include <cmath>
#include <cstdio>

#include "tanlift/errors.hpp"

namespace tanlift {

LiftParams sasaki_lift() {
    LiftParams p;
    p.c1 = CoeffFn::constant(1.0);
    p.c2 = CoeffFn::constant(1.0);
    return p;  // c3 and all d default to zero
}

LiftParams cheeger_gromoll_lift() {
    LiftParams p;
    p.c1 = CoeffFn::constant(1.0);
    p.c2 = CoeffFn::ratio({1.0}, {1.0, 2.0});
    p.d2 = p.c2;
    return p;
}

LiftParams theorem4_metric(const CoeffFn& alpha, const CoeffFn& beta, double c,
                           std::optional<std::pair<double, double>> validate_t_range) {
    const CoeffFn da = alpha.derivative();
    const CoeffFn db = beta.derivative();
    const CoeffFn tt = CoeffFn::t();
    const CoeffFn beta2 = beta * beta;

    LiftParams p;
    p.c1 = CoeffFn::constant(c);
    p.c2 = alpha;
    p.c3 = beta;
    p.d3 = db;
    if (beta.is_zero()) {
        // limit member: the quotient cancels and only alpha' survives
        p.d2 = da;
    } else {
        p.d2 = (da * beta2 + 2.0 * tt * da * beta * db - 2.0 * tt * alpha * db * db) / beta2;
    }

    if (validate_t_range) {
        const auto [lo, hi] = *validate_t_range;
        const int samples = 33;
        for (int s = 0; s <= samples; ++s) {
            const double t = lo + (hi - lo) * s / samples;
            check_positivity(p, t);
        }
    }
    return p;
}

double energy_density(const BaseGeometry& geom, const Vec& y) {
    return 0.5 * y.dot(geom.g * y);
}

void check_positivity(const LiftParams& params, double t) {
    const double c1 = params.c1(t), c2 = params.c2(t), c3 = params.c3(t);
    const double d1 = params.d1(t), d2 = params.d2(t), d3 = params.d3(t);
    const double a1 = c1 + 2.0 * t * d1;
    const double a2 = c2 + 2.0 * t * d2;
    const double a3 = c3 + 2.0 * t * d3;
    char buf[160];
    if (!(c1 > 0.0)) {
        std::snprintf(buf, sizeof buf, "degenerate lifted metric at t=%.6g: c1 = %.6g <= 0", t, c1);
        throw DegenerateMetricError(buf);
    }
    if (!(a1 > 0.0)) {
        std::snprintf(buf, sizeof buf, "degenerate lifted metric at t=%.6g: c1 + 2 t d1 = %.6g <= 0",
                      t, a1);
        throw DegenerateMetricError(buf);
    }
    if (!(c1 * c2 - c3 * c3 > 0.0)) {
        std::snprintf(buf, sizeof buf, "degenerate lifted metric at t=%.6g: c1 c2 - c3^2 = %.6g <= 0",
                      t, c1 * c2 - c3 * c3);
        throw DegenerateMetricError(buf);
    }
    if (!(a1 * a2 - a3 * a3 > 0.0)) {
        std::snprintf(buf, sizeof buf,
                      "degenerate lifted metric at t=%.6g: "
                      "(c1+2td1)(c2+2td2) - (c3+2td3)^2 = %.6g <= 0",
                      t, a1 * a2 - a3 * a3);
        throw DegenerateMetricError(buf);
    }
}

LiftScalars lift_scalars(const LiftParams& params, double t) {
    LiftScalars s;
    s.c1 = params.c1.jet(t);
    s.c2 = params.c2.jet(t);
    s.c3 = params.c3.jet(t);
    s.d1 = params.d1.jet(t);
    s.d2 = params.d2.jet(t);
    s.d3 = params.d3.jet(t);

    const Jet3 tj = Jet3::variable(t);
    const Jet3 two = Jet3::constant(2.0);

    const Jet3 det_c = s.c1 * s.c2 - s.c3 * s.c3;
    const Jet3 a1 = s.c1 + two * tj * s.d1;
    const Jet3 a2 = s.c2 + two * tj * s.d2;
    const Jet3 a3 = s.c3 + two * tj * s.d3;
    const Jet3 det_a = a1 * a2 - a3 * a3;

    constexpr double kSingular = 1e-12;
    char buf[160];
    if (std::abs(det_c.v) < kSingular) {
        std::snprintf(buf, sizeof buf, "singular inverse-block denominator c1 c2 - c3^2 = %.6g at t=%.6g",
                      det_c.v, t);
        throw SingularityError(buf);
    }
    if (std::abs(det_a.v) < kSingular) {
        std::snprintf(buf, sizeof buf,
                      "singular inverse-block denominator (c1+2td1)(c2+2td2)-(c3+2td3)^2 = %.6g at t=%.6g",
                      det_a.v, t);
        throw SingularityError(buf);
    }
    if (std::abs(a2.v) < kSingular) {
        std::snprintf(buf, sizeof buf, "singular inverse-block denominator c2 + 2 t d2 = %.6g at t=%.6g",
                      a2.v, t);
        throw SingularityError(buf);
    }

    s.p1 = s.c2 / det_c;
    s.p2 = s.c1 / det_c;
    s.p3 = Jet3::constant(0.0) - s.c3 / det_c;

    // The q scalars solve the two 2x2 linear systems coming from the four
    // block identities:
    //   a1 q1 + a3 q3 = -(d1 p1 + d3 p3)
    //   a3 q1 + a2 q3 = -(d3 p1 + d2 p3)
    //   a3 q3 + a2 q2 = -(d3 p3 + d2 p2)
    const Jet3 r1 = Jet3::constant(0.0) - (s.d1 * s.p1 + s.d3 * s.p3);
    const Jet3 r2 = Jet3::constant(0.0) - (s.d3 * s.p1 + s.d2 * s.p3);
    const Jet3 r3 = Jet3::constant(0.0) - (s.d3 * s.p3 + s.d2 * s.p2);
    s.q1 = (r1 * a2 - r2 * a3) / det_a;
    s.q3 = (r2 * a1 - r1 * a3) / det_a;
    s.q2 = (r3 - a3 * s.q3) / a2;
    return s;
}

Mat MetricBlocks::full() const {
    Mat m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = G1;
    m.topRightCorner(n, n) = G3;
    m.bottomLeftCorner(n, n) = G3;
    m.bottomRightCorner(n, n) = G2;
    return m;
}

MetricBlocks metric_blocks(const LiftParams& params, const BaseGeometry& geom,
                           const TangentPoint& pt) {
    MetricBlocks b;
    b.n = geom.n;
    b.t = energy_density(geom, pt.y);
    check_positivity(params, b.t);
    b.g0 = geom.g * pt.y;
    const double c1 = params.c1(b.t), c2 = params.c2(b.t), c3 = params.c3(b.t);
    const double d1 = params.d1(b.t), d2 = params.d2(b.t), d3 = params.d3(b.t);
    b.G1 = c1 * geom.g + d1 * (b.g0 * b.g0.transpose());
    b.G2 = c2 * geom.g + d2 * (b.g0 * b.g0.transpose());
    b.G3 = c3 * geom.g + d3 * (b.g0 * b.g0.transpose());
    return b;
}

InverseBlocks inverse_blocks_closed_form(const LiftParams& params, const BaseGeometry& geom,
                                         const TangentPoint& pt, const MetricBlocks& blocks) {
    const LiftScalars s = lift_scalars(params, blocks.t);
    InverseBlocks inv;
    inv.n = blocks.n;
    const Mat yy = pt.y * pt.y.transpose();
    inv.H1 = s.p1.v * geom.g_inv + s.q1.v * yy;
    inv.H2 = s.p2.v * geom.g_inv + s.q2.v * yy;
    inv.H3 = s.p3.v * geom.g_inv + s.q3.v * yy;
    inv.pq = PqScalars{s.p1.v, s.p2.v, s.p3.v, s.q1.v, s.q2.v, s.q3.v};
    return inv;
}

InverseBlocks inverse_blocks_numeric(const BaseGeometry& geom, const MetricBlocks& blocks) {
    const int n = blocks.n;
    const Mat full = blocks.full();
    Eigen::FullPivLU<Mat> lu(full);
    if (!lu.isInvertible())
        throw SingularityError("adapted-frame metric matrix is numerically singular");
    const Mat inv_full = lu.inverse();

    InverseBlocks inv;
    inv.n = n;
    inv.H1 = inv_full.topLeftCorner(n, n);
    inv.H3 = inv_full.topRightCorner(n, n);
    inv.H2 = inv_full.bottomRightCorner(n, n);

    // p,q recovery: least squares of H_(a) against {g^{-1}, y y^T};
    // the basis degenerates at y = 0, so the scalars stay unset there.
    const Vec y = geom.g_inv * blocks.g0;
    if (y.norm() > 0.0) {
        const Mat yy = y * y.transpose();
        const double b11 = geom.g_inv.cwiseProduct(geom.g_inv).sum();
        const double b12 = geom.g_inv.cwiseProduct(yy).sum();
        const double b22 = yy.cwiseProduct(yy).sum();
        Eigen::Matrix2d gram;
        gram << b11, b12, b12, b22;
        auto project = [&](const Mat& h) {
            Eigen::Vector2d rhs(geom.g_inv.cwiseProduct(h).sum(), yy.cwiseProduct(h).sum());
            Eigen::Vector2d pq = gram.ldlt().solve(rhs);
            return pq;
        };
        const auto pq1 = project(inv.H1);
        const auto pq2 = project(inv.H2);
        const auto pq3 = project(inv.H3);
        inv.pq = PqScalars{pq1(0), pq2(0), pq3(0), pq1(1), pq2(1), pq3(1)};
    }
    return inv;
}

BlockDerivs metric_block_derivatives(const LiftParams& params, const BaseGeometry& geom,
                                     const TangentPoint& pt) {
    const int n = geom.n;
    const double t = energy_density(geom, pt.y);
    check_positivity(params, t);
    const LiftScalars s = lift_scalars(params, t);
    const Vec g0 = geom.g * pt.y;
    const Mat& g = geom.g;
    const Mat& ginv = geom.g_inv;
    const Vec& y = pt.y;

    BlockDerivs d;
    d.dG1 = Ten3(n);
    d.dG2 = Ten3(n);
    d.dG3 = Ten3(n);
    d.ddG1 = Ten4(n);
    d.ddG2 = Ten4(n);
    d.ddG3 = Ten4(n);
    d.dH1 = Ten3(n);
    d.dH2 = Ten3(n);
    d.dH3 = Ten3(n);

    struct Pair {
        const Jet3* c;
        const Jet3* dcoef;
        Ten3* dG;
        Ten4* ddG;
        const Jet3* p;
        const Jet3* q;
        Ten3* dH;
    };
    const Pair families[3] = {
        {&s.c1, &s.d1, &d.dG1, &d.ddG1, &s.p1, &s.q1, &d.dH1},
        {&s.c2, &s.d2, &d.dG2, &d.ddG2, &s.p2, &s.q2, &d.dH2},
        {&s.c3, &s.d3, &d.dG3, &d.ddG3, &s.p3, &s.q3, &d.dH3},
    };

    for (const auto& f : families) {
        const double c1p = f.c->d1, c2p = f.c->d2;
        const double dv = f.dcoef->v, d1p = f.dcoef->d1, d2p = f.dcoef->d2;
        // ∂_i G_jk = c' g0_i g_jk + d' g0_i g0_j g0_k + d (g_ij g0_k + g0_j g_ik)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    (*f.dG)(i, j, k) = c1p * g0(i) * g(j, k) + d1p * g0(i) * g0(j) * g0(k) +
                                       dv * (g(i, j) * g0(k) + g0(j) * g(i, k));
        // ∂_i ∂_j G_kl = c'' g0_i g0_j g_kl + c' g_ij g_kl + d'' g0_i g0_j g0_k g0_l
        //   + d' (g_ij g0_k g0_l + g0_j g_ik g0_l + g0_j g0_k g_il + g0_i g_jk g0_l + g0_i g0_k g_jl)
        //   + d (g_jk g_il + g_ik g_jl)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        (*f.ddG)(i, j, k, l) =
                            c2p * g0(i) * g0(j) * g(k, l) + c1p * g(i, j) * g(k, l) +
                            d2p * g0(i) * g0(j) * g0(k) * g0(l) +
                            d1p * (g(i, j) * g0(k) * g0(l) + g0(j) * g(i, k) * g0(l) +
                                   g0(j) * g0(k) * g(i, l) + g0(i) * g(j, k) * g0(l) +
                                   g0(i) * g0(k) * g(j, l)) +
                            dv * (g(j, k) * g(i, l) + g(i, k) * g(j, l));
        // ∂_i H^jk = p' g0_i g^jk + q' g0_i y^j y^k + q (δ^j_i y^k + y^j δ^k_i)
        const double pv = f.p->d1, qv = f.q->v, qp = f.q->d1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double acc = pv * g0(i) * ginv(j, k) + qp * g0(i) * y(j) * y(k);
                    if (i == j) acc += qv * y(k);
                    if (i == k) acc += qv * y(j);
                    (*f.dH)(i, j, k) = acc;
                }
    }
    return d;
}

}  // namespace tanlift
