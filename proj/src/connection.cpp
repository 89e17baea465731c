#include "tanlift/connection.hpp"

#include "contractions.hpp"

namespace tanlift {

using detail::contract_riemann;

ConnectionCoeffs connection_coeffs(const LiftParams& params, const BaseGeometry& geom,
                                   const TangentPoint& pt) {
    const int n = geom.n;
    const MetricBlocks blocks = metric_blocks(params, geom, pt);
    const InverseBlocks inv = inverse_blocks_closed_form(params, geom, pt, blocks);
    const BlockDerivs d = metric_block_derivatives(params, geom, pt);
    const auto rc = contract_riemann(geom, pt.y);
    const double c3 = params.c3(blocks.t);

    ConnectionCoeffs out;
    out.n = n;
    out.gamma = geom.gamma;
    out.Q = Ten3(n);
    out.Qt = Ten3(n);
    out.P = Ten3(n);
    out.Pt = Ten3(n);
    out.S = Ten3(n);
    out.St = Ten3(n);

    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double q = 0.0, qt = 0.0, p = 0.0, ptl = 0.0, sv = 0.0, st = 0.0;
                for (int k = 0; k < n; ++k) {
                    // Q^h_ij  = 1/2 (∂_i G2_jk + ∂_j G2_ik - ∂_k G2_ij) H2^kh
                    //         + 1/2 (∂_i G3_jk + ∂_j G3_ik) H3^kh ; Qt swaps H2->H3, H3->H1
                    const double wq = d.dG2(i, j, k) + d.dG2(j, i, k) - d.dG2(k, i, j);
                    const double wq3 = d.dG3(i, j, k) + d.dG3(j, i, k);
                    q += 0.5 * (wq * inv.H2(k, h) + wq3 * inv.H3(k, h));
                    qt += 0.5 * (wq * inv.H3(k, h) + wq3 * inv.H1(k, h));

                    // P^h_ij  = 1/2 (∂_i G3_jk - ∂_k G3_ij) H3^kh
                    //         + 1/2 (∂_i G1_jk + R^l_0jk G2_li) H1^kh ; Pt uses H2, H3
                    const double wp3 = d.dG3(i, j, k) - d.dG3(k, i, j);
                    double wp1 = d.dG1(i, j, k);
                    for (int l = 0; l < n; ++l) wp1 += rc.r0(l, j, k) * blocks.G2(l, i);
                    p += 0.5 * (wp3 * inv.H3(k, h) + wp1 * inv.H1(k, h));
                    ptl += 0.5 * (wp3 * inv.H2(k, h) + wp1 * inv.H3(k, h));

                    // S^h_ij  = -1/2 (∂_k G1_ij + R^l_0ij G2_lk) H2^kh + c3 R_i0jk H3^kh
                    // St^h_ij = -1/2 (∂_k G1_ij + R^l_0ij G2_lk) H3^kh + c3 R_i0jk H1^kh
                    double ws = d.dG1(k, i, j);
                    for (int l = 0; l < n; ++l) ws += rc.r0(l, i, j) * blocks.G2(l, k);
                    sv += -0.5 * ws * inv.H2(k, h) + c3 * rc.r0_low(i, j, k) * inv.H3(k, h);
                    st += -0.5 * ws * inv.H3(k, h) + c3 * rc.r0_low(i, j, k) * inv.H1(k, h);
                }
                out.Q(h, i, j) = q;
                out.Qt(h, i, j) = qt;
                out.P(h, i, j) = p;
                out.Pt(h, i, j) = ptl;
                out.S(h, i, j) = sv;
                out.St(h, i, j) = st;
            }
    return out;
}

ConnectionDerivs connection_coeff_derivatives(const LiftParams& params, const BaseGeometry& geom,
                                              const TangentPoint& pt) {
    const int n = geom.n;
    const MetricBlocks blocks = metric_blocks(params, geom, pt);
    const InverseBlocks inv = inverse_blocks_closed_form(params, geom, pt, blocks);
    const BlockDerivs d = metric_block_derivatives(params, geom, pt);
    const auto rc = contract_riemann(geom, pt.y);
    const LiftScalars sc = lift_scalars(params, blocks.t);
    const double c3 = sc.c3.v;
    const double c3p = sc.c3.d1;

    ConnectionDerivs out;
    out.n = n;
    out.dQ = Ten4(n);
    out.dQt = Ten4(n);
    out.dP = Ten4(n);
    out.dPt = Ten4(n);
    out.dS = Ten4(n);
    out.dSt = Ten4(n);

    for (int i = 0; i < n; ++i)
        for (int h = 0; h < n; ++h)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double dq = 0.0, dqt = 0.0, dp = 0.0, dpt = 0.0, ds = 0.0, dst = 0.0;
                    for (int l = 0; l < n; ++l) {
                        // ∂_i Q^h_jk, ∂_i Qt^h_jk
                        const double w2 = d.dG2(j, k, l) + d.dG2(k, j, l) - d.dG2(l, j, k);
                        const double dw2 = d.ddG2(i, j, k, l) + d.ddG2(i, k, j, l) - d.ddG2(i, l, j, k);
                        const double w3 = d.dG3(j, k, l) + d.dG3(k, j, l);
                        const double dw3 = d.ddG3(i, j, k, l) + d.ddG3(i, k, j, l);
                        dq += 0.5 * (d.dH2(i, h, l) * w2 + inv.H2(h, l) * dw2 +
                                     d.dH3(i, h, l) * w3 + inv.H3(h, l) * dw3);
                        dqt += 0.5 * (d.dH3(i, h, l) * w2 + inv.H3(h, l) * dw2 +
                                      d.dH1(i, h, l) * w3 + inv.H1(h, l) * dw3);

                        // ∂_i P^h_jk, ∂_i Pt^h_jk; here ∂_i(R^r_0kl) = R^r_ikl
                        const double v3 = d.dG3(j, k, l) - d.dG3(l, j, k);
                        const double dv3 = d.ddG3(i, j, k, l) - d.ddG3(i, l, j, k);
                        double v1 = d.dG1(j, k, l);
                        double dv1 = d.ddG1(i, j, k, l);
                        for (int r = 0; r < n; ++r) {
                            v1 += rc.r0(r, k, l) * blocks.G2(r, j);
                            dv1 += geom.riemann(r, i, k, l) * blocks.G2(r, j) +
                                   rc.r0(r, k, l) * d.dG2(i, r, j);
                        }
                        dp += 0.5 * (d.dH3(i, h, l) * v3 + inv.H3(h, l) * dv3 +
                                     d.dH1(i, h, l) * v1 + inv.H1(h, l) * dv1);
                        dpt += 0.5 * (d.dH2(i, h, l) * v3 + inv.H2(h, l) * dv3 +
                                      d.dH3(i, h, l) * v1 + inv.H3(h, l) * dv1);

                        // ∂_i S^h_jk, ∂_i St^h_jk (l is the contraction index r of the text)
                        double ws = d.dG1(l, j, k);
                        double dws = d.ddG1(i, l, j, k);
                        for (int r = 0; r < n; ++r) {
                            ws += rc.r0(r, j, k) * blocks.G2(r, l);
                            dws += geom.riemann(r, i, j, k) * blocks.G2(r, l) +
                                   rc.r0(r, j, k) * d.dG2(i, r, l);
                        }
                        ds += -0.5 * (dws * inv.H2(l, h) + ws * d.dH2(i, l, h));
                        dst += -0.5 * (dws * inv.H3(l, h) + ws * d.dH3(i, l, h));
                        ds += c3p * blocks.g0(i) * rc.r0_low(j, k, l) * inv.H3(l, h) +
                              c3 * (geom.riemann_low(j, i, k, l) * inv.H3(l, h) +
                                    rc.r0_low(j, k, l) * d.dH3(i, l, h));
                        dst += c3p * blocks.g0(i) * rc.r0_low(j, k, l) * inv.H1(l, h) +
                               c3 * (geom.riemann_low(j, i, k, l) * inv.H1(l, h) +
                                     rc.r0_low(j, k, l) * d.dH1(i, l, h));
                    }
                    out.dQ(i, h, j, k) = dq;
                    out.dQt(i, h, j, k) = dqt;
                    out.dP(i, h, j, k) = dp;
                    out.dPt(i, h, j, k) = dpt;
                    out.dS(i, h, j, k) = ds;
                    out.dSt(i, h, j, k) = dst;
                }
    return out;
}

FrameVector nabla_frame(const ConnectionCoeffs& coeffs, FrameIndex dir, FrameIndex arg) {
    const int n = coeffs.n;
    FrameVector out = FrameVector::zero(n);
    const int i = dir.i, j = arg.i;
    if (dir.vertical && arg.vertical) {
        for (int h = 0; h < n; ++h) {
            out.vertical(h) = coeffs.Q(h, i, j);
            out.horizontal(h) = coeffs.Qt(h, i, j);
        }
    } else if (dir.vertical && !arg.vertical) {
        for (int h = 0; h < n; ++h) {
            out.horizontal(h) = coeffs.P(h, i, j);
            out.vertical(h) = coeffs.Pt(h, i, j);
        }
    } else if (!dir.vertical && arg.vertical) {
        for (int h = 0; h < n; ++h) {
            out.horizontal(h) = coeffs.P(h, j, i);
            out.vertical(h) = coeffs.gamma(h, i, j) + coeffs.Pt(h, j, i);
        }
    } else {
        for (int h = 0; h < n; ++h) {
            out.horizontal(h) = coeffs.gamma(h, i, j) + coeffs.St(h, i, j);
            out.vertical(h) = coeffs.S(h, i, j);
        }
    }
    return out;
}

double lifted_inner(const MetricBlocks& blocks, const FrameVector& a, const FrameVector& b) {
    return a.horizontal.dot(blocks.G1 * b.horizontal) + a.horizontal.dot(blocks.G3 * b.vertical) +
           a.vertical.dot(blocks.G3 * b.horizontal) + a.vertical.dot(blocks.G2 * b.vertical);
}

}  // namespace tanlift
