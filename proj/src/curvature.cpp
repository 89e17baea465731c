#include "tanlift/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contractions.hpp"
#include "tanlift/errors.hpp"

namespace tanlift {

const std::array<const char*, CurvatureComponents::kFamilyCount>&
CurvatureComponents::family_names() {
    static const std::array<const char*, kFamilyCount> names = {
        "XXXX", "XXXY", "XXYX", "XXYY", "YYXX", "YYXY",
        "YYYX", "YYYY", "YXXX", "YXXY", "YXYX", "YXYY"};
    return names;
}

const Ten4& CurvatureComponents::family(int idx) const {
    switch (idx) {
        case 0: return XXXX;
        case 1: return XXXY;
        case 2: return XXYX;
        case 3: return XXYY;
        case 4: return YYXX;
        case 5: return YYXY;
        case 6: return YYYX;
        case 7: return YYYY;
        case 8: return YXXX;
        case 9: return YXXY;
        case 10: return YXYX;
        default: return YXYY;
    }
}

Ten4& CurvatureComponents::family(int idx) {
    return const_cast<Ten4&>(static_cast<const CurvatureComponents&>(*this).family(idx));
}

CurvatureComponents curvature_components(const LiftParams& params, const BaseGeometry& geom,
                                         const TangentPoint& pt) {
    const int n = geom.n;
    const MetricBlocks blocks = metric_blocks(params, geom, pt);
    const InverseBlocks inv = inverse_blocks_closed_form(params, geom, pt, blocks);
    const ConnectionCoeffs cc = connection_coeffs(params, geom, pt);
    const ConnectionDerivs cd = connection_coeff_derivatives(params, geom, pt);
    const auto rc = detail::contract_riemann(geom, pt.y);
    const double c3 = params.c3(blocks.t);

    // Covariant x-derivative parts of the connection families. For an
    // M-tensor built from g, y and functions of t the horizontal covariant
    // derivative only sees the base curvature factors, so each family's
    // derivative is its own formula with R replaced by ∇̇_i R:
    //   ∇̇_i S^h_jk  = -1/2 ∇̇_i R^l_0jk G2_lr H2^rh + c3 ∇̇_i R_j0kr H3^rh
    //   ∇̇_i St^h_jk = -1/2 ∇̇_i R^l_0jk G2_lr H3^rh + c3 ∇̇_i R_j0kr H1^rh
    //   ∇̇_i P^h_jk  =  1/2 ∇̇_i R^r_0kl G2_rj H1^lh
    //   ∇̇_i Pt^h_jk =  1/2 ∇̇_i R^r_0kl G2_rj H3^lh
    // These vanish identically on flat and locally symmetric bases.
    Ten4 NS(n), NSt(n), NP(n), NPt(n);
    if (geom.nabla_riemann.max_abs() > 0.0) {
        const auto nc = detail::contract_nabla_riemann(geom, pt.y);
        for (int i = 0; i < n; ++i)
            for (int h = 0; h < n; ++h)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        double ns = 0.0, nst = 0.0, np = 0.0, npt = 0.0;
                        for (int l = 0; l < n; ++l) {
                            for (int r = 0; r < n; ++r) {
                                const double sterm = nc.nr0(i, l, j, k) * blocks.G2(l, r);
                                ns += -0.5 * sterm * inv.H2(r, h);
                                nst += -0.5 * sterm * inv.H3(r, h);
                                const double pterm = nc.nr0(i, r, k, l) * blocks.G2(r, j);
                                np += 0.5 * pterm * inv.H1(l, h);
                                npt += 0.5 * pterm * inv.H3(l, h);
                            }
                            ns += c3 * nc.nr0_low(i, j, k, l) * inv.H3(l, h);
                            nst += c3 * nc.nr0_low(i, j, k, l) * inv.H1(l, h);
                        }
                        NS(i, h, j, k) = ns;
                        NSt(i, h, j, k) = nst;
                        NP(i, h, j, k) = np;
                        NPt(i, h, j, k) = npt;
                    }
    }

    CurvatureComponents K;
    K.n = n;
    for (int f = 0; f < CurvatureComponents::kFamilyCount; ++f) K.family(f) = Ten4(n);

    const Ten3& Q = cc.Q;
    const Ten3& Qt = cc.Qt;
    const Ten3& P = cc.P;
    const Ten3& Pt = cc.Pt;
    const Ten3& S = cc.S;
    const Ten3& St = cc.St;

    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double xxxx = geom.riemann(h, k, i, j) + NSt(i, h, j, k) - NSt(j, h, i, k);
                    double xxxy = NS(i, h, j, k) - NS(j, h, i, k);
                    double xxyx = NP(i, h, k, j) - NP(j, h, k, i);
                    double xxyy = geom.riemann(h, k, i, j) + NPt(i, h, k, j) - NPt(j, h, k, i);
                    double yyxx = cd.dP(i, h, j, k) - cd.dP(j, h, i, k);
                    double yyxy = cd.dPt(i, h, j, k) - cd.dPt(j, h, i, k);
                    double yyyx = cd.dQt(i, h, j, k) - cd.dQt(j, h, i, k);
                    double yyyy = cd.dQ(i, h, j, k) - cd.dQ(j, h, i, k);
                    double yxxx = cd.dSt(i, h, j, k) - NP(j, h, i, k);
                    double yxxy = cd.dS(i, h, j, k) - NPt(j, h, i, k);
                    double yxyx = cd.dP(i, h, k, j);
                    double yxyy = cd.dPt(i, h, k, j);
                    for (int l = 0; l < n; ++l) {
                        xxxx += St(h, i, l) * St(l, j, k) - St(h, j, l) * St(l, i, k) +
                                P(h, l, i) * S(l, j, k) - P(h, l, j) * S(l, i, k) +
                                rc.r0(l, i, j) * P(h, l, k);
                        xxxy += St(l, j, k) * S(h, i, l) - St(l, i, k) * S(h, j, l) +
                                Pt(h, l, i) * S(l, j, k) - Pt(h, l, j) * S(l, i, k) +
                                rc.r0(l, i, j) * Pt(h, l, k);
                        xxyx += Pt(l, k, j) * P(h, l, i) - Pt(l, k, i) * P(h, l, j) +
                                P(l, k, j) * St(h, i, l) - P(l, k, i) * St(h, j, l) +
                                rc.r0(l, i, j) * Qt(h, l, k);
                        xxyy += Pt(l, k, j) * Pt(h, l, i) - Pt(l, k, i) * Pt(h, l, j) +
                                P(l, k, j) * S(h, i, l) - P(l, k, i) * S(h, j, l) +
                                rc.r0(l, i, j) * Q(h, l, k);
                        yyxx += Pt(l, j, k) * Qt(h, i, l) - Pt(l, i, k) * Qt(h, j, l) +
                                P(l, j, k) * P(h, i, l) - P(l, i, k) * P(h, j, l);
                        yyxy += Pt(l, j, k) * Q(h, i, l) - Pt(l, i, k) * Q(h, j, l) +
                                P(l, j, k) * Pt(h, i, l) - P(l, i, k) * Pt(h, j, l);
                        yyyx += Q(l, j, k) * Qt(h, i, l) - Q(l, i, k) * Qt(h, j, l) +
                                Qt(l, j, k) * P(h, i, l) - Qt(l, i, k) * P(h, j, l);
                        yyyy += Q(l, j, k) * Q(h, i, l) - Q(l, i, k) * Q(h, j, l) +
                                Qt(l, j, k) * Pt(h, i, l) - Qt(l, i, k) * Pt(h, j, l);
                        yxxx += S(l, j, k) * Qt(h, i, l) + St(l, j, k) * P(h, i, l) -
                                Pt(l, i, k) * P(h, l, j) - P(l, i, k) * St(h, j, l);
                        yxxy += S(l, j, k) * Q(h, i, l) + St(l, j, k) * Pt(h, i, l) -
                                Pt(l, i, k) * Pt(h, l, j) - P(l, i, k) * S(h, j, l);
                        yxyx += Pt(l, k, j) * Qt(h, i, l) + P(l, k, j) * P(h, i, l) -
                                Q(l, i, k) * P(h, l, j) - Qt(l, i, k) * St(h, j, l);
                        yxyy += Pt(l, k, j) * Q(h, i, l) + P(l, k, j) * Pt(h, i, l) -
                                Q(l, i, k) * Pt(h, l, j) - Qt(l, i, k) * S(h, j, l);
                    }
                    K.XXXX(h, k, i, j) = xxxx;
                    K.XXXY(h, k, i, j) = xxxy;
                    K.XXYX(h, k, i, j) = xxyx;
                    K.XXYY(h, k, i, j) = xxyy;
                    K.YYXX(h, k, i, j) = yyxx;
                    K.YYXY(h, k, i, j) = yyxy;
                    K.YYYX(h, k, i, j) = yyyx;
                    K.YYYY(h, k, i, j) = yyyy;
                    K.YXXX(h, k, i, j) = yxxx;
                    K.YXXY(h, k, i, j) = yxxy;
                    K.YXYX(h, k, i, j) = yxyx;
                    K.YXYY(h, k, i, j) = yxyy;
                }
    return K;
}

CurvatureComponents k0_components(double k, const MetricBlocks& blocks) {
    const int n = blocks.n;
    CurvatureComponents K0;
    K0.n = n;
    for (int f = 0; f < CurvatureComponents::kFamilyCount; ++f) K0.family(f) = Ten4(n);
    for (int h = 0; h < n; ++h)
        for (int kk = 0; kk < n; ++kk)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double di = (i == h) ? 1.0 : 0.0;
                    const double dj = (j == h) ? 1.0 : 0.0;
                    K0.XXXX(h, kk, i, j) = k * (blocks.G1(j, kk) * di - blocks.G1(i, kk) * dj);
                    K0.XXYX(h, kk, i, j) = k * (blocks.G3(j, kk) * di - blocks.G3(i, kk) * dj);
                    K0.YYXY(h, kk, i, j) = k * (blocks.G3(j, kk) * di - blocks.G3(i, kk) * dj);
                    K0.YYYY(h, kk, i, j) = k * (blocks.G2(j, kk) * di - blocks.G2(i, kk) * dj);
                    K0.YXXX(h, kk, i, j) = -k * blocks.G3(i, kk) * dj;
                    K0.YXXY(h, kk, i, j) = k * blocks.G1(j, kk) * di;
                    K0.YXYX(h, kk, i, j) = -k * blocks.G2(i, kk) * dj;
                    K0.YXYY(h, kk, i, j) = k * blocks.G3(j, kk) * di;
                    // XXXY0, XXYY0, YYXX0, YYYX0 vanish identically
                }
    return K0;
}

ResidualReport constant_curvature_residual(const CurvatureComponents& K, double k,
                                           const MetricBlocks& blocks) {
    const CurvatureComponents K0 = k0_components(k, blocks);
    const int n = K.n;
    ResidualReport rep;
    for (int f = 0; f < CurvatureComponents::kFamilyCount; ++f) {
        double m = 0.0;
        const Ten4& a = K.family(f);
        const Ten4& b = K0.family(f);
        for (int h = 0; h < n; ++h)
            for (int kk = 0; kk < n; ++kk)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        m = std::max(m, std::abs(a(h, kk, i, j) - b(h, kk, i, j)));
        rep.per_family[f] = m;
        rep.max_abs = std::max(rep.max_abs, m);
    }
    return rep;
}

FrameVector curvature_apply(const CurvatureComponents& K, const FrameVector& X,
                            const FrameVector& Y, const FrameVector& Z) {
    const int n = K.n;
    FrameVector out = FrameVector::zero(n);
    for (int h = 0; h < n; ++h) {
        double oh = 0.0, ov = 0.0;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double hh = X.horizontal(i) * Y.horizontal(j);
                    const double vv = X.vertical(i) * Y.vertical(j);
                    // K(∂_i, δ_j) enters antisymmetrically for mixed slots
                    const double vh = X.vertical(i) * Y.horizontal(j) -
                                      Y.vertical(i) * X.horizontal(j);
                    const double zh = Z.horizontal(k);
                    const double zv = Z.vertical(k);
                    oh += K.XXXX(h, k, i, j) * hh * zh + K.XXYX(h, k, i, j) * hh * zv +
                          K.YYXX(h, k, i, j) * vv * zh + K.YYYX(h, k, i, j) * vv * zv +
                          K.YXXX(h, k, i, j) * vh * zh + K.YXYX(h, k, i, j) * vh * zv;
                    ov += K.XXXY(h, k, i, j) * hh * zh + K.XXYY(h, k, i, j) * hh * zv +
                          K.YYXY(h, k, i, j) * vv * zh + K.YYYY(h, k, i, j) * vv * zv +
                          K.YXXY(h, k, i, j) * vh * zh + K.YXYY(h, k, i, j) * vh * zv;
                }
        out.horizontal(h) = oh;
        out.vertical(h) = ov;
    }
    return out;
}

double sectional_curvature(const CurvatureComponents& K, const MetricBlocks& blocks,
                           const FrameVector& X, const FrameVector& Y) {
    const double gxx = lifted_inner(blocks, X, X);
    const double gyy = lifted_inner(blocks, Y, Y);
    const double gxy = lifted_inner(blocks, X, Y);
    const double gram = gxx * gyy - gxy * gxy;
    if (gram <= 1e-8) throw PlaneError("2-plane is numerically degenerate (Gram determinant <= 1e-8)");
    const FrameVector kxyy = curvature_apply(K, X, Y, Y);
    return lifted_inner(blocks, kxyy, X) / gram;
}

Lemma1Result lemma1_decompose(const Mat& S, const BaseGeometry& geom, const Vec& y) {
    if (geom.n < 2) throw DimensionError("lemma 1 decomposition needs base dimension > 1");
    if (y.norm() == 0.0)
        throw DegenerateBasisError("lemma 1 decomposition basis degenerates at y = 0");
    const Vec g0 = geom.g * y;
    const Mat B2 = g0 * g0.transpose();
    const double b11 = geom.g.cwiseProduct(geom.g).sum();
    const double b12 = geom.g.cwiseProduct(B2).sum();
    const double b22 = B2.cwiseProduct(B2).sum();
    Eigen::Matrix2d gram;
    gram << b11, b12, b12, b22;
    const Eigen::Vector2d rhs(geom.g.cwiseProduct(S).sum(), B2.cwiseProduct(S).sum());
    const Eigen::Vector2d uv = gram.ldlt().solve(rhs);
    Lemma1Result res;
    res.u = uv(0);
    res.v = uv(1);
    res.residual = (S - res.u * geom.g - res.v * B2).norm();
    const double scale = S.norm();
    if (res.residual > 1e-8 * std::max(scale, 1e-300))
        throw NotInSpanError("tensor is not in the span of {g, g0 g0}");
    return res;
}

Lemma2Result lemma2_decompose(const Ten4& T, const BaseGeometry& geom, const Vec& y) {
    const int n = geom.n;
    if (n < 3) throw DimensionError("lemma 2 decomposition requires base dimension >= 3");
    if (y.norm() == 0.0)
        throw DegenerateBasisError("lemma 2 decomposition basis degenerates at y = 0");

    const Vec g0 = geom.g * y;
    const Mat& g = geom.g;
    std::array<Ten4, 10> basis;
    for (auto& b : basis) b = Ten4(n);
    for (int h = 0; h < n; ++h)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const double dha = (h == a) ? 1.0 : 0.0;
                    const double dhb = (h == b) ? 1.0 : 0.0;
                    const double dhc = (h == c) ? 1.0 : 0.0;
                    basis[0](h, a, b, c) = dha * g(b, c);
                    basis[1](h, a, b, c) = dhb * g(a, c);
                    basis[2](h, a, b, c) = dhc * g(a, b);
                    basis[3](h, a, b, c) = dhc * g0(a) * g0(b);
                    basis[4](h, a, b, c) = dhb * g0(a) * g0(c);
                    basis[5](h, a, b, c) = dha * g0(b) * g0(c);
                    basis[6](h, a, b, c) = g(b, c) * g0(a) * y(h);
                    basis[7](h, a, b, c) = g(a, c) * g0(b) * y(h);
                    basis[8](h, a, b, c) = g(a, b) * g0(c) * y(h);
                    basis[9](h, a, b, c) = g0(a) * g0(b) * g0(c) * y(h);
                }

    auto dot = [n](const Ten4& u, const Ten4& v) {
        double acc = 0.0;
        for (int h = 0; h < n; ++h)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) acc += u(h, a, b, c) * v(h, a, b, c);
        return acc;
    };

    // normalize columns so the condition estimate is scale-free
    std::array<double, 10> norms{};
    for (int p = 0; p < 10; ++p) {
        norms[p] = std::sqrt(dot(basis[p], basis[p]));
        if (norms[p] == 0.0) throw RankError("lemma 2 basis pattern vanished");
    }

    Eigen::Matrix<double, 10, 10> gram;
    Eigen::Matrix<double, 10, 1> rhs;
    for (int p = 0; p < 10; ++p) {
        for (int q = 0; q < 10; ++q) gram(p, q) = dot(basis[p], basis[q]) / (norms[p] * norms[q]);
        rhs(p) = dot(basis[p], T) / norms[p];
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 10, 10>> es(gram);
    const double lmin = es.eigenvalues().minCoeff();
    const double lmax = es.eigenvalues().maxCoeff();
    if (lmin <= 0.0 || lmax / lmin > 1e10)
        throw RankError("lemma 2 Gram matrix is rank deficient (condition number > 1e10)");

    const Eigen::Matrix<double, 10, 1> scaled = gram.ldlt().solve(rhs);
    Lemma2Result res;
    Ten4 recon(n);
    for (int p = 0; p < 10; ++p) res.alpha[p] = scaled(p) / norms[p];
    for (int h = 0; h < n; ++h)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    double acc = 0.0;
                    for (int p = 0; p < 10; ++p) acc += res.alpha[p] * basis[p](h, a, b, c);
                    recon(h, a, b, c) = acc;
                }
    double resid = 0.0;
    for (int h = 0; h < n; ++h)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const double d = T(h, a, b, c) - recon(h, a, b, c);
                    resid += d * d;
                }
    res.residual = std::sqrt(resid);
    return res;
}

FlatnessReport flatness_report(const LiftParams& params, const BaseModel& model,
                               const SampleSpec& spec) {
    Rng rng(spec.seed);
    const int npts = std::max(1, spec.points);

    struct PointData {
        MetricBlocks blocks;
        CurvatureComponents K;
    };
    std::vector<PointData> pts;
    pts.reserve(npts);
    for (int s = 0; s < npts; ++s) {
        const TangentPoint pt = sample_tangent_point(model, rng, spec);
        const BaseGeometry geom = model.geometry_at(pt.x);
        PointData pd{metric_blocks(params, geom, pt), curvature_components(params, geom, pt)};
        pts.push_back(std::move(pd));
    }

    FlatnessReport rep;
    rep.sectional_samples.reserve(spec.planes);
    for (int s = 0; s < spec.planes; ++s) {
        const PointData& pd = pts[s % npts];
        const auto [X, Y] = sample_plane(pd.blocks, rng);
        rep.sectional_samples.push_back(sectional_curvature(pd.K, pd.blocks, X, Y));
    }
    if (!rep.sectional_samples.empty()) {
        const auto [lo, hi] =
            std::minmax_element(rep.sectional_samples.begin(), rep.sectional_samples.end());
        rep.sectional_min = *lo;
        rep.sectional_max = *hi;
        rep.sectional_spread = *hi - *lo;
    }

    std::vector<double> candidates{0.0};
    candidates.insert(candidates.end(), rep.sectional_samples.begin(),
                      rep.sectional_samples.end());
    rep.best_residual = std::numeric_limits<double>::infinity();
    for (double k : candidates) {
        double worst = 0.0;
        for (const auto& pd : pts)
            worst = std::max(worst, constant_curvature_residual(pd.K, k, pd.blocks).max_abs);
        if (worst < rep.best_residual) {
            rep.best_residual = worst;
            rep.best_k = k;
        }
    }
    return rep;
}

}  // namespace tanlift
