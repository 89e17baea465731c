#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tanlift/curvature.hpp"
#include "tanlift/errors.hpp"

using namespace tanlift;

namespace {

LiftParams full_lift() {
    LiftParams p;
    p.c1 = CoeffFn::constant(2.0);
    p.c2 = CoeffFn::poly({1.0, 1.0});
    p.c3 = CoeffFn::constant(0.5);
    p.d1 = CoeffFn::constant(0.1);
    p.d2 = CoeffFn::ratio({1.0}, {1.0, 2.0});
    p.d3 = CoeffFn::poly({0.05, 0.02});
    return p;
}

TangentPoint tp(std::initializer_list<double> xs, std::initializer_list<double> ys) {
    TangentPoint pt;
    pt.x = Vec(xs.size());
    pt.y = Vec(ys.size());
    int i = 0;
    for (double v : xs) pt.x(i++) = v;
    i = 0;
    for (double v : ys) pt.y(i++) = v;
    return pt;
}

double families_max_abs(const CurvatureComponents& K) {
    double m = 0.0;
    for (int f = 0; f < CurvatureComponents::kFamilyCount; ++f)
        m = std::max(m, K.family(f).max_abs());
    return m;
}

// fully lowered curvature G(K(E_c,E_d)E_b, E_a) over the 2n adapted frame
double lowered_entry(const CurvatureComponents& K, const MetricBlocks& blocks, int a, int b, int c,
                     int d) {
    const int n = K.n;
    auto basis = [n](int idx) {
        FrameVector v = FrameVector::zero(n);
        (idx >= n ? v.vertical : v.horizontal)(idx >= n ? idx - n : idx) = 1.0;
        return v;
    };
    const FrameVector out = curvature_apply(K, basis(c), basis(d), basis(b));
    return lifted_inner(blocks, out, basis(a));
}

}  // namespace

TEST_CASE("sasaki on the flat base is flat") {
    const BaseModel eu = BaseModel::euclidean(2);
    const auto geo = eu.geometry_at(Vec::Zero(2));
    const CurvatureComponents K = curvature_components(sasaki_lift(), geo, tp({0.0, 0.0}, {0.8, 0.3}));
    CHECK(families_max_abs(K) == 0.0);
}

TEST_CASE("theorem4 members on the flat base are flat") {
    const BaseModel eu2 = BaseModel::euclidean(2);
    const BaseModel eu3 = BaseModel::euclidean(3);
    const LiftParams inst2 = theorem4_metric(CoeffFn::poly({1.0, 2.0}), CoeffFn::constant(1.0), 1.0);
    const LiftParams inst3 = theorem4_metric(CoeffFn::poly({1.0, 1.0}), CoeffFn::constant(0.5), 1.0);
    // a non-constant beta exercises every matrix entry of the family
    const LiftParams inst4 =
        theorem4_metric(CoeffFn::poly({2.0, 1.0}), CoeffFn::poly({0.5, 0.25}), 2.0);
    Rng rng(41);
    SampleSpec spec;
    for (const LiftParams* params : {&inst2, &inst3, &inst4}) {
        for (const BaseModel* model : {&eu2, &eu3}) {
            for (int s = 0; s < 10; ++s) {
                const TangentPoint pt = sample_tangent_point(*model, rng, spec);
                const auto geo = model->geometry_at(pt.x);
                const CurvatureComponents K = curvature_components(*params, geo, pt);
                CHECK(families_max_abs(K) <= 1e-8);
            }
        }
    }
}

TEST_CASE("XXYY at y = 0 equals the base curvature for constant coefficients") {
    const BaseModel sp = BaseModel::sphere(1.0);
    for (const LiftParams& params : {sasaki_lift(), [] {
             LiftParams p;
             p.c1 = CoeffFn::constant(1.5);
             p.c2 = CoeffFn::constant(2.0);
             p.c3 = CoeffFn::constant(0.5);
             return p;
         }()}) {
        const auto pt = tp({1.2, 0.5}, {0.0, 0.0});
        const auto geo = sp.geometry_at(pt.x);
        const CurvatureComponents K = curvature_components(params, geo, pt);
        for (int h = 0; h < 2; ++h)
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        CHECK(std::abs(K.XXYY(h, k, i, j) - geo.riemann(h, k, i, j)) <= 1e-10);
    }
}

TEST_CASE("same-kind families are antisymmetric in the argument pair") {
    const BaseModel sp = BaseModel::sphere(1.0);
    Rng rng(43);
    SampleSpec spec;
    for (int s = 0; s < 5; ++s) {
        const TangentPoint pt = sample_tangent_point(sp, rng, spec);
        const auto geo = sp.geometry_at(pt.x);
        const CurvatureComponents K = curvature_components(full_lift(), geo, pt);
        for (int f : {0, 1, 2, 3, 4, 5, 6, 7}) {
            const Ten4& fam = K.family(f);
            for (int h = 0; h < 2; ++h)
                for (int k = 0; k < 2; ++k)
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            CHECK(std::abs(fam(h, k, i, j) + fam(h, k, j, i)) <= 1e-10);
        }
    }
}

TEST_CASE("fully lowered curvature has the riemann symmetries") {
    const BaseModel sp = BaseModel::sphere(1.0);
    const BaseModel eu = BaseModel::euclidean(3);
    Rng rng(47);
    SampleSpec spec;
    for (const BaseModel* model : {&sp, &eu}) {
        for (int s = 0; s < 3; ++s) {
            const TangentPoint pt = sample_tangent_point(*model, rng, spec);
            const auto geo = model->geometry_at(pt.x);
            const MetricBlocks blocks = metric_blocks(full_lift(), geo, pt);
            const CurvatureComponents K = curvature_components(full_lift(), geo, pt);
            const int n2 = 2 * geo.n;
            double scale = 1.0;
            for (int a = 0; a < n2; ++a)
                for (int b = 0; b < n2; ++b)
                    for (int c = 0; c < n2; ++c)
                        for (int d = 0; d < n2; ++d)
                            scale = std::max(scale, std::abs(lowered_entry(K, blocks, a, b, c, d)));
            for (int a = 0; a < n2; ++a)
                for (int b = 0; b < n2; ++b)
                    for (int c = 0; c < n2; ++c)
                        for (int d = 0; d < n2; ++d) {
                            const double k1 = lowered_entry(K, blocks, a, b, c, d);
                            // antisymmetry in the argument pair and in (a,b)
                            CHECK(std::abs(k1 + lowered_entry(K, blocks, a, b, d, c)) <=
                                  1e-9 * scale);
                            CHECK(std::abs(k1 + lowered_entry(K, blocks, b, a, c, d)) <=
                                  1e-9 * scale);
                            // pair exchange
                            CHECK(std::abs(k1 - lowered_entry(K, blocks, c, d, a, b)) <=
                                  1e-9 * scale);
                        }
        }
    }
}

TEST_CASE("k0 components") {
    const BaseModel eu = BaseModel::euclidean(2);
    const auto geo = eu.geometry_at(Vec::Zero(2));
    const auto pt = tp({0.0, 0.0}, {0.6, -0.2});
    const MetricBlocks blocks = metric_blocks(sasaki_lift(), geo, pt);
    {
        const CurvatureComponents K0 = k0_components(0.0, blocks);
        double m = 0.0;
        for (int f = 0; f < 12; ++f) m = std::max(m, K0.family(f).max_abs());
        CHECK(m == 0.0);
    }
    const CurvatureComponents K0 = k0_components(1.0, blocks);
    for (int h = 0; h < 2; ++h)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    const double dih = i == h ? 1.0 : 0.0;
                    const double djh = j == h ? 1.0 : 0.0;
                    const double djk = j == k ? 1.0 : 0.0;
                    const double dik = i == k ? 1.0 : 0.0;
                    CHECK(K0.XXXX(h, k, i, j) == doctest::Approx(djk * dih - dik * djh));
                    CHECK(K0.YXXY(h, k, i, j) == doctest::Approx(blocks.G1(j, k) * dih));
                    CHECK(K0.XXXY(h, k, i, j) == 0.0);
                    CHECK(K0.XXYY(h, k, i, j) == 0.0);
                    CHECK(K0.YYXX(h, k, i, j) == 0.0);
                    CHECK(K0.YYYX(h, k, i, j) == 0.0);
                }
}

TEST_CASE("constant curvature residual") {
    const BaseModel eu = BaseModel::euclidean(2);
    const BaseModel sp = BaseModel::sphere(1.0);
    Rng rng(53);
    SampleSpec spec;
    // feeding K0 back as K gives an exactly zero residual
    {
        const TangentPoint pt = sample_tangent_point(eu, rng, spec);
        const auto geo = eu.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(sasaki_lift(), geo, pt);
        const CurvatureComponents K0 = k0_components(0.7, blocks);
        CHECK(constant_curvature_residual(K0, 0.7, blocks).max_abs == 0.0);
    }
    // theorem4 on the flat base: residual at k = 0 below 1e-8
    {
        const LiftParams params =
            theorem4_metric(CoeffFn::poly({1.0, 1.0}), CoeffFn::constant(0.5), 1.0);
        const TangentPoint pt = sample_tangent_point(eu, rng, spec);
        const auto geo = eu.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(params, geo, pt);
        const CurvatureComponents K = curvature_components(params, geo, pt);
        CHECK(constant_curvature_residual(K, 0.0, blocks).max_abs <= 1e-8);
    }
    // sasaki over the sphere is never of constant sectional curvature
    {
        for (double k : {0.0, 0.5, 1.0}) {
            double best = 1e300;
            for (int s = 0; s < 5; ++s) {
                const TangentPoint pt = sample_tangent_point(sp, rng, spec);
                const auto geo = sp.geometry_at(pt.x);
                const MetricBlocks blocks = metric_blocks(sasaki_lift(), geo, pt);
                const CurvatureComponents K = curvature_components(sasaki_lift(), geo, pt);
                best = std::min(best, constant_curvature_residual(K, k, blocks).max_abs);
            }
            CHECK(best > 1e-2);
        }
    }
}

TEST_CASE("sectional curvature of the flat family vanishes and is plane-invariant") {
    const BaseModel eu = BaseModel::euclidean(2);
    const LiftParams params = theorem4_metric(CoeffFn::poly({1.0, 1.0}), CoeffFn::constant(0.5), 1.0);
    Rng rng(59);
    SampleSpec spec;
    for (int s = 0; s < 10; ++s) {
        const TangentPoint pt = sample_tangent_point(eu, rng, spec);
        const auto geo = eu.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(params, geo, pt);
        const CurvatureComponents K = curvature_components(params, geo, pt);
        const auto [X, Y] = sample_plane(blocks, rng);
        CHECK(std::abs(sectional_curvature(K, blocks, X, Y)) <= 1e-8);
    }
    // invariance under basis change of the same plane, on a curved example
    const BaseModel sp = BaseModel::sphere(1.0);
    for (int s = 0; s < 5; ++s) {
        const TangentPoint pt = sample_tangent_point(sp, rng, spec);
        const auto geo = sp.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(cheeger_gromoll_lift(), geo, pt);
        const CurvatureComponents K = curvature_components(cheeger_gromoll_lift(), geo, pt);
        const auto [X, Y] = sample_plane(blocks, rng);
        const double k1 = sectional_curvature(K, blocks, X, Y);
        FrameVector X2{2.0 * X.horizontal, 2.0 * X.vertical};
        FrameVector Y2{Y.horizontal + 3.0 * X.horizontal, Y.vertical + 3.0 * X.vertical};
        const double k2 = sectional_curvature(K, blocks, X2, Y2);
        CHECK(std::abs(k1 - k2) <= 1e-10 * std::max(1.0, std::abs(k1)));
    }
}

TEST_CASE("horizontal plane over the unit sphere at y = 0 has sectional curvature 1") {
    const BaseModel sp = BaseModel::sphere(1.0);
    const auto pt = tp({1.0, 0.7}, {0.0, 0.0});
    const auto geo = sp.geometry_at(pt.x);
    const MetricBlocks blocks = metric_blocks(sasaki_lift(), geo, pt);
    const CurvatureComponents K = curvature_components(sasaki_lift(), geo, pt);
    FrameVector X = FrameVector::zero(2), Y = FrameVector::zero(2);
    X.horizontal(0) = 1.0;
    Y.horizontal(1) = 1.0;
    CHECK(sectional_curvature(K, blocks, X, Y) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("degenerate planes are rejected") {
    const BaseModel eu = BaseModel::euclidean(2);
    const auto geo = eu.geometry_at(Vec::Zero(2));
    const auto pt = tp({0.0, 0.0}, {0.5, 0.0});
    const MetricBlocks blocks = metric_blocks(sasaki_lift(), geo, pt);
    const CurvatureComponents K = curvature_components(sasaki_lift(), geo, pt);
    FrameVector X = FrameVector::zero(2);
    X.horizontal(0) = 1.0;
    CHECK_THROWS_AS(sectional_curvature(K, blocks, X, X), PlaneError);
}

TEST_CASE("lemma 1 decomposition") {
    const BaseModel eu = BaseModel::euclidean(2);
    const auto geo = eu.geometry_at(Vec::Zero(2));
    Vec y(2);
    y << 1.0, 0.0;
    {
        const auto res = lemma1_decompose(2.0 * geo.g, geo, y);
        CHECK(res.u == doctest::Approx(2.0));
        CHECK(res.v == doctest::Approx(0.0));
    }
    {
        const Vec g0 = geo.g * y;
        const auto res = lemma1_decompose(g0 * g0.transpose(), geo, y);
        CHECK(res.u == doctest::Approx(0.0));
        CHECK(res.v == doctest::Approx(1.0));
    }
    // roundtrip on a curved metric
    const BaseModel sp = BaseModel::sphere(1.4);
    Vec x(2);
    x << 1.1, 0.2;
    const auto geos = sp.geometry_at(x);
    Vec ys(2);
    ys << 0.4, -0.8;
    const Vec g0 = geos.g * ys;
    Rng rng(61);
    for (int s = 0; s < 20; ++s) {
        const double u = rng.uniform(-2.0, 2.0);
        const double v = rng.uniform(-2.0, 2.0);
        const Mat S = u * geos.g + v * (g0 * g0.transpose());
        const auto res = lemma1_decompose(S, geos, ys);
        CHECK(std::abs(res.u - u) <= 1e-10);
        CHECK(std::abs(res.v - v) <= 1e-10);
    }
    CHECK_THROWS_AS(lemma1_decompose(geo.g, geo, Vec::Zero(2)), DegenerateBasisError);
    Mat off(2, 2);
    off << 1.0, 0.0, 0.0, -3.0;  // not u g + v g0 g0 for y = e1
    CHECK_THROWS_AS(lemma1_decompose(off, geo, y), NotInSpanError);
}

TEST_CASE("lemma 2 decomposition") {
    const BaseModel eu = BaseModel::euclidean(3);
    const auto geo = eu.geometry_at(Vec::Zero(3));
    Vec y(3);
    y << 0.5, -0.2, 0.8;
    const Vec g0 = geo.g * y;
    const int n = 3;

    // alpha1 pattern alone
    {
        Ten4 T(n);
        for (int h = 0; h < n; ++h)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) T(h, a, b, c) = (h == a ? 1.0 : 0.0) * geo.g(b, c);
        const auto res = lemma2_decompose(T, geo, y);
        CHECK(res.alpha[0] == doctest::Approx(1.0).epsilon(1e-11));
        for (int p = 1; p < 10; ++p) CHECK(std::abs(res.alpha[p]) <= 1e-9);
        CHECK(res.residual <= 1e-9);
    }

    // roundtrip with random coefficients
    Rng rng(67);
    std::array<double, 10> want{};
    for (auto& w : want) w = rng.uniform(-1.5, 1.5);
    Ten4 T(n);
    for (int h = 0; h < n; ++h)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    const double dha = h == a ? 1.0 : 0.0;
                    const double dhb = h == b ? 1.0 : 0.0;
                    const double dhc = h == c ? 1.0 : 0.0;
                    T(h, a, b, c) = want[0] * dha * geo.g(b, c) + want[1] * dhb * geo.g(a, c) +
                                    want[2] * dhc * geo.g(a, b) + want[3] * dhc * g0(a) * g0(b) +
                                    want[4] * dhb * g0(a) * g0(c) + want[5] * dha * g0(b) * g0(c) +
                                    want[6] * geo.g(b, c) * g0(a) * y(h) +
                                    want[7] * geo.g(a, c) * g0(b) * y(h) +
                                    want[8] * geo.g(a, b) * g0(c) * y(h) +
                                    want[9] * g0(a) * g0(b) * g0(c) * y(h);
                }
    const auto res = lemma2_decompose(T, geo, y);
    for (int p = 0; p < 10; ++p) CHECK(std::abs(res.alpha[p] - want[p]) <= 1e-9);
    CHECK(res.residual <= 1e-9);

    // dimension and basis guards
    const BaseModel eu2 = BaseModel::euclidean(2);
    const auto geo2 = eu2.geometry_at(Vec::Zero(2));
    CHECK_THROWS_AS(lemma2_decompose(Ten4(2), geo2, Vec::Ones(2)), DimensionError);
    CHECK_THROWS_AS(lemma2_decompose(Ten4(3), geo, Vec::Zero(3)), DegenerateBasisError);
}

TEST_CASE("d1 != 0 on a flat base leaves a g_ij delta^h_k trace in YXXY") {
    const BaseModel eu = BaseModel::euclidean(3);
    LiftParams with_d1;
    with_d1.c1 = CoeffFn::constant(2.0);
    with_d1.c2 = CoeffFn::constant(2.0);
    with_d1.c3 = CoeffFn::constant(1.0);
    with_d1.d1 = CoeffFn::constant(1.0);
    LiftParams without_d1 = with_d1;
    without_d1.d1 = CoeffFn();

    Rng rng(71);
    for (int s = 0; s < 3; ++s) {
        Vec x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x(i) = rng.uniform(-1.0, 1.0);
            y(i) = rng.uniform(-1.0, 1.0);
        }
        y *= 0.1 / y.norm();  // small fiber norm: the proof's y -> 0 regime
        const TangentPoint pt{x, y};
        const auto geo = eu.geometry_at(x);
        // k = 0 comparison tensor vanishes, so the difference is the family itself
        {
            const CurvatureComponents K = curvature_components(with_d1, geo, pt);
            const auto res = lemma2_decompose(K.YXXY, geo, y);
            CHECK(std::abs(res.alpha[0]) > 1e-3);
            // the proof's coefficient c1 d1 / (2 (c1 c2 - c3^2)) = 1/3 at y -> 0
            CHECK(std::abs(res.alpha[0] + 1.0 / 3.0) <= 2e-2);
        }
        {
            const CurvatureComponents K = curvature_components(without_d1, geo, pt);
            const auto res = lemma2_decompose(K.YXXY, geo, y);
            CHECK(std::abs(res.alpha[0]) <= 1e-8);
        }
    }
}

TEST_CASE("flatness report") {
    SampleSpec spec;
    spec.points = 10;
    spec.planes = 60;
    // flat family on the flat base
    {
        const LiftParams params =
            theorem4_metric(CoeffFn::poly({1.0, 1.0}), CoeffFn::constant(0.5), 1.0);
        const auto rep = flatness_report(params, BaseModel::euclidean(2), spec);
        CHECK(rep.best_residual <= 1e-8);
        CHECK(rep.best_k == doctest::Approx(0.0));
        CHECK(rep.sectional_spread <= 1e-8);
    }
    // sasaki over the flat base
    {
        const auto rep = flatness_report(sasaki_lift(), BaseModel::euclidean(2), spec);
        CHECK(rep.sectional_spread <= 1e-10);
    }
    // sasaki over the unit sphere: visibly non-constant
    {
        SampleSpec spec200 = spec;
        spec200.planes = 200;
        const auto rep = flatness_report(sasaki_lift(), BaseModel::sphere(1.0), spec200);
        CHECK(rep.sectional_spread > 0.1);
        CHECK(rep.best_residual > 1e-2);
    }
}
