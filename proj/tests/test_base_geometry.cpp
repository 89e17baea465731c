#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fd_utils.hpp"
#include "tanlift/base_geometry.hpp"
#include "tanlift/errors.hpp"

using namespace tanlift;

namespace {

Vec vec2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("euclidean model is exactly flat") {
    const BaseModel model = BaseModel::euclidean(3);
    Vec x(3);
    x << 0.3, -1.2, 5.0;
    const BaseGeometry geo = model.geometry_at(x);
    CHECK(geo.g.isIdentity(0.0));
    CHECK(geo.g_inv.isIdentity(0.0));
    CHECK(geo.gamma.max_abs() == 0.0);
    CHECK(geo.riemann.max_abs() == 0.0);
    CHECK(geo.nabla_riemann.max_abs() == 0.0);
}

TEST_CASE("sphere christoffels match the analytic polar-chart values") {
    const BaseModel model = BaseModel::sphere(1.0);
    const double theta = 1.0;
    const BaseGeometry geo = model.geometry_at(vec2(theta, 0.7));
    // Γ^θ_φφ = -sinθ cosθ, Γ^φ_θφ = cotθ
    CHECK(geo.gamma(0, 1, 1) == doctest::Approx(-std::sin(theta) * std::cos(theta)).epsilon(1e-12));
    CHECK(geo.gamma(1, 0, 1) == doctest::Approx(std::cos(theta) / std::sin(theta)).epsilon(1e-12));
    CHECK(geo.gamma(1, 1, 0) == doctest::Approx(std::cos(theta) / std::sin(theta)).epsilon(1e-12));
    CHECK(geo.gamma(0, 0, 0) == doctest::Approx(0.0));
}

TEST_CASE("exact christoffels match finite differences of the metric") {
    const BaseModel sphere = BaseModel::sphere(1.7);
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(1, 1),
                    MultiPoly(2, {{1.0, {0, 0}}, {1.0, {2, 0}}}));  // g_22 = 1 + (x1)^2
    const BaseModel poly = BaseModel::custom_polynomial(2, std::move(entries));

    struct Case {
        const BaseModel* model;
        Vec x;
    };
    const Case cases[] = {{&sphere, vec2(0.9, 1.3)},
                          {&sphere, vec2(2.0, 4.5)},
                          {&poly, vec2(1.0, 0.0)},
                          {&poly, vec2(-0.4, 2.0)}};
    for (const auto& c : cases) {
        const Ten3 exact = c.model->geometry_at(c.x).gamma;
        const Ten3 fd = testing::fd_christoffel_base(*c.model, c.x);
        const double scale = std::max(1.0, exact.max_abs());
        CHECK(testing::max_abs_diff(exact, fd) <= 1e-6 * scale);
    }
}

TEST_CASE("custom polynomial metric reproduces the hand-computed christoffel") {
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(1, 1), MultiPoly(2, {{1.0, {0, 0}}, {1.0, {2, 0}}}));
    const BaseModel model = BaseModel::custom_polynomial(2, std::move(entries));
    // g = diag(1, 1+(x1)^2): Γ^2_12 = x1/(1+(x1)^2) = 0.5 at x=(1,0)
    const BaseGeometry geo = model.geometry_at(vec2(1.0, 0.0));
    CHECK(geo.gamma(1, 0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(geo.gamma(1, 1, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(geo.gamma(0, 0, 0) == doctest::Approx(0.0));
}

TEST_CASE("sphere curvature equals the constant-curvature pattern") {
    for (double r : {1.0, 2.0}) {
        const BaseModel model = BaseModel::sphere(r);
        const double kconst = 1.0 / (r * r);
        for (const Vec& x : {vec2(0.8, 0.1), vec2(1.9, 3.0)}) {
            const BaseGeometry geo = model.geometry_at(x);
            // R_kmij = K (g_ki g_mj - g_kj g_mi)
            for (int k = 0; k < 2; ++k)
                for (int m = 0; m < 2; ++m)
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) {
                            const double want =
                                kconst * (geo.g(k, i) * geo.g(m, j) - geo.g(k, j) * geo.g(m, i));
                            CHECK(std::abs(geo.riemann_low(k, m, i, j) - want) <= 1e-10);
                        }
        }
    }
}

TEST_CASE("riemann tensor agrees with the finite-difference route") {
    const BaseModel sphere = BaseModel::sphere(1.0);
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(1, 1), MultiPoly(2, {{1.0, {0, 0}}, {1.0, {2, 0}}}));
    const BaseModel poly = BaseModel::custom_polynomial(2, std::move(entries));
    for (const auto& [model, x] : {std::make_pair(&sphere, vec2(1.1, 0.4)),
                                   std::make_pair(&poly, vec2(0.7, -0.2))}) {
        const Ten4 exact = model->geometry_at(x).riemann;
        const Ten4 fd = testing::fd_riemann_base(*model, x);
        CHECK(testing::max_abs_diff(exact, fd) <= 1e-6 * std::max(1.0, exact.max_abs()));
    }
}

TEST_CASE("first bianchi identity holds") {
    const BaseModel sphere = BaseModel::sphere(1.3);
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(1, 1), MultiPoly(2, {{1.0, {0, 0}}, {1.0, {2, 0}}}));
    const BaseModel poly = BaseModel::custom_polynomial(2, std::move(entries));
    for (const auto& [model, x] : {std::make_pair(&sphere, vec2(0.6, 2.2)),
                                   std::make_pair(&poly, vec2(1.4, 0.3))}) {
        const BaseGeometry geo = model->geometry_at(x);
        for (int h = 0; h < 2; ++h)
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        const double cyc = geo.riemann(h, k, i, j) + geo.riemann(h, i, j, k) +
                                           geo.riemann(h, j, k, i);
                        CHECK(std::abs(cyc) <= 1e-10);
                    }
    }
}

TEST_CASE("riemann is antisymmetric in its last index pair") {
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(2, 2),
                    MultiPoly(3, {{1.0, {0, 0, 0}}, {0.5, {1, 1, 0}}, {0.3, {0, 0, 2}}}));
    const BaseModel model = BaseModel::custom_polynomial(3, std::move(entries));
    Vec x(3);
    x << 0.4, 0.2, -0.3;
    const BaseGeometry geo = model.geometry_at(x);
    for (int h = 0; h < 3; ++h)
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    CHECK(std::abs(geo.riemann(h, k, i, j) + geo.riemann(h, k, j, i)) <= 1e-12);
}

TEST_CASE("sphere is locally symmetric: FD covariant derivative of R vanishes") {
    const BaseModel model = BaseModel::sphere(1.0);
    for (const Vec& x : {vec2(0.9, 0.2), vec2(2.1, 5.1)}) {
        const Ten5 nr = testing::fd_nabla_riemann_base(model, x);
        CHECK(nr.max_abs() <= 1e-8);
        CHECK(model.geometry_at(x).nabla_riemann.max_abs() == 0.0);
    }
}

TEST_CASE("polynomial nabla R matches the finite-difference oracle") {
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(1, 1), MultiPoly(2, {{1.0, {0, 0}}, {1.0, {2, 0}}}));
    const BaseModel model = BaseModel::custom_polynomial(2, std::move(entries));
    for (const Vec& x : {vec2(0.8, 0.0), vec2(-0.5, 1.0)}) {
        const Ten5 exact = model.geometry_at(x).nabla_riemann;
        const Ten5 fd = testing::fd_nabla_riemann_base(model, x);
        CHECK(exact.max_abs() > 1e-3);  // this geometry genuinely has ∇R != 0
        double diff = 0.0;
        for (int l = 0; l < 2; ++l)
            for (int h = 0; h < 2; ++h)
                for (int k = 0; k < 2; ++k)
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            diff = std::max(diff,
                                            std::abs(exact(l, h, k, i, j) - fd(l, h, k, i, j)));
        CHECK(diff <= 1e-6 * std::max(1.0, exact.max_abs()));
    }
}

TEST_CASE("chart domain errors") {
    const BaseModel model = BaseModel::sphere(1.0);
    CHECK_THROWS_AS(model.geometry_at(vec2(0.05, 0.0)), ChartDomainError);
    CHECK_THROWS_AS(model.geometry_at(vec2(M_PI - 0.01, 0.0)), ChartDomainError);
    CHECK_NOTHROW(model.geometry_at(vec2(M_PI / 2, 0.0)));
    Vec bad(3);
    bad << 1.0, 1.0, 1.0;
    CHECK_THROWS_AS(model.geometry_at(bad), ChartDomainError);
}

TEST_CASE("non positive definite polynomial metric is rejected") {
    std::map<std::pair<int, int>, MultiPoly> entries;
    entries.emplace(std::make_pair(1, 1), MultiPoly(2, {{1.0, {1, 0}}}));  // g_22 = x1
    const BaseModel model = BaseModel::custom_polynomial(2, std::move(entries));
    CHECK_THROWS_AS(model.geometry_at(vec2(-1.0, 0.0)), DegenerateMetricError);
    CHECK_NOTHROW(model.geometry_at(vec2(2.0, 0.0)));
}
