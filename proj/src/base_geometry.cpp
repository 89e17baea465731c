#include "tanlift/base_geometry.hpp"

#include <cmath>
#include <cstdio>

#include "tanlift/errors.hpp"

namespace tanlift {

MultiPoly::MultiPoly(int nvars, std::vector<Monomial> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    for (auto& m : terms_)
        if (static_cast<int>(m.exps.size()) != nvars_)
            throw ConfigError("polynomial monomial exponent list has wrong length");
}

MultiPoly MultiPoly::constant(int nvars, double a) {
    if (a == 0.0) return MultiPoly(nvars, {});
    return MultiPoly(nvars, {Monomial{a, std::vector<int>(nvars, 0)}});
}

double MultiPoly::eval(const Vec& x) const {
    double acc = 0.0;
    for (const auto& m : terms_) {
        double term = m.coeff;
        for (int v = 0; v < nvars_; ++v)
            for (int e = 0; e < m.exps[v]; ++e) term *= x(v);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::partial(int k) const {
    std::vector<Monomial> out;
    for (const auto& m : terms_) {
        if (m.exps[k] == 0) continue;
        Monomial d = m;
        d.coeff = m.coeff * m.exps[k];
        d.exps[k] -= 1;
        out.push_back(std::move(d));
    }
    return MultiPoly(nvars_, std::move(out));
}

BaseModel BaseModel::euclidean(int n) {
    if (n < 1 || n > 4) throw ConfigError("euclidean model supports dim 1..4");
    BaseModel m;
    m.kind_ = Kind::Euclidean;
    m.n_ = n;
    return m;
}

BaseModel BaseModel::sphere(double radius) {
    if (radius <= 0.0) throw ConfigError("sphere radius must be positive");
    BaseModel m;
    m.kind_ = Kind::Sphere;
    m.n_ = 2;
    m.radius_ = radius;
    return m;
}

BaseModel BaseModel::custom_polynomial(int n, std::map<std::pair<int, int>, MultiPoly> entries) {
    if (n < 1 || n > 4) throw ConfigError("custom-polynomial model supports dim 1..4");
    BaseModel m;
    m.kind_ = Kind::CustomPolynomial;
    m.n_ = n;
    m.entries_.assign(n, std::vector<MultiPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.entries_[i][j] = MultiPoly::constant(n, i == j ? 1.0 : 0.0);
    for (auto& [ij, p] : entries) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ConfigError("custom-polynomial entry index out of range");
        if (p.nvars() != n) throw ConfigError("custom-polynomial entry has wrong variable count");
        m.entries_[i][j] = p;
        m.entries_[j][i] = p;
    }
    return m;
}

bool BaseModel::in_chart(const Vec& x) const {
    if (x.size() != n_) return false;
    if (kind_ == Kind::Sphere) {
        const double theta = x(0);
        return theta >= kPoleGuard && theta <= M_PI - kPoleGuard;
    }
    return true;
}

void BaseModel::require_in_chart(const Vec& x) const {
    if (in_chart(x)) return;
    char buf[160];
    if (x.size() != n_) {
        std::snprintf(buf, sizeof buf, "point has dimension %d, chart expects %d",
                      static_cast<int>(x.size()), n_);
    } else {
        std::snprintf(buf, sizeof buf,
                      "polar angle %.6g is inside the %.2g rad pole guard band", x(0), kPoleGuard);
    }
    throw ChartDomainError(buf);
}

Mat BaseModel::metric_at(const Vec& x) const {
    require_in_chart(x);
    Mat g = Mat::Identity(n_, n_);
    switch (kind_) {
        case Kind::Euclidean:
            break;
        case Kind::Sphere: {
            const double r2 = radius_ * radius_;
            const double s = std::sin(x(0));
            g(0, 0) = r2;
            g(1, 1) = r2 * s * s;
            break;
        }
        case Kind::CustomPolynomial:
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j) g(i, j) = entries_[i][j].eval(x);
            break;
    }
    return g;
}

Ten3 BaseModel::metric_d1_at(const Vec& x) const {
    Ten3 d(n_);
    switch (kind_) {
        case Kind::Euclidean:
            break;
        case Kind::Sphere:
            // only g_phiphi = r^2 sin^2(theta) varies
            d(0, 1, 1) = radius_ * radius_ * std::sin(2.0 * x(0));
            break;
        case Kind::CustomPolynomial:
            for (int k = 0; k < n_; ++k)
                for (int i = 0; i < n_; ++i)
                    for (int j = 0; j < n_; ++j) d(k, i, j) = entries_[i][j].partial(k).eval(x);
            break;
    }
    return d;
}

Ten4 BaseModel::metric_d2_at(const Vec& x) const {
    Ten4 d(n_);
    switch (kind_) {
        case Kind::Euclidean:
            break;
        case Kind::Sphere:
            d(0, 0, 1, 1) = 2.0 * radius_ * radius_ * std::cos(2.0 * x(0));
            break;
        case Kind::CustomPolynomial:
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l)
                    for (int i = 0; i < n_; ++i)
                        for (int j = 0; j < n_; ++j)
                            d(k, l, i, j) = entries_[i][j].partial(k).partial(l).eval(x);
            break;
    }
    return d;
}

Ten5 BaseModel::metric_d3_at(const Vec& x) const {
    Ten5 d(n_);
    switch (kind_) {
        case Kind::Euclidean:
            break;
        case Kind::Sphere:
            d(0, 0, 0, 1, 1) = -4.0 * radius_ * radius_ * std::sin(2.0 * x(0));
            break;
        case Kind::CustomPolynomial:
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l)
                    for (int m = 0; m < n_; ++m)
                        for (int i = 0; i < n_; ++i)
                            for (int j = 0; j < n_; ++j)
                                d(k, l, m, i, j) =
                                    entries_[i][j].partial(k).partial(l).partial(m).eval(x);
            break;
    }
    return d;
}

BaseGeometry BaseModel::geometry_at(const Vec& x) const {
    require_in_chart(x);
    const int n = n_;
    BaseGeometry geo;
    geo.n = n;
    geo.g = metric_at(x);

    Eigen::SelfAdjointEigenSolver<Mat> es(geo.g);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw DegenerateMetricError("base metric is not positive definite at the sampled point");
    geo.g_inv = geo.g.inverse();

    const Ten3 dg = metric_d1_at(x);
    const Ten4 ddg = metric_d2_at(x);

    // Γ^h_ij = 1/2 g^{hl} (∂_i g_lj + ∂_j g_li - ∂_l g_ij)
    geo.gamma = Ten3(n);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0.0;
                for (int l = 0; l < n; ++l)
                    acc += geo.g_inv(h, l) * (dg(i, l, j) + dg(j, l, i) - dg(l, i, j));
                geo.gamma(h, i, j) = 0.5 * acc;
            }

    // ∂_k g^{hl} = -g^{ha} (∂_k g_ab) g^{bl}
    Ten3 dginv(n);
    for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h)
            for (int l = 0; l < n; ++l) {
                double acc = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) acc += geo.g_inv(h, a) * dg(k, a, b) * geo.g_inv(b, l);
                dginv(k, h, l) = -acc;
            }

    // ∂_k Γ^h_ij
    Ten4 dgamma(n);
    for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (int l = 0; l < n; ++l) {
                        const double a_l = dg(i, l, j) + dg(j, l, i) - dg(l, i, j);
                        const double da_l = ddg(k, i, l, j) + ddg(k, j, l, i) - ddg(k, l, i, j);
                        acc += dginv(k, h, l) * a_l + geo.g_inv(h, l) * da_l;
                    }
                    dgamma(k, h, i, j) = 0.5 * acc;
                }

    // R^h_kij = ∂_i Γ^h_jk - ∂_j Γ^h_ik + Γ^h_ia Γ^a_jk - Γ^h_ja Γ^a_ik
    geo.riemann = Ten4(n);
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = dgamma(i, h, j, k) - dgamma(j, h, i, k);
                    for (int a = 0; a < n; ++a)
                        acc += geo.gamma(h, i, a) * geo.gamma(a, j, k) -
                               geo.gamma(h, j, a) * geo.gamma(a, i, k);
                    geo.riemann(h, k, i, j) = acc;
                }

    geo.riemann_low = Ten4(n);
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double acc = 0.0;
                    for (int a = 0; a < n; ++a) acc += geo.g(h, a) * geo.riemann(a, k, i, j);
                    geo.riemann_low(h, k, i, j) = acc;
                }

    // ∇̇R: identically zero for the flat and the constant-curvature model;
    // assembled from exact third derivatives for polynomial metrics.
    geo.nabla_riemann = Ten5(n);
    if (kind_ == Kind::CustomPolynomial) {
        const Ten5 dddg = metric_d3_at(x);

        // ∂_l ∂_k g^{hm}
        Ten4 ddginv(n);
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k)
                for (int h = 0; h < n; ++h)
                    for (int m = 0; m < n; ++m) {
                        double acc = 0.0;
                        for (int a = 0; a < n; ++a)
                            for (int b = 0; b < n; ++b)
                                acc += dginv(l, h, a) * dg(k, a, b) * geo.g_inv(b, m) +
                                       geo.g_inv(h, a) * ddg(l, k, a, b) * geo.g_inv(b, m) +
                                       geo.g_inv(h, a) * dg(k, a, b) * dginv(l, b, m);
                        ddginv(l, k, h, m) = -acc;
                    }

        // ∂_l ∂_k Γ^h_ij
        Ten5 ddgamma(n);
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k)
                for (int h = 0; h < n; ++h)
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            double acc = 0.0;
                            for (int m = 0; m < n; ++m) {
                                const double a_m = dg(i, m, j) + dg(j, m, i) - dg(m, i, j);
                                const double dk_a = ddg(k, i, m, j) + ddg(k, j, m, i) - ddg(k, m, i, j);
                                const double dl_a = ddg(l, i, m, j) + ddg(l, j, m, i) - ddg(l, m, i, j);
                                const double dlk_a = dddg(l, k, i, m, j) + dddg(l, k, j, m, i) -
                                                     dddg(l, k, m, i, j);
                                acc += ddginv(l, k, h, m) * a_m + dginv(k, h, m) * dl_a +
                                       dginv(l, h, m) * dk_a + geo.g_inv(h, m) * dlk_a;
                            }
                            ddgamma(l, k, h, i, j) = 0.5 * acc;
                        }

        // ∂_l R^h_kij, then the covariant correction terms
        for (int l = 0; l < n; ++l)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k)
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) {
                            double acc = ddgamma(l, i, h, j, k) - ddgamma(l, j, h, i, k);
                            for (int a = 0; a < n; ++a)
                                acc += dgamma(l, h, i, a) * geo.gamma(a, j, k) +
                                       geo.gamma(h, i, a) * dgamma(l, a, j, k) -
                                       dgamma(l, h, j, a) * geo.gamma(a, i, k) -
                                       geo.gamma(h, j, a) * dgamma(l, a, i, k);
                            for (int a = 0; a < n; ++a)
                                acc += geo.gamma(h, l, a) * geo.riemann(a, k, i, j) -
                                       geo.gamma(a, l, k) * geo.riemann(h, a, i, j) -
                                       geo.gamma(a, l, i) * geo.riemann(h, k, a, j) -
                                       geo.gamma(a, l, j) * geo.riemann(h, k, i, a);
                            geo.nabla_riemann(l, h, k, i, j) = acc;
                        }
    }

    return geo;
}

BaseGeometry geometry_at(const BaseModel& model, const Vec& x) { return model.geometry_at(x); }

}  // namespace tanlift
