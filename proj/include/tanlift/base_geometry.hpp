#pragma once
#include <map>
#include <utility>
#include <vector>

#include "tanlift/types.hpp"

namespace tanlift {

// Multivariate polynomial in the chart coordinates, kept as a term list
// so partial derivatives of any order stay exact.
struct Monomial {
    double coeff = 0.0;
    std::vector<int> exps;  // one exponent per coordinate
};

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(int nvars, std::vector<Monomial> terms);
    static MultiPoly constant(int nvars, double a);
    int nvars() const { return nvars_; }
    double eval(const Vec& x) const;
    MultiPoly partial(int k) const;
    const std::vector<Monomial>& terms() const { return terms_; }

private:
    int nvars_ = 0;
    std::vector<Monomial> terms_;
};

// Everything the lifted-metric formulas consume from the base manifold
// at one point: metric, inverse, Christoffels, curvature and its
// covariant derivative.
struct BaseGeometry {
    int n = 0;
    Mat g;               // g_ij
    Mat g_inv;           // g^ij
    Ten3 gamma;          // gamma(h,i,j) = Γ^h_ij
    Ten4 riemann;        // riemann(h,k,i,j) = R^h_kij, antisymmetric in (i,j)
    Ten4 riemann_low;    // riemann_low(h,k,i,j) = g_ha R^a_kij
    Ten5 nabla_riemann;  // nabla_riemann(l,h,k,i,j) = ∇̇_l R^h_kij
};

class BaseModel {
public:
    enum class Kind { Euclidean, Sphere, CustomPolynomial };

    static BaseModel euclidean(int n);
    // 2-sphere of the given radius in the polar chart (theta, phi),
    // with a 0.1 rad guard band around the poles.
    static BaseModel sphere(double radius);
    // entries[(i,j)] = polynomial metric component g_ij with 0-based
    // indices; missing diagonal entries default to 1, off-diagonal to 0.
    static BaseModel custom_polynomial(int n, std::map<std::pair<int, int>, MultiPoly> entries);

    Kind kind() const { return kind_; }
    int dim() const { return n_; }
    double radius() const { return radius_; }

    bool in_chart(const Vec& x) const;
    void require_in_chart(const Vec& x) const;  // throws ChartDomainError

    // metric and its exact coordinate derivatives at x
    Mat metric_at(const Vec& x) const;
    Ten3 metric_d1_at(const Vec& x) const;  // (k,i,j) = ∂_k g_ij
    Ten4 metric_d2_at(const Vec& x) const;  // (k,l,i,j) = ∂_k ∂_l g_ij
    Ten5 metric_d3_at(const Vec& x) const;  // (k,l,m,i,j)

    BaseGeometry geometry_at(const Vec& x) const;

    static constexpr double kPoleGuard = 0.1;

private:
    BaseModel() = default;
    Kind kind_ = Kind::Euclidean;
    int n_ = 0;
    double radius_ = 1.0;
    std::vector<std::vector<MultiPoly>> entries_;  // symmetric n x n, custom model only
};

// Spec operation name.
BaseGeometry geometry_at(const BaseModel& model, const Vec& x);

}  // namespace tanlift
