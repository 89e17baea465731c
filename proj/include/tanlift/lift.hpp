#pragma once
#include <optional>
#include <utility>

#include "tanlift/base_geometry.hpp"
#include "tanlift/coeff_fn.hpp"
#include "tanlift/jet.hpp"
#include "tanlift/types.hpp"

namespace tanlift {

// The six coefficient functions of the lifted metric:
//   G(1)_ij = c1 g_ij + d1 g0_i g0_j   (horizontal-horizontal)
//   G(2)_ij = c2 g_ij + d2 g0_i g0_j   (vertical-vertical)
//   G(3)_ij = c3 g_ij + d3 g0_i g0_j   (mixed)
struct LiftParams {
    CoeffFn c1, c2, c3, d1, d2, d3;
};

LiftParams sasaki_lift();
LiftParams cheeger_gromoll_lift();

// Flat-family generator: c1 = c (constant), d1 = 0, c3 = beta, d3 = beta',
// c2 = alpha, d2 = (alpha' beta^2 + 2 alpha' beta beta' t - 2 alpha beta'^2 t)/beta^2.
// When validate_t_range is given, positivity is sampled over it and a
// DegenerateMetricError is raised on violation; otherwise positivity is
// enforced lazily at evaluation time like for any other LiftParams.
LiftParams theorem4_metric(const CoeffFn& alpha, const CoeffFn& beta, double c,
                           std::optional<std::pair<double, double>> validate_t_range = {});

struct TangentPoint {
    Vec x;
    Vec y;
};

struct MetricBlocks {
    int n = 0;
    double t = 0.0;  // energy density at the point
    Vec g0;          // g0_i = y^k g_ki
    Mat G1, G2, G3;
    Mat full() const;  // 2n x 2n adapted-frame matrix [[G1,G3],[G3,G2]]
};

struct PqScalars {
    double p1, p2, p3, q1, q2, q3;
};

struct InverseBlocks {
    int n = 0;
    Mat H1, H2, H3;  // H_(a) = p_a g^{-1} + q_a y y^T
    std::optional<PqScalars> pq;
};

// Fiber derivatives of the blocks; first indices are the ∂/∂y directions.
struct BlockDerivs {
    Ten3 dG1, dG2, dG3;     // (i,j,k) = ∂_i G^(a)_jk
    Ten4 ddG1, ddG2, ddG3;  // (i,j,k,l) = ∂_i ∂_j G^(a)_kl
    Ten3 dH1, dH2, dH3;     // (i,j,k) = ∂_i H_(a)^jk
};

// Coefficient functions and inverse-block scalars with their exact
// t-derivatives at one energy density value.
struct LiftScalars {
    Jet3 c1, c2, c3, d1, d2, d3;
    Jet3 p1, p2, p3, q1, q2, q3;
};

double energy_density(const BaseGeometry& geom, const Vec& y);

// Throws DegenerateMetricError naming the violated inequality.
void check_positivity(const LiftParams& params, double t);

LiftScalars lift_scalars(const LiftParams& params, double t);

MetricBlocks metric_blocks(const LiftParams& params, const BaseGeometry& geom,
                           const TangentPoint& pt);

InverseBlocks inverse_blocks_closed_form(const LiftParams& params, const BaseGeometry& geom,
                                         const TangentPoint& pt, const MetricBlocks& blocks);

// Independent route: invert the full 2n x 2n matrix and read the blocks;
// p,q are recovered by least squares against {g^{-1}, y y^T} when y != 0.
InverseBlocks inverse_blocks_numeric(const BaseGeometry& geom, const MetricBlocks& blocks);

BlockDerivs metric_block_derivatives(const LiftParams& params, const BaseGeometry& geom,
                                     const TangentPoint& pt);

}  // namespace tanlift
