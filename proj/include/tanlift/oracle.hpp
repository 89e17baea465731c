#pragma once
#include "tanlift/base_geometry.hpp"
#include "tanlift/curvature.hpp"
#include "tanlift/lift.hpp"
#include "tanlift/types.hpp"

namespace tanlift {

// Independent verification route: the lifted metric in the induced
// coordinate frame (∂x_1..∂x_n, ∂y_1..∂y_n), its curvature by central
// finite differences, and the change of frame back to the adapted basis
// δ_i = ∂x_i - Γ^h_0i ∂y_h.

// Default finite-difference steps, scaled by max(1, |x|, |y|):
// inner Christoffel differencing and the outer pass of the curvature.
inline constexpr double kFdStepGamma = 1e-3;
inline constexpr double kFdStepOuterFactor = 3.1622776601683795;  // 10^0.5

Mat coordinate_metric(const LiftParams& params, const BaseModel& model, const TangentPoint& pt);

// Christoffels of the coordinate metric by central differences with the
// given step at the 2n-dimensional point (x,y); (A,B,C) = Γ^A_BC.
Ten3 fd_christoffel(const LiftParams& params, const BaseModel& model, const TangentPoint& pt,
                    double step);

// R^A_BCD = ∂_C Γ^A_DB - ∂_D Γ^A_CB + Γ^A_CE Γ^E_DB - Γ^A_DE Γ^E_CB with a
// second differencing pass of step_outer (defaults to 10^0.5 * step).
Ten4 fd_riemann(const LiftParams& params, const BaseModel& model, const TangentPoint& pt,
                double step, double step_outer = -1.0);

// Frame matrix F with E_a = F^B_a ∂_B (adapted frame in coordinate
// components) at the point.
Mat adapted_frame_matrix(const BaseGeometry& geom, const Vec& y);

// Pack the twelve families into the full (2n)^4 adapted-frame tensor
// R^a_bcd; the (δ,∂) argument pairs come from antisymmetry.
Ten4 adapted_full_curvature(const CurvatureComponents& K);

// Tensorially transform the coordinate-frame FD curvature to the adapted
// frame and return max |closed - transformed| / (1 + |transformed|) over
// the twelve family index ranges.
double compare_adapted(const CurvatureComponents& K, const Ten4& fd, const BaseGeometry& geom,
                       const TangentPoint& pt);

// Sectional curvature of an adapted-frame plane evaluated entirely on the
// FD route (used to cross-check sectional spreads).
double fd_sectional_curvature(const LiftParams& params, const BaseModel& model,
                              const TangentPoint& pt, const FrameVector& X, const FrameVector& Y,
                              double step, double step_outer = -1.0);

}  // namespace tanlift
