#pragma once
#include "tanlift/base_geometry.hpp"
#include "tanlift/lift.hpp"
#include "tanlift/types.hpp"

namespace tanlift {

// Levi-Civita connection of the lifted metric in the adapted frame
// (delta/dx^i horizontal, d/dy^i vertical):
//   ∇_{∂_i} ∂_j = Q^h_ij ∂_h + Qt^h_ij δ_h
//   ∇_{∂_i} δ_j = P^h_ij δ_h + Pt^h_ij ∂_h
//   ∇_{δ_i} ∂_j = P^h_ji δ_h + (Γ^h_ij + Pt^h_ji) ∂_h
//   ∇_{δ_i} δ_j = (Γ^h_ij + St^h_ij) δ_h + S^h_ij ∂_h
struct ConnectionCoeffs {
    int n = 0;
    Ten3 Q, Qt, P, Pt, S, St;  // (h,i,j) = F^h_ij
    Ten3 gamma;                // base Christoffels carried alongside
};

struct ConnectionDerivs {
    int n = 0;
    Ten4 dQ, dQt, dP, dPt, dS, dSt;  // (i,h,j,k) = ∂_i F^h_jk
};

ConnectionCoeffs connection_coeffs(const LiftParams& params, const BaseGeometry& geom,
                                   const TangentPoint& pt);

ConnectionDerivs connection_coeff_derivatives(const LiftParams& params, const BaseGeometry& geom,
                                              const TangentPoint& pt);

struct FrameIndex {
    bool vertical = false;
    int i = 0;
    static FrameIndex horizontal(int i) { return {false, i}; }
    static FrameIndex vert(int i) { return {true, i}; }
};

// Components of a tangent vector of TM in the adapted frame.
struct FrameVector {
    Vec horizontal;
    Vec vertical;
    static FrameVector zero(int n) {
        return {Vec::Zero(n), Vec::Zero(n)};
    }
};

// Components of ∇_dir arg per the table above.
FrameVector nabla_frame(const ConnectionCoeffs& coeffs, FrameIndex dir, FrameIndex arg);

// Lifted inner product of two adapted-frame vectors.
double lifted_inner(const MetricBlocks& blocks, const FrameVector& a, const FrameVector& b);

}  // namespace tanlift
