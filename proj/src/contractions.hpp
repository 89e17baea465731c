#pragma once
#include "tanlift/base_geometry.hpp"
#include "tanlift/types.hpp"

namespace tanlift::detail {

// y-contractions of the base curvature appearing in the connection and
// curvature tables; the index 0 stands for contraction with y.
struct RiemannContractions {
    Ten3 r0;      // r0(a,i,j)     = R^a_0ij  = y^m R^a_mij
    Ten3 r0_low;  // r0_low(a,i,j) = R_a0ij   = y^m g_ab R^b_mij
};

RiemannContractions contract_riemann(const BaseGeometry& geom, const Vec& y);

struct NablaRiemannContractions {
    Ten4 nr0;      // nr0(i,a,k,l)     = ∇̇_i R^a_0kl
    Ten4 nr0_low;  // nr0_low(i,a,k,l) = ∇̇_i R_a0kl
};

NablaRiemannContractions contract_nabla_riemann(const BaseGeometry& geom, const Vec& y);

}  // namespace tanlift::detail
