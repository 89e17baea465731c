#pragma once
#include <array>
#include <string>
#include <vector>

#include "tanlift/connection.hpp"
#include "tanlift/lift.hpp"
#include "tanlift/sampling.hpp"
#include "tanlift/types.hpp"

namespace tanlift {

// The twelve curvature component families in the adapted frame. The letter
// pattern encodes the argument kinds: K(A_i, B_j) C_k = ABCX^h_kij δ_h +
// ABCY^h_kij ∂_h with X standing for horizontal and Y for vertical slots.
// Arrays are indexed (h,k,i,j).
struct CurvatureComponents {
    int n = 0;
    Ten4 XXXX, XXXY, XXYX, XXYY;
    Ten4 YYXX, YYXY, YYYX, YYYY;
    Ten4 YXXX, YXXY, YXYX, YXYY;

    static constexpr int kFamilyCount = 12;
    static const std::array<const char*, kFamilyCount>& family_names();
    const Ten4& family(int idx) const;
    Ten4& family(int idx);
};

CurvatureComponents curvature_components(const LiftParams& params, const BaseGeometry& geom,
                                         const TangentPoint& pt);

// Comparison tensor of constant sectional curvature k:
// K0(X,Y)Z = k [G(Y,Z) X - G(X,Z) Y].
CurvatureComponents k0_components(double k, const MetricBlocks& blocks);

struct ResidualReport {
    double max_abs = 0.0;
    std::array<double, CurvatureComponents::kFamilyCount> per_family{};
};

ResidualReport constant_curvature_residual(const CurvatureComponents& K, double k,
                                           const MetricBlocks& blocks);

// Curvature operator applied to adapted-frame vectors, assembled from the
// twelve families by bilinearity.
FrameVector curvature_apply(const CurvatureComponents& K, const FrameVector& X,
                            const FrameVector& Y, const FrameVector& Z);

// G(K(X,Y)Y, X) / (G(X,X) G(Y,Y) - G(X,Y)^2); throws PlaneError when the
// Gram determinant is below 1e-8.
double sectional_curvature(const CurvatureComponents& K, const MetricBlocks& blocks,
                           const FrameVector& X, const FrameVector& Y);

struct Lemma1Result {
    double u = 0.0;
    double v = 0.0;
    double residual = 0.0;
};

// Least-squares split S = u g + v g0 g0^T; unique for y != 0, n > 1.
// Throws DegenerateBasisError at y = 0 and NotInSpanError when the
// residual exceeds 1e-8 * |S|.
Lemma1Result lemma1_decompose(const Mat& S, const BaseGeometry& geom, const Vec& y);

struct Lemma2Result {
    std::array<double, 10> alpha{};
    double residual = 0.0;
};

// Least-squares projection of T^h_{abc} onto the ten-pattern basis
//   a1 δ^h_a g_bc + a2 δ^h_b g_ac + a3 δ^h_c g_ab
// + a4 δ^h_c g0_a g0_b + a5 δ^h_b g0_a g0_c + a6 δ^h_a g0_b g0_c
// + a7 g_bc g0_a y^h + a8 g_ac g0_b y^h + a9 g_ab g0_c y^h
// + a10 g0_a g0_b g0_c y^h.
// Requires n >= 3 (the patterns are dependent for n = 2) and y != 0.
Lemma2Result lemma2_decompose(const Ten4& T, const BaseGeometry& geom, const Vec& y);

struct FlatnessReport {
    double best_k = 0.0;
    double best_residual = 0.0;           // min over candidate k of max |K - K0|
    double sectional_min = 0.0;
    double sectional_max = 0.0;
    double sectional_spread = 0.0;
    std::vector<double> sectional_samples;
};

// Samples points and planes (seeded), then scans candidate constant
// curvature values {0} union {sampled sectional values} for the best
// K = K0 fit.
FlatnessReport flatness_report(const LiftParams& params, const BaseModel& model,
                               const SampleSpec& spec);

}  // namespace tanlift
