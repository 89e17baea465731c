#pragma once
#include <cstdint>
#include <random>
#include <utility>

#include "tanlift/base_geometry.hpp"
#include "tanlift/connection.hpp"
#include "tanlift/lift.hpp"

namespace tanlift {

// Sampling plan for verification runs. The t-range keeps fiber points away
// from the zero section, where several reference metrics degenerate.
struct SampleSpec {
    int points = 50;
    int planes = 200;
    std::uint64_t seed = 0;
    double t_min = 0.05;
    double t_max = 2.5;
    double box = 1.0;  // half-width of the coordinate sampling box
};

// mt19937_64 with an explicit 53-bit uniform mapping, so sequences are
// reproducible independent of the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

private:
    std::mt19937_64 eng_;
};

Vec sample_chart_point(const BaseModel& model, Rng& rng, double box);
Vec sample_fiber_point(const BaseGeometry& geom, Rng& rng, const SampleSpec& spec);
TangentPoint sample_tangent_point(const BaseModel& model, Rng& rng, const SampleSpec& spec);

// Two adapted-frame vectors spanning a non-degenerate 2-plane: components
// uniform in [-1,1]^2n, normalized, Gram determinant below 1e-4 rejected.
std::pair<FrameVector, FrameVector> sample_plane(const MetricBlocks& blocks, Rng& rng);

}  // namespace tanlift
