#include "tanlift/sampling.hpp"

#include <cmath>

#include "tanlift/errors.hpp"

namespace tanlift {

Vec sample_chart_point(const BaseModel& model, Rng& rng, double box) {
    const int n = model.dim();
    Vec x(n);
    if (model.kind() == BaseModel::Kind::Sphere) {
        // keep an extra margin inside the pole guard so FD stencils stay in-chart
        const double margin = BaseModel::kPoleGuard + 0.15;
        x(0) = rng.uniform(margin, M_PI - margin);
        x(1) = rng.uniform(0.0, 2.0 * M_PI);
        return x;
    }
    for (int i = 0; i < n; ++i) x(i) = rng.uniform(-box, box);
    return x;
}

Vec sample_fiber_point(const BaseGeometry& geom, Rng& rng, const SampleSpec& spec) {
    const int n = geom.n;
    Vec y(n);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (int i = 0; i < n; ++i) y(i) = rng.uniform(-spec.box, spec.box);
        const double t = energy_density(geom, y);
        if (t >= spec.t_min && t <= spec.t_max) return y;
    }
    throw ConfigError("fiber sampling failed: t-range incompatible with the coordinate box");
}

TangentPoint sample_tangent_point(const BaseModel& model, Rng& rng, const SampleSpec& spec) {
    TangentPoint pt;
    pt.x = sample_chart_point(model, rng, spec.box);
    const BaseGeometry geom = model.geometry_at(pt.x);
    pt.y = sample_fiber_point(geom, rng, spec);
    return pt;
}

std::pair<FrameVector, FrameVector> sample_plane(const MetricBlocks& blocks, Rng& rng) {
    const int n = blocks.n;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FrameVector X{Vec(n), Vec(n)}, Y{Vec(n), Vec(n)};
        for (int i = 0; i < n; ++i) {
            X.horizontal(i) = rng.uniform(-1.0, 1.0);
            X.vertical(i) = rng.uniform(-1.0, 1.0);
            Y.horizontal(i) = rng.uniform(-1.0, 1.0);
            Y.vertical(i) = rng.uniform(-1.0, 1.0);
        }
        const double gxx = lifted_inner(blocks, X, X);
        const double gyy = lifted_inner(blocks, Y, Y);
        if (gxx <= 0.0 || gyy <= 0.0) continue;
        const double sx = 1.0 / std::sqrt(gxx);
        const double sy = 1.0 / std::sqrt(gyy);
        X.horizontal *= sx;
        X.vertical *= sx;
        Y.horizontal *= sy;
        Y.vertical *= sy;
        const double gxy = lifted_inner(blocks, X, Y);
        if (1.0 - gxy * gxy < 1e-4) continue;
        return {X, Y};
    }
    throw PlaneError("plane sampling failed: could not find a non-degenerate 2-plane");
}

}  // namespace tanlift
