#include "tanlift/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tanlift/connection.hpp"
#include "tanlift/curvature.hpp"
#include "tanlift/errors.hpp"
#include "tanlift/oracle.hpp"

namespace tanlift {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json point_json(const TangentPoint& pt) {
    ordered_json j;
    j["x"] = std::vector<double>(pt.x.data(), pt.x.data() + pt.x.size());
    j["y"] = std::vector<double>(pt.y.data(), pt.y.data() + pt.y.size());
    return j;
}

struct CheckAccumulator {
    CheckAccumulator(std::string check_name, double tol)
        : name(std::move(check_name)), tolerance(tol) {}

    std::string name;
    double tolerance = 0.0;
    double measured = 0.0;
    ordered_json worst;

    void update(double value, const TangentPoint& pt, std::initializer_list<int> indices) {
        if (value > measured) {
            measured = value;
            worst = point_json(pt);
            worst["indices"] = std::vector<int>(indices);
        }
    }
    ordered_json to_json() const {
        ordered_json j;
        j["name"] = name;
        j["status"] = measured <= tolerance ? "pass" : "fail";
        j["measured"] = measured;
        j["tolerance"] = tolerance;
        if (!worst.is_null()) j["worst"] = worst;
        return j;
    }
    bool passed() const { return measured <= tolerance; }
};

FrameVector frame_basis(int n, int a) {
    FrameVector v = FrameVector::zero(n);
    if (a < n)
        v.horizontal(a) = 1.0;
    else
        v.vertical(a - n) = 1.0;
    return v;
}

// Directional derivative of G(E_A, E_B) along the frame direction E_C,
// realized by a straight coordinate line tangent to E_C: vertical flows
// move y, horizontal flows move x with the y-correction -Γ^h_0i dx.
double frame_metric_fd(const LiftParams& params, const BaseModel& model, const TangentPoint& pt,
                       const BaseGeometry& geom, int c, int a, int b, double h) {
    const int n = geom.n;
    TangentPoint plus = pt, minus = pt;
    if (c >= n) {
        plus.y(c - n) += h;
        minus.y(c - n) -= h;
    } else {
        Vec dy = Vec::Zero(n);
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) dy(k) += pt.y(m) * geom.gamma(k, m, c);
        plus.x(c) += h;
        plus.y -= h * dy;
        minus.x(c) -= h;
        minus.y += h * dy;
    }
    auto entry = [&](const TangentPoint& q) {
        const BaseGeometry gq = model.geometry_at(q.x);
        const MetricBlocks bl = metric_blocks(params, gq, q);
        return bl.full()(a, b);
    };
    return (entry(plus) - entry(minus)) / (2.0 * h);
}

}  // namespace

CmdResult cmd_verify(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    ordered_json report;
    report["config"] = {{"base", cfg.base_spec},
                        {"lift", cfg.lift_spec},
                        {"samples",
                         {{"points", cfg.samples.points},
                          {"planes", cfg.samples.planes},
                          {"seed", cfg.samples.seed},
                          {"t_range", {cfg.samples.t_min, cfg.samples.t_max}},
                          {"box", cfg.samples.box}}},
                        {"expect_constant_curvature", cfg.expect_constant_curvature}};
    ordered_json timings;

    Rng rng(cfg.samples.seed);
    std::vector<TangentPoint> pts;
    pts.reserve(cfg.samples.points);
    for (int s = 0; s < cfg.samples.points; ++s)
        pts.push_back(sample_tangent_point(cfg.base, rng, cfg.samples));

    CheckAccumulator inv_check("inverse-identity", cfg.tol.closed_form);
    CheckAccumulator compat_check("metric-compatibility", cfg.tol.compat);
    CheckAccumulator torsion_check("torsion", cfg.tol.closed_form);
    CheckAccumulator antisym_check("curvature-antisymmetry", cfg.tol.antisymmetry);
    CheckAccumulator oracle_check("oracle-equivalence", cfg.tol.fd);

    // inverse-block identities and closed-form vs numeric inversion
    auto phase = Clock::now();
    for (const auto& pt : pts) {
        const BaseGeometry geom = cfg.base.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(cfg.lift, geom, pt);
        const InverseBlocks closed = inverse_blocks_closed_form(cfg.lift, geom, pt, blocks);
        const InverseBlocks numeric = inverse_blocks_numeric(geom, blocks);
        const int n = geom.n;
        const Mat id = Mat::Identity(n, n);
        const Mat r1 = blocks.G1 * closed.H1 + blocks.G3 * closed.H3 - id;
        const Mat r2 = blocks.G1 * closed.H3 + blocks.G3 * closed.H2;
        const Mat r3 = blocks.G3 * closed.H1 + blocks.G2 * closed.H3;
        const Mat r4 = blocks.G3 * closed.H3 + blocks.G2 * closed.H2 - id;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                inv_check.update(std::abs(r1(i, k)), pt, {1, i, k});
                inv_check.update(std::abs(r2(i, k)), pt, {2, i, k});
                inv_check.update(std::abs(r3(i, k)), pt, {3, i, k});
                inv_check.update(std::abs(r4(i, k)), pt, {4, i, k});
                inv_check.update(std::abs(closed.H1(i, k) - numeric.H1(i, k)), pt, {5, i, k});
                inv_check.update(std::abs(closed.H2(i, k) - numeric.H2(i, k)), pt, {6, i, k});
                inv_check.update(std::abs(closed.H3(i, k) - numeric.H3(i, k)), pt, {7, i, k});
            }
    }
    timings["inverse_identity_ms"] = ms_since(phase);

    // metric compatibility and torsion
    phase = Clock::now();
    const int compat_pts = std::min<int>(pts.size(), 20);
    for (int s = 0; s < compat_pts; ++s) {
        const TangentPoint& pt = pts[s];
        const BaseGeometry geom = cfg.base.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(cfg.lift, geom, pt);
        const ConnectionCoeffs cc = connection_coeffs(cfg.lift, geom, pt);
        const int n = geom.n;
        const double h = 1e-4 * std::max({1.0, pt.x.cwiseAbs().maxCoeff(), pt.y.cwiseAbs().maxCoeff()});
        for (int c = 0; c < 2 * n; ++c) {
            const FrameIndex dir{c >= n, c >= n ? c - n : c};
            for (int a = 0; a < 2 * n; ++a) {
                const FrameIndex ai{a >= n, a >= n ? a - n : a};
                const FrameVector na = nabla_frame(cc, dir, ai);
                for (int b = a; b < 2 * n; ++b) {
                    const FrameIndex bi{b >= n, b >= n ? b - n : b};
                    const FrameVector nb = nabla_frame(cc, dir, bi);
                    const double lhs = frame_metric_fd(cfg.lift, cfg.base, pt, geom, c, a, b, h);
                    const double rhs = lifted_inner(blocks, na, frame_basis(n, b)) +
                                       lifted_inner(blocks, frame_basis(n, a), nb);
                    const double err = std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
                    compat_check.update(err, pt, {c, a, b});
                }
            }
        }
        // ∇_{δ_i}∂_j - ∇_{∂_j}δ_i must equal the bracket [δ_i,∂_j] = Γ^h_ij ∂_h
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const FrameVector lhs = nabla_frame(cc, FrameIndex::horizontal(i), FrameIndex::vert(j));
                const FrameVector rhs = nabla_frame(cc, FrameIndex::vert(j), FrameIndex::horizontal(i));
                for (int h2 = 0; h2 < n; ++h2) {
                    torsion_check.update(std::abs(lhs.horizontal(h2) - rhs.horizontal(h2)), pt,
                                         {i, j, h2});
                    torsion_check.update(
                        std::abs(lhs.vertical(h2) - rhs.vertical(h2) - cc.gamma(h2, i, j)), pt,
                        {i, j, h2});
                }
            }
    }
    timings["connection_ms"] = ms_since(phase);

    // curvature antisymmetry in the argument pair for same-kind families
    phase = Clock::now();
    const int curv_pts = std::min<int>(pts.size(), 10);
    for (int s = 0; s < curv_pts; ++s) {
        const TangentPoint& pt = pts[s];
        const BaseGeometry geom = cfg.base.geometry_at(pt.x);
        const CurvatureComponents K = curvature_components(cfg.lift, geom, pt);
        const int n = geom.n;
        for (int f : {0, 1, 2, 3, 4, 5, 6, 7}) {
            const Ten4& fam = K.family(f);
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k)
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            antisym_check.update(std::abs(fam(h, k, i, j) + fam(h, k, j, i)), pt,
                                                 {f, h, k, i, j});
        }
    }
    timings["curvature_symmetry_ms"] = ms_since(phase);

    // oracle equivalence
    phase = Clock::now();
    const int oracle_pts = std::min<int>(pts.size(), 5);
    for (int s = 0; s < oracle_pts; ++s) {
        const TangentPoint& pt = pts[s];
        const BaseGeometry geom = cfg.base.geometry_at(pt.x);
        const CurvatureComponents K = curvature_components(cfg.lift, geom, pt);
        const double scale = std::max({1.0, pt.x.cwiseAbs().maxCoeff(), pt.y.cwiseAbs().maxCoeff()});
        const Ten4 fd = fd_riemann(cfg.lift, cfg.base, pt, kFdStepGamma * scale);
        oracle_check.update(compare_adapted(K, fd, geom, pt), pt, {});
    }
    timings["oracle_ms"] = ms_since(phase);

    // flatness / constant-curvature scan
    phase = Clock::now();
    const FlatnessReport flat = flatness_report(cfg.lift, cfg.base, cfg.samples);
    timings["flatness_ms"] = ms_since(phase);

    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    for (const CheckAccumulator* c :
         {&inv_check, &compat_check, &torsion_check, &antisym_check, &oracle_check}) {
        checks.push_back(c->to_json());
        all_pass = all_pass && c->passed();
    }
    ordered_json flat_json;
    flat_json["best_k"] = flat.best_k;
    flat_json["best_residual"] = flat.best_residual;
    flat_json["sectional_min"] = flat.sectional_min;
    flat_json["sectional_max"] = flat.sectional_max;
    flat_json["sectional_spread"] = flat.sectional_spread;
    if (cfg.expect_constant_curvature) {
        const bool ok = flat.best_residual <= cfg.tol.flatness;
        flat_json["status"] = ok ? "pass" : "fail";
        flat_json["tolerance"] = cfg.tol.flatness;
        all_pass = all_pass && ok;
    } else {
        flat_json["status"] = "reported";
    }
    checks.push_back(ordered_json{{"name", "flatness"},
                                  {"status", flat_json["status"]},
                                  {"measured", flat.best_residual},
                                  {"tolerance", cfg.tol.flatness}});

    report["checks"] = checks;
    report["flatness"] = flat_json;
    timings["total_ms"] = ms_since(t0);
    report["timings_ms"] = timings;

    return CmdResult{all_pass ? 0 : 1, report};
}

ScanResult cmd_scan(const RunConfig& cfg) {
    Rng rng(cfg.samples.seed);
    const int n = cfg.base.dim();
    const int npts = std::max(1, cfg.samples.points);

    struct PointData {
        TangentPoint pt;
        MetricBlocks blocks;
        CurvatureComponents K;
    };
    std::vector<PointData> pts;
    pts.reserve(npts);
    for (int s = 0; s < npts; ++s) {
        TangentPoint pt = sample_tangent_point(cfg.base, rng, cfg.samples);
        const BaseGeometry geom = cfg.base.geometry_at(pt.x);
        pts.push_back(
            {pt, metric_blocks(cfg.lift, geom, pt), curvature_components(cfg.lift, geom, pt)});
    }

    std::string csv;
    csv += "sample_id";
    for (int i = 1; i <= n; ++i) csv += ",x" + std::to_string(i);
    for (int i = 1; i <= n; ++i) csv += ",y" + std::to_string(i);
    for (int i = 1; i <= n; ++i) csv += ",Xh" + std::to_string(i);
    for (int i = 1; i <= n; ++i) csv += ",Xv" + std::to_string(i);
    for (int i = 1; i <= n; ++i) csv += ",Yh" + std::to_string(i);
    for (int i = 1; i <= n; ++i) csv += ",Yv" + std::to_string(i);
    csv += ",k_value\n";

    double kmin = 0.0, kmax = 0.0;
    for (int s = 0; s < cfg.samples.planes; ++s) {
        const PointData& pd = pts[s % npts];
        const auto [X, Y] = sample_plane(pd.blocks, rng);
        const double k = sectional_curvature(pd.K, pd.blocks, X, Y);
        if (s == 0) {
            kmin = kmax = k;
        } else {
            kmin = std::min(kmin, k);
            kmax = std::max(kmax, k);
        }
        csv += std::to_string(s);
        for (int i = 0; i < n; ++i) csv += "," + fmt17(pd.pt.x(i));
        for (int i = 0; i < n; ++i) csv += "," + fmt17(pd.pt.y(i));
        for (int i = 0; i < n; ++i) csv += "," + fmt17(X.horizontal(i));
        for (int i = 0; i < n; ++i) csv += "," + fmt17(X.vertical(i));
        for (int i = 0; i < n; ++i) csv += "," + fmt17(Y.horizontal(i));
        for (int i = 0; i < n; ++i) csv += "," + fmt17(Y.vertical(i));
        csv += "," + fmt17(k) + "\n";
    }

    ordered_json report;
    report["planes"] = cfg.samples.planes;
    report["k_min"] = kmin;
    report["k_max"] = kmax;
    report["k_spread"] = kmax - kmin;
    return ScanResult{0, csv, report};
}

CmdResult cmd_decompose(const RunConfig& cfg, const std::string& family, double k) {
    const auto& names = CurvatureComponents::family_names();
    int fidx = -1;
    for (int f = 0; f < CurvatureComponents::kFamilyCount; ++f)
        if (family == names[f]) fidx = f;
    if (fidx < 0) throw ConfigError("unknown curvature family: " + family);
    if (cfg.base.dim() < 3)
        throw ConfigError("lemma-2 decomposition requires a base of dimension >= 3");

    Rng rng(cfg.samples.seed);
    ordered_json rows = ordered_json::array();
    double max_alpha = 0.0;
    for (int s = 0; s < cfg.samples.points; ++s) {
        const TangentPoint pt = sample_tangent_point(cfg.base, rng, cfg.samples);
        const BaseGeometry geom = cfg.base.geometry_at(pt.x);
        const MetricBlocks blocks = metric_blocks(cfg.lift, geom, pt);
        const CurvatureComponents K = curvature_components(cfg.lift, geom, pt);
        const CurvatureComponents K0 = k0_components(k, blocks);
        const int n = geom.n;
        Ten4 diff(n);
        for (int h = 0; h < n; ++h)
            for (int kk = 0; kk < n; ++kk)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        diff(h, kk, i, j) =
                            K.family(fidx)(h, kk, i, j) - K0.family(fidx)(h, kk, i, j);
        const Lemma2Result res = lemma2_decompose(diff, geom, pt.y);
        ordered_json row = point_json(pt);
        row["alpha"] = res.alpha;
        row["residual"] = res.residual;
        rows.push_back(row);
        for (double a : res.alpha) max_alpha = std::max(max_alpha, std::abs(a));
    }

    ordered_json report;
    report["family"] = family;
    report["k"] = k;
    report["rows"] = rows;
    report["max_abs_alpha"] = max_alpha;
    return CmdResult{0, report};
}

}  // namespace tanlift
