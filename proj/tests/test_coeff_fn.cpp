#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "tanlift/coeff_fn.hpp"
#include "tanlift/errors.hpp"

using namespace tanlift;

namespace {

// Central-difference oracles built from order-0 evaluations only. The
// first derivative uses the plain stencil with h = 1e-5 max(1,t); the
// higher orders Richardson-extrapolate their stencils, since a plain
// second or third difference at that step is dominated by cancellation
// noise in double precision.
double fd_derivative(const CoeffFn& f, double t, int order) {
    auto v = [&](double s) { return f.eval(s, 0); };
    if (order == 1) {
        const double h = 1e-5 * std::max(1.0, t);
        return (v(t + h) - v(t - h)) / (2.0 * h);
    }
    const double h = 5e-3 * std::max(1.0, t);
    auto stencil = [&](double hh) {
        if (order == 2) return (v(t + hh) - 2.0 * v(t) + v(t - hh)) / (hh * hh);
        return (v(t + 2.0 * hh) - 2.0 * v(t + hh) + 2.0 * v(t - hh) - v(t - 2.0 * hh)) /
               (2.0 * hh * hh * hh);
    };
    return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
}

}  // namespace

TEST_CASE("polynomial evaluation and exact derivatives") {
    const CoeffFn f = CoeffFn::poly({1.0, 2.0});  // 1 + 2t
    CHECK(eval_coeff(f, 0.5, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(eval_coeff(f, 0.5, 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(eval_coeff(f, 0.5, 2) == 0.0);
    CHECK(eval_coeff(f, 0.5, 3) == 0.0);
}

TEST_CASE("cheeger-gromoll weight derivative at zero") {
    const CoeffFn w = CoeffFn::ratio({1.0}, {1.0, 2.0});  // 1/(1+2t)
    CHECK(eval_coeff(w, 0.0, 0) == doctest::Approx(1.0));
    CHECK(eval_coeff(w, 0.0, 1) == doctest::Approx(-2.0));  // -2/(1+2t)^2 at t=0
}

TEST_CASE("derivatives agree with central differences") {
    const CoeffFn w = CoeffFn::ratio({1.0}, {1.0, 2.0});
    const CoeffFn p = CoeffFn::poly({0.5, -1.0, 3.0, 0.25});
    const CoeffFn combo = (p * w + CoeffFn::constant(2.0)) * (CoeffFn::t() + CoeffFn::constant(1.0));
    for (const CoeffFn& f : {w, p, combo}) {
        for (double t : {0.1, 0.3, 1.0, 2.7}) {  // interior: the widest stencil reaches t +/- 2h
            for (int order : {1, 2, 3}) {
                const double fd = fd_derivative(f, t, order);
                const double exact = f.eval(t, order);
                CHECK(std::abs(exact - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
            }
        }
    }
}

TEST_CASE("linearity of eval_coeff") {
    const CoeffFn f = CoeffFn::poly({1.0, -2.0, 0.5});
    const CoeffFn g = CoeffFn::ratio({2.0, 1.0}, {1.0, 0.0, 1.0});
    const CoeffFn lin = 3.0 * f + (-0.5) * g + CoeffFn();  // a f + b g
    for (double t : {0.0, 0.7, 1.9}) {
        for (int order : {0, 1, 2, 3}) {
            const double lhs = eval_coeff(lin, t, order);
            const double rhs = 3.0 * eval_coeff(f, t, order) - 0.5 * eval_coeff(g, t, order);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("symbolic derivative matches pointwise derivative") {
    const CoeffFn w = CoeffFn::ratio({1.0}, {1.0, 2.0});
    const CoeffFn dw = w.derivative();
    for (double t : {0.0, 0.4, 1.3}) {
        CHECK(dw(t) == doctest::Approx(w.eval(t, 1)).epsilon(1e-13));
        CHECK(dw.eval(t, 1) == doctest::Approx(w.eval(t, 2)).epsilon(1e-13));
    }
}

TEST_CASE("quotient admission rules") {
    CHECK_NOTHROW(CoeffFn::ratio({1.0}, {1.0, 2.0}));
    CHECK_THROWS_AS(CoeffFn::ratio({1.0}, {1.0, -1.0}), EvalDomainError);  // 1/(1-t)
    CHECK_THROWS_AS(CoeffFn::ratio({1.0}, {0.0, 1.0}), EvalDomainError);   // 1/t
    const CoeffFn denom_neg = CoeffFn::poly({1.0, -1.0});
    CHECK_THROWS_AS(CoeffFn::constant(1.0) / denom_neg, EvalDomainError);
    CHECK_NOTHROW(CoeffFn::constant(1.0) / CoeffFn::poly({2.0, 1.0}));
    CHECK_THROWS_AS(CoeffFn::constant(1.0) / CoeffFn(), EvalDomainError);
}

TEST_CASE("domain floor is enforced") {
    const CoeffFn f = CoeffFn::poly({1.0, 1.0});
    CHECK_THROWS_AS(f.eval(-0.1, 0), EvalDomainError);
    CHECK_THROWS_AS(eval_coeff(f, 1.0, 4), EvalDomainError);
}

TEST_CASE("integer power") {
    const CoeffFn f = CoeffFn::poly({1.0, 1.0}).pow(3);  // (1+t)^3
    CHECK(f(1.0) == doctest::Approx(8.0));
    CHECK(f.eval(0.0, 1) == doctest::Approx(3.0));
    CHECK_THROWS_AS(CoeffFn::t().pow(-1), EvalDomainError);
}

TEST_CASE("json round trip of the three tagged forms") {
    const CoeffFn c = CoeffFn::constant(2.5);
    const CoeffFn p = CoeffFn::poly({1.0, 0.0, 3.0});
    const CoeffFn r = CoeffFn::ratio({1.0, 1.0}, {1.0, 2.0});
    for (const CoeffFn& f : {c, p, r}) {
        const auto j = coeff_to_json(f);
        const CoeffFn back = coeff_from_json(j);
        for (double t : {0.0, 0.9, 2.2})
            for (int order : {0, 1, 2, 3})
                CHECK(back.eval(t, order) == doctest::Approx(f.eval(t, order)).epsilon(1e-14));
    }
    CHECK(coeff_to_json(c).contains("const"));
    CHECK(coeff_to_json(p).contains("poly"));
    CHECK(coeff_to_json(r).contains("ratio"));
}

TEST_CASE("cli string forms") {
    CHECK(coeff_from_string("const:0.5")(1.0) == doctest::Approx(0.5));
    CHECK(coeff_from_string("poly:1,1")(2.0) == doctest::Approx(3.0));
    CHECK(coeff_from_string("ratio:1|1,2")(0.5) == doctest::Approx(0.5));
    CHECK_THROWS_AS(coeff_from_string("spline:1"), ConfigError);
    CHECK_THROWS_AS(coeff_from_string("poly:"), ConfigError);
}
