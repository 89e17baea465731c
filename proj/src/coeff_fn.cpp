#include "tanlift/coeff_fn.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tanlift/errors.hpp"

namespace tanlift {

namespace {

using Poly = std::vector<double>;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    if (p.empty()) p.push_back(0.0);
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly scale(const Poly& a, double s) {
    Poly r = a;
    for (double& c : r) c *= s;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly deriv(const Poly& a) {
    if (a.size() <= 1) return {0.0};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<double>(i) * a[i];
    trim(r);
    return r;
}

bool is_zero_poly(const Poly& a) {
    for (double c : a)
        if (c != 0.0) return false;
    return true;
}

// positive constant term, non-negative higher coefficients => p(t) >= p(0) > 0 on t >= 0
bool is_admissible_denominator(const Poly& p) {
    if (p.empty() || p[0] <= 0.0) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] < 0.0) return false;
    return true;
}

Jet3 poly_jet(const Poly& p, double t) {
    Jet3 r;
    // Horner pass per derivative order
    const Poly d1 = deriv(p);
    const Poly d2 = deriv(d1);
    const Poly d3 = deriv(d2);
    auto horner = [t](const Poly& q) {
        double acc = 0.0;
        for (std::size_t i = q.size(); i-- > 0;) acc = acc * t + q[i];
        return acc;
    };
    r.v = horner(p);
    r.d1 = horner(d1);
    r.d2 = horner(d2);
    r.d3 = horner(d3);
    return r;
}

}  // namespace

CoeffFn::CoeffFn() : num_{0.0}, den_{1.0} {}

CoeffFn::CoeffFn(std::vector<double> num, std::vector<double> den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void CoeffFn::normalize() {
    trim(num_);
    trim(den_);
    if (is_zero_poly(num_)) {
        num_ = {0.0};
        den_ = {1.0};
        return;
    }
    if (den_.size() == 1 && den_[0] != 1.0) {
        num_ = scale(num_, 1.0 / den_[0]);
        den_ = {1.0};
    }
}

CoeffFn CoeffFn::constant(double a) { return CoeffFn({a}, {1.0}); }

CoeffFn CoeffFn::t() { return CoeffFn({0.0, 1.0}, {1.0}); }

CoeffFn CoeffFn::poly(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    return CoeffFn(std::move(coeffs), {1.0});
}

CoeffFn CoeffFn::ratio(std::vector<double> num, std::vector<double> den) {
    trim(den);
    if (!is_admissible_denominator(den))
        throw EvalDomainError(
            "ratio denominator must be a polynomial with positive constant term "
            "and non-negative coefficients");
    if (num.empty()) num.push_back(0.0);
    return CoeffFn(std::move(num), std::move(den));
}

CoeffFn CoeffFn::operator+(const CoeffFn& o) const {
    return CoeffFn(add(mul(num_, o.den_), mul(o.num_, den_)), mul(den_, o.den_));
}

CoeffFn CoeffFn::operator-(const CoeffFn& o) const {
    return CoeffFn(add(mul(num_, o.den_), scale(mul(o.num_, den_), -1.0)), mul(den_, o.den_));
}

CoeffFn CoeffFn::operator*(const CoeffFn& o) const {
    return CoeffFn(mul(num_, o.num_), mul(den_, o.den_));
}

CoeffFn CoeffFn::operator/(const CoeffFn& o) const {
    if (o.is_zero()) throw EvalDomainError("division of coefficient functions by zero");
    Poly n = o.num_;
    trim(n);
    if (!is_admissible_denominator(n))
        throw EvalDomainError(
            "quotient divisor is not provably positive on t >= 0 "
            "(numerator needs positive constant term and non-negative coefficients)");
    return CoeffFn(mul(num_, o.den_), mul(den_, n));
}

CoeffFn CoeffFn::pow(int k) const {
    if (k < 0) throw EvalDomainError("integer power expects a non-negative exponent");
    CoeffFn r = constant(1.0);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

CoeffFn CoeffFn::derivative() const {
    // (n/d)' = (n'd - nd')/d^2; d^2 keeps the positive-coefficient invariant
    Poly n = add(mul(deriv(num_), den_), scale(mul(num_, deriv(den_)), -1.0));
    return CoeffFn(std::move(n), mul(den_, den_));
}

Jet3 CoeffFn::jet(double t) const {
    if (t < domain_floor_) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "coefficient function evaluated at t=%.17g below domain floor %.17g", t,
                      domain_floor_);
        throw EvalDomainError(buf);
    }
    if (den_.size() == 1) return poly_jet(num_, t);
    return poly_jet(num_, t) / poly_jet(den_, t);
}

double CoeffFn::eval(double t, int order) const {
    if (order < 0 || order > 3) throw EvalDomainError("derivative order must be in 0..3");
    const Jet3 j = jet(t);
    switch (order) {
        case 0: return j.v;
        case 1: return j.d1;
        case 2: return j.d2;
        default: return j.d3;
    }
}

bool CoeffFn::is_zero() const { return is_zero_poly(num_); }

bool CoeffFn::is_constant() const { return num_.size() == 1 && den_.size() == 1; }

CoeffFn operator*(double s, const CoeffFn& f) { return CoeffFn::constant(s) * f; }
CoeffFn operator*(const CoeffFn& f, double s) { return CoeffFn::constant(s) * f; }

double eval_coeff(const CoeffFn& f, double t, int order) { return f.eval(t, order); }

nlohmann::json coeff_to_json(const CoeffFn& f) {
    if (f.den().size() == 1) {
        if (f.num().size() == 1) return nlohmann::json{{"const", f.num()[0]}};
        return nlohmann::json{{"poly", f.num()}};
    }
    return nlohmann::json{{"ratio", {{"num", f.num()}, {"den", f.den()}}}};
}

CoeffFn coeff_from_json(const nlohmann::json& j) {
    if (j.is_number()) return CoeffFn::constant(j.get<double>());
    if (!j.is_object()) throw ConfigError("coefficient function must be an object or number");
    if (j.contains("const")) return CoeffFn::constant(j.at("const").get<double>());
    if (j.contains("poly")) return CoeffFn::poly(j.at("poly").get<std::vector<double>>());
    if (j.contains("ratio")) {
        const auto& r = j.at("ratio");
        return CoeffFn::ratio(r.at("num").get<std::vector<double>>(),
                              r.at("den").get<std::vector<double>>());
    }
    throw ConfigError("coefficient function needs one of: const, poly, ratio");
}

namespace {

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw ConfigError("bad number in coefficient list: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty coefficient list");
    return out;
}

}  // namespace

CoeffFn coeff_from_string(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw ConfigError("coefficient spec must look like const:a, poly:a0,a1 or ratio:n|d");
    const std::string tag = s.substr(0, colon);
    const std::string rest = s.substr(colon + 1);
    try {
        if (tag == "const") return CoeffFn::constant(std::stod(rest));
        if (tag == "poly") return CoeffFn::poly(parse_number_list(rest));
        if (tag == "ratio") {
            const auto bar = rest.find('|');
            if (bar == std::string::npos) throw ConfigError("ratio spec needs num|den");
            return CoeffFn::ratio(parse_number_list(rest.substr(0, bar)),
                                  parse_number_list(rest.substr(bar + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad number in coefficient spec: " + s);
    }
    throw ConfigError("unknown coefficient tag: " + tag);
}

}  // namespace tanlift
