#pragma once
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tanlift/jet.hpp"

namespace tanlift {

// Scalar coefficient function of the energy density t, built from
// {constant, t, sum, product, quotient, integer power}. Every such
// expression is a rational function, so it is stored in the canonical
// form num(t)/den(t); derivatives up to order 3 are exact.
//
// Quotients are admitted only when the divisor's numerator is a
// polynomial with positive constant term and non-negative coefficients,
// which makes the result provably defined on all t >= 0 (this covers
// the Cheeger-Gromoll weight 1/(1+2t)).
class CoeffFn {
public:
    CoeffFn();  // the zero function

    static CoeffFn constant(double a);
    static CoeffFn t();
    static CoeffFn poly(std::vector<double> coeffs);  // a0 + a1 t + a2 t^2 + ...
    static CoeffFn ratio(std::vector<double> num, std::vector<double> den);

    CoeffFn operator+(const CoeffFn& o) const;
    CoeffFn operator-(const CoeffFn& o) const;
    CoeffFn operator*(const CoeffFn& o) const;
    CoeffFn operator/(const CoeffFn& o) const;  // throws EvalDomainError if divisor inadmissible
    CoeffFn pow(int k) const;                   // k >= 0
    CoeffFn derivative() const;

    // order-th derivative at t, exact up to floating-point rounding; order in 0..3
    double eval(double t, int order) const;
    double operator()(double t) const { return eval(t, 0); }
    Jet3 jet(double t) const;

    double domain_floor() const { return domain_floor_; }
    bool is_zero() const;
    bool is_constant() const;

    const std::vector<double>& num() const { return num_; }
    const std::vector<double>& den() const { return den_; }

private:
    CoeffFn(std::vector<double> num, std::vector<double> den);
    void normalize();

    std::vector<double> num_;
    std::vector<double> den_;   // positive-coefficient polynomial, den(t) > 0 for t >= 0
    double domain_floor_ = 0.0;
};

CoeffFn operator*(double s, const CoeffFn& f);
CoeffFn operator*(const CoeffFn& f, double s);

// Spec operation name for the exact derivative evaluation.
double eval_coeff(const CoeffFn& f, double t, int order);

// Serialization: {"poly":[a0,a1,...]} | {"ratio":{"num":[...],"den":[...]}} | {"const":a}
nlohmann::json coeff_to_json(const CoeffFn& f);
CoeffFn coeff_from_json(const nlohmann::json& j);

// Compact CLI form: "const:0.5" | "poly:1,2" | "ratio:1|1,2"
CoeffFn coeff_from_string(const std::string& s);

}  // namespace tanlift
