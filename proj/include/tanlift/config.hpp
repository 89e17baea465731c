#pragma once
#include <string>

#include <nlohmann/json.hpp>

#include "tanlift/base_geometry.hpp"
#include "tanlift/lift.hpp"
#include "tanlift/sampling.hpp"

namespace tanlift {

// Tolerance knobs; defaults match the documented error budgets:
// closed-form identities 1e-9, FD-backed checks 1e-4 (metric
// compatibility 1e-5), flatness 1e-8.
struct Tolerances {
    double closed_form = 1e-9;
    double fd = 1e-4;
    double compat = 1e-5;
    double antisymmetry = 1e-10;
    double flatness = 1e-8;
};

struct RunConfig {
    nlohmann::ordered_json base_spec;  // config echo for reports
    nlohmann::ordered_json lift_spec;
    BaseModel base = BaseModel::euclidean(2);
    LiftParams lift = sasaki_lift();
    SampleSpec samples;
    Tolerances tol;
    bool expect_constant_curvature = false;
    std::string out_path;
};

// {"kind":"euclidean","dim":n} | {"kind":"sphere","dim":2,"radius":r} |
// {"kind":"custom-polynomial","dim":n,"entries":{"i,j":[[coeff,[exps...]],...]}}
BaseModel base_model_from_json(const nlohmann::json& j);
// CLI shorthand: euclidean:2 | sphere:2:1 (kind[:dim[:radius]])
BaseModel base_model_from_string(const std::string& s);
nlohmann::ordered_json base_model_echo(const std::string& cli_or_empty, const nlohmann::json& j);

// {"preset":"sasaki"} | {"preset":"cheeger-gromoll"} |
// {"preset":"theorem4","alpha":CoeffFn,"beta":CoeffFn,"c":real} |
// {"explicit":{"c1":CoeffFn,...}}
LiftParams lift_params_from_json(const nlohmann::json& j);

SampleSpec sample_spec_from_json(const nlohmann::json& j);
Tolerances tolerances_from_json(const nlohmann::json& j);

// Full run configuration from a JSON document (every field optional).
RunConfig run_config_from_json(const nlohmann::json& j);

}  // namespace tanlift
