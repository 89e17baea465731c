#include "tanlift/config.hpp"

#include <sstream>

#include "tanlift/errors.hpp"

namespace tanlift {

namespace {

std::pair<int, int> parse_entry_key(const std::string& key, int n) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw ConfigError("custom-polynomial entry key must look like \"i,j\": " + key);
    int i = 0, j = 0;
    try {
        i = std::stoi(key.substr(0, comma));
        j = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
        throw ConfigError("custom-polynomial entry key must hold integers: " + key);
    }
    if (i < 1 || j < 1 || i > n || j > n)
        throw ConfigError("custom-polynomial entry index out of range (1-based): " + key);
    return {i - 1, j - 1};
}

MultiPoly poly_from_json(const nlohmann::json& j, int nvars) {
    if (!j.is_array()) throw ConfigError("polynomial entry must be a list of [coeff,[exps]] terms");
    std::vector<Monomial> terms;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw ConfigError("polynomial term must be [coeff,[exps...]]");
        Monomial m;
        m.coeff = term.at(0).get<double>();
        m.exps = term.at(1).get<std::vector<int>>();
        if (static_cast<int>(m.exps.size()) != nvars)
            throw ConfigError("polynomial term exponent list must have one entry per coordinate");
        terms.push_back(std::move(m));
    }
    return MultiPoly(nvars, std::move(terms));
}

}  // namespace

BaseModel base_model_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ConfigError("base model config needs a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "euclidean") {
        return BaseModel::euclidean(j.value("dim", 2));
    }
    if (kind == "sphere") {
        if (j.value("dim", 2) != 2) throw ConfigError("sphere model is two-dimensional");
        return BaseModel::sphere(j.value("radius", 1.0));
    }
    if (kind == "custom-polynomial") {
        const int n = j.value("dim", 2);
        std::map<std::pair<int, int>, MultiPoly> entries;
        if (j.contains("entries")) {
            for (const auto& [key, value] : j.at("entries").items())
                entries.emplace(parse_entry_key(key, n), poly_from_json(value, n));
        }
        return BaseModel::custom_polynomial(n, std::move(entries));
    }
    throw ConfigError("unknown base model kind: " + kind);
}

BaseModel base_model_from_string(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw ConfigError("empty base model spec");
    try {
        if (parts[0] == "euclidean")
            return BaseModel::euclidean(parts.size() > 1 ? std::stoi(parts[1]) : 2);
        if (parts[0] == "sphere") {
            if (parts.size() > 1 && std::stoi(parts[1]) != 2)
                throw ConfigError("sphere model is two-dimensional");
            return BaseModel::sphere(parts.size() > 2 ? std::stod(parts[2]) : 1.0);
        }
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad number in base model spec: " + s);
    }
    throw ConfigError("base model spec must be euclidean:n or sphere:2:r (got " + s + ")");
}

nlohmann::ordered_json base_model_echo(const std::string& cli_or_empty, const nlohmann::json& j) {
    if (!cli_or_empty.empty()) return nlohmann::ordered_json{{"cli", cli_or_empty}};
    return nlohmann::ordered_json::parse(j.dump());
}

LiftParams lift_params_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("lift config must be an object");
    if (j.contains("preset")) {
        const std::string preset = j.at("preset").get<std::string>();
        if (preset == "sasaki") return sasaki_lift();
        if (preset == "cheeger-gromoll") return cheeger_gromoll_lift();
        if (preset == "theorem4") {
            if (!j.contains("alpha") || !j.contains("beta"))
                throw ConfigError("theorem4 preset needs alpha and beta coefficient functions");
            const CoeffFn alpha = j.at("alpha").is_string()
                                      ? coeff_from_string(j.at("alpha").get<std::string>())
                                      : coeff_from_json(j.at("alpha"));
            const CoeffFn beta = j.at("beta").is_string()
                                     ? coeff_from_string(j.at("beta").get<std::string>())
                                     : coeff_from_json(j.at("beta"));
            return theorem4_metric(alpha, beta, j.value("c", 1.0));
        }
        throw ConfigError("unknown lift preset: " + preset);
    }
    if (j.contains("explicit")) {
        const auto& e = j.at("explicit");
        auto coeff = [&](const char* name) {
            if (!e.contains(name)) return CoeffFn();
            if (e.at(name).is_string()) return coeff_from_string(e.at(name).get<std::string>());
            return coeff_from_json(e.at(name));
        };
        LiftParams p;
        p.c1 = coeff("c1");
        p.c2 = coeff("c2");
        p.c3 = coeff("c3");
        p.d1 = coeff("d1");
        p.d2 = coeff("d2");
        p.d3 = coeff("d3");
        return p;
    }
    throw ConfigError("lift config needs a preset or explicit coefficients");
}

SampleSpec sample_spec_from_json(const nlohmann::json& j) {
    SampleSpec s;
    if (j.is_null()) return s;
    s.points = j.value("points", s.points);
    s.planes = j.value("planes", s.planes);
    s.seed = j.value("seed", s.seed);
    s.box = j.value("box", s.box);
    if (j.contains("t_range")) {
        const auto r = j.at("t_range").get<std::vector<double>>();
        if (r.size() != 2) throw ConfigError("t_range must be [lo,hi]");
        s.t_min = r[0];
        s.t_max = r[1];
    }
    if (s.points < 1 || s.planes < 0) throw ConfigError("sample counts must be >= 1");
    if (!(s.t_min >= 0.0 && s.t_max > s.t_min)) throw ConfigError("t_range must satisfy 0 <= lo < hi");
    return s;
}

Tolerances tolerances_from_json(const nlohmann::json& j) {
    Tolerances t;
    if (j.is_null()) return t;
    t.closed_form = j.value("closed_form", t.closed_form);
    t.fd = j.value("fd", t.fd);
    t.compat = j.value("compat", t.compat);
    t.antisymmetry = j.value("antisymmetry", t.antisymmetry);
    t.flatness = j.value("flatness", t.flatness);
    for (double v : {t.closed_form, t.fd, t.compat, t.antisymmetry, t.flatness})
        if (!(v > 0.0)) throw ConfigError("tolerances must be positive");
    return t;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
    RunConfig cfg;
    if (j.contains("base")) {
        cfg.base = base_model_from_json(j.at("base"));
        cfg.base_spec = nlohmann::ordered_json::parse(j.at("base").dump());
    } else {
        cfg.base_spec = {{"kind", "euclidean"}, {"dim", 2}};
    }
    if (j.contains("lift")) {
        cfg.lift = lift_params_from_json(j.at("lift"));
        cfg.lift_spec = nlohmann::ordered_json::parse(j.at("lift").dump());
    } else {
        cfg.lift_spec = {{"preset", "sasaki"}};
    }
    cfg.samples = sample_spec_from_json(j.contains("samples") ? j.at("samples") : nlohmann::json());
    cfg.tol = tolerances_from_json(j.contains("tolerances") ? j.at("tolerances") : nlohmann::json());
    cfg.expect_constant_curvature = j.value("expect_constant_curvature", false);
    cfg.out_path = j.value("out", std::string());
    return cfg;
}

}  // namespace tanlift
