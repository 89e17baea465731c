#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tanlift/cli.hpp"
#include "tanlift/errors.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string config_path;
    std::string base_spec;
    std::string preset;
    std::string alpha, beta;
    double c = 1.0;
    bool c_set = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> points, planes;
    std::string out_path;
    bool expect_constant_curvature = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration; flags override its fields");
    cmd->add_option("--base", o.base_spec, "base model shorthand, e.g. euclidean:2 or sphere:2:1");
    cmd->add_option("--preset", o.preset, "lift preset: sasaki | cheeger-gromoll | theorem4");
    cmd->add_option("--alpha", o.alpha, "theorem4 alpha, e.g. poly:1,1");
    cmd->add_option("--beta", o.beta, "theorem4 beta, e.g. const:0.5");
    cmd->add_option("--c", o.c, "theorem4 constant c")->each([&o](const std::string&) { o.c_set = true; });
    cmd->add_option("--seed", [&o](const std::vector<std::string>& v) {
            o.seed = std::stoull(v.back());
            return true;
        },
        "sampling seed (default 0)");
    cmd->add_option("--points", [&o](const std::vector<std::string>& v) {
            o.points = std::stoi(v.back());
            return true;
        },
        "number of sampled tangent points");
    cmd->add_option("--planes", [&o](const std::vector<std::string>& v) {
            o.planes = std::stoi(v.back());
            return true;
        },
        "number of sampled 2-planes");
    cmd->add_option("--out", o.out_path, "output path (report JSON, or CSV for scan)");
}

json load_config_document(const CommonOpts& o) {
    json doc = json::object();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw tanlift::ConfigError("cannot open config file: " + o.config_path);
        try {
            in >> doc;
        } catch (const json::parse_error& e) {
            throw tanlift::ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
    }
    if (!o.base_spec.empty()) {
        // validate the shorthand now so usage errors exit with code 2
        tanlift::base_model_from_string(o.base_spec);
        const auto colon = o.base_spec.find(':');
        json base{{"kind", o.base_spec.substr(0, colon)}};
        if (colon != std::string::npos) {
            const std::string rest = o.base_spec.substr(colon + 1);
            const auto colon2 = rest.find(':');
            base["dim"] = std::stoi(rest.substr(0, colon2));
            if (colon2 != std::string::npos) base["radius"] = std::stod(rest.substr(colon2 + 1));
        }
        doc["base"] = base;
    }
    if (!o.preset.empty()) {
        json lift{{"preset", o.preset}};
        if (!o.alpha.empty()) lift["alpha"] = o.alpha;
        if (!o.beta.empty()) lift["beta"] = o.beta;
        if (o.c_set) lift["c"] = o.c;
        doc["lift"] = lift;
    }
    if (o.seed || o.points || o.planes) {
        json samples = doc.value("samples", json::object());
        if (o.seed) samples["seed"] = *o.seed;
        if (o.points) samples["points"] = *o.points;
        if (o.planes) samples["planes"] = *o.planes;
        doc["samples"] = samples;
    }
    if (o.expect_constant_curvature) doc["expect_constant_curvature"] = true;
    if (!o.out_path.empty()) doc["out"] = o.out_path;
    return doc;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tanlift::ConfigError("cannot write output file: " + path);
    out << payload;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangent-bundle lifted-metric curvature toolkit"};
    app.require_subcommand(1);

    CommonOpts verify_opts, scan_opts, dec_opts;
    std::string family = "XXYY";
    double k_value = 0.0;

    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    add_common(verify, verify_opts);
    verify->add_flag("--expect-constant-curvature", verify_opts.expect_constant_curvature,
                     "fail unless the sampled sectional curvature is constant");

    CLI::App* scan = app.add_subcommand("scan", "sample 2-planes and emit a sectional-curvature CSV");
    add_common(scan, scan_opts);

    CLI::App* dec = app.add_subcommand("decompose", "lemma-2 projection of a family difference");
    add_common(dec, dec_opts);
    dec->add_option("--family", family, "curvature family name, e.g. YXXY");
    dec->add_option("--k", k_value, "constant curvature value of the comparison tensor");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            const auto doc = load_config_document(verify_opts);
            const auto cfg = tanlift::run_config_from_json(doc);
            const auto res = tanlift::cmd_verify(cfg);
            write_output(cfg.out_path, res.report.dump(2));
            return res.exit_code;
        }
        if (scan->parsed()) {
            const auto doc = load_config_document(scan_opts);
            const auto cfg = tanlift::run_config_from_json(doc);
            const auto res = tanlift::cmd_scan(cfg);
            write_output(cfg.out_path, res.csv);
            std::cerr << res.report.dump(2) << "\n";
            return res.exit_code;
        }
        const auto doc = load_config_document(dec_opts);
        const auto cfg = tanlift::run_config_from_json(doc);
        const auto res = tanlift::cmd_decompose(cfg, family, k_value);
        write_output(cfg.out_path, res.report.dump(2));
        return res.exit_code;
    } catch (const tanlift::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
