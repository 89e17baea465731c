#pragma once
#include <string>

#include <nlohmann/json.hpp>

#include "tanlift/config.hpp"

namespace tanlift {

// Exit-code contract: 0 all checks pass, 1 check failure, 2 usage/config
// error (the binary maps ConfigError to 2 before these run).
struct CmdResult {
    int exit_code = 0;
    nlohmann::ordered_json report;
};

struct ScanResult {
    int exit_code = 0;
    std::string csv;
    nlohmann::ordered_json report;
};

// Runs inverse-identity, metric-compatibility, torsion, curvature-symmetry
// and oracle-equivalence checks, plus the flatness scan (asserted only
// when the config expects constant curvature).
CmdResult cmd_verify(const RunConfig& cfg);

// Sampled sectional-curvature table; byte-identical CSV under a fixed seed.
ScanResult cmd_scan(const RunConfig& cfg);

// Lemma-2 projection of (family - family0) at sampled points; requires a
// base of dimension >= 3.
CmdResult cmd_decompose(const RunConfig& cfg, const std::string& family, double k);

}  // namespace tanlift
