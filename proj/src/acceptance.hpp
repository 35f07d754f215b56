#pragma once
// The acceptance suite, one criterion per layer, and the structure verification sweep.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace atl {

struct CriterionResult {
    int id = 0;  // 0 is the negative control
    std::string key, title;
    long checks = 0, failures = 0, inconclusive = 0;
    std::vector<std::string> notes;  // first failures, then remarks
    double seconds = 0;
    bool pass() const { return failures == 0; }
};

struct AcceptanceConfig {
    std::vector<int> only;  // criterion ids; empty runs all
    uint64_t seed = 20240611;
    bool negative_control = false;
    Budgets budgets = Budgets::from_env();
};

// "qarith" or "2" -> 2; -1 if unknown
int criterion_id(const std::string& key);
const std::vector<std::string>& criterion_keys();  // index = id - 1
AcceptanceConfig acceptance_config(const json& j);

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                            const std::function<void(const CriterionResult&)>& done = {});
json result_json(const CriterionResult& r);
std::string result_line(const CriterionResult& r);

struct SweepConfig {
    int n_min = 1, n_max = 6;
    std::vector<int> ells;  // each ell expands to its primitive roots zeta_{2 ell} (and +-1 for ell = 1)
    std::vector<std::string> qs;
    bool generic = false;
    std::vector<std::string> zs = {"1", "-1", "q", "-q", "q^(1/2)", "q^(-1/2)"};
    std::vector<int> signs = {1, -1};
    Budgets budgets = Budgets::from_env();
    std::string output_dir;
};
SweepConfig sweep_config(const json& j);

struct SweepPoint {
    std::string q, z;
    int N, d, sign;
};
std::vector<SweepPoint> expand(const SweepConfig& cfg);

// verify_main at every point; writes report.json and one DOT file per point when output_dir is set
json run_sweep(const SweepConfig& cfg, const std::function<void(const VerifyReport&)>& done = {});

}  // namespace atl
