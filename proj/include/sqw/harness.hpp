#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqw/bounds.hpp"
#include "sqw/counting.hpp"
#include "sqw/diagnostics.hpp"
#include "sqw/digit_space.hpp"

namespace sqw {

// One experiment instance. Identical configs produce byte-identical JSON
// reports (no timestamps or machine state in the body).
struct InstanceConfig {
    uint64_t p = 0;
    unsigned r = 0;
    std::optional<std::string> modulus;   // poly text, constant term first
    std::vector<std::string> digits;      // one digit-set spec per position
    unsigned pivot = 0;                   // 1-based; 0 = auto (largest set)
    double eps = 0.1;                     // for the density-corollary check
    uint64_t cap = kDefaultEnumCap;
};

struct SweepConfig {
    std::vector<uint64_t> ps;
    std::vector<unsigned> rs;
    std::string family = "random";        // random | full
    std::vector<uint64_t> sizes;          // digit-set sizes; empty = 2..p
    unsigned seeds_per = 5;               // random instances per (p, r, size)
    uint64_t seed = 1;                    // master seed
    unsigned pivot = 0;
    double eps = 0.1;
    uint64_t cap = kDefaultEnumCap;
};

struct LemmaSweepConfig {
    std::vector<uint64_t> ps;
    std::vector<unsigned> rs;
    uint64_t s = 2;
    uint64_t pair_cap = 200'000;          // exhaustive below, sampled above
    uint64_t samples = 1000;              // pairs when sampling
    uint64_t seed = 1;
};

InstanceConfig instance_config_from_json(const nlohmann::json& j);
SweepConfig sweep_config_from_json(const nlohmann::json& j);
LemmaSweepConfig lemma_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CountReport& rep);
nlohmann::json to_json(const DiagnosticsReport& rep);
nlohmann::json to_json(const LemmaReport& rep, const FieldCtx& ctx);
nlohmann::json to_json(const StrataReport& rep);

// field + modulus + generator summary
nlohmann::json field_info(uint64_t p, unsigned r,
                          const std::optional<std::string>& modulus = std::nullopt);

// Full verification of one instance: counts (both routes), bounds,
// corollary predicates, proof chain. soundness_ok gates CI (exit code 4).
struct InstanceResult {
    nlohmann::json report;
    std::string csv_row;
    bool soundness_ok = false;
};

InstanceResult run_instance(const InstanceConfig& cfg);

extern const char* kSweepCsvHeader;
extern const char* kLemmaCsvHeader;

struct SweepResult {
    std::string csv;  // header + one row per instance, deterministic order
    size_t rows = 0;
    bool all_pass = false;
};

SweepResult run_sweep(const SweepConfig& cfg);
SweepResult run_lemma_sweep(const LemmaSweepConfig& cfg);

// stable seed derivation for per-position digit sampling
uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> parts);

}  // namespace sqw
