#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "derivations.hpp"
#include "weil.hpp"

namespace weilab {

// Seeded batch harness configuration. Ranges are inclusive.
struct ScanConfig {
  uint64_t seed = 0;
  uint32_t k_min = 2, k_max = 2;
  uint32_t r_min = 4, r_max = 4;
  uint32_t gens_min = 1, gens_max = 3;
  uint32_t terms_min = 1, terms_max = 3;
  std::vector<int64_t> coefficient_pool = {-2, -1, 1, 2};
  uint32_t count = 10;
  std::optional<uint32_t> weight_bound;
  std::size_t dim_cap = 0;  // 0: library default
  // restrict every generator to a single total degree
  bool homogeneous = false;
  // minimum term degree; 2 keeps the ideal inside m^2
  uint32_t min_degree = 2;
  bool include_timing = false;
};

enum class ConjectureStatus { CertifiedYes, Inconclusive };

struct ScanRecord {
  uint32_t index = 0;
  std::string spec_text;  // reconstructible input
  bool skipped = false;   // dimension cap
  bool failed = false;    // per-instance error, recorded not fatal
  std::string error;
  std::size_t dim = 0;
  uint32_t order = 0;
  uint32_t width = 0;
  bool trivial_certified = false;
  std::vector<std::string> granted_certificates;
  std::size_t refined_dim = 0;  // dim K'
  FixedStatus fixed_status = FixedStatus::UpperBoundOnly;
  std::size_t ma_dim = 0;
  ConjectureStatus conjecture = ConjectureStatus::Inconclusive;
  // granted certificate while K' exceeds span{1}: the bound overshoots
  bool overshoot = false;
  int64_t millis = 0;
};

struct ScanSummary {
  uint32_t instances = 0;
  uint32_t skipped = 0;
  uint32_t failed = 0;
  uint32_t trivial_certified = 0;
  uint32_t fixed_trivial = 0;
  uint32_t conjecture_yes = 0;
  uint32_t overshoot = 0;
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

// Deterministic pseudo-random spec sequence for the configuration.
std::vector<AlgebraSpec> generate_instances(const ScanConfig& config);

ScanResult scan_run(const ScanConfig& config);

// Classify + bound one algebra; shared by scan_run and the CLI.
void scan_one(const WeilAlgebra& algebra, std::optional<uint32_t> weight_bound,
              ScanRecord& record);

}  // namespace weilab
