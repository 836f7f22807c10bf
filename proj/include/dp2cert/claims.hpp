#pragma once

// Claim registry and orchestration.  Each claim id names one computationally
// checkable statement; run_all executes them in dependency order with a
// shared group-enumeration context and assembles a report.

#include "dp2cert/certificate.hpp"
#include "dp2cert/group_cache.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dp2 {

struct RunConfig {
  std::vector<std::string> claims;  // empty = all registered, in order
  unsigned precision = 64;          // 2-adic working precision (>= 8)
  std::vector<std::uint32_t> primes = {11, 23, 29, 37, 43, 53};
  std::filesystem::path cache_dir = ".dp2cert-cache";
  unsigned jobs = 1;
  bool write_cache = true;

  void validate() const;  // throws std::invalid_argument
};

const std::vector<std::string>& registered_claims();
bool is_registered_claim(const std::string& id);

// Memoized Sp6(F_2) enumeration shared across claims of one run.
class GroupContext {
 public:
  const Subgroup<GF2Mat>& sp6(const RunConfig& cfg);

 private:
  std::optional<Subgroup<GF2Mat>> sp6_;
};

// Dispatch; unknown ids throw std::invalid_argument, failures inside a claim
// surface as verdict = "error".
Certificate run_claim(const std::string& id, const RunConfig& cfg);
Certificate run_claim(const std::string& id, const RunConfig& cfg, GroupContext& ctx);

struct RunAllResult {
  std::vector<Certificate> certificates;
  nlohmann::ordered_json report;
  bool all_verified = false;
};

RunAllResult run_all(const RunConfig& cfg);

}  // namespace dp2
