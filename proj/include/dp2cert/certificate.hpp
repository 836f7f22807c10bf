#pragma once

// Machine-readable verdicts.  Certificates serialize to JSON documents with
// a fixed key order; wall-clock readings live only under the keys
// "timing_ms" / "wall_ms" so reports can be compared net of timing.

#include <json.hpp>

#include <string>
#include <vector>

namespace dp2 {

struct Certificate {
  std::string claim;  // stable id, e.g. "lemma-2.4"
  std::string title;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  std::string verdict = "error";  // verified | refuted | inconclusive | error
  double timing_ms = 0.0;

  nlohmann::ordered_json to_json() const;
};

// Helper for accumulating named sub-checks; the verdict may be "verified"
// only when every sub-check succeeded.
struct CheckList {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  bool all_ok = true;

  void add(const std::string& name, bool ok) {
    items.push_back({{"check", name}, {"ok", ok}});
    all_ok = all_ok && ok;
  }
  template <class T>
  void add(const std::string& name, bool ok, const std::string& key, const T& value) {
    items.push_back({{"check", name}, {"ok", ok}, {key, value}});
    all_ok = all_ok && ok;
  }
};

// Deep copy with every "timing_ms" / "wall_ms" entry removed.
nlohmann::ordered_json scrub_timing(const nlohmann::ordered_json& j);

}  // namespace dp2
