#include "dp2cert/certificate.hpp"

#include "dp2cert/version.hpp"

namespace dp2 {

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["title"] = title;
  j["inputs"] = inputs;
  j["parameters"] = parameters;
  j["evidence"] = evidence;
  j["verdict"] = verdict;
  j["timing_ms"] = timing_ms;
  j["toolkit"] = std::string(kToolkitName) + " " + kToolkitVersion;
  return j;
}

nlohmann::ordered_json scrub_timing(const nlohmann::ordered_json& j) {
  if (j.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [k, v] : j.items()) {
      if (k == "timing_ms" || k == "wall_ms") continue;
      out[k] = scrub_timing(v);
    }
    return out;
  }
  if (j.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& v : j) out.push_back(scrub_timing(v));
    return out;
  }
  return j;
}

}  // namespace dp2
