#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace assoc {

// One comparison inside a theorem verification; expected/actual are
// rendered as strings so the reports serialize uniformly.
struct VerifyCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string theorem;
  std::vector<VerifyCheck> checks;
  double elapsed_ms = 0.0;
  bool pass() const;
};

// Scales and caps for the verification runs; defaults finish in minutes.
struct VerifyConfig {
  double scale = 1.0;               // multiplies sampled instance counts
  std::size_t node_cap = 5'000'000; // skeleton size guard
  std::size_t visit_cap = 5'000'000;
  int threads = 0;                  // 0 = hardware default
  std::uint64_t seed = 9481;

  static VerifyConfig from_json(const nlohmann::json& j);
};

const std::vector<std::string>& known_theorem_ids();

// Runs the checks mapped to one theorem id. Throws std::invalid_argument
// for unknown ids.
VerifyReport verify(const std::string& theorem_id, const VerifyConfig& config = {});

// {"theorem": id, "checks": [...], "elapsed_ms": t}; elapsed_ms only when
// with_timing (timings break byte-identical output)
nlohmann::json report_to_json(const VerifyReport& report, bool with_timing);

}  // namespace assoc
