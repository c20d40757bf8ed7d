#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace pel {

/// One mechanically checked claim: what was asserted, the exact quantities
/// that went into it, and whether it held.
struct VerificationOutcome {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> computed;
  std::string relation;
  bool pass = false;
  double ms = 0.0;

  void add_param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
  void add_computed(std::string name, std::string value) {
    computed.emplace_back(std::move(name), std::move(value));
  }
};

class OutcomeTimer {
 public:
  OutcomeTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pel
