#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/generators.hpp"

namespace weyl {

struct LawInfo {
  std::string_view name;
  std::string_view statement;
};

/// Every law the harness knows, in execution order.
const std::vector<LawInfo>& registered_laws();

struct LawReport {
  static constexpr std::size_t kMaxCounterexamples = 5;

  std::string law;
  unsigned trials = 0;
  unsigned failures = 0;
  /// Rendered inputs of the first failing trials, at most kMaxCounterexamples.
  std::vector<std::string> counterexamples;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures == 0; }
};

/// Runs cfg.trials independent instances of `law`. Trial i draws from
/// Rng::for_trial(cfg.seed, law, i), so the report does not depend on `jobs`.
/// Throws std::invalid_argument for an unknown law name or an invalid config.
LawReport run_law(std::string_view law, const GenConfig& cfg, unsigned jobs = 1);

std::vector<LawReport> run_all(const GenConfig& cfg, unsigned jobs = 1);

/// `<law> <trials> <failures> <PASS|FAIL>`
std::string format_machine(const LawReport& report);

/// Human-readable block with timing and counterexamples.
std::string format_text(const LawReport& report);

}  // namespace weyl
