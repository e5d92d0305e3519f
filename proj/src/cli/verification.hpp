#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dirac_rm/oracle.hpp"
#include "dirac_rm/spectrum.hpp"
#include "dirac_rm/susy.hpp"

namespace dirac_rm::cli {

struct CheckResult {
  std::string check;
  bool passed = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  ModelConfig model;
  std::uint64_t seed = 7;
  /// Perturbs Q1 by +0.1 in the riccati suite (negative control).
  bool inject_fault = false;
  /// Oracle used by oracle-agreement; extent is in units of 1/alpha.
  double oracle_extent = 15.0;
  int oracle_points = 6000;
  int wave_points = 2001;
};

/// Suite names in report order.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

CheckResult run_check(const std::string& name, const VerifyOptions& opts);

std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const std::vector<std::string>& suites);

/// A random construction satisfying Q1 > 0 and Q2 < 0.
struct SusySample {
  double alpha;
  double beta;
  double v1_eff;
  double v2_eff;
  Superpotential sp;
};

std::vector<SusySample> random_susy_samples(std::uint64_t seed, int count);

/// The default model: spin, alpha = 1, V1 = 4, V2 = 1, M = 5, Cs = 0.
ModelConfig default_model();

/// Shipped special-case sets; "pt" has Im E != 0 at n = 2.
ModelConfig eckart_default();
ModelConfig pt_default();
ModelConfig reflectionless_default();

}  // namespace dirac_rm::cli
