#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "glasser/numerics.hpp"
#include "glasser/quadrature.hpp"

namespace glasser::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

enum class Command { kVerifyAll, kVerify, kCustom, kKernelCheck };
enum class OutputFormat { kTable, kJson };

struct RunConfig {
  Command command = Command::kVerifyAll;
  std::string case_id;     // verify
  std::string expression;  // custom: F(k)
  // verify: case parameters; custom: extra bindings plus "a";
  // kernel-check: optional "a" and "t" (both given: single point, else grid).
  std::vector<std::pair<std::string, Complex>> params;
  double tolerance = 1e-8;
  QuadratureOptions quadrature;
  std::optional<std::string> json_path;
  OutputFormat format = OutputFormat::kTable;
};

/// Executes the configured verifications. Exit status: 0 all pass,
/// 1 some verification failed, 2 usage or input error, 3 quadrature
/// non-convergence / divergence or another numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace glasser::cli
