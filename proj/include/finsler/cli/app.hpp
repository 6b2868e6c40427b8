#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "finsler/metric/metric.hpp"

namespace finsler::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kIdentityFailure = 1, kConfigError = 2 };

/// Bad flags, unknown names, unreadable metric sources.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolve "builtin:NAME", "expr:TEXT" or a path to a JSON metric document.
metric::MetricPtr load_metric(const std::string& source, int dim, const std::string& params_json = "{}");

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finsler::cli
