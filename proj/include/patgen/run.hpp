#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace patgen {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  std::string log_path;
  std::string model_path;
  std::string oracle = "alpha-plus";  ///< alpha | alpha-plus | explicit:<path>
  double df_filter = 0.0;
  std::string matching = "interleavings";  ///< partial | interleavings
  std::size_t cap = 10'000;
  double timeout_seconds = 600.0;
  OutputFormat output = OutputFormat::Text;
  bool breakdown = false;
  unsigned threads = 1;
};

enum ExitCode : int { kSuccess = 0, kInternalError = 1, kInvalidInput = 2, kTimeout = 3 };

/// Loads inputs, computes the measure and writes the report to `out`.
/// Problems are reported on `err` naming the failing phase; the return value
/// is one of ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Worker count from PATGEN_THREADS, or std::nullopt when unset or invalid.
std::optional<unsigned> threads_from_environment();

}  // namespace patgen
