#include "patgen/run.hpp"

#include <cstdlib>
#include <ostream>

#include "patgen/error.hpp"
#include "patgen/measure.hpp"

namespace patgen {

std::optional<unsigned> threads_from_environment() {
  const char* value = std::getenv("PATGEN_THREADS");
  if (!value || !*value) return std::nullopt;
  char* end = nullptr;
  const long n = std::strtol(value, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024) return std::nullopt;
  return static_cast<unsigned>(n);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string phase = "configuration";
  try {
    if (!(config.df_filter >= 0.0 && config.df_filter <= 1.0)) {
      throw ConfigError("--df-filter must lie in [0,1]");
    }
    if (config.cap < 1) throw ConfigError("--cap must be at least 1");
    if (!(config.timeout_seconds > 0.0)) throw ConfigError("--timeout must be positive");

    GeneralizationConfig gc;
    gc.deadline = Deadline::after_seconds(config.timeout_seconds);
    gc.df_filter = config.df_filter;
    gc.cap = config.cap;
    gc.threads = config.threads;
    gc.oracle_name = config.oracle;
    if (config.matching == "partial") {
      gc.matching = Matching::Partial;
    } else if (config.matching == "interleavings") {
      gc.matching = Matching::Interleavings;
    } else {
      throw ConfigError("unknown matching '" + config.matching + "'");
    }

    phase = "log";
    const auto log = load_log(config.log_path);
    phase = "model";
    const auto sn = load_pnml(config.model_path);

    phase = "oracle";
    const std::string prefix = "explicit:";
    if (config.oracle == "alpha") {
      gc.oracle = OracleKind::Alpha;
    } else if (config.oracle == "alpha-plus") {
      gc.oracle = OracleKind::AlphaPlus;
    } else if (config.oracle.starts_with(prefix)) {
      gc.oracle = OracleKind::Explicit;
      auto loaded = load_explicit_oracle(config.oracle.substr(prefix.size()), log);
      gc.explicit_relation = std::move(loaded.relation);
      gc.oracle_warnings = std::move(loaded.warnings);
    } else {
      throw ConfigError("unknown oracle '" + config.oracle + "'");
    }

    phase = "measure";
    const auto report = generalization(log, sn, gc);
    switch (config.output) {
      case OutputFormat::Json: out << to_json(report, config.breakdown); break;
      case OutputFormat::Csv: out << to_csv(report); break;
      case OutputFormat::Text: out << to_text(report, config.breakdown); break;
    }
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    if (!report.complete()) {
      err << "error: timeout during phase '" << *report.timeout_phase << "'\n";
      return kTimeout;
    }
    return kSuccess;
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << '\n';
    return kTimeout;
  } catch (const ParseError& e) {
    err << "error [" << phase << "]: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ModelError& e) {
    err << "error [" << phase << "]: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ConfigError& e) {
    err << "error [" << phase << "]: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const AlignmentError& e) {
    err << "error [" << phase << "]: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error [" << phase << "]: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace patgen
