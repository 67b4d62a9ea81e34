#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patgen/align.hpp"
#include "patgen/concurrency.hpp"
#include "patgen/deadline.hpp"
#include "patgen/eventlog.hpp"
#include "patgen/fraction.hpp"
#include "patgen/petri.hpp"

namespace patgen {

struct WeightedFulfilment {
  Fraction fulfilment;
  std::uint64_t weight = 0;
};

/// Weighted mean of the fulfilments; 1 when there is nothing to fulfil.
Fraction aggregate(std::span<const WeightedFulfilment> patterns);

enum class Matching { Partial, Interleavings };
enum class OracleKind { Alpha, AlphaPlus, Explicit };

std::string_view to_string(Matching matching);

struct GeneralizationConfig {
  OracleKind oracle = OracleKind::AlphaPlus;
  ConcurrencyRelation explicit_relation;  ///< used with OracleKind::Explicit
  std::string oracle_name = "alpha-plus";  ///< echoed in reports
  std::vector<std::string> oracle_warnings;  ///< copied into the report
  double df_filter = 0.0;
  Matching matching = Matching::Interleavings;
  std::size_t cap = 10'000;
  Deadline deadline;
  unsigned threads = 1;
};

struct PatternRow {
  enum class Type { Repetitive, Concurrent };
  Type type;
  Trace trace;  ///< extended trace, or the first trace of the partial order
  std::vector<std::size_t> positions;
  std::uint64_t weight = 0;
  Fraction fulfilment;  ///< under the selected matching for concurrent rows

  // Repetitive rows.
  Trace repeat_type;
  std::size_t repetitions = 0;

  // Concurrent rows: both matchings with unreduced counts.
  std::size_t representatives = 0;
  std::pair<std::uint64_t, std::uint64_t> partial{0, 0};
  std::pair<std::uint64_t, std::uint64_t> interleavings{0, 0};
};

struct GeneralizationReport {
  Fraction g_pattern{1};
  std::optional<Fraction> g_rep;   ///< nullopt: no repetitive patterns
  std::optional<Fraction> g_conc;  ///< nullopt: no concurrent patterns
  std::uint64_t total_weight = 0;
  std::uint64_t rep_weight = 0;
  std::uint64_t conc_weight = 0;
  std::vector<PatternRow> rows;

  std::string oracle;
  double df_filter = 0.0;
  Matching matching = Matching::Interleavings;
  std::size_t cap = 0;
  std::vector<LabelPair> concurrency_pairs;

  std::vector<std::string> warnings;
  std::vector<std::string> capped;  ///< partial orders skipped at the cap
  std::vector<std::string> completed_phases;
  std::optional<std::string> timeout_phase;  ///< scores are invalid when set

  std::map<Trace, Alignment> alignments;

  bool complete() const { return !timeout_phase.has_value(); }
};

/// Full pipeline. A timeout does not throw: the report carries the phase that
/// ran out and the phases finished before it. Invalid nets raise ModelError.
GeneralizationReport generalization(const EventLog& log, const SystemNet& sn,
                                    const GeneralizationConfig& config);

std::string to_json(const GeneralizationReport& report, bool breakdown);
std::string to_csv(const GeneralizationReport& report);
std::string to_text(const GeneralizationReport& report, bool breakdown);

}  // namespace patgen
