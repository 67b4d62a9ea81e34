#include "patgen/measure.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "patgen/error.hpp"
#include "patgen/partial_order.hpp"
#include "patgen/patterns.hpp"
#include "patgen/tandem.hpp"

namespace patgen {

Fraction aggregate(std::span<const WeightedFulfilment> patterns) {
  Fraction weighted{0};
  std::uint64_t total = 0;
  for (const auto& p : patterns) {
    weighted += p.fulfilment * p.weight;
    total += p.weight;
  }
  return total == 0 ? Fraction{1} : weighted / total;
}

std::string_view to_string(Matching matching) {
  return matching == Matching::Partial ? "partial" : "interleavings";
}

namespace {

// Aligns every trace once, spreading the work over `threads` workers. The
// result does not depend on the split.
std::map<Trace, Alignment> align_all(const Aligner& aligner, const std::vector<Trace>& traces,
                                     unsigned threads, const Deadline& deadline) {
  std::vector<Alignment> results(traces.size());
  std::vector<std::exception_ptr> errors(traces.size());
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < traces.size(); i += stride) {
      try {
        results[i] = aligner.align(traces[i], deadline);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, traces.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  std::map<Trace, Alignment> out;
  for (std::size_t i = 0; i < traces.size(); ++i) out.emplace(traces[i], std::move(results[i]));
  return out;
}

}  // namespace

GeneralizationReport generalization(const EventLog& log, const SystemNet& sn,
                                    const GeneralizationConfig& config) {
  GeneralizationReport report;
  report.oracle = config.oracle_name;
  report.df_filter = config.df_filter;
  report.matching = config.matching;
  report.cap = config.cap;
  report.warnings = config.oracle_warnings;
  if (config.cap < 1) throw ConfigError("linearization cap must be at least 1");

  const auto validation = validate(sn);
  if (!validation.ok()) throw ModelError("invalid model: " + validation.summary());

  std::string phase;
  const auto begin = [&](std::string name) {
    phase = std::move(name);
    config.deadline.check(phase);
  };
  const auto done = [&] { report.completed_phases.push_back(phase); };

  try {
    begin("tandem");
    const auto extended = extend_log(reduce_log(log));
    done();

    begin("concurrency");
    ConcurrencyRelation oracle;
    if (config.oracle == OracleKind::Explicit) {
      oracle = config.explicit_relation;
    } else {
      const auto df = filter_df(directly_follows(log), config.df_filter);
      oracle = config.oracle == OracleKind::Alpha ? alpha_oracle(df) : alpha_plus_oracle(log, df);
    }
    report.concurrency_pairs.assign(oracle.pairs().begin(), oracle.pairs().end());
    done();

    begin("partial-orders");
    auto concurrent = representative_traces_and_patterns(log, oracle, config.cap, config.deadline);
    for (const auto& entry : concurrent) {
      if (entry.error) report.capped.push_back(*entry.error);
    }
    done();

    begin("alignment");
    const Aligner aligner(sn);
    std::vector<Trace> to_align = extended.unique();
    for (const auto& entry : concurrent) {
      if (entry.patterns.empty()) continue;
      to_align.insert(to_align.end(), entry.representatives.begin(), entry.representatives.end());
    }
    std::sort(to_align.begin(), to_align.end());
    to_align.erase(std::unique(to_align.begin(), to_align.end()), to_align.end());
    report.alignments = align_all(aligner, to_align, config.threads, config.deadline);
    done();

    begin("fulfilment");
    std::vector<Alignment> extended_alignments;
    for (const auto& trace : extended.unique()) extended_alignments.push_back(report.alignments.at(trace));
    std::vector<WeightedFulfilment> rep;
    for (auto& p : define_repetitive_patterns(extended, extended_alignments)) {
      PatternRow row{PatternRow::Type::Repetitive, p.trace, p.positions, p.count, p.fulfilment};
      row.repeat_type = p.repeat.repeat_type;
      row.repetitions = p.repeat.repetitions;
      rep.push_back({row.fulfilment, row.weight});
      report.rows.push_back(std::move(row));
    }
    std::vector<WeightedFulfilment> conc;
    for (const auto& entry : concurrent) {
      if (entry.patterns.empty()) continue;
      std::vector<Alignment> alignments;
      for (const auto& t : entry.representatives) alignments.push_back(report.alignments.at(t));
      for (const auto& positions : entry.patterns) {
        PatternRow row{PatternRow::Type::Concurrent, entry.order.traces.front(), positions,
                       entry.order.count, Fraction{0}};
        row.representatives = entry.representatives.size();
        row.partial = partial_counts(positions, alignments);
        row.interleavings = interleaving_counts(positions, alignments);
        const auto& chosen = config.matching == Matching::Partial ? row.partial : row.interleavings;
        row.fulfilment = Fraction(chosen.first, chosen.second);
        conc.push_back({row.fulfilment, row.weight});
        report.rows.push_back(std::move(row));
      }
    }
    done();

    begin("aggregate");
    std::vector<WeightedFulfilment> all = rep;
    all.insert(all.end(), conc.begin(), conc.end());
    for (const auto& p : rep) report.rep_weight += p.weight;
    for (const auto& p : conc) report.conc_weight += p.weight;
    report.total_weight = report.rep_weight + report.conc_weight;
    if (!rep.empty()) report.g_rep = aggregate(rep);
    if (!conc.empty()) report.g_conc = aggregate(conc);
    report.g_pattern = aggregate(all);
    done();
  } catch (const TimeoutError&) {
    report.timeout_phase = phase;
  }
  return report;
}

namespace {

std::string type_name(PatternRow::Type type) {
  return type == PatternRow::Type::Repetitive ? "repetitive" : "concurrent";
}

std::string positions_text(const std::vector<std::size_t>& positions) {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(positions[i]);
  }
  return out + "}";
}

nlohmann::json score(const std::optional<Fraction>& value) {
  if (!value) return nullptr;
  return {{"value", to_decimal(*value)}, {"exact", to_exact(*value)}};
}

}  // namespace

std::string to_json(const GeneralizationReport& report, bool breakdown) {
  using nlohmann::json;
  json out;
  if (report.complete()) {
    out["g_pattern"] = score(report.g_pattern);
    out["g_rep"] = score(report.g_rep);
    out["g_conc"] = score(report.g_conc);
  } else {
    out["g_pattern"] = nullptr;
    out["g_rep"] = nullptr;
    out["g_conc"] = nullptr;
  }
  out["weights"] = {{"total", report.total_weight},
                    {"repetitive", report.rep_weight},
                    {"concurrent", report.conc_weight}};
  out["config"] = {{"oracle", report.oracle},
                   {"df_filter", report.df_filter},
                   {"matching", std::string(to_string(report.matching))},
                   {"cap", report.cap}};

  json patterns = json::array();
  for (const auto& row : report.rows) {
    json p = {{"type", type_name(row.type)},
              {"trace", row.trace},
              {"positions", row.positions},
              {"weight", row.weight},
              {"pf", to_decimal(row.fulfilment)},
              {"pf_exact", to_exact(row.fulfilment)}};
    if (row.type == PatternRow::Type::Repetitive) {
      p["repeat_type"] = row.repeat_type;
      p["repetitions"] = row.repetitions;
    } else {
      p["representatives"] = row.representatives;
      p["partial"] = {row.partial.first, row.partial.second};
      p["interleavings"] = {row.interleavings.first, row.interleavings.second};
    }
    patterns.push_back(std::move(p));
  }
  out["patterns"] = std::move(patterns);

  json pairs = json::array();
  for (const auto& [x, y] : report.concurrency_pairs) pairs.push_back({x, y});
  out["diagnostics"] = {{"concurrency_pairs", std::move(pairs)},
                        {"warnings", report.warnings},
                        {"capped", report.capped},
                        {"completed_phases", report.completed_phases},
                        {"timeout", report.timeout_phase ? json(*report.timeout_phase) : json(nullptr)}};

  if (breakdown) {
    json alignments = json::array();
    for (const auto& [trace, a] : report.alignments) {
      json steps = json::array();
      for (const auto& s : a.steps) steps.push_back({std::string(to_string(s.op)), s.label});
      alignments.push_back({{"trace", trace}, {"cost", a.cost}, {"steps", std::move(steps)}});
    }
    out["alignments"] = std::move(alignments);
  }
  return out.dump(2) + "\n";
}

std::string to_csv(const GeneralizationReport& report) {
  const auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "type,trace,positions,repeat_type,repetitions,weight,pf,pf_exact,partial,interleavings\n";
  for (const auto& row : report.rows) {
    const bool rep = row.type == PatternRow::Type::Repetitive;
    out << type_name(row.type) << ',' << quote(to_string(row.trace)) << ','
        << quote(positions_text(row.positions)) << ','
        << (rep ? quote(to_string(row.repeat_type)) : "") << ','
        << (rep ? std::to_string(row.repetitions) : "") << ',' << row.weight << ','
        << to_decimal(row.fulfilment) << ',' << to_exact(row.fulfilment) << ',';
    if (!rep) {
      out << row.partial.first << '/' << row.partial.second << ',' << row.interleavings.first << '/'
          << row.interleavings.second;
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string to_text(const GeneralizationReport& report, bool breakdown) {
  std::ostringstream out;
  const auto line = [&](const char* name, const std::optional<Fraction>& value, std::uint64_t weight) {
    out << name << ": ";
    if (!report.complete()) {
      out << "t/out";
    } else if (value) {
      out << to_decimal(*value) << " (" << to_exact(*value) << ")";
    } else {
      out << "n/a";
    }
    out << "  weight " << weight << '\n';
  };
  line("G_pattern", report.g_pattern, report.total_weight);
  line("G_rep", report.g_rep, report.rep_weight);
  line("G_conc", report.g_conc, report.conc_weight);
  out << "oracle " << report.oracle << ", df filter " << report.df_filter << ", matching "
      << to_string(report.matching) << ", cap " << report.cap << '\n';
  if (!report.concurrency_pairs.empty()) {
    out << "concurrent pairs:";
    for (const auto& [x, y] : report.concurrency_pairs) out << " (" << x << ',' << y << ')';
    out << '\n';
  }
  if (breakdown) {
    for (const auto& row : report.rows) {
      out << type_name(row.type) << ' ' << to_string(row.trace) << ' ' << positions_text(row.positions);
      if (row.type == PatternRow::Type::Repetitive) {
        out << " k=" << row.repetitions;
      } else {
        out << " PM " << row.partial.first << '/' << row.partial.second << " IM "
            << row.interleavings.first << '/' << row.interleavings.second;
      }
      out << " weight " << row.weight << " pf " << to_exact(row.fulfilment) << '\n';
    }
  }
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  for (const auto& c : report.capped) out << "capped: " << c << '\n';
  if (report.timeout_phase) {
    out << "timeout during phase '" << *report.timeout_phase << "'; completed:";
    for (const auto& p : report.completed_phases) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

}  // namespace patgen
