#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "patgen/run.hpp"

int main(int argc, char** argv) {
  patgen::RunConfig config;
  CLI::App app{"Pattern-based generalization of a process model with respect to an event log"};
  app.add_option("--log", config.log_path, "event log (.xes, otherwise count;labels CSV)")->required();
  app.add_option("--model", config.model_path, "system net in PNML")->required();
  app.add_option("--oracle", config.oracle, "alpha | alpha-plus | explicit:<json>")
      ->capture_default_str();
  app.add_option("--df-filter", config.df_filter, "directly-follows noise filter in [0,1]")
      ->capture_default_str();
  app.add_option("--matching", config.matching, "concurrent pattern matching")
      ->check(CLI::IsMember({"partial", "interleavings"}))
      ->capture_default_str();
  app.add_option("--cap", config.cap, "linearizations per partial order")->capture_default_str();
  app.add_option("--timeout", config.timeout_seconds, "wall-clock budget in seconds")
      ->capture_default_str();
  const std::map<std::string, patgen::OutputFormat> formats{
      {"json", patgen::OutputFormat::Json},
      {"csv", patgen::OutputFormat::Csv},
      {"text", patgen::OutputFormat::Text}};
  app.add_option("--output", config.output, "report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text")
      ->option_text("TEXT:{json,csv,text} [text]");
  app.add_flag("--breakdown", config.breakdown, "per-pattern rows and alignments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : patgen::kInvalidInput;
  }
  if (const auto threads = patgen::threads_from_environment()) config.threads = *threads;
  return patgen::run(config, std::cout, std::cerr);
}
