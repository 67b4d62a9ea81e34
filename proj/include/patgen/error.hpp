#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patgen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (XES, PNML, CSV, oracle JSON).
/// Line and column are 1-based; zero means "unknown".
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0,
                      std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structural problem with a net: bad references, duplicate labels,
/// safety violations found while exploring markings.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// No proper alignment exists or the search budget ran out.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// A partial order has more linearizations than the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& message, std::size_t cap)
      : Error(message), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Wall-clock budget exhausted. Carries the phase that was running.
class TimeoutError : public Error {
 public:
  explicit TimeoutError(std::string phase)
      : Error("timeout during phase '" + phase + "'"), phase_(std::move(phase)) {}
  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string phase_;
};

}  // namespace patgen
