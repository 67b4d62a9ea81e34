#include "patgen/eventlog.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "patgen/error.hpp"

namespace patgen {

std::string to_string(std::span<const Label> trace) {
  std::string out = "<";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i != 0) out += ',';
    out += trace[i];
  }
  out += '>';
  return out;
}

void EventLog::add(const Trace& trace, std::uint64_t count) {
  if (count == 0) return;
  entries_[trace] += count;
}

EventLog& EventLog::operator+=(const EventLog& other) {
  for (const auto& [trace, count] : other.entries_) add(trace, count);
  return *this;
}

EventLog operator+(EventLog lhs, const EventLog& rhs) {
  lhs += rhs;
  return lhs;
}

std::uint64_t EventLog::count(const Trace& trace) const {
  const auto it = entries_.find(trace);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Trace> EventLog::unique() const {
  std::vector<Trace> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.first);
  return out;
}

std::uint64_t EventLog::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const auto& e) { return acc + e.second; });
}

EventLog parse_csv(std::string_view text) {
  EventLog log;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto sep = line.find(';');
    if (sep == std::string_view::npos) {
      throw ParseError("expected 'count;labels'", line_no);
    }
    const auto count_text = line.substr(0, sep);
    std::uint64_t count = 0;
    const auto [end, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (count_text.empty() || ec != std::errc{} || end != count_text.data() + count_text.size()) {
      throw ParseError("invalid trace count '" + std::string(count_text) + "'", line_no);
    }
    if (count == 0) throw ParseError("trace count must be positive", line_no);

    Trace trace;
    auto labels = line.substr(sep + 1);
    if (!labels.empty()) {
      while (true) {
        const auto comma = labels.find(',');
        const auto label = labels.substr(0, comma);
        if (label.empty()) throw ParseError("empty activity label", line_no);
        trace.emplace_back(label);
        if (comma == std::string_view::npos) break;
        labels.remove_prefix(comma + 1);
      }
    }
    log.add(trace, count);
  }
  return log;
}

std::string render_csv(const EventLog& log) {
  std::string out;
  for (const auto& [trace, count] : log.entries()) {
    out += std::to_string(count);
    out += ';';
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const auto& label = trace[i];
      if (label.empty() || label.find_first_of(",;\r\n") != std::string::npos) {
        throw ConfigError("label '" + label + "' cannot be written as CSV");
      }
      if (i != 0) out += ',';
      out += label;
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

EventLog load_log(const std::filesystem::path& path) {
  const auto text = read_file(path);
  auto ext = path.extension().string();
  for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".xes" ? parse_xes(text) : parse_csv(text);
}

}  // namespace patgen
