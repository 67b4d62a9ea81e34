#include <optional>

#include "patgen/error.hpp"
#include "patgen/eventlog.hpp"
#include "xml_reader.hpp"

namespace patgen {
namespace {

// Only <trace>/<event>/<string key="concept:name"> matter. Attributes nested
// deeper than a direct child of <event> (lists, containers) are ignored.
class XesHandler final : public detail::XmlHandler {
 public:
  void start_element(std::string_view qname, const detail::XmlAttributes& attributes,
                     detail::XmlPosition where) override {
    const auto name = detail::local_name(qname);
    ++depth_;
    if (name == "trace" && !trace_depth_) {
      trace_depth_ = depth_;
      ++trace_index_;
      current_.clear();
    } else if (name == "event" && trace_depth_ && !event_depth_) {
      event_depth_ = depth_;
      label_.reset();
      event_line_ = where.line;
    } else if (name == "string" && event_depth_ && depth_ == *event_depth_ + 1) {
      const auto key = attributes.find("key");
      if (key != attributes.end() && key->second == "concept:name") {
        const auto value = attributes.find("value");
        if (value == attributes.end()) {
          throw ParseError("concept:name attribute without value", where.line, where.column);
        }
        label_ = value->second;
      }
    }
  }

  void end_element(std::string_view) override {
    if (event_depth_ && depth_ == *event_depth_) {
      if (!label_ || label_->empty()) {
        throw ParseError("event in trace #" + std::to_string(trace_index_) +
                             " has no concept:name",
                         event_line_);
      }
      current_.push_back(*label_);
      event_depth_.reset();
    } else if (trace_depth_ && depth_ == *trace_depth_) {
      log_.add(current_, 1);
      trace_depth_.reset();
    }
    --depth_;
  }

  EventLog take() { return std::move(log_); }

 private:
  EventLog log_;
  Trace current_;
  std::optional<Label> label_;
  std::size_t depth_ = 0;
  std::optional<std::size_t> trace_depth_;
  std::optional<std::size_t> event_depth_;
  std::size_t trace_index_ = 0;
  std::size_t event_line_ = 0;
};

}  // namespace

EventLog parse_xes(std::string_view document) {
  XesHandler handler;
  detail::parse_xml(document, handler);
  return handler.take();
}

}  // namespace patgen
