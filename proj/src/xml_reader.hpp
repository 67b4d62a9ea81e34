#pragma once

// Thin SAX layer over expat shared by the XES and PNML readers.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace patgen::detail {

using XmlAttributes = std::map<std::string, std::string, std::less<>>;

struct XmlPosition {
  std::size_t line = 0;
  std::size_t column = 0;
};

class XmlHandler {
 public:
  virtual ~XmlHandler() = default;
  virtual void start_element(std::string_view name, const XmlAttributes& attributes,
                             XmlPosition where) = 0;
  virtual void end_element(std::string_view name) = 0;
  virtual void characters(std::string_view) {}
};

/// Drives `handler` over `document`. Malformed XML raises ParseError with the
/// expat line/column; exceptions thrown by the handler propagate unchanged.
void parse_xml(std::string_view document, XmlHandler& handler);

/// Local part of a possibly namespace-prefixed element name.
std::string_view local_name(std::string_view name);

}  // namespace patgen::detail
