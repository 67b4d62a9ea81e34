#include "xml_reader.hpp"

#include <expat.h>

#include <exception>
#include <limits>
#include <memory>

#include "patgen/error.hpp"

namespace patgen::detail {
namespace {

struct ParserDeleter {
  void operator()(XML_Parser parser) const { XML_ParserFree(parser); }
};

struct Context {
  XML_Parser parser;
  XmlHandler* handler;
  std::exception_ptr failure;
};

XmlPosition position_of(XML_Parser parser) {
  return {static_cast<std::size_t>(XML_GetCurrentLineNumber(parser)),
          static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser)) + 1};
}

// Handler exceptions must not unwind through expat's C frames: stash the
// exception, stop the parser, rethrow after XML_Parse returns.
template <typename Fn>
void guarded(Context* ctx, Fn&& fn) {
  if (ctx->failure) return;
  try {
    fn();
  } catch (...) {
    ctx->failure = std::current_exception();
    XML_StopParser(ctx->parser, XML_FALSE);
  }
}

void on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* ctx = static_cast<Context*>(data);
  guarded(ctx, [&] {
    XmlAttributes attributes;
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
      attributes.emplace(attrs[i], attrs[i + 1]);
    }
    ctx->handler->start_element(name, attributes, position_of(ctx->parser));
  });
}

void on_end(void* data, const XML_Char* name) {
  auto* ctx = static_cast<Context*>(data);
  guarded(ctx, [&] { ctx->handler->end_element(name); });
}

void on_text(void* data, const XML_Char* text, int length) {
  auto* ctx = static_cast<Context*>(data);
  guarded(ctx, [&] {
    ctx->handler->characters(std::string_view(text, static_cast<std::size_t>(length)));
  });
}

}  // namespace

void parse_xml(std::string_view document, XmlHandler& handler) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreate("UTF-8"));
  if (!parser) throw Error("cannot allocate XML parser");
  if (document.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw ParseError("XML document too large");
  }

  Context ctx{parser.get(), &handler, nullptr};
  XML_SetUserData(parser.get(), &ctx);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  const auto status = XML_Parse(parser.get(), document.data(),
                                static_cast<int>(document.size()), XML_TRUE);
  if (ctx.failure) std::rethrow_exception(ctx.failure);
  if (status != XML_STATUS_OK) {
    const auto where = position_of(parser.get());
    throw ParseError(std::string("malformed XML: ") +
                         XML_ErrorString(XML_GetErrorCode(parser.get())),
                     where.line, where.column);
  }
}

std::string_view local_name(std::string_view name) {
  const auto colon = name.rfind(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

}  // namespace patgen::detail
