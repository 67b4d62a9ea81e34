#include <map>
#include <optional>
#include <sstream>

#include "patgen/error.hpp"
#include "patgen/petri.hpp"
#include "xml_reader.hpp"

namespace patgen {
namespace {

struct RawNode {
  std::string id;
  std::string name;
  bool has_name = false;
  bool invisible = false;
  std::string marking;
  std::size_t line = 0;
};

struct RawArc {
  std::string source;
  std::string target;
  std::string inscription;
  std::size_t line = 0;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

class PnmlHandler final : public detail::XmlHandler {
 public:
  void start_element(std::string_view qname, const detail::XmlAttributes& attributes,
                     detail::XmlPosition where) override {
    const auto name = detail::local_name(qname);
    stack_.emplace_back(name);
    if (name == "place" || name == "transition") {
      const auto id = attributes.find("id");
      if (id == attributes.end()) {
        throw ParseError(std::string(name) + " without id", where.line, where.column);
      }
      auto& list = name == "place" ? places_ : transitions_;
      list.push_back({id->second, {}, false, false, {}, where.line});
      node_ = &list.back();
      node_depth_ = stack_.size();
    } else if (name == "arc") {
      const auto source = attributes.find("source");
      const auto target = attributes.find("target");
      if (source == attributes.end() || target == attributes.end()) {
        throw ParseError("arc without source or target", where.line, where.column);
      }
      arcs_.push_back({source->second, target->second, {}, where.line});
      arc_depth_ = stack_.size();
    } else if (name == "toolspecific" && node_ && stack_.size() == node_depth_ + 1) {
      const auto activity = attributes.find("activity");
      if (activity != attributes.end() && activity->second == "$invisible$") node_->invisible = true;
      const auto invisible = attributes.find("invisible");
      if (invisible != attributes.end() && invisible->second == "true") node_->invisible = true;
    } else if (name == "text") {
      text_.clear();
    }
  }

  void characters(std::string_view text) override { text_ += text; }

  void end_element(std::string_view) override {
    const std::string name = stack_.back();
    if (name == "text" && stack_.size() >= 2) {
      const auto& parent = stack_[stack_.size() - 2];
      if (node_ && stack_.size() == node_depth_ + 2) {
        if (parent == "name") {
          node_->name = trim(text_);
          node_->has_name = true;
        } else if (parent == "initialMarking") {
          node_->marking = trim(text_);
        }
      } else if (arc_depth_ && stack_.size() == *arc_depth_ + 2 && parent == "inscription") {
        arcs_.back().inscription = trim(text_);
      }
    }
    if (node_ && stack_.size() == node_depth_ && (name == "place" || name == "transition")) {
      node_ = nullptr;
    }
    if (arc_depth_ && stack_.size() == *arc_depth_) arc_depth_.reset();
    stack_.pop_back();
  }

  SystemNet build() const;

 private:
  std::vector<std::string> stack_;
  std::vector<RawNode> places_;  // deque semantics not needed: node_ reset before push
  std::vector<RawNode> transitions_;
  std::vector<RawArc> arcs_;
  RawNode* node_ = nullptr;
  std::size_t node_depth_ = 0;
  std::optional<std::size_t> arc_depth_;
  std::string text_;
};

SystemNet PnmlHandler::build() const {
  SystemNet sn;
  std::map<std::string, PlaceIndex> place_ids;
  std::map<std::string, TransitionIndex> transition_ids;
  std::optional<PlaceIndex> marked;

  for (const auto& raw : places_) {
    if (place_ids.count(raw.id) || transition_ids.count(raw.id)) {
      throw ModelError("duplicate node id '" + raw.id + "'");
    }
    const auto p = sn.net.add_place(raw.id, raw.name);
    place_ids.emplace(raw.id, p);
    if (!raw.marking.empty() && raw.marking != "0") {
      if (raw.marking != "1") {
        throw ModelError("place '" + raw.id + "' has initial marking " + raw.marking +
                         "; only safe nets with one initial token are supported");
      }
      if (marked) throw ModelError("more than one initially marked place");
      marked = p;
    }
  }
  std::map<Label, std::string> label_owner;
  for (const auto& raw : transitions_) {
    if (place_ids.count(raw.id) || transition_ids.count(raw.id)) {
      throw ModelError("duplicate node id '" + raw.id + "'");
    }
    std::optional<Label> label;
    if (!raw.invisible && !raw.name.empty()) label = raw.name;
    if (label) {
      const auto [it, inserted] = label_owner.emplace(*label, raw.id);
      if (!inserted) {
        throw ModelError("transitions '" + it->second + "' and '" + raw.id +
                         "' share label '" + *label + "' (net must be uniquely labelled)");
      }
    }
    transition_ids.emplace(raw.id, sn.net.add_transition(raw.id, label));
  }
  for (const auto& arc : arcs_) {
    if (!arc.inscription.empty() && arc.inscription != "1") {
      throw ModelError("arc " + arc.source + "->" + arc.target + " has weight " +
                       arc.inscription + "; only unit weights are supported");
    }
    const auto sp = place_ids.find(arc.source);
    const auto st = transition_ids.find(arc.source);
    const auto tp = place_ids.find(arc.target);
    const auto tt = transition_ids.find(arc.target);
    if (sp != place_ids.end() && tt != transition_ids.end()) {
      sn.net.add_input_arc(sp->second, tt->second);
    } else if (st != transition_ids.end() && tp != place_ids.end()) {
      sn.net.add_output_arc(st->second, tp->second);
    } else {
      throw ModelError("arc " + arc.source + "->" + arc.target + " (line " +
                       std::to_string(arc.line) +
                       ") does not connect a known place and a known transition");
    }
  }

  std::vector<PlaceIndex> sources;
  std::vector<PlaceIndex> sinks;
  for (PlaceIndex p = 0; p < sn.net.places().size(); ++p) {
    if (sn.net.place_preset(p).empty()) sources.push_back(p);
    if (sn.net.place_postset(p).empty()) sinks.push_back(p);
  }
  if (marked) {
    sn.source = *marked;
  } else if (sources.size() == 1) {
    sn.source = sources.front();
  } else {
    throw ModelError("expected exactly one source place, found " + std::to_string(sources.size()));
  }
  if (sinks.size() != 1) {
    throw ModelError("expected exactly one sink place, found " + std::to_string(sinks.size()));
  }
  sn.sink = sinks.front();
  return sn;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SystemNet parse_pnml(std::string_view document) {
  PnmlHandler handler;
  detail::parse_xml(document, handler);
  return handler.build();
}

SystemNet load_pnml(const std::filesystem::path& path) { return parse_pnml(read_file(path)); }

std::string render_pnml(const SystemNet& sn) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<pnml>\n  <net id=\"net\" type=\"http://www.pnml.org/version-2009/grammar/pnmlcoremodel\">\n"
      << "    <page id=\"page\">\n";
  const auto& net = sn.net;
  for (PlaceIndex p = 0; p < net.places().size(); ++p) {
    const auto& place = net.place(p);
    out << "      <place id=\"" << xml_escape(place.id) << "\">";
    if (!place.name.empty()) out << "<name><text>" << xml_escape(place.name) << "</text></name>";
    if (p == sn.source) out << "<initialMarking><text>1</text></initialMarking>";
    out << "</place>\n";
  }
  for (const auto& t : net.transitions()) {
    out << "      <transition id=\"" << xml_escape(t.id) << "\">";
    if (t.label) {
      out << "<name><text>" << xml_escape(*t.label) << "</text></name>";
    } else {
      out << "<name><text>" << xml_escape(t.id) << "</text></name>"
          << "<toolspecific tool=\"ProM\" version=\"6.4\" activity=\"$invisible$\"/>";
    }
    out << "</transition>\n";
  }
  std::size_t arc = 0;
  for (const auto& t : net.transitions()) {
    for (auto p : t.preset) {
      out << "      <arc id=\"a" << arc++ << "\" source=\"" << xml_escape(net.place(p).id)
          << "\" target=\"" << xml_escape(t.id) << "\"/>\n";
    }
    for (auto p : t.postset) {
      out << "      <arc id=\"a" << arc++ << "\" source=\"" << xml_escape(t.id)
          << "\" target=\"" << xml_escape(net.place(p).id) << "\"/>\n";
    }
  }
  out << "    </page>\n  </net>\n</pnml>\n";
  return out.str();
}

}  // namespace patgen
