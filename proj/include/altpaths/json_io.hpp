#pragma once

// JSON encoding of networks and instances.
//
//   {"nodes":[ids],
//    "arcs":[{"id":..,"tail":..,"head":..,"cap":..,"cost":..}],
//    "source":id, "dest":id, "k":n, "congested_arc":id|null}
//
// A bare network file carries only "nodes" and "arcs". Unknown fields are
// rejected; errors name the offending field path.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "altpaths/network.hpp"
#include "json.hpp"

namespace altpaths {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& path,
                           std::initializer_list<std::string_view> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (std::string_view name : allowed) known = known || it.key() == name;
    if (!known) throw ParseError(path + "." + it.key() + ": unknown field");
  }
}

inline const json& field(const json& obj, const std::string& path, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(path + "." + name + ": missing field");
  return *it;
}

inline std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path + ": expected integer");
  return v.get<std::int64_t>();
}

inline json network_fields(const Network& net) {
  json arcs = json::array();
  for (const ArcSpec& a : net.arc_specs()) {
    arcs.push_back({{"id", a.id}, {"tail", a.tail}, {"head", a.head}, {"cap", a.cap},
                    {"cost", a.cost}});
  }
  return {{"nodes", net.node_ids()}, {"arcs", std::move(arcs)}};
}

inline Network parse_network_fields(const json& doc, const std::string& root) {
  const json& nodes = field(doc, root, "nodes");
  if (!nodes.is_array()) throw ParseError(root + ".nodes: expected array");
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ids.push_back(integer(nodes[i], root + ".nodes[" + std::to_string(i) + "]"));
  }
  const json& arcs = field(doc, root, "arcs");
  if (!arcs.is_array()) throw ParseError(root + ".arcs: expected array");
  std::vector<ArcSpec> specs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string p = root + ".arcs[" + std::to_string(i) + "]";
    const json& a = arcs[i];
    if (!a.is_object()) throw ParseError(p + ": expected object");
    reject_unknown(a, p, {"id", "tail", "head", "cap", "cost"});
    ArcSpec s;
    s.id = integer(field(a, p, "id"), p + ".id");
    s.tail = integer(field(a, p, "tail"), p + ".tail");
    s.head = integer(field(a, p, "head"), p + ".head");
    s.cap = integer(field(a, p, "cap"), p + ".cap");
    s.cost = integer(field(a, p, "cost"), p + ".cost");
    if (s.cap < 1) {
      throw ParseError(p + ".cap: arc " + std::to_string(s.id) + " has capacity " +
                       std::to_string(s.cap) + ", must be >= 1");
    }
    if (s.cost < 1) {
      throw ParseError(p + ".cost: arc " + std::to_string(s.id) + " has cost " +
                       std::to_string(s.cost) + ", must be >= 1");
    }
    specs.push_back(s);
  }
  try {
    return Network(std::move(ids), std::move(specs));
  } catch (const ModelError& e) {
    throw ParseError(root + ": " + e.what());
  }
}

inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace detail

inline nlohmann::json network_to_json(const Network& net) { return detail::network_fields(net); }

inline Network network_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("$: expected object");
  detail::reject_unknown(doc, "$", {"nodes", "arcs"});
  return detail::parse_network_fields(doc, "$");
}

inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json doc = detail::network_fields(inst.network);
  doc["source"] = inst.network.node_id(inst.source);
  doc["dest"] = inst.network.node_id(inst.dest);
  doc["k"] = inst.k;
  doc["congested_arc"] =
      inst.congested_arc ? nlohmann::json(*inst.congested_arc) : nlohmann::json(nullptr);
  return doc;
}

inline Instance instance_from_json(const nlohmann::json& doc) {
  using detail::field;
  using detail::integer;
  if (!doc.is_object()) throw ParseError("$: expected object");
  detail::reject_unknown(doc, "$", {"nodes", "arcs", "source", "dest", "k", "congested_arc"});
  Instance inst;
  inst.network = detail::parse_network_fields(doc, "$");
  const NodeId src = integer(field(doc, "$", "source"), "$.source");
  const NodeId dst = integer(field(doc, "$", "dest"), "$.dest");
  auto s = inst.network.node_index(src);
  auto t = inst.network.node_index(dst);
  if (!s) throw ParseError("$.source: node " + std::to_string(src) + " not in nodes");
  if (!t) throw ParseError("$.dest: node " + std::to_string(dst) + " not in nodes");
  inst.source = *s;
  inst.dest = *t;
  inst.k = static_cast<int>(integer(field(doc, "$", "k"), "$.k"));
  const auto& congested = field(doc, "$", "congested_arc");
  if (!congested.is_null()) inst.congested_arc = integer(congested, "$.congested_arc");
  try {
    inst.validate();
  } catch (const ModelError& e) {
    throw ParseError(std::string("$: ") + e.what());
  }
  return inst;
}

inline Instance parse_instance(const std::string& text) {
  return instance_from_json(detail::parse_text(text));
}

inline Network parse_network(const std::string& text) {
  return network_from_json(detail::parse_text(text));
}

inline Instance load_instance(const std::string& path) {
  return parse_instance(detail::read_file(path));
}

inline void save_instance(const Instance& inst, const std::string& path) {
  detail::write_file(path, instance_to_json(inst).dump(2) + "\n");
}

inline Network load_network(const std::string& path) {
  return parse_network(detail::read_file(path));
}

inline void save_network(const Network& net, const std::string& path) {
  detail::write_file(path, network_to_json(net).dump(2) + "\n");
}

}  // namespace altpaths
