#include "zxmbqc/serialize.hpp"

#include <sstream>

namespace zxmbqc {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

Phase phase_field(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_number_integer()) return Phase(v.get<std::int64_t>());
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' is not a phase string");
  try {
    return Phase::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

const Json& array(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' is not an array");
  return v;
}

std::string dot_quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string angle_label(const Phase& p) { return p.is_zero() ? "0" : p.to_string() + "pi"; }

}  // namespace

Json diagram_to_json(const ZxDiagram& d) {
  Json spiders = Json::array(), edges = Json::array();
  for (const auto& [v, s] : d.spiders()) {
    Json o{{"id", v}, {"kind", s.kind == SpiderKind::Z ? "Z" : "X"}, {"phase", s.phase.to_string()}};
    if (s.parametric) o["param"] = true;
    spiders.push_back(std::move(o));
  }
  for (const auto& [id, e] : d.edges())
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", e.kind == EdgeKind::Plain ? "plain" : "h"}});
  return {{"spiders", spiders}, {"edges", edges}, {"inputs", d.inputs()}, {"outputs", d.outputs()}};
}

ZxDiagram diagram_from_json(const Json& j) {
  ZxDiagram d;
  for (const Json& s : array(j, "spiders")) {
    const auto kind = get<std::string>(s, "kind");
    if (kind != "Z" && kind != "X") throw ParseError("spider kind must be Z or X, got " + kind);
    const Spider sp{kind == "Z" ? SpiderKind::Z : SpiderKind::X, phase_field(s, "phase"), get_or(s, "param", false)};
    try {
      d.add_spider_with_id(get<NodeId>(s, "id"), sp);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  for (const Json& e : array(j, "edges")) {
    const auto kind = get_or<std::string>(e, "kind", "plain");
    if (kind != "plain" && kind != "h") throw ParseError("edge kind must be plain or h, got " + kind);
    try {
      d.add_edge(get<NodeId>(e, "a"), get<NodeId>(e, "b"), kind == "h" ? EdgeKind::Hadamard : EdgeKind::Plain);
    } catch (const Error& err) {
      throw ParseError(err.what());
    }
  }
  for (auto [key, list] : {std::pair{"inputs", &d.inputs()}, std::pair{"outputs", &d.outputs()}}) {
    *list = get_or<std::vector<NodeId>>(j, key, {});
    for (NodeId v : *list)
      if (!d.has_spider(v)) throw ParseError(std::string(key) + " names unknown spider " + std::to_string(v));
  }
  return d;
}

namespace {

constexpr std::pair<GateKind, const char*> kOps[] = {
    {GateKind::Phase, "P"}, {GateKind::CNOT, "CNOT"}, {GateKind::PauliZ, "Z"},
    {GateKind::PauliY, "Y"}, {GateKind::Hadamard, "H"},
};

}  // namespace

Json circuit_to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates) {
    Json o;
    for (const auto& [k, name] : kOps)
      if (k == g.kind) o["op"] = name;
    o["qubits"] = g.qubits;
    if (g.kind == GateKind::Phase) o["phase"] = g.phase.to_string();
    gates.push_back(std::move(o));
  }
  return {{"width", c.width}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c;
  c.width = get<std::size_t>(j, "width");
  for (const Json& o : array(j, "gates")) {
    const auto op = get<std::string>(o, "op");
    Gate g;
    bool known = false;
    for (const auto& [k, name] : kOps)
      if (op == name) g.kind = k, known = true;
    if (!known) throw ParseError("unknown gate op " + op);
    g.qubits = get<std::vector<std::size_t>>(o, "qubits");
    if (g.kind == GateKind::Phase) g.phase = phase_field(o, "phase");
    c.gates.push_back(std::move(g));
  }
  try {
    c.check();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return c;
}

Json pattern_to_json(const MeasurementPattern& p) {
  Json qubits = Json::array(), edges = Json::array();
  for (const auto& [id, q] : p.qubits) {
    Json o{{"id", id}, {"angle", q.angle.to_string()}};
    if (q.basis == MeasurementBasis::Z) o["basis"] = "Z";
    if (q.parametric) o["param"] = true;
    if (!q.label.empty()) o["label"] = q.label;
    qubits.push_back(std::move(o));
  }
  for (const auto& [a, b] : p.edges) edges.push_back({a, b});
  return {{"qubits", qubits}, {"edges", edges}, {"order", p.order}, {"readouts", p.readouts}};
}

MeasurementPattern pattern_from_json(const Json& j) {
  MeasurementPattern p;
  try {
    for (const Json& o : array(j, "qubits")) {
      PatternQubit q{get<QubitId>(o, "id"), phase_field(o, "angle"), MeasurementBasis::XY, get_or(o, "param", false),
                     get_or<std::string>(o, "label", "")};
      const auto basis = get_or<std::string>(o, "basis", "XY");
      if (basis == "Z") q.basis = MeasurementBasis::Z;
      else if (basis != "XY") throw ParseError("basis must be XY or Z, got " + basis);
      p.add_qubit(std::move(q));
    }
    for (const Json& e : array(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
      p.add_edge(e[0].get<QubitId>(), e[1].get<QubitId>());
    }
    if (j.contains("order")) {
      p.order = get<std::vector<QubitId>>(j, "order");
    } else {
      for (const auto& [id, q] : p.qubits) p.order.push_back(id);
    }
    p.readouts = get_or<std::vector<QubitId>>(j, "readouts", {});
    p.check();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return p;
}

Json steps_to_json(const std::vector<RewriteStep>& steps) {
  Json out = Json::array();
  for (const RewriteStep& s : steps) out.push_back({{"rule", s.rule}, {"before", s.before}, {"after", s.after}});
  return out;
}

std::string to_dot(const ZxDiagram& d) {
  std::ostringstream os;
  os << "graph zx {\n";
  for (const auto& [v, s] : d.spiders())
    os << "  n" << v << " [shape=" << (s.kind == SpiderKind::Z ? "ellipse" : "box")
       << ", label=" << dot_quoted(angle_label(s.phase)) << "];\n";
  for (const auto& [id, e] : d.edges())
    os << "  n" << e.a << " -- n" << e.b << (e.kind == EdgeKind::Hadamard ? " [style=dashed]" : "") << ";\n";
  for (std::size_t i = 0; i < d.inputs().size(); ++i)
    os << "  in" << i << " [shape=point];\n  in" << i << " -- n" << d.inputs()[i] << ";\n";
  for (std::size_t i = 0; i < d.outputs().size(); ++i)
    os << "  out" << i << " [shape=point];\n  n" << d.outputs()[i] << " -- out" << i << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const MeasurementPattern& p) {
  std::ostringstream os;
  os << "graph pattern {\n";
  for (const auto& [id, q] : p.qubits) {
    std::string label = q.basis == MeasurementBasis::Z ? "Z" : angle_label(q.angle);
    if (!q.label.empty()) label = q.label + "\\n" + label;
    os << "  q" << id << " [shape=ellipse, label=" << dot_quoted(label) << "];\n";
  }
  for (const auto& [a, b] : p.edges) os << "  q" << a << " -- q" << b << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace zxmbqc
