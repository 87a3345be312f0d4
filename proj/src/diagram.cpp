#include "zxmbqc/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace zxmbqc {

NodeId ZxDiagram::add_spider(SpiderKind kind, Phase phase, bool parametric) {
  const NodeId id = next_node_++;
  spiders_.emplace(id, Spider{kind, phase, parametric});
  incidence_[id];
  return id;
}

void ZxDiagram::add_spider_with_id(NodeId id, const Spider& s) {
  if (id < 0) throw std::invalid_argument("negative node id");
  if (spiders_.count(id) != 0) throw std::invalid_argument("node id " + std::to_string(id) + " taken");
  spiders_.emplace(id, s);
  incidence_[id];
  next_node_ = std::max(next_node_, id + 1);
}

EdgeId ZxDiagram::add_edge(NodeId a, NodeId b, EdgeKind kind) {
  if (!has_spider(a)) throw UnknownNode("edge endpoint " + std::to_string(a));
  if (!has_spider(b)) throw UnknownNode("edge endpoint " + std::to_string(b));
  if (a == b) throw SelfLoop("edge " + std::to_string(a) + "-" + std::to_string(b));
  return add_edge_unchecked(a, b, kind);
}

EdgeId ZxDiagram::add_edge_unchecked(NodeId a, NodeId b, EdgeKind kind) {
  const EdgeId id = next_edge_++;
  edges_.emplace(id, Edge{a, b, kind});
  incidence_[a].insert(id);
  incidence_[b].insert(id);
  return id;
}

void ZxDiagram::erase_spider_unchecked(NodeId v) { spiders_.erase(v); }

void ZxDiagram::remove_spider(NodeId v) {
  if (!has_spider(v)) throw UnknownNode("node " + std::to_string(v));
  for (EdgeId e : incident_edges(v)) remove_edge(e);
  spiders_.erase(v);
  incidence_.erase(v);
}

void ZxDiagram::remove_edge(EdgeId e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw UnknownEdge("edge " + std::to_string(e));
  incidence_[it->second.a].erase(e);
  incidence_[it->second.b].erase(e);
  edges_.erase(it);
}

const Spider& ZxDiagram::spider(NodeId v) const {
  auto it = spiders_.find(v);
  if (it == spiders_.end()) throw UnknownNode("node " + std::to_string(v));
  return it->second;
}

Spider& ZxDiagram::spider(NodeId v) {
  auto it = spiders_.find(v);
  if (it == spiders_.end()) throw UnknownNode("node " + std::to_string(v));
  return it->second;
}

const Edge& ZxDiagram::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw UnknownEdge("edge " + std::to_string(e));
  return it->second;
}

void ZxDiagram::set_edge_kind(EdgeId e, EdgeKind kind) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw UnknownEdge("edge " + std::to_string(e));
  it->second.kind = kind;
}

std::vector<EdgeId> ZxDiagram::incident_edges(NodeId v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::vector<NodeId> ZxDiagram::neighbors(NodeId v) const {
  std::set<NodeId> out;
  for (EdgeId e : incident_edges(v)) out.insert(edges_.at(e).other(v));
  return {out.begin(), out.end()};
}

std::vector<EdgeId> ZxDiagram::edges_between(NodeId a, NodeId b) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident_edges(a)) {
    const Edge& ed = edges_.at(e);
    if (ed.other(a) == b) out.push_back(e);
  }
  return out;
}

std::size_t ZxDiagram::degree(NodeId v) const {
  auto it = incidence_.find(v);
  return it == incidence_.end() ? 0 : it->second.size();
}

std::size_t ZxDiagram::boundary_count(NodeId v) const {
  return static_cast<std::size_t>(std::count(inputs_.begin(), inputs_.end(), v) +
                                  std::count(outputs_.begin(), outputs_.end(), v));
}

void ZxDiagram::replace_boundary(NodeId from, NodeId to) {
  std::replace(inputs_.begin(), inputs_.end(), from, to);
  std::replace(outputs_.begin(), outputs_.end(), from, to);
}

bool operator==(const Spider& x, const Spider& y) {
  return x.kind == y.kind && x.phase == y.phase && x.parametric == y.parametric;
}

bool operator==(const Edge& x, const Edge& y) {
  return x.a == y.a && x.b == y.b && x.kind == y.kind;
}

bool operator==(const ZxDiagram& x, const ZxDiagram& y) {
  return x.spiders_ == y.spiders_ && x.edges_ == y.edges_ && x.inputs_ == y.inputs_ &&
         x.outputs_ == y.outputs_;
}

ZxDiagram new_diagram(std::size_t n_in, std::size_t n_out) {
  ZxDiagram d;
  for (std::size_t i = 0; i < n_in; ++i) d.inputs().push_back(d.add_spider(SpiderKind::Z));
  for (std::size_t i = 0; i < n_out; ++i) d.outputs().push_back(d.add_spider(SpiderKind::Z));
  for (std::size_t i = 0; i < std::min(n_in, n_out); ++i)
    d.add_edge(d.inputs()[i], d.outputs()[i], EdgeKind::Plain);
  return d;
}

namespace {

// Copies every spider and edge of `src` into `dst` under fresh ids.
std::map<NodeId, NodeId> absorb(ZxDiagram& dst, const ZxDiagram& src) {
  std::map<NodeId, NodeId> remap;
  for (const auto& [id, s] : src.spiders()) remap[id] = dst.add_spider(s.kind, s.phase, s.parametric);
  for (const auto& [id, e] : src.edges()) dst.add_edge(remap.at(e.a), remap.at(e.b), e.kind);
  return remap;
}

}  // namespace

ZxDiagram compose(const ZxDiagram& d1, const ZxDiagram& d2) {
  if (d1.outputs().size() != d2.inputs().size())
    throw ArityMismatch("compose: " + std::to_string(d1.outputs().size()) + " outputs vs " +
                        std::to_string(d2.inputs().size()) + " inputs");
  ZxDiagram out;
  auto m1 = absorb(out, d1);
  auto m2 = absorb(out, d2);
  for (std::size_t i = 0; i < d1.outputs().size(); ++i)
    out.add_edge(m1.at(d1.outputs()[i]), m2.at(d2.inputs()[i]), EdgeKind::Plain);
  for (NodeId v : d1.inputs()) out.inputs().push_back(m1.at(v));
  for (NodeId v : d2.outputs()) out.outputs().push_back(m2.at(v));
  return out;
}

ZxDiagram tensor_product(const ZxDiagram& d1, const ZxDiagram& d2) {
  ZxDiagram out;
  auto m1 = absorb(out, d1);
  auto m2 = absorb(out, d2);
  for (NodeId v : d1.inputs()) out.inputs().push_back(m1.at(v));
  for (NodeId v : d2.inputs()) out.inputs().push_back(m2.at(v));
  for (NodeId v : d1.outputs()) out.outputs().push_back(m1.at(v));
  for (NodeId v : d2.outputs()) out.outputs().push_back(m2.at(v));
  return out;
}

ValidationReport validate(const ZxDiagram& d) {
  ValidationReport report;
  for (const auto& [id, e] : d.edges()) {
    const std::string tag = "edge " + std::to_string(id);
    if (!d.has_spider(e.a) || !d.has_spider(e.b))
      report.push_back({Finding::Kind::UnknownNode, tag + " has a missing endpoint"});
    if (e.a == e.b) report.push_back({Finding::Kind::SelfLoop, tag + " is a self-loop"});
  }
  auto check_list = [&](const std::vector<NodeId>& list, const char* name) {
    for (std::size_t i = 0; i < list.size(); ++i)
      if (!d.has_spider(list[i]))
        report.push_back({Finding::Kind::DanglingBoundary,
                          std::string(name) + "[" + std::to_string(i) + "] references missing node " +
                              std::to_string(list[i])});
  };
  check_list(d.inputs(), "inputs");
  check_list(d.outputs(), "outputs");
  return report;
}

ZxDiagram compacted(const ZxDiagram& d) {
  ZxDiagram out;
  std::map<NodeId, NodeId> remap;
  for (const auto& [id, s] : d.spiders()) remap[id] = out.add_spider(s.kind, s.phase, s.parametric);
  for (const auto& [id, e] : d.edges()) out.add_edge(remap.at(e.a), remap.at(e.b), e.kind);
  for (NodeId v : d.inputs()) out.inputs().push_back(remap.at(v));
  for (NodeId v : d.outputs()) out.outputs().push_back(remap.at(v));
  return out;
}

}  // namespace zxmbqc
