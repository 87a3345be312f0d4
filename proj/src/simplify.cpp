#include "zxmbqc/simplify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace zxmbqc {

namespace {

class Tracer {
 public:
  Tracer(ZxDiagram& d, std::vector<RewriteStep>* trace) : d_(d), trace_(trace) {}

  void record(RewriteRecord rec) {
    if (trace_) trace_->push_back(RewriteStep{std::move(rec), d_});
  }

 private:
  ZxDiagram& d_;
  std::vector<RewriteStep>* trace_;
};

std::optional<std::pair<NodeId, NodeId>> find_plain_zz(const ZxDiagram& d) {
  std::optional<std::pair<NodeId, NodeId>> best;
  for (const auto& [eid, e] : d.edges()) {
    if (e.kind != EdgeKind::Plain) continue;
    if (d.spider(e.a).kind != SpiderKind::Z || d.spider(e.b).kind != SpiderKind::Z) continue;
    const std::pair<NodeId, NodeId> p = std::minmax(e.a, e.b);
    if (!best || p < *best) best = p;
  }
  return best;
}

std::optional<std::pair<NodeId, NodeId>> find_parallel_hadamard(const ZxDiagram& d) {
  std::map<std::pair<NodeId, NodeId>, int> count;
  for (const auto& [eid, e] : d.edges())
    if (e.kind == EdgeKind::Hadamard && d.spider(e.a).kind == d.spider(e.b).kind)
      ++count[std::minmax(e.a, e.b)];
  for (const auto& [p, c] : count)
    if (c >= 2) return p;
  return std::nullopt;
}

bool fuse_all_plain(ZxDiagram& d, Tracer& t) {
  bool any = false;
  while (auto p = find_plain_zz(d)) {
    t.record(inplace::fuse_spiders(d, p->first, p->second, true));
    any = true;
  }
  return any;
}

bool reduce_parallel(ZxDiagram& d, Tracer& t) {
  bool any = false;
  while (auto p = find_parallel_hadamard(d)) {
    t.record(inplace::remove_parallel_hadamard_pair(d, p->first, p->second));
    any = true;
  }
  return any;
}

bool only_hadamard_edges(const ZxDiagram& d, NodeId v) {
  for (EdgeId e : d.incident_edges(v))
    if (d.edge(e).kind != EdgeKind::Hadamard) return false;
  return true;
}

bool plain_identity(const ZxDiagram& d, NodeId v, const Spider& s) {
  return s.kind == SpiderKind::Z && !s.parametric && s.phase.is_zero() && !d.is_boundary(v);
}

bool try_hadamard_cancel(ZxDiagram& d, Tracer& t) {
  for (const auto& [v, s] : d.spiders()) {
    if (!plain_identity(d, v, s) || d.degree(v) != 2 || !only_hadamard_edges(d, v)) continue;
    RewriteRecord rec = inplace::hadamard_cancel(d, v);
    t.record(rec);
    if (rec.after.size() == 2 && d.spider(rec.after[0]).kind == d.spider(rec.after[1]).kind)
      t.record(inplace::fuse_spiders(d, rec.after[0], rec.after[1], true));
    return true;
  }
  return false;
}

bool try_absorb_state(ZxDiagram& d, Tracer& t) {
  for (const auto& [x, s] : d.spiders()) {
    if (!plain_identity(d, x, s) || d.degree(x) != 1 || !only_hadamard_edges(d, x)) continue;
    const NodeId z = d.edge(d.incident_edges(x).front()).other(x);
    const Spider& sz = d.spider(z);
    if (sz.kind != SpiderKind::Z || sz.parametric) continue;
    t.record(inplace::color_change(d, x));
    RewriteRecord rec = inplace::decouple_x_state(d, x);
    t.record(rec);
    for (NodeId st : rec.after) {
      if (!d.has_spider(st) || d.spider(st).kind != SpiderKind::Z || d.degree(st) != 1) continue;
      const NodeId n = d.edge(d.incident_edges(st).front()).other(st);
      if (d.spider(n).kind == SpiderKind::Z) t.record(inplace::fuse_spiders(d, n, st, true));
    }
    return true;
  }
  return false;
}

bool try_drop_scalar(ZxDiagram& d, Tracer& t) {
  for (const auto& [v, s] : d.spiders()) {
    if (!plain_identity(d, v, s) || d.degree(v) != 0) continue;
    t.record(inplace::drop_scalar(d, v));
    return true;
  }
  return false;
}

}  // namespace

ZxDiagram to_graph_like(const ZxDiagram& d, std::vector<RewriteStep>* trace) {
  ZxDiagram out = d;
  Tracer t(out, trace);
  std::vector<NodeId> xs;
  for (const auto& [v, s] : out.spiders())
    if (s.kind == SpiderKind::X) xs.push_back(v);
  for (NodeId v : xs) t.record(inplace::color_change(out, v));
  fuse_all_plain(out, t);
  reduce_parallel(out, t);
  return out;
}

ZxDiagram plug_plus_states(const ZxDiagram& d) {
  ZxDiagram out = d;
  for (auto* list : {&out.inputs(), &out.outputs()}) {
    for (NodeId v : *list) out.add_edge(v, out.add_spider(SpiderKind::Z), EdgeKind::Plain);
    list->clear();
  }
  return out;
}

SimplifyResult simplify_mbqc(const ZxDiagram& input) {
  SimplifyResult res;
  res.diagram = input.is_closed() ? input : plug_plus_states(input);
  ZxDiagram& d = res.diagram;
  const std::size_t ceiling = 10 * (d.num_spiders() + d.num_edges());

  res.diagram = to_graph_like(d, &res.steps);
  Tracer t(d, &res.steps);
  for (;;) {
    if (res.steps.size() > ceiling) throw std::logic_error("simplify_mbqc exceeded its step budget");
    if (try_hadamard_cancel(d, t)) continue;
    if (try_absorb_state(d, t)) continue;
    if (fuse_all_plain(d, t)) continue;
    if (reduce_parallel(d, t)) continue;
    if (try_drop_scalar(d, t)) continue;
    break;
  }
  return res;
}

bool is_graph_like(const ZxDiagram& d) {
  for (const auto& [v, s] : d.spiders())
    if (s.kind != SpiderKind::Z) return false;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const auto& [eid, e] : d.edges()) {
    if (e.kind != EdgeKind::Hadamard) return false;
    if (!seen.insert(std::minmax(e.a, e.b)).second) return false;
  }
  return true;
}

}  // namespace zxmbqc
