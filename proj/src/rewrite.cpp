#include "zxmbqc/rewrite.hpp"

#include <algorithm>
#include <utility>

namespace zxmbqc::inplace {

namespace {

std::string id(NodeId v) { return std::to_string(v); }

void require(bool cond, const std::string& rule, const std::string& why) {
  if (!cond) throw PreconditionFailed(rule + ": " + why);
}

void require_node(const ZxDiagram& d, NodeId v) {
  if (!d.has_spider(v)) throw UnknownNode("node " + id(v));
}

}  // namespace

RewriteRecord color_change(ZxDiagram& d, NodeId v) {
  require_node(d, v);
  Spider& s = d.spider(v);
  s.kind = toggled(s.kind);
  for (EdgeId e : d.incident_edges(v)) d.set_edge_kind(e, toggled(d.edge(e).kind));
  RewriteRecord rec{"color_change", {v}, {v}};
  for (auto* list : {&d.inputs(), &d.outputs()})
    for (NodeId& slot : *list)
      if (slot == v) {
        const NodeId stub = d.add_spider(SpiderKind::Z);
        d.add_edge(v, stub, EdgeKind::Hadamard);
        slot = stub;
        rec.after.push_back(stub);
      }
  return rec;
}

RewriteRecord fuse_spiders(ZxDiagram& d, NodeId a, NodeId b, bool absorb_hadamard_loops) {
  require_node(d, a);
  require_node(d, b);
  if (a == b) throw NotAdjacent("fuse_spiders: a spider cannot fuse with itself");
  if (d.spider(a).kind != d.spider(b).kind) throw KindMismatch("fuse_spiders: " + id(a) + " and " + id(b));
  const auto between = d.edges_between(a, b);
  const auto plain = std::count_if(between.begin(), between.end(),
                                   [&](EdgeId e) { return d.edge(e).kind == EdgeKind::Plain; });
  if (plain == 0) throw NotAdjacent("fuse_spiders: no plain edge between " + id(a) + " and " + id(b));
  const auto hadamard = static_cast<std::int64_t>(between.size()) - plain;
  if (hadamard > 0 && !absorb_hadamard_loops)
    throw WouldSelfLoop("fuse_spiders: " + id(a) + " and " + id(b) + " also share a Hadamard edge");

  for (EdgeId e : between) d.remove_edge(e);
  for (EdgeId e : d.incident_edges(b)) {
    const Edge ed = d.edge(e);
    d.remove_edge(e);
    d.add_edge(a, ed.other(b), ed.kind);
  }
  Spider& sa = d.spider(a);
  sa.phase += d.spider(b).phase;
  if (hadamard % 2 == 1) sa.phase += Phase::pi();
  sa.parametric = sa.parametric || d.spider(b).parametric;
  d.replace_boundary(b, a);
  d.remove_spider(b);
  return {"fuse_spiders", {a, b}, {a}};
}

RewriteRecord hadamard_cancel(ZxDiagram& d, NodeId v) {
  const std::string rule = "hadamard_cancel";
  require_node(d, v);
  require(d.spider(v).phase.is_zero(), rule, "phase of " + id(v) + " is not 0");
  require(d.degree(v) == 2, rule, "degree of " + id(v) + " is not 2");
  require(!d.is_boundary(v), rule, id(v) + " is a boundary spider");
  const auto es = d.incident_edges(v);
  for (EdgeId e : es) require(d.edge(e).kind == EdgeKind::Hadamard, rule, "plain edge at " + id(v));
  const NodeId n1 = d.edge(es[0]).other(v);
  const NodeId n2 = d.edge(es[1]).other(v);
  d.remove_spider(v);
  if (n1 != n2) d.add_edge(n1, n2, EdgeKind::Plain);
  return {rule, {v, n1, n2}, n1 == n2 ? std::vector<NodeId>{n1} : std::vector<NodeId>{n1, n2}};
}

RewriteRecord expand_hadamard_edge(ZxDiagram& d, EdgeId e) {
  const Edge ed = d.edge(e);
  require(ed.kind == EdgeKind::Hadamard, "expand_hadamard_edge", "edge " + std::to_string(e) + " is plain");
  d.remove_edge(e);
  const NodeId z1 = d.add_spider(SpiderKind::Z, Phase::half_pi());
  const NodeId x = d.add_spider(SpiderKind::X, Phase::half_pi());
  const NodeId z2 = d.add_spider(SpiderKind::Z, Phase::half_pi());
  d.add_edge(ed.a, z1);
  d.add_edge(z1, x);
  d.add_edge(x, z2);
  d.add_edge(z2, ed.b);
  return {"expand_hadamard_edge", {ed.a, ed.b}, {ed.a, z1, x, z2, ed.b}};
}

RewriteRecord collapse_hadamard_chain(ZxDiagram& d, NodeId v1, NodeId v2, NodeId v3) {
  const std::string rule = "collapse_hadamard_chain";
  for (NodeId v : {v1, v2, v3}) require_node(d, v);
  auto is = [&](NodeId v, SpiderKind k) {
    const Spider& s = d.spider(v);
    return s.kind == k && s.phase == Phase::half_pi();
  };
  require(is(v1, SpiderKind::Z) && is(v2, SpiderKind::X) && is(v3, SpiderKind::Z), rule,
          "chain is not Z(pi/2)-X(pi/2)-Z(pi/2)");
  for (NodeId v : {v1, v2, v3}) {
    require(d.degree(v) == 2 && !d.is_boundary(v), rule, id(v) + " must be an internal degree-2 spider");
    for (EdgeId e : d.incident_edges(v)) require(d.edge(e).kind == EdgeKind::Plain, rule, "Hadamard edge at " + id(v));
  }
  require(d.edges_between(v1, v2).size() == 1 && d.edges_between(v2, v3).size() == 1, rule,
          "spiders are not linked in order");
  auto outer = [&](NodeId end, NodeId inner) {
    for (EdgeId e : d.incident_edges(end))
      if (d.edge(e).other(end) != inner) return d.edge(e).other(end);
    return inner;
  };
  const NodeId a = outer(v1, v2);
  const NodeId b = outer(v3, v2);
  require(a != v2 && b != v2 && a != v3 && b != v1, rule, "chain is closed on itself");
  require(a != b, rule, "collapsing would create a self-loop");
  d.remove_spider(v1);
  d.remove_spider(v2);
  d.remove_spider(v3);
  d.add_edge(a, b, EdgeKind::Hadamard);
  return {rule, {a, v1, v2, v3, b}, {a, b}};
}

RewriteRecord decouple_x_state(ZxDiagram& d, NodeId x) {
  const std::string rule = "decouple_x_state";
  require_node(d, x);
  const Spider& sx = d.spider(x);
  require(sx.kind == SpiderKind::X && sx.phase.is_zero(), rule, id(x) + " is not an X(0) spider");
  require(d.degree(x) == 1 && !d.is_boundary(x), rule, id(x) + " is not a degree-1 internal state");
  const EdgeId link = d.incident_edges(x).front();
  require(d.edge(link).kind == EdgeKind::Plain, rule, "state is attached by a Hadamard edge");
  const NodeId z = d.edge(link).other(x);
  require(d.spider(z).kind == SpiderKind::Z, rule, "neighbour " + id(z) + " is not a Z spider");

  RewriteRecord rec{rule, {x, z}, {}};
  std::vector<std::pair<NodeId, EdgeKind>> legs;
  for (EdgeId e : d.incident_edges(z))
    if (e != link) legs.emplace_back(d.edge(e).other(z), d.edge(e).kind);
  d.remove_spider(x);
  for (auto* list : {&d.inputs(), &d.outputs()})
    for (NodeId& slot : *list)
      if (slot == z) {
        slot = d.add_spider(SpiderKind::X);
        rec.after.push_back(slot);
      }
  d.remove_spider(z);
  for (const auto& [n, kind] : legs) {
    const NodeId s = d.add_spider(kind == EdgeKind::Plain ? SpiderKind::X : SpiderKind::Z);
    d.add_edge(s, n, EdgeKind::Plain);
    rec.after.push_back(s);
  }
  return rec;
}

RewriteRecord local_complement(ZxDiagram& d, NodeId v) {
  const std::string rule = "local_complement";
  require_node(d, v);
  const Spider sv = d.spider(v);
  require(sv.kind == SpiderKind::Z && sv.phase.is_proper_clifford(), rule, id(v) + " is not Z(+-pi/2)");
  require(!d.is_boundary(v), rule, id(v) + " is a boundary spider");
  for (EdgeId e : d.incident_edges(v)) require(d.edge(e).kind == EdgeKind::Hadamard, rule, "plain edge at " + id(v));
  const auto nb = d.neighbors(v);
  require(nb.size() == d.degree(v), rule, id(v) + " has parallel edges");
  for (NodeId n : nb) require(d.spider(n).kind == SpiderKind::Z, rule, "neighbour " + id(n) + " is not a Z spider");

  d.remove_spider(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      EdgeId existing = -1;
      for (EdgeId e : d.edges_between(nb[i], nb[j]))
        if (d.edge(e).kind == EdgeKind::Hadamard) {
          existing = e;
          break;
        }
      if (existing >= 0)
        d.remove_edge(existing);
      else
        d.add_edge(nb[i], nb[j], EdgeKind::Hadamard);
    }
    d.spider(nb[i]).phase -= sv.phase;
  }
  RewriteRecord rec{rule, {v}, nb};
  rec.before.insert(rec.before.end(), nb.begin(), nb.end());
  return rec;
}

RewriteRecord remove_parallel_hadamard_pair(ZxDiagram& d, NodeId a, NodeId b) {
  const std::string rule = "remove_parallel_hadamard_pair";
  require_node(d, a);
  require_node(d, b);
  require(d.spider(a).kind == d.spider(b).kind, rule, "spiders differ in colour");
  std::vector<EdgeId> hs;
  for (EdgeId e : d.edges_between(a, b))
    if (d.edge(e).kind == EdgeKind::Hadamard) hs.push_back(e);
  require(hs.size() >= 2, rule, "fewer than two Hadamard edges between " + id(a) + " and " + id(b));
  d.remove_edge(hs[0]);
  d.remove_edge(hs[1]);
  return {rule, {a, b}, {a, b}};
}

RewriteRecord drop_scalar(ZxDiagram& d, NodeId v) {
  const std::string rule = "drop_scalar";
  require_node(d, v);
  require(d.degree(v) == 0 && !d.is_boundary(v), rule, id(v) + " is not isolated");
  require(!d.spider(v).phase.is_pi(), rule, id(v) + " carries the zero scalar");
  d.remove_spider(v);
  return {rule, {v}, {}};
}

}  // namespace zxmbqc::inplace

namespace zxmbqc {

namespace {

template <typename F, typename... Args>
RewriteStep pure(const ZxDiagram& d, F&& f, Args... args) {
  ZxDiagram copy = d;
  RewriteRecord rec = f(copy, args...);
  return RewriteStep{std::move(rec), std::move(copy)};
}

}  // namespace

RewriteStep color_change(const ZxDiagram& d, NodeId v) { return pure(d, inplace::color_change, v); }
RewriteStep fuse_spiders(const ZxDiagram& d, NodeId a, NodeId b) {
  return pure(d, [](ZxDiagram& x, NodeId p, NodeId q) { return inplace::fuse_spiders(x, p, q); }, a, b);
}
RewriteStep hadamard_cancel(const ZxDiagram& d, NodeId v) { return pure(d, inplace::hadamard_cancel, v); }
RewriteStep expand_hadamard_edge(const ZxDiagram& d, EdgeId e) { return pure(d, inplace::expand_hadamard_edge, e); }
RewriteStep collapse_hadamard_chain(const ZxDiagram& d, NodeId v1, NodeId v2, NodeId v3) {
  return pure(d, inplace::collapse_hadamard_chain, v1, v2, v3);
}
RewriteStep decouple_x_state(const ZxDiagram& d, NodeId x) { return pure(d, inplace::decouple_x_state, x); }
RewriteStep local_complement(const ZxDiagram& d, NodeId v) { return pure(d, inplace::local_complement, v); }
RewriteStep remove_parallel_hadamard_pair(const ZxDiagram& d, NodeId a, NodeId b) {
  return pure(d, inplace::remove_parallel_hadamard_pair, a, b);
}
RewriteStep drop_scalar(const ZxDiagram& d, NodeId v) { return pure(d, inplace::drop_scalar, v); }

}  // namespace zxmbqc
