#pragma once

#include "zxmbqc/errors.hpp"
#include "zxmbqc/phase.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace zxmbqc {

enum class SpiderKind { Z, X };
enum class EdgeKind { Plain, Hadamard };

using NodeId = std::int64_t;
using EdgeId = std::int64_t;

inline SpiderKind toggled(SpiderKind k) { return k == SpiderKind::Z ? SpiderKind::X : SpiderKind::Z; }
inline EdgeKind toggled(EdgeKind k) { return k == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain; }

struct Spider {
  SpiderKind kind = SpiderKind::Z;
  Phase phase;
  // Marks an angle that is chosen per oracle variant (a measurement setting).
  // Rewrites that would only be legal for one particular value leave such
  // spiders alone, so that every variant compiles to the same graph.
  bool parametric = false;
};

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  EdgeKind kind = EdgeKind::Plain;

  NodeId other(NodeId v) const { return v == a ? b : a; }
};

/// Open multigraph of Z/X spiders.
///
/// Boundary legs are positions in the ordered `inputs` / `outputs` lists; the
/// same spider may occupy several positions. Node and edge ids are never
/// reused, so ids taken before a rewrite stay meaningful after it.
class ZxDiagram {
 public:
  NodeId add_spider(SpiderKind kind, Phase phase = {}, bool parametric = false);
  /// Inserts with a caller-chosen id; throws std::invalid_argument if taken.
  void add_spider_with_id(NodeId id, const Spider& s);
  /// Throws SelfLoop when a == b and UnknownNode for a missing endpoint.
  EdgeId add_edge(NodeId a, NodeId b, EdgeKind kind = EdgeKind::Plain);

  /// Removes v and all incident edges. Boundary references are left for the
  /// caller to repair.
  void remove_spider(NodeId v);
  void remove_edge(EdgeId e);

  bool has_spider(NodeId v) const { return spiders_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const Spider& spider(NodeId v) const;
  Spider& spider(NodeId v);
  const Edge& edge(EdgeId e) const;
  void set_edge_kind(EdgeId e, EdgeKind kind);

  const std::map<NodeId, Spider>& spiders() const { return spiders_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  std::size_t num_spiders() const { return spiders_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::vector<NodeId>& inputs() { return inputs_; }
  std::vector<NodeId>& outputs() { return outputs_; }
  const std::vector<NodeId>& inputs() const { return inputs_; }
  const std::vector<NodeId>& outputs() const { return outputs_; }
  bool is_closed() const { return inputs_.empty() && outputs_.empty(); }

  /// Incident edge ids, ascending.
  std::vector<EdgeId> incident_edges(NodeId v) const;
  /// Distinct neighbours, ascending.
  std::vector<NodeId> neighbors(NodeId v) const;
  std::vector<EdgeId> edges_between(NodeId a, NodeId b) const;
  /// Number of incident edges (boundary legs not counted).
  std::size_t degree(NodeId v) const;
  /// Number of boundary positions occupied by v.
  std::size_t boundary_count(NodeId v) const;
  bool is_boundary(NodeId v) const { return boundary_count(v) != 0; }
  /// Replaces every boundary occurrence of `from` by `to`.
  void replace_boundary(NodeId from, NodeId to);

  NodeId next_node_id() const { return next_node_; }

  // Mutators that skip every check. They exist so tests can build malformed
  // diagrams for validate().
  EdgeId add_edge_unchecked(NodeId a, NodeId b, EdgeKind kind);
  void erase_spider_unchecked(NodeId v);

  friend bool operator==(const ZxDiagram& x, const ZxDiagram& y);

 private:
  std::map<NodeId, Spider> spiders_;
  std::map<EdgeId, Edge> edges_;
  std::map<NodeId, std::set<EdgeId>> incidence_;
  std::vector<NodeId> inputs_;
  std::vector<NodeId> outputs_;
  NodeId next_node_ = 0;
  EdgeId next_edge_ = 0;
};

bool operator==(const Spider& x, const Spider& y);
bool operator==(const Edge& x, const Edge& y);

/// n_in input and n_out output Z(0) spiders; input i is wired to output i
/// for i < min(n_in, n_out).
ZxDiagram new_diagram(std::size_t n_in, std::size_t n_out);

/// Sequential composition: outputs of d1 are joined to inputs of d2 with
/// plain edges. The result maps like evaluate(d2) * evaluate(d1).
/// Throws ArityMismatch.
ZxDiagram compose(const ZxDiagram& d1, const ZxDiagram& d2);

/// Parallel composition; d1's legs come first on both sides.
ZxDiagram tensor_product(const ZxDiagram& d1, const ZxDiagram& d2);

struct Finding {
  enum class Kind { UnknownNode, SelfLoop, DanglingBoundary } kind;
  std::string detail;
};
using ValidationReport = std::vector<Finding>;

ValidationReport validate(const ZxDiagram& d);

/// Relabels nodes 0..n-1 in ascending order of their current ids; edges are
/// renumbered in ascending order too. Useful before exporting.
ZxDiagram compacted(const ZxDiagram& d);

}  // namespace zxmbqc
