#pragma once

#include "zxmbqc/diagram.hpp"

#include <string>
#include <vector>

namespace zxmbqc {

/// What a rule touched: `before` lists affected ids as they were, `after`
/// the ids that carry the result (survivors and freshly created spiders).
struct RewriteRecord {
  std::string rule;
  std::vector<NodeId> before;
  std::vector<NodeId> after;
};

struct RewriteStep : RewriteRecord {
  ZxDiagram result;
};

// In-place rule implementations. Each validates its precondition before
// touching the diagram, so a throwing call leaves `d` unchanged.
namespace inplace {

/// Toggles the colour of v and the kind of each incident edge. Every boundary
/// leg of v is moved onto a fresh Z(0) stub joined to v by a Hadamard edge.
RewriteRecord color_change(ZxDiagram& d, NodeId v);

/// Merges b into a. Requires equal kinds and a plain edge between them.
/// Throws WouldSelfLoop if a Hadamard edge joins them too, unless
/// `absorb_hadamard_loops` is set, in which case each such edge adds pi.
RewriteRecord fuse_spiders(ZxDiagram& d, NodeId a, NodeId b, bool absorb_hadamard_loops = false);

/// Removes a phase-0, degree-2, non-boundary spider whose edges are both
/// Hadamard, joining its neighbours with a plain edge.
RewriteRecord hadamard_cancel(ZxDiagram& d, NodeId v);

/// Hadamard edge -> Z(pi/2) - X(pi/2) - Z(pi/2) on plain edges.
RewriteRecord expand_hadamard_edge(ZxDiagram& d, EdgeId e);

/// Inverse of expand_hadamard_edge.
RewriteRecord collapse_hadamard_chain(ZxDiagram& d, NodeId v1, NodeId v2, NodeId v3);

/// Projects the Z spider behind an X(0) state onto |0>, pushing a |0> state
/// (X(0) over plain, Z(0) over Hadamard) onto each of its other legs.
RewriteRecord decouple_x_state(ZxDiagram& d, NodeId x);

/// Removes a Z(+-pi/2) spider with only Hadamard edges to distinct Z spiders,
/// complementing the neighbourhood and shifting each neighbour by -phase.
RewriteRecord local_complement(ZxDiagram& d, NodeId v);

/// Removes two parallel Hadamard edges between same-coloured spiders.
RewriteRecord remove_parallel_hadamard_pair(ZxDiagram& d, NodeId a, NodeId b);

/// Deletes an isolated, non-boundary spider whose scalar 1 + e^{i phase} is
/// non-zero.
RewriteRecord drop_scalar(ZxDiagram& d, NodeId v);

}  // namespace inplace

// Value-returning forms: the input diagram is copied, never modified.
RewriteStep color_change(const ZxDiagram& d, NodeId v);
RewriteStep fuse_spiders(const ZxDiagram& d, NodeId a, NodeId b);
RewriteStep hadamard_cancel(const ZxDiagram& d, NodeId v);
RewriteStep expand_hadamard_edge(const ZxDiagram& d, EdgeId e);
RewriteStep collapse_hadamard_chain(const ZxDiagram& d, NodeId v1, NodeId v2, NodeId v3);
RewriteStep decouple_x_state(const ZxDiagram& d, NodeId x);
RewriteStep local_complement(const ZxDiagram& d, NodeId v);
RewriteStep remove_parallel_hadamard_pair(const ZxDiagram& d, NodeId a, NodeId b);
RewriteStep drop_scalar(const ZxDiagram& d, NodeId v);

}  // namespace zxmbqc
