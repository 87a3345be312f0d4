#pragma once

#include "zxmbqc/rewrite.hpp"

#include <vector>

namespace zxmbqc {

/// Colour-changes every X spider, fuses every plain Z-Z edge and cancels
/// parallel Hadamard edges in pairs. The result has only Z spiders, only
/// Hadamard edges between spiders and no parallel edges.
ZxDiagram to_graph_like(const ZxDiagram& d, std::vector<RewriteStep>* trace = nullptr);

/// Caps every boundary leg with a Z(0) spider (|+> on inputs, <+| on outputs).
ZxDiagram plug_plus_states(const ZxDiagram& d);

struct SimplifyResult {
  ZxDiagram diagram;
  std::vector<RewriteStep> steps;
};

/// Closes the diagram if needed, brings it to graph-like form, then applies,
/// lowest node id first and until nothing matches:
///  - hadamard_cancel on an identity spider, fusing the freshly joined pair;
///  - absorption of a trailing |+> state: colour change to X(0), decouple,
///    and fuse the emitted Z(0) states into their neighbours;
///  - fusion of plain Z-Z edges and removal of parallel Hadamard pairs;
///  - removal of isolated Z(0) scalars.
/// Parametric spiders are never consumed by phase-specific rules.
SimplifyResult simplify_mbqc(const ZxDiagram& d);

/// True when all spiders are Z, every edge is Hadamard and no pair of
/// spiders shares more than one edge.
bool is_graph_like(const ZxDiagram& d);

}  // namespace zxmbqc
