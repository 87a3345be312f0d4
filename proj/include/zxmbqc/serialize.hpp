#pragma once

#include "zxmbqc/circuit.hpp"
#include "zxmbqc/diagram.hpp"
#include "zxmbqc/pattern.hpp"
#include "zxmbqc/rewrite.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zxmbqc {

using Json = nlohmann::ordered_json;

// Phases are written as reduced fractions of pi ("1/2" is pi/2). Readers
// throw ParseError on a missing field or a value of the wrong type.

/// {spiders: [{id, kind, phase, param?}], edges: [{a, b, kind}], inputs, outputs}
Json diagram_to_json(const ZxDiagram& d);
ZxDiagram diagram_from_json(const Json& j);

/// {width, gates: [{op, qubits, phase?}]} with op one of P, CNOT, Z, Y, H.
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

/// {qubits: [{id, angle, basis?, param?, label?}], edges: [[a, b]], order, readouts}
Json pattern_to_json(const MeasurementPattern& p);
MeasurementPattern pattern_from_json(const Json& j);

/// [{rule, before, after}]
Json steps_to_json(const std::vector<RewriteStep>& steps);

/// Z spiders as ellipses and X spiders as boxes, both labelled with their
/// phase; Hadamard edges dashed; boundary legs as point nodes.
std::string to_dot(const ZxDiagram& d);
/// Qubits as ellipses labelled with role (if any) and angle; edges dashed.
std::string to_dot(const MeasurementPattern& p);

}  // namespace zxmbqc
