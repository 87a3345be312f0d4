#pragma once

#include "zxmbqc/diagram.hpp"
#include "zxmbqc/oracle.hpp"
#include "zxmbqc/tensor.hpp"
#include "zxmbqc/verdict.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zxmbqc {

using QubitId = std::int64_t;

// XY: measured in the XY plane at `angle` (0 is the x basis). Z: measured in
// the computational basis; post-selected on outcome 0 this is an X(0) effect
// attached to the qubit, which is what triggers decoupling.
enum class MeasurementBasis { XY, Z };

struct PatternQubit {
  QubitId id = 0;
  Phase angle;
  MeasurementBasis basis = MeasurementBasis::XY;
  bool parametric = false;
  std::string label;  // optional role name, e.g. "T2"

  friend bool operator==(const PatternQubit&, const PatternQubit&) = default;
};

/// Cluster graph plus one measurement per qubit.
struct MeasurementPattern {
  std::map<QubitId, PatternQubit> qubits;
  std::set<std::pair<QubitId, QubitId>> edges;  // stored with first < second
  std::vector<QubitId> order;
  std::vector<QubitId> readouts;

  /// Throws std::invalid_argument on a duplicate id.
  void add_qubit(PatternQubit q);
  /// Throws std::invalid_argument for a self-edge or an unknown endpoint.
  void add_edge(QubitId a, QubitId b);
  std::vector<QubitId> neighbors(QubitId q) const;
  /// Throws std::invalid_argument when an invariant is violated.
  void check() const;
};

/// Same qubits (id, angle, basis, flag), edges and order. Labels and readouts
/// are annotations and are not compared.
bool same_structure(const MeasurementPattern& a, const MeasurementPattern& b);

/// Throws NotGraphLike unless d is closed, all Z, all Hadamard and simple.
MeasurementPattern pattern_from_graph_like(const ZxDiagram& d);
/// XY qubit -> Z(angle) spider with the qubit's id; Z-basis qubit -> Z(0)
/// plus a plain-attached X(0) effect (ids after all qubits); edges Hadamard.
ZxDiagram pattern_to_diagram(const MeasurementPattern& p);

// ---------------------------------------------------------------------------
// Deutsch-Jozsa patterns

/// Role names and parity masks (bit i <-> x_i; 0 = fixed angle 0) of the
/// eleven-qubit three-bit pattern, plus its twelve edges.
struct GoldenNode {
  std::string label;
  std::uint32_t mask;
};
struct GoldenGraph {
  std::vector<GoldenNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};
/// The verified labelling.
const GoldenGraph& golden_graph_3q();
/// Same graph with the two right-hand parity labels as originally printed;
/// kept for regression (it gives wrong verdicts).
const GoldenGraph& golden_graph_3q_as_printed();

MeasurementPattern instantiate(const GoldenGraph& g, const BooleanFunction& f);
/// Eleven-qubit pattern with angles from phase_polynomial(f). Throws NotPromise.
MeasurementPattern dj_pattern_3q(const BooleanFunction& f);
/// Chains Z(0) - alpha_X - alpha_Z per wire for n = 1 or 2. Throws NotPromise.
MeasurementPattern dj_pattern_chain(const BooleanFunction& f);
/// dj_pattern_chain restricted to n = 2.
MeasurementPattern dj_pattern_2q(const BooleanFunction& f);
/// Chains from explicit per-wire (alpha_X, alpha_Z) angles.
MeasurementPattern chain_pattern(const std::vector<Phase>& angles);

// ---------------------------------------------------------------------------
// Lattice embedding

enum class LatticeReading {
  Corrected,  // reduces exactly to the eleven-qubit pattern
  AsPrinted,  // literal transcription; not equivalent
};

/// 6x6 grid, qubit id = 6 * row + col, Hadamard edges to horizontal and
/// vertical neighbours. The eleven qubits that survive reduction carry the
/// role labels of the eleven-qubit pattern. Throws NotPromise.
MeasurementPattern lattice_pattern_3q(const BooleanFunction& f, LatticeReading reading = LatticeReading::Corrected);

/// Removes unlabelled spares: Z-basis spares by decoupling, then repeatedly
/// the lowest +-pi/2 spare by local complementation and the lowest phase-0,
/// degree-2 spare by identity removal. Throws ReductionStuck if a spare is
/// left that no rule can remove.
MeasurementPattern reduce_lattice(const MeasurementPattern& p);

// ---------------------------------------------------------------------------
// Execution

struct PatternOutcome {
  Verdict verdict = Verdict::Constant;
  cplx amplitude{0.0, 0.0};  // post-selected scalar (unnormalised)
  double floor = 0.0;        // |amplitude| at or below this counts as zero
  std::size_t shots = 0;
  std::size_t constant_shots = 0;
  std::size_t balanced_shots = 0;
};

/// All outcomes post-selected to 0: Constant iff the scalar is non-zero.
PatternOutcome run_postselected(const MeasurementPattern& p);

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Statevector execution of a pattern whose graph is a disjoint union of
/// paths measured end to end. Each outcome is drawn from the Born rule; the
/// next qubit's angle is sign-flipped by the previous corrected outcome and
/// its outcome is flipped by the one before that. A shot says Constant when
/// every chain's last corrected outcome is 0; the outcome's verdict is the
/// majority. Throws NotChain.
PatternOutcome run_sampled(const MeasurementPattern& p, std::uint64_t seed = kDefaultSeed, std::size_t shots = 1000);

// ---------------------------------------------------------------------------
// Graph comparison

/// Finds an edge-preserving bijection a -> b, optionally also requiring equal
/// angles and bases. Returns the mapping.
std::optional<std::map<QubitId, QubitId>> find_isomorphism(const MeasurementPattern& a, const MeasurementPattern& b,
                                                           bool match_angles);
inline bool isomorphic(const MeasurementPattern& a, const MeasurementPattern& b, bool match_angles) {
  return find_isomorphism(a, b, match_angles).has_value();
}

}  // namespace zxmbqc
