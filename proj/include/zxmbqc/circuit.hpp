#pragma once

#include "zxmbqc/diagram.hpp"
#include "zxmbqc/tensor.hpp"
#include "zxmbqc/verdict.hpp"

#include <cstddef>
#include <vector>

namespace zxmbqc {

enum class GateKind { Phase, CNOT, PauliZ, PauliY, Hadamard };

struct Gate {
  GateKind kind = GateKind::Phase;
  // Phase/PauliZ/PauliY/Hadamard use qubits[0]; CNOT is {control, target}.
  std::vector<std::size_t> qubits;
  Phase phase;

  static Gate P(std::size_t q, Phase a) { return {GateKind::Phase, {q}, a}; }
  static Gate CX(std::size_t c, std::size_t t) { return {GateKind::CNOT, {c, t}, {}}; }
  static Gate Z(std::size_t q) { return {GateKind::PauliZ, {q}, {}}; }
  static Gate Y(std::size_t q) { return {GateKind::PauliY, {q}, {}}; }
  static Gate H(std::size_t q) { return {GateKind::Hadamard, {q}, {}}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::size_t width = 0;
  std::vector<Gate> gates;

  /// Throws std::invalid_argument on an out-of-range index, a CNOT with
  /// control == target, or a wrong operand count.
  void check() const;
  Circuit& add(Gate g) {
    gates.push_back(std::move(g));
    return *this;
  }
};

inline constexpr std::size_t kMaxUnitaryWidth = 10;

/// Dense unitary. Qubit 0 is the most significant bit of the basis index.
/// Throws WidthTooLarge above kMaxUnitaryWidth.
Eigen::MatrixXcd unitary(const Circuit& c);
inline Tensor unitary_tensor(const Circuit& c) { return Tensor::from_matrix(unitary(c)); }

/// CNOT -> Z(0) on the control joined to X(0) on the target, P(a) -> Z(a),
/// Z -> Z(pi), Y -> X(pi) then Z(pi), H -> Hadamard edge. Phase-gate spiders
/// are flagged parametric.
ZxDiagram to_zx(const Circuit& c);

/// <+...+|U|+...+>; Constant when its modulus is 1, Balanced when 0, both to
/// `tol`. Anything else throws NotPromise.
Verdict dj_run_circuit(const Circuit& oracle, double tol = 1e-9);
cplx plus_amplitude(const Circuit& oracle);

}  // namespace zxmbqc
