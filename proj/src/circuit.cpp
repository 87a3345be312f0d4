#include "zxmbqc/circuit.hpp"

#include <cmath>
#include <stdexcept>

namespace zxmbqc {

void Circuit::check() const {
  for (const Gate& g : gates) {
    const std::size_t arity = g.kind == GateKind::CNOT ? 2 : 1;
    if (g.qubits.size() != arity) throw std::invalid_argument("gate has the wrong number of qubits");
    for (std::size_t q : g.qubits)
      if (q >= width) throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    if (g.kind == GateKind::CNOT && g.qubits[0] == g.qubits[1])
      throw std::invalid_argument("CNOT control equals target");
  }
}

namespace {

Eigen::Matrix2cd single(const Gate& g) {
  const cplx i(0.0, 1.0);
  switch (g.kind) {
    case GateKind::Phase: return (Eigen::Matrix2cd() << 1, 0, 0, g.phase.unit()).finished();
    case GateKind::PauliZ: return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    case GateKind::PauliY: return (Eigen::Matrix2cd() << 0, -i, i, 0).finished();
    case GateKind::Hadamard: return (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::sqrt(2.0);
    case GateKind::CNOT: break;
  }
  throw std::logic_error("not a single-qubit gate");
}

}  // namespace

Eigen::MatrixXcd unitary(const Circuit& c) {
  if (c.width > kMaxUnitaryWidth)
    throw WidthTooLarge("width " + std::to_string(c.width) + " exceeds " + std::to_string(kMaxUnitaryWidth));
  c.check();
  const Eigen::Index dim = Eigen::Index{1} << c.width;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  auto bit = [&](std::size_t q) { return Eigen::Index{1} << (c.width - 1 - q); };

  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CNOT) {
      const Eigen::Index cb = bit(g.qubits[0]), tb = bit(g.qubits[1]);
      for (Eigen::Index r = 0; r < dim; ++r)
        if ((r & cb) && !(r & tb)) u.row(r).swap(u.row(r | tb));
      continue;
    }
    const Eigen::Matrix2cd m = single(g);
    const Eigen::Index b = bit(g.qubits[0]);
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & b) continue;
      const Eigen::RowVectorXcd r0 = u.row(r), r1 = u.row(r | b);
      u.row(r) = m(0, 0) * r0 + m(0, 1) * r1;
      u.row(r | b) = m(1, 0) * r0 + m(1, 1) * r1;
    }
  }
  return u;
}

ZxDiagram to_zx(const Circuit& c) {
  c.check();
  ZxDiagram d;
  std::vector<NodeId> front(c.width);
  std::vector<bool> pending_h(c.width, false);
  for (std::size_t q = 0; q < c.width; ++q) {
    front[q] = d.add_spider(SpiderKind::Z);
    d.inputs().push_back(front[q]);
  }
  auto extend = [&](std::size_t q, SpiderKind k, Phase p, bool parametric = false) {
    const NodeId s = d.add_spider(k, p, parametric);
    d.add_edge(front[q], s, pending_h[q] ? EdgeKind::Hadamard : EdgeKind::Plain);
    pending_h[q] = false;
    front[q] = s;
    return s;
  };
  for (const Gate& g : c.gates) {
    const std::size_t q = g.qubits[0];
    switch (g.kind) {
      case GateKind::Phase: extend(q, SpiderKind::Z, g.phase, true); break;
      case GateKind::PauliZ: extend(q, SpiderKind::Z, Phase::pi()); break;
      case GateKind::PauliY:
        extend(q, SpiderKind::X, Phase::pi());
        extend(q, SpiderKind::Z, Phase::pi());
        break;
      case GateKind::Hadamard: pending_h[q] = !pending_h[q]; break;
      case GateKind::CNOT: {
        const NodeId ctl = extend(q, SpiderKind::Z, {});
        const NodeId tgt = extend(g.qubits[1], SpiderKind::X, {});
        d.add_edge(ctl, tgt, EdgeKind::Plain);
        break;
      }
    }
  }
  for (std::size_t q = 0; q < c.width; ++q) d.outputs().push_back(extend(q, SpiderKind::Z, {}));
  return d;
}

cplx plus_amplitude(const Circuit& oracle) {
  const Eigen::MatrixXcd u = unitary(oracle);
  return u.sum() / static_cast<double>(u.rows());
}

Verdict dj_run_circuit(const Circuit& oracle, double tol) {
  if (oracle.width < 1 || oracle.width > 3)
    throw std::invalid_argument("oracle width must be 1, 2 or 3");
  const double a = std::abs(plus_amplitude(oracle));
  if (std::abs(a - 1.0) <= tol) return Verdict::Constant;
  if (a <= tol) return Verdict::Balanced;
  throw NotPromise("|<+|U|+>| = " + std::to_string(a) + " is neither 0 nor 1");
}

}  // namespace zxmbqc
