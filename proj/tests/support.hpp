#pragma once

// Helpers shared by the test suites and the acceptance binary: an independent
// brute-force evaluator, random diagram/circuit generators, and per-rule
// generators that plant a site where a rewrite applies.

#include "zxmbqc/circuit.hpp"
#include "zxmbqc/rewrite.hpp"
#include "zxmbqc/tensor.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace zxtest {

using namespace zxmbqc;

// Sums over one bit per plain edge, two per Hadamard edge (joined by
// (-1)^{ab}/sqrt2) and one per boundary position. Z(a) on legs b: [all b equal]
// times e^{ia b}; X(a): 1 + e^{ia} (-1)^{sum b}. Exponential; keep diagrams small.
inline Tensor brute_force(const ZxDiagram& d) {
  std::map<NodeId, std::vector<int>> legs;
  int n_vars = 0;
  std::vector<std::pair<int, int>> hadamard_pairs;
  for (const auto& [eid, e] : d.edges()) {
    if (e.kind == EdgeKind::Plain) {
      legs[e.a].push_back(n_vars);
      legs[e.b].push_back(n_vars);
      ++n_vars;
    } else {
      legs[e.a].push_back(n_vars);
      legs[e.b].push_back(n_vars + 1);
      hadamard_pairs.emplace_back(n_vars, n_vars + 1);
      n_vars += 2;
    }
  }
  std::vector<NodeId> open;  // outputs first, then inputs
  for (NodeId v : d.outputs()) open.push_back(v);
  for (NodeId v : d.inputs()) open.push_back(v);
  std::vector<int> open_var;
  for (NodeId v : open) {
    legs[v].push_back(n_vars);
    open_var.push_back(n_vars++);
  }
  if (n_vars > 24) throw std::invalid_argument("brute_force: too many variables");

  Tensor t;
  t.n_outputs = d.outputs().size();
  t.n_inputs = d.inputs().size();
  t.data = Eigen::VectorXcd::Zero(Eigen::Index{1} << open.size());
  const double h = 1.0 / std::sqrt(2.0);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n_vars); ++a) {
    auto bit = [&](int v) { return int((a >> v) & 1U); };
    cplx w = 1.0;
    for (const auto& [x, y] : hadamard_pairs) w *= (bit(x) & bit(y)) ? -h : h;
    for (const auto& [v, s] : d.spiders()) {
      const auto& ls = legs[v];
      if (s.kind == SpiderKind::Z) {
        int ones = 0;
        for (int l : ls) ones += bit(l);
        if (ones != 0 && ones != static_cast<int>(ls.size())) {
          w = 0.0;
          break;
        }
        if (ones != 0 || ls.empty()) w *= ls.empty() ? 1.0 + s.phase.unit() : s.phase.unit();
      } else {
        int parity = 0;
        for (int l : ls) parity ^= bit(l);
        w *= 1.0 + s.phase.unit() * (parity ? -1.0 : 1.0);
      }
    }
    if (w == cplx(0.0)) continue;
    Eigen::Index idx = 0;
    for (int v : open_var) idx = (idx << 1) | bit(v);
    t.data(idx) += w;
  }
  return t;
}

inline Phase random_phase(std::mt19937_64& rng) { return Phase(static_cast<std::int64_t>(rng() % 8), 4); }

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline NodeId pick(std::mt19937_64& rng, const ZxDiagram& d) {
  auto it = d.spiders().begin();
  std::advance(it, below(rng, d.num_spiders()));
  return it->first;
}

/// Random open diagram: n spiders, m random edges (parallel edges allowed),
/// up to two inputs and two outputs.
inline ZxDiagram random_diagram(std::mt19937_64& rng, std::size_t n, std::size_t m, bool boundary = true) {
  ZxDiagram d;
  for (std::size_t i = 0; i < n; ++i)
    d.add_spider(rng() % 2 ? SpiderKind::Z : SpiderKind::X, random_phase(rng));
  if (n >= 2) {
    for (std::size_t i = 0; i < m; ++i) {
      const NodeId a = pick(rng, d);
      NodeId b = pick(rng, d);
      if (a == b) continue;
      d.add_edge(a, b, rng() % 2 ? EdgeKind::Plain : EdgeKind::Hadamard);
    }
  }
  if (boundary && n > 0) {
    for (std::size_t i = below(rng, 3); i > 0; --i) d.inputs().push_back(pick(rng, d));
    for (std::size_t i = below(rng, 3); i > 0; --i) d.outputs().push_back(pick(rng, d));
  }
  return d;
}

/// Random graph-like diagram: Z spiders, simple Hadamard graph, optional
/// boundary legs.
inline ZxDiagram random_graph_like(std::mt19937_64& rng, std::size_t n, double p_edge, bool boundary = false) {
  ZxDiagram d;
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(d.add_spider(SpiderKind::Z, random_phase(rng)));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < p_edge) d.add_edge(ids[i], ids[j], EdgeKind::Hadamard);
  if (boundary && n > 0) {
    for (std::size_t i = below(rng, 3); i > 0; --i) d.inputs().push_back(pick(rng, d));
    for (std::size_t i = below(rng, 3); i > 0; --i) d.outputs().push_back(pick(rng, d));
  }
  return d;
}

inline Circuit random_circuit(std::mt19937_64& rng, std::size_t width, std::size_t gates) {
  Circuit c;
  c.width = width;
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t q = below(rng, width);
    switch (below(rng, width > 1 ? 5 : 4)) {
      case 0: c.add(Gate::P(q, random_phase(rng))); break;
      case 1: c.add(Gate::Z(q)); break;
      case 2: c.add(Gate::Y(q)); break;
      case 3: c.add(Gate::H(q)); break;
      default: c.add(Gate::CX(q, (q + 1 + below(rng, width - 1)) % width)); break;
    }
  }
  return c;
}

/// Full-width matrix of a gate by Kronecker products (qubit 0 leftmost).
inline Eigen::MatrixXcd kron_gate(const Gate& g, std::size_t width) {
  const cplx i(0.0, 1.0);
  const std::size_t dim = std::size_t{1} << width;
  if (g.kind == GateKind::CNOT) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
      const bool c = (col >> (width - 1 - g.qubits[0])) & 1U;
      const std::size_t row = c ? col ^ (std::size_t{1} << (width - 1 - g.qubits[1])) : col;
      m(row, col) = 1.0;
    }
    return m;
  }
  Eigen::Matrix2cd u;
  switch (g.kind) {
    case GateKind::Phase: u << 1, 0, 0, std::polar(1.0, g.phase.radians()); break;
    case GateKind::PauliZ: u << 1, 0, 0, -1; break;
    case GateKind::PauliY: u << 0, -i, i, 0; break;
    default: u << 1, 1, 1, -1; u /= std::sqrt(2.0); break;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < width; ++q) {
    const Eigen::MatrixXcd f = q == g.qubits[0] ? Eigen::MatrixXcd(u) : Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
    m = next;
  }
  return m;
}

inline Eigen::MatrixXcd kron_unitary(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.width;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : c.gates) u = kron_gate(g, c.width) * u;
  return u;
}

// ---------------------------------------------------------------------------
// Planted rule sites

struct Application {
  ZxDiagram before;
  ZxDiagram after;
};

using Planter = std::function<Application(std::mt19937_64&)>;

struct RuleCase {
  std::string name;
  Planter plant;
};

inline std::vector<RuleCase> rule_cases() {
  auto base = [](std::mt19937_64& rng, std::size_t max_n) {
    const std::size_t n = 1 + below(rng, max_n);
    return random_diagram(rng, n, below(rng, 2 * n + 1));
  };
  auto two_distinct = [](std::mt19937_64& rng, ZxDiagram& d) {
    while (d.num_spiders() < 2) d.add_spider(SpiderKind::Z, random_phase(rng));
    const NodeId a = pick(rng, d);
    NodeId b = pick(rng, d);
    while (b == a) b = pick(rng, d);
    return std::pair{a, b};
  };
  std::vector<RuleCase> cases;
  cases.push_back({"color_change", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 10);
                     const NodeId v = pick(rng, d);
                     return Application{d, color_change(d, v).result};
                   }});
  cases.push_back({"fuse_spiders", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 10);
                     const auto [a, b] = two_distinct(rng, d);
                     d.spider(b).kind = d.spider(a).kind;
                     for (EdgeId e : d.edges_between(a, b))
                       if (d.edge(e).kind == EdgeKind::Hadamard) d.remove_edge(e);
                     d.add_edge(a, b, EdgeKind::Plain);
                     return Application{d, fuse_spiders(d, a, b).result};
                   }});
  cases.push_back({"fuse_spiders_absorbing_loops", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 10);
                     const auto [a, b] = two_distinct(rng, d);
                     d.spider(b).kind = d.spider(a).kind;
                     d.add_edge(a, b, EdgeKind::Plain);
                     for (std::size_t k = 1 + below(rng, 2); k > 0; --k) d.add_edge(a, b, EdgeKind::Hadamard);
                     ZxDiagram after = d;
                     inplace::fuse_spiders(after, a, b, true);
                     return Application{d, after};
                   }});
  cases.push_back({"hadamard_cancel", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 9);
                     const NodeId n1 = pick(rng, d), n2 = pick(rng, d);
                     const NodeId v = d.add_spider(SpiderKind::Z);
                     d.add_edge(v, n1, EdgeKind::Hadamard);
                     d.add_edge(v, n2, EdgeKind::Hadamard);
                     return Application{d, hadamard_cancel(d, v).result};
                   }});
  cases.push_back({"expand_hadamard_edge", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 7);
                     const auto [a, b] = two_distinct(rng, d);
                     d.add_edge(a, b, EdgeKind::Hadamard);
                     std::vector<EdgeId> hs;
                     for (const auto& [e, ed] : d.edges())
                       if (ed.kind == EdgeKind::Hadamard) hs.push_back(e);
                     return Application{d, expand_hadamard_edge(d, hs[below(rng, hs.size())]).result};
                   }});
  cases.push_back({"collapse_hadamard_chain", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 7);
                     const auto [a, b] = two_distinct(rng, d);
                     const NodeId z1 = d.add_spider(SpiderKind::Z, Phase::half_pi());
                     const NodeId x = d.add_spider(SpiderKind::X, Phase::half_pi());
                     const NodeId z2 = d.add_spider(SpiderKind::Z, Phase::half_pi());
                     d.add_edge(a, z1);
                     d.add_edge(z1, x);
                     d.add_edge(x, z2);
                     d.add_edge(z2, b);
                     return Application{d, collapse_hadamard_chain(d, z1, x, z2).result};
                   }});
  cases.push_back({"decouple_x_state", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 8);
                     const NodeId z = d.add_spider(SpiderKind::Z, random_phase(rng));
                     for (std::size_t k = below(rng, 4); k > 0; --k) {
                       NodeId n = pick(rng, d);
                       while (n == z) n = pick(rng, d);
                       d.add_edge(z, n, rng() % 2 ? EdgeKind::Plain : EdgeKind::Hadamard);
                     }
                     if (rng() % 3 == 0) d.outputs().push_back(z);
                     const NodeId x = d.add_spider(SpiderKind::X);
                     d.add_edge(x, z, EdgeKind::Plain);
                     return Application{d, decouple_x_state(d, x).result};
                   }});
  cases.push_back({"local_complement", [=](std::mt19937_64& rng) {
                     ZxDiagram d = random_graph_like(rng, 1 + below(rng, 8), 0.4, true);
                     const NodeId v = d.add_spider(SpiderKind::Z, rng() % 2 ? Phase(1, 2) : Phase(3, 2));
                     for (const auto& [n, s] : std::map<NodeId, Spider>(d.spiders()))
                       if (n != v && rng() % 2) d.add_edge(v, n, EdgeKind::Hadamard);
                     return Application{d, local_complement(d, v).result};
                   }});
  cases.push_back({"remove_parallel_hadamard_pair", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 10);
                     const auto [a, b] = two_distinct(rng, d);
                     d.spider(b).kind = d.spider(a).kind;
                     d.add_edge(a, b, EdgeKind::Hadamard);
                     d.add_edge(a, b, EdgeKind::Hadamard);
                     return Application{d, remove_parallel_hadamard_pair(d, a, b).result};
                   }});
  cases.push_back({"drop_scalar", [=](std::mt19937_64& rng) {
                     ZxDiagram d = base(rng, 9);
                     Phase p = random_phase(rng);
                     if (p.is_pi()) p = Phase::zero();
                     const NodeId v = d.add_spider(rng() % 2 ? SpiderKind::Z : SpiderKind::X, p);
                     return Application{d, drop_scalar(d, v).result};
                   }});
  return cases;
}

}  // namespace zxtest
