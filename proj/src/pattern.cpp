#include "zxmbqc/pattern.hpp"

#include "zxmbqc/rewrite.hpp"
#include "zxmbqc/simplify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace zxmbqc {

void MeasurementPattern::add_qubit(PatternQubit q) {
  const QubitId id = q.id;
  if (!qubits.emplace(id, std::move(q)).second)
    throw std::invalid_argument("duplicate qubit " + std::to_string(id));
}

void MeasurementPattern::add_edge(QubitId a, QubitId b) {
  if (a == b) throw std::invalid_argument("self-edge on qubit " + std::to_string(a));
  if (!qubits.count(a) || !qubits.count(b))
    throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) + " has an unknown endpoint");
  edges.insert(std::minmax(a, b));
}

std::vector<QubitId> MeasurementPattern::neighbors(QubitId q) const {
  std::vector<QubitId> out;
  for (const auto& [a, b] : edges) {
    if (a == q) out.push_back(b);
    if (b == q) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void MeasurementPattern::check() const {
  for (const auto& [id, q] : qubits)
    if (id != q.id) throw std::invalid_argument("qubit key " + std::to_string(id) + " does not match its id");
  for (const auto& [a, b] : edges) {
    if (a >= b) throw std::invalid_argument("edge not stored as (low, high)");
    if (!qubits.count(a) || !qubits.count(b)) throw std::invalid_argument("edge endpoint missing");
  }
  std::vector<QubitId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<QubitId> ids;
  for (const auto& [id, q] : qubits) ids.push_back(id);
  if (sorted != ids) throw std::invalid_argument("order is not a permutation of the qubits");
  std::set<QubitId> seen;
  for (QubitId r : readouts)
    if (!qubits.count(r) || !seen.insert(r).second) throw std::invalid_argument("bad readout " + std::to_string(r));
}

bool same_structure(const MeasurementPattern& a, const MeasurementPattern& b) {
  if (a.qubits.size() != b.qubits.size() || a.edges != b.edges || a.order != b.order) return false;
  for (const auto& [id, qa] : a.qubits) {
    auto it = b.qubits.find(id);
    if (it == b.qubits.end()) return false;
    const PatternQubit& qb = it->second;
    if (qa.angle != qb.angle || qa.basis != qb.basis || qa.parametric != qb.parametric) return false;
  }
  return true;
}

MeasurementPattern pattern_from_graph_like(const ZxDiagram& d) {
  if (!d.is_closed()) throw NotGraphLike("diagram has boundary legs");
  if (!is_graph_like(d)) throw NotGraphLike("diagram has X spiders, plain edges or parallel edges");
  MeasurementPattern p;
  for (const auto& [v, s] : d.spiders()) {
    p.add_qubit({v, s.phase, MeasurementBasis::XY, s.parametric, {}});
    p.order.push_back(v);
    p.readouts.push_back(v);
  }
  for (const auto& [eid, e] : d.edges()) p.add_edge(e.a, e.b);
  return p;
}

ZxDiagram pattern_to_diagram(const MeasurementPattern& p) {
  ZxDiagram d;
  for (const auto& [id, q] : p.qubits) {
    const Phase angle = q.basis == MeasurementBasis::XY ? q.angle : Phase{};
    d.add_spider_with_id(id, Spider{SpiderKind::Z, angle, q.parametric});
  }
  for (const auto& [id, q] : p.qubits)
    if (q.basis == MeasurementBasis::Z) d.add_edge(id, d.add_spider(SpiderKind::X), EdgeKind::Plain);
  for (const auto& [a, b] : p.edges) d.add_edge(a, b, EdgeKind::Hadamard);
  return d;
}

// ---------------------------------------------------------------------------

namespace {

GoldenGraph make_golden(std::uint32_t t5, std::uint32_t b3) {
  GoldenGraph g;
  g.nodes = {{"T1", 4}, {"T2", 0}, {"T3", 1}, {"T4", 0}, {"T5", t5}, {"M1", 2},
             {"M2", 0}, {"M3", 3}, {"B1", 5}, {"B2", 0}, {"B3", b3}};
  g.edges = {{"T1", "T2"}, {"T2", "T3"}, {"T2", "B1"}, {"T3", "M2"}, {"T3", "T4"}, {"T4", "T5"},
             {"T4", "B3"}, {"M1", "M2"}, {"M2", "M3"}, {"M3", "B2"}, {"B1", "B2"}, {"B2", "B3"}};
  return g;
}

PhasePolynomial promise_polynomial(const BooleanFunction& f, std::size_t n) {
  if (f.n != n) throw std::invalid_argument("expected a " + std::to_string(n) + "-bit function");
  return phase_polynomial(f);
}

}  // namespace

const GoldenGraph& golden_graph_3q() {
  static const GoldenGraph g = make_golden(7, 6);
  return g;
}

const GoldenGraph& golden_graph_3q_as_printed() {
  static const GoldenGraph g = make_golden(6, 7);
  return g;
}

MeasurementPattern instantiate(const GoldenGraph& g, const BooleanFunction& f) {
  const PhasePolynomial poly = promise_polynomial(f, 3);
  MeasurementPattern p;
  std::map<std::string, QubitId> ids;
  for (const GoldenNode& node : g.nodes) {
    const QubitId id = static_cast<QubitId>(ids.size());
    ids[node.label] = id;
    const Phase angle = node.mask ? poly.coefficient(node.mask) : Phase{};
    p.add_qubit({id, angle, MeasurementBasis::XY, node.mask != 0, node.label});
    p.order.push_back(id);
    p.readouts.push_back(id);
  }
  for (const auto& [a, b] : g.edges) p.add_edge(ids.at(a), ids.at(b));
  return p;
}

MeasurementPattern dj_pattern_3q(const BooleanFunction& f) { return instantiate(golden_graph_3q(), f); }

MeasurementPattern chain_pattern(const std::vector<Phase>& angles) {
  if (angles.size() % 2 != 0) throw std::invalid_argument("need an (alpha_X, alpha_Z) pair per wire");
  MeasurementPattern p;
  for (std::size_t w = 0; w < angles.size() / 2; ++w) {
    const QubitId base = static_cast<QubitId>(3 * w);
    p.add_qubit({base, {}, MeasurementBasis::XY, false, {}});
    p.add_qubit({base + 1, angles[2 * w], MeasurementBasis::XY, true, {}});
    p.add_qubit({base + 2, angles[2 * w + 1], MeasurementBasis::XY, true, {}});
    p.add_edge(base, base + 1);
    p.add_edge(base + 1, base + 2);
    p.order.insert(p.order.end(), {base, base + 1, base + 2});
    p.readouts.push_back(base + 2);
  }
  return p;
}

MeasurementPattern dj_pattern_chain(const BooleanFunction& f) {
  if (f.n != 1 && f.n != 2) throw std::invalid_argument("chain patterns cover n = 1 and n = 2");
  classify(f);
  return chain_pattern(oracle_spider_angles(f));
}

MeasurementPattern dj_pattern_2q(const BooleanFunction& f) {
  if (f.n != 2) throw std::invalid_argument("expected a 2-bit function");
  return dj_pattern_chain(f);
}

// ---------------------------------------------------------------------------

namespace {

// One lattice site. Z-basis sites are spares that get decoupled; the others
// carry a fixed angle in quarters of pi, plus a parity angle when mask != 0.
struct Site {
  bool z_basis = false;
  int quarters = 0;
  std::uint32_t mask = 0;
  const char* label = "";
};

using Grid = std::array<std::array<Site, 6>, 6>;

constexpr Site kZ{true, 0, 0, ""};
constexpr Site fixed(int q, const char* label = "") { return {false, q, 0, label}; }
constexpr Site carrier(std::uint32_t mask, const char* label, int q = 0) { return {false, q, mask, label}; }

constexpr Grid kCorrected{{
    {carrier(4, "T1"), kZ, kZ, kZ, kZ, carrier(7, "T5")},
    {fixed(2, "T2"), fixed(4), fixed(2), carrier(1, "T3"), fixed(2), fixed(2, "T4")},
    {fixed(2), kZ, kZ, fixed(2), kZ, fixed(2)},
    {fixed(2), kZ, carrier(2, "M1"), fixed(2, "M2"), kZ, fixed(2)},
    {fixed(2), kZ, kZ, carrier(3, "M3"), kZ, fixed(2)},
    {carrier(5, "B1", 2), fixed(4), fixed(2), fixed(6, "B2"), fixed(2), carrier(6, "B3", 2)},
}};

constexpr Grid kAsPrinted{{
    {carrier(4, "T1"), kZ, kZ, kZ, kZ, carrier(6, "T5")},
    {fixed(2, "T2"), fixed(2), fixed(2), carrier(1, "T3"), fixed(2), fixed(0, "T4")},
    {fixed(2), kZ, kZ, fixed(2), kZ, fixed(2)},
    {fixed(2), kZ, carrier(2, "M1"), fixed(0, "M2"), kZ, fixed(2)},
    {fixed(2), kZ, kZ, carrier(3, "M3"), kZ, fixed(2)},
    {carrier(5, "B1", 2), fixed(2), fixed(2), fixed(6, "B2"), fixed(2), carrier(7, "B3")},
}};

}  // namespace

MeasurementPattern lattice_pattern_3q(const BooleanFunction& f, LatticeReading reading) {
  const PhasePolynomial poly = promise_polynomial(f, 3);
  const Grid& grid = reading == LatticeReading::Corrected ? kCorrected : kAsPrinted;
  MeasurementPattern p;
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      const Site& s = grid[r][c];
      const QubitId id = 6 * r + c;
      PatternQubit q{id, Phase(s.quarters, 4), MeasurementBasis::XY, s.mask != 0, s.label};
      if (s.z_basis) q.basis = MeasurementBasis::Z;
      if (s.mask) q.angle += poly.coefficient(s.mask);
      p.add_qubit(q);
      p.order.push_back(id);
      p.readouts.push_back(id);
    }
  }
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (c + 1 < 6) p.add_edge(6 * r + c, 6 * r + c + 1);
      if (r + 1 < 6) p.add_edge(6 * r + c, 6 * (r + 1) + c);
    }
  }
  return p;
}

namespace {

void cancel_parallel_pairs(ZxDiagram& d, NodeId v) {
  for (NodeId n : d.neighbors(v))
    while (d.edges_between(v, n).size() >= 2) inplace::remove_parallel_hadamard_pair(d, v, n);
}

bool local_complement_applies(const ZxDiagram& d, NodeId v) {
  const Spider& s = d.spider(v);
  if (s.kind != SpiderKind::Z || s.parametric || !s.phase.is_proper_clifford()) return false;
  for (EdgeId e : d.incident_edges(v))
    if (d.edge(e).kind != EdgeKind::Hadamard) return false;
  return d.neighbors(v).size() == d.degree(v);
}

}  // namespace

MeasurementPattern reduce_lattice(const MeasurementPattern& p) {
  p.check();
  ZxDiagram d = pattern_to_diagram(p);
  std::set<NodeId> kept;
  for (const auto& [id, q] : p.qubits)
    if (!q.label.empty()) kept.insert(id);

  // Z-basis spares: decouple, then fuse each emitted |+> into its neighbour,
  // which deletes the cluster edge.
  for (const auto& [id, q] : p.qubits) {
    if (q.basis != MeasurementBasis::Z || kept.count(id)) continue;
    NodeId marker = -1;
    for (NodeId n : d.neighbors(id))
      if (d.spider(n).kind == SpiderKind::X) marker = n;
    const RewriteRecord rec = inplace::decouple_x_state(d, marker);
    for (NodeId st : rec.after) {
      const NodeId n = d.neighbors(st).front();
      inplace::fuse_spiders(d, n, st, true);
    }
  }

  auto is_spare = [&](NodeId v) { return !kept.count(v); };
  for (;;) {
    bool changed = false;
    for (const auto& [v, s] : d.spiders()) {
      if (!is_spare(v) || !local_complement_applies(d, v)) continue;
      inplace::local_complement(d, v);
      changed = true;
      break;
    }
    if (changed) continue;
    for (const auto& [v, s] : d.spiders()) {
      if (!is_spare(v) || s.parametric || !s.phase.is_zero() || d.degree(v) != 2) continue;
      const auto nb = d.neighbors(v);
      if (nb.size() != 2 || (kept.count(nb[0]) && kept.count(nb[1]))) continue;
      const NodeId keep = kept.count(nb[0]) ? nb[0] : nb[1];
      const NodeId gone = keep == nb[0] ? nb[1] : nb[0];
      inplace::hadamard_cancel(d, v);
      inplace::fuse_spiders(d, keep, gone, true);
      cancel_parallel_pairs(d, keep);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  for (const auto& [v, s] : d.spiders())
    if (is_spare(v)) throw ReductionStuck("spare qubit " + std::to_string(v) + " matches no rule");

  MeasurementPattern out = pattern_from_graph_like(d);
  for (auto& [id, q] : out.qubits) q.label = p.qubits.at(id).label;
  return out;
}

// ---------------------------------------------------------------------------

PatternOutcome run_postselected(const MeasurementPattern& p) {
  p.check();
  const ZxDiagram d = pattern_to_diagram(p);
  PatternOutcome out;
  out.amplitude = evaluate(d).scalar();
  out.floor = kZeroFloor * magnitude_bound(d);
  out.verdict = std::abs(out.amplitude) > out.floor ? Verdict::Constant : Verdict::Balanced;
  return out;
}

namespace {

constexpr std::size_t kMaxSampledQubits = 20;

// Splits the measurement order into chains, each walked from one end.
std::vector<std::vector<QubitId>> chains_in_order(const MeasurementPattern& p) {
  std::map<QubitId, std::vector<QubitId>> adj;
  for (const auto& [id, q] : p.qubits) {
    if (q.basis != MeasurementBasis::XY) throw NotChain("qubit " + std::to_string(id) + " is not an XY measurement");
    adj[id] = p.neighbors(id);
    if (adj[id].size() > 2) throw NotChain("qubit " + std::to_string(id) + " has degree above 2");
  }
  std::vector<std::vector<QubitId>> chains;
  std::set<QubitId> done;
  for (QubitId q : p.order) {
    if (done.count(q)) continue;
    const auto& nb = adj[q];
    if (nb.size() == 2) throw NotChain("chain not measured from an end at qubit " + std::to_string(q));
    std::vector<QubitId> chain{q};
    done.insert(q);
    QubitId prev = -1, cur = q;
    for (;;) {
      QubitId next = -1;
      for (QubitId n : adj[cur])
        if (n != prev) next = n;
      if (next < 0) break;
      if (done.count(next)) throw NotChain("cycle through qubit " + std::to_string(next));
      chain.push_back(next);
      done.insert(next);
      prev = cur;
      cur = next;
    }
    chains.push_back(std::move(chain));
  }
  std::vector<QubitId> walk;
  for (const auto& c : chains) walk.insert(walk.end(), c.begin(), c.end());
  // Chains must be measured one after another, each end to end.
  if (walk != p.order) throw NotChain("order does not walk each path from one end");
  return chains;
}

}  // namespace

PatternOutcome run_sampled(const MeasurementPattern& p, std::uint64_t seed, std::size_t shots) {
  p.check();
  const auto chains = chains_in_order(p);
  if (p.qubits.size() > kMaxSampledQubits)
    throw std::invalid_argument("run_sampled supports at most " + std::to_string(kMaxSampledQubits) + " qubits");

  std::map<QubitId, Eigen::Index> bit;
  for (const auto& [id, q] : p.qubits) bit[id] = Eigen::Index{1} << bit.size();
  const Eigen::Index dim = Eigen::Index{1} << p.qubits.size();
  Eigen::VectorXcd cluster = Eigen::VectorXcd::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (const auto& [a, b] : p.edges) {
    const Eigen::Index mask = bit[a] | bit[b];
    for (Eigen::Index r = 0; r < dim; ++r)
      if ((r & mask) == mask) cluster(r) = -cluster(r);
  }

  PatternOutcome out = run_postselected(p);
  out.shots = shots;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (std::size_t shot = 0; shot < shots; ++shot) {
    Eigen::VectorXcd psi = cluster;
    bool constant = true;
    for (const auto& chain : chains) {
      int s1 = 0, s2 = 0;  // corrected outcomes one and two steps back
      for (QubitId q : chain) {
        const Phase beta = p.qubits.at(q).angle;
        const cplx u = (s1 ? -beta : beta).unit();
        const Eigen::Index b = bit[q];
        double prob[2] = {0.0, 0.0};
        for (Eigen::Index r = 0; r < dim; ++r) {
          if (r & b) continue;
          prob[0] += std::norm((psi(r) + u * psi(r | b)) * inv_sqrt2);
          prob[1] += std::norm((psi(r) - u * psi(r | b)) * inv_sqrt2);
        }
        const int m = uniform(rng) * (prob[0] + prob[1]) < prob[0] ? 0 : 1;
        const cplx sign = m ? -u : u;
        const double norm = std::sqrt(prob[m]);
        for (Eigen::Index r = 0; r < dim; ++r) {
          if (r & b) continue;
          psi(r) = (psi(r) + sign * psi(r | b)) * inv_sqrt2 / norm;
          psi(r | b) = 0.0;
        }
        const int s = m ^ s2;
        s2 = s1;
        s1 = s;
      }
      if (s1) constant = false;
    }
    ++(constant ? out.constant_shots : out.balanced_shots);
  }
  if (shots > 0) out.verdict = 2 * out.constant_shots > shots ? Verdict::Constant : Verdict::Balanced;
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::map<QubitId, QubitId>> find_isomorphism(const MeasurementPattern& a, const MeasurementPattern& b,
                                                           bool match_angles) {
  if (a.qubits.size() != b.qubits.size() || a.edges.size() != b.edges.size()) return std::nullopt;
  std::map<QubitId, std::set<QubitId>> adj_a, adj_b;
  for (const auto& [id, q] : a.qubits) adj_a[id];
  for (const auto& [id, q] : b.qubits) adj_b[id];
  for (const auto& [x, y] : a.edges) adj_a[x].insert(y), adj_a[y].insert(x);
  for (const auto& [x, y] : b.edges) adj_b[x].insert(y), adj_b[y].insert(x);

  auto compatible = [&](QubitId x, QubitId y) {
    if (adj_a[x].size() != adj_b[y].size()) return false;
    if (!match_angles) return true;
    const PatternQubit& qa = a.qubits.at(x);
    const PatternQubit& qb = b.qubits.at(y);
    return qa.angle == qb.angle && qa.basis == qb.basis;
  };

  // Visit a in BFS order from high-degree seeds so each step is constrained
  // by already-mapped neighbours.
  std::vector<QubitId> visit;
  std::set<QubitId> queued;
  std::vector<QubitId> seeds;
  for (const auto& [id, n] : adj_a) seeds.push_back(id);
  std::stable_sort(seeds.begin(), seeds.end(),
                   [&](QubitId x, QubitId y) { return adj_a[x].size() > adj_a[y].size(); });
  for (QubitId s : seeds) {
    if (!queued.insert(s).second) continue;
    visit.push_back(s);
    for (std::size_t i = visit.size() - 1; i < visit.size(); ++i)
      for (QubitId n : adj_a[visit[i]])
        if (queued.insert(n).second) visit.push_back(n);
  }

  std::map<QubitId, QubitId> map;
  std::set<QubitId> used;
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == visit.size()) return true;
    const QubitId x = visit[k];
    for (const auto& [y, ny] : adj_b) {
      if (used.count(y) || !compatible(x, y)) continue;
      bool ok = true;
      for (const auto& [mx, my] : map)
        if (adj_a[x].count(mx) != ny.count(my)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[x] = y;
      used.insert(y);
      if (extend(k + 1)) return true;
      map.erase(x);
      used.erase(y);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace zxmbqc
