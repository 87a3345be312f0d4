#include "zxmbqc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

namespace zxmbqc {

Eigen::MatrixXcd Tensor::as_matrix() const {
  const Eigen::Index rows = Eigen::Index{1} << n_outputs;
  const Eigen::Index cols = Eigen::Index{1} << n_inputs;
  // data is row-major; Eigen maps are column-major by default.
  return Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      data.data(), rows, cols);
}

Tensor Tensor::from_matrix(const Eigen::MatrixXcd& m) {
  auto log2 = [](Eigen::Index n) {
    std::size_t k = 0;
    while ((Eigen::Index{1} << k) < n) ++k;
    if ((Eigen::Index{1} << k) != n) throw ShapeMismatch("matrix side is not a power of two");
    return k;
  };
  Tensor t;
  t.n_outputs = log2(m.rows());
  t.n_inputs = log2(m.cols());
  t.data.resize(m.size());
  Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      t.data.data(), m.rows(), m.cols()) = m;
  return t;
}

Tensor Tensor::from_scalar(cplx value) {
  Tensor t;
  t.data = Eigen::VectorXcd::Constant(1, value);
  return t;
}

namespace {

// Variables are spider ids (>= 0) and open legs, numbered -(position + 1)
// with outputs first.
using Var = std::int64_t;

Var open_var(std::size_t position) { return -static_cast<Var>(position) - 1; }

struct Factor {
  std::vector<Var> scope;  // ascending; the first variable is the high bit
  Eigen::VectorXcd values;
};

const Eigen::Matrix2cd& basis(SpiderKind k) {
  static const Eigen::Matrix2cd z = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd x = (Eigen::Matrix2cd() << 1, 1, 1, -1).finished();
  return k == SpiderKind::Z ? z : x;
}

const Eigen::Matrix2cd& edge_matrix(EdgeKind k) {
  static const Eigen::Matrix2cd plain = Eigen::Matrix2cd::Identity();
  static const Eigen::Matrix2cd h =
      (Eigen::Matrix2cd() << 1, 1, 1, -1).finished() / std::numbers::sqrt2;
  return k == EdgeKind::Plain ? plain : h;
}

Factor pairwise(Var a, Var b, const Eigen::Matrix2cd& m) {
  // m is indexed [a][b]
  Factor f;
  const bool swap = b < a;
  f.scope = swap ? std::vector<Var>{b, a} : std::vector<Var>{a, b};
  const Eigen::Matrix2cd mm = swap ? Eigen::Matrix2cd(m.transpose()) : m;
  f.values.resize(4);
  f.values << mm(0, 0), mm(0, 1), mm(1, 0), mm(1, 1);
  return f;
}

std::vector<Factor> build_factors(const ZxDiagram& d) {
  std::vector<Factor> fs;
  for (const auto& [id, s] : d.spiders()) {
    Factor f;
    f.scope = {id};
    f.values.resize(2);
    f.values << cplx(1.0, 0.0), s.phase.unit();
    fs.push_back(std::move(f));
  }
  for (const auto& [id, e] : d.edges()) {
    const Eigen::Matrix2cd m =
        basis(d.spider(e.a).kind) * edge_matrix(e.kind) * basis(d.spider(e.b).kind).transpose();
    fs.push_back(pairwise(e.a, e.b, m));
  }
  std::size_t pos = 0;
  for (const auto* list : {&d.outputs(), &d.inputs()})
    for (NodeId v : *list) fs.push_back(pairwise(v, open_var(pos++), basis(d.spider(v).kind)));
  return fs;
}

// Multiplies `group` together and sums out `v` (when v is not nullopt-like,
// i.e. present in the union scope).
Factor combine(const std::vector<const Factor*>& group, Var v, bool sum_out) {
  std::set<Var> uni;
  for (const Factor* f : group) uni.insert(f->scope.begin(), f->scope.end());
  if (sum_out) uni.erase(v);
  Factor out;
  out.scope.assign(uni.begin(), uni.end());
  const std::size_t k = out.scope.size();

  // For every factor, the source of each of its index bits: a bit of the
  // output assignment, or the summed variable (marked with -1).
  struct Map {
    const Factor* f;
    std::vector<int> src;
  };
  std::vector<Map> maps;
  for (const Factor* f : group) {
    Map m{f, {}};
    for (Var x : f->scope) {
      if (sum_out && x == v) {
        m.src.push_back(-1);
      } else {
        const auto p = std::lower_bound(out.scope.begin(), out.scope.end(), x) - out.scope.begin();
        m.src.push_back(static_cast<int>(k - 1 - static_cast<std::size_t>(p)));
      }
    }
    maps.push_back(std::move(m));
  }

  const std::size_t n = std::size_t{1} << k;
  out.values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  const int vals = sum_out ? 2 : 1;
  for (std::size_t a = 0; a < n; ++a) {
    cplx acc = 0.0;
    for (int xv = 0; xv < vals; ++xv) {
      cplx prod = 1.0;
      for (const Map& m : maps) {
        std::size_t idx = 0;
        for (int s : m.src) idx = (idx << 1) | (s < 0 ? std::size_t(xv) : ((a >> s) & 1U));
        prod *= m.f->values(static_cast<Eigen::Index>(idx));
        if (prod == cplx(0.0)) break;
      }
      acc += prod;
    }
    out.values(static_cast<Eigen::Index>(a)) = acc;
  }
  return out;
}

Contraction run(const ZxDiagram& d, const EliminationOrder& order, bool magnitude) {
  {
    std::vector<NodeId> sorted(order);
    std::sort(sorted.begin(), sorted.end());
    std::vector<NodeId> ids;
    for (const auto& kv : d.spiders()) ids.push_back(kv.first);
    if (sorted != ids) throw std::invalid_argument("elimination order is not a permutation of the spiders");
  }
  std::vector<Factor> factors = build_factors(d);
  if (magnitude)
    for (Factor& f : factors) f.values = f.values.cwiseAbs().cast<cplx>();

  Contraction result;
  for (NodeId v : order) {
    std::vector<const Factor*> group;
    std::vector<Factor> rest;
    for (const Factor& f : factors)
      if (std::binary_search(f.scope.begin(), f.scope.end(), v)) group.push_back(&f);
    Factor merged = combine(group, v, true);
    result.max_rank = std::max(result.max_rank, merged.scope.size());
    for (Factor& f : factors)
      if (!std::binary_search(f.scope.begin(), f.scope.end(), v)) rest.push_back(std::move(f));
    rest.push_back(std::move(merged));
    factors = std::move(rest);
  }

  // Only open legs remain; fold everything into one factor over all of them.
  const std::size_t r = d.outputs().size() + d.inputs().size();
  Factor all;
  for (std::size_t p = 0; p < r; ++p) all.scope.push_back(open_var(p));
  std::sort(all.scope.begin(), all.scope.end());
  all.values = Eigen::VectorXcd::Ones(1);
  {
    // A neutral factor covering every open leg keeps `combine` in charge of
    // the bookkeeping.
    Factor ones;
    ones.scope = all.scope;
    ones.values = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(std::size_t{1} << r));
    std::vector<const Factor*> group{&ones};
    for (const Factor& f : factors) group.push_back(&f);
    all = combine(group, 0, false);
  }

  // combine orders bits by ascending variable, i.e. position r-1 first.
  // Reverse so that position 0 is the most significant bit.
  Tensor& t = result.tensor;
  t.n_outputs = d.outputs().size();
  t.n_inputs = d.inputs().size();
  t.data.resize(static_cast<Eigen::Index>(std::size_t{1} << r));
  for (std::size_t a = 0; a < (std::size_t{1} << r); ++a) {
    std::size_t rev = 0;
    for (std::size_t b = 0; b < r; ++b) rev |= ((a >> b) & 1U) << (r - 1 - b);
    t.data(static_cast<Eigen::Index>(rev)) = all.values(static_cast<Eigen::Index>(a));
  }
  return result;
}

}  // namespace

EliminationOrder elimination_order(const ZxDiagram& d) {
  std::map<Var, std::set<Var>> adj;
  for (const auto& kv : d.spiders()) adj[kv.first];
  for (const auto& [id, e] : d.edges()) {
    adj[e.a].insert(e.b);
    adj[e.b].insert(e.a);
  }
  std::size_t pos = 0;
  for (const auto* list : {&d.outputs(), &d.inputs()})
    for (NodeId v : *list) {
      const Var o = open_var(pos++);
      adj[v].insert(o);
      adj[o].insert(v);
    }

  std::set<Var> remaining;
  for (const auto& kv : d.spiders()) remaining.insert(kv.first);

  EliminationOrder order;
  while (!remaining.empty()) {
    std::tuple<std::size_t, std::size_t, Var> best{std::numeric_limits<std::size_t>::max(), 0, 0};
    for (Var v : remaining) {
      const auto& nb = adj[v];
      std::size_t fill = 0;
      for (auto i = nb.begin(); i != nb.end(); ++i)
        for (auto j = std::next(i); j != nb.end(); ++j)
          if (!adj[*i].count(*j)) ++fill;
      best = std::min(best, std::tuple{fill, nb.size(), v});
    }
    const Var v = std::get<2>(best);
    const std::set<Var> nb = adj[v];
    for (Var a : nb) {
      adj[a].erase(v);
      for (Var b : nb)
        if (a != b) adj[a].insert(b);
    }
    adj.erase(v);
    remaining.erase(v);
    order.push_back(v);
  }
  return order;
}

Contraction contract(const ZxDiagram& d, const EliminationOrder& order) { return run(d, order, false); }

Tensor evaluate(const ZxDiagram& d) { return run(d, elimination_order(d), false).tensor; }

double magnitude_bound(const ZxDiagram& d) {
  const Tensor t = run(d, elimination_order(d), true).tensor;
  return t.data.cwiseAbs().maxCoeff();
}

Equivalence equivalent_up_to_scalar(const Tensor& t1, const Tensor& t2, double tol) {
  if (t1.n_outputs != t2.n_outputs || t1.n_inputs != t2.n_inputs || t1.data.size() != t2.data.size())
    throw ShapeMismatch("tensor shapes differ");
  const double n1 = t1.data.cwiseAbs().maxCoeff();
  const double n2 = t2.data.cwiseAbs().maxCoeff();
  if (n1 == 0.0 && n2 == 0.0) return {true, 1.0};
  if (n1 == 0.0 || n2 == 0.0) return {false, 0.0};
  const cplx c = t2.data.dot(t1.data) / t2.data.squaredNorm();  // dot conjugates the left side
  const double resid = (t1.data - c * t2.data).cwiseAbs().maxCoeff();
  const bool ok = c != cplx(0.0) && resid <= tol * std::max(n1, n2);
  return {ok, c};
}

bool diagrams_equivalent(const ZxDiagram& a, const ZxDiagram& b, double tol) {
  const Tensor ta = evaluate(a);
  const Tensor tb = evaluate(b);
  if (ta.n_outputs != tb.n_outputs || ta.n_inputs != tb.n_inputs) throw ShapeMismatch("diagram arities differ");
  const bool za = ta.data.cwiseAbs().maxCoeff() <= kZeroFloor * magnitude_bound(a);
  const bool zb = tb.data.cwiseAbs().maxCoeff() <= kZeroFloor * magnitude_bound(b);
  if (za || zb) return za && zb;
  return equivalent_up_to_scalar(ta, tb, tol).equivalent;
}

}  // namespace zxmbqc
