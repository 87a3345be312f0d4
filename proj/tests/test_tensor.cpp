#include "zxmbqc/pattern.hpp"
#include "zxmbqc/tensor.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace zxmbqc;

namespace {

double max_diff(const Tensor& a, const Tensor& b) { return (a.data - b.data).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Tensor, SingleSpiderScalar) {
  for (int k = 0; k < 8; ++k) {
    const Phase a(k, 4);
    for (SpiderKind kind : {SpiderKind::Z, SpiderKind::X}) {
      ZxDiagram d;
      d.add_spider(kind, a);
      EXPECT_NEAR(std::abs(evaluate(d).scalar() - (1.0 + a.unit())), 0.0, 1e-12);
    }
  }
}

TEST(Tensor, EmptyDiagramIsOne) {
  const Tensor t = evaluate(ZxDiagram{});
  ASSERT_TRUE(t.is_scalar());
  EXPECT_EQ(t.scalar(), cplx(1.0));
}

TEST(Tensor, HadamardEdgeIsNormalisedHadamard) {
  ZxDiagram d = new_diagram(1, 1);
  d.set_edge_kind(d.edges().begin()->first, EdgeKind::Hadamard);
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  EXPECT_TRUE(evaluate(d).as_matrix().isApprox(h / std::sqrt(2.0)));
}

TEST(Tensor, IndexOrderOutputsFirstMostSignificant) {
  // Output 0 carries |0> (X(0) state up to 2), output 1 carries |+>.
  ZxDiagram d;
  const NodeId a = d.add_spider(SpiderKind::X);
  const NodeId b = d.add_spider(SpiderKind::Z);
  d.outputs() = {a, b};
  const Tensor t = evaluate(d);
  ASSERT_EQ(t.rank(), 2u);
  EXPECT_NEAR(std::abs(t.data(0) - 2.0), 0.0, 1e-12);  // |00>
  EXPECT_NEAR(std::abs(t.data(1) - 2.0), 0.0, 1e-12);  // |01>
  EXPECT_NEAR(std::abs(t.data(2)), 0.0, 1e-12);        // |10>
  EXPECT_NEAR(std::abs(t.data(3)), 0.0, 1e-12);
}

TEST(Tensor, MatchesBruteForceOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + zxtest::below(rng, 6);
    const ZxDiagram d = zxtest::random_diagram(rng, n, zxtest::below(rng, 8));
    Tensor want;
    try {
      want = zxtest::brute_force(d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    const Tensor got = evaluate(d);
    ASSERT_EQ(got.n_outputs, want.n_outputs);
    ASSERT_EQ(got.n_inputs, want.n_inputs);
    EXPECT_LT(max_diff(got, want), 1e-9 * std::max(1.0, want.data.cwiseAbs().maxCoeff()));
  }
}

TEST(Tensor, OrderDoesNotChangeTheValue) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const ZxDiagram d = zxtest::random_diagram(rng, 2 + zxtest::below(rng, 8), zxtest::below(rng, 14));
    EliminationOrder order;
    for (const auto& [v, s] : d.spiders()) order.push_back(v);
    const Tensor ref = contract(d, order).tensor;
    std::shuffle(order.begin(), order.end(), rng);
    const Tensor shuffled = contract(d, order).tensor;
    EXPECT_LT(max_diff(ref, shuffled), 1e-9 * std::max(1.0, ref.data.cwiseAbs().maxCoeff()));
  }
}

TEST(Tensor, OrderMustBeAPermutation) {
  ZxDiagram d = new_diagram(1, 1);
  EXPECT_THROW(contract(d, {0}), std::invalid_argument);
  EXPECT_THROW(contract(d, {0, 0}), std::invalid_argument);
  EXPECT_THROW(contract(d, {0, 5}), std::invalid_argument);
  const EliminationOrder o = elimination_order(d);
  EXPECT_EQ(o.size(), 2u);
}

TEST(Tensor, LatticeContractsWithSmallRank) {
  const MeasurementPattern p = lattice_pattern_3q(BooleanFunction(3, 23));
  const ZxDiagram d = pattern_to_diagram(p);
  const Contraction c = contract(d, elimination_order(d));
  EXPECT_LE(c.max_rank, 12u);
  EXPECT_GE(c.max_rank, 2u);
}

TEST(Tensor, MagnitudeBoundDominates) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    ZxDiagram d = zxtest::random_diagram(rng, 1 + zxtest::below(rng, 7), zxtest::below(rng, 10), false);
    EXPECT_LE(std::abs(evaluate(d).scalar()), magnitude_bound(d) * (1 + 1e-12));
  }
}

TEST(Tensor, EquivalenceUpToScalar) {
  Tensor a = Tensor::from_matrix(Eigen::MatrixXcd::Identity(2, 2));
  Tensor b = a;
  b.data *= cplx(0.0, 3.0);
  Equivalence e = equivalent_up_to_scalar(b, a);
  EXPECT_TRUE(e.equivalent);
  EXPECT_NEAR(std::abs(e.scalar - cplx(0.0, 3.0)), 0.0, 1e-12);

  Tensor c = a;
  c.data(3) = -1.0;
  EXPECT_FALSE(equivalent_up_to_scalar(a, c).equivalent);

  Tensor zero = a;
  zero.data.setZero();
  EXPECT_FALSE(equivalent_up_to_scalar(zero, a).equivalent);
  EXPECT_FALSE(equivalent_up_to_scalar(a, zero).equivalent);
  EXPECT_TRUE(equivalent_up_to_scalar(zero, zero).equivalent);

  EXPECT_THROW(equivalent_up_to_scalar(a, Tensor::from_scalar(1.0)), ShapeMismatch);
  EXPECT_THROW(Tensor::from_matrix(Eigen::MatrixXcd::Identity(3, 3)), ShapeMismatch);
}

TEST(Tensor, MatrixRoundTrip) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(4, 2);
  const Tensor t = Tensor::from_matrix(m);
  EXPECT_EQ(t.n_outputs, 2u);
  EXPECT_EQ(t.n_inputs, 1u);
  EXPECT_EQ(t.data(1), m(0, 1));
  EXPECT_TRUE(t.as_matrix().isApprox(m));
}
