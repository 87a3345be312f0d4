#pragma once

#include "zxmbqc/diagram.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace zxmbqc {

using cplx = std::complex<double>;

/// Dense tensor over the open legs of a diagram, every leg of dimension 2.
///
/// Index order is all outputs then all inputs, row-major, the first listed
/// leg being the most significant bit. Viewed as a matrix the rows are
/// output assignments and the columns input assignments.
struct Tensor {
  std::size_t n_outputs = 0;
  std::size_t n_inputs = 0;
  Eigen::VectorXcd data;

  std::size_t rank() const { return n_outputs + n_inputs; }
  bool is_scalar() const { return rank() == 0; }
  cplx scalar() const { return data(0); }
  Eigen::MatrixXcd as_matrix() const;

  static Tensor from_matrix(const Eigen::MatrixXcd& m);
  static Tensor from_scalar(cplx value);
};

using EliminationOrder = std::vector<NodeId>;

struct Contraction {
  Tensor tensor;
  // Largest scope of any factor produced while summing out a spider.
  std::size_t max_rank = 0;
};

/// Greedy min-fill ordering (ties: fewer neighbours, then lower id) over all
/// spiders. Boundary legs count as neighbours but are never eliminated.
EliminationOrder elimination_order(const ZxDiagram& d);

/// Variable-elimination contraction in the given order, which must be a
/// permutation of the diagram's spiders (std::invalid_argument otherwise).
Contraction contract(const ZxDiagram& d, const EliminationOrder& order);

/// Spiders are unnormalised, a Hadamard edge carries [[1,1],[1,-1]]/sqrt(2).
Tensor evaluate(const ZxDiagram& d);

/// The same network contracted with every entry replaced by its modulus: an
/// upper bound on |entry| of evaluate(d) that scales with the size of the sum.
/// Used to set the floor below which an amplitude counts as zero.
double magnitude_bound(const ZxDiagram& d);

struct Equivalence {
  bool equivalent = false;
  cplx scalar{1.0, 0.0};
};

/// Least-squares fit t1 ~ c t2, accepted when the residual is within
/// tol * max(|t1|_inf, |t2|_inf). Two zero tensors are equivalent with c = 1.
/// Throws ShapeMismatch.
Equivalence equivalent_up_to_scalar(const Tensor& t1, const Tensor& t2, double tol = 1e-9);

/// Relative floor used for zero/non-zero decisions on amplitudes.
inline constexpr double kZeroFloor = 1e-9;

/// Diagram-level comparison: tensors that are both below the zero floor of
/// their own network count as equivalent, otherwise equivalent_up_to_scalar.
bool diagrams_equivalent(const ZxDiagram& a, const ZxDiagram& b, double tol = 1e-9);

}  // namespace zxmbqc
