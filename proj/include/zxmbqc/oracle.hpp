#pragma once

#include "zxmbqc/circuit.hpp"
#include "zxmbqc/phase.hpp"
#include "zxmbqc/verdict.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zxmbqc {

/// f : {0,1}^n -> {0,1} as a 2^n-bit truth table. Input i (x_0 the most
/// significant bit of i) is stored at bit 2^n - 1 - i, so the table reads
/// f(0...0) ... f(1...1) from the most significant bit down.
struct BooleanFunction {
  std::size_t n = 0;
  std::uint64_t table = 0;

  /// Throws std::invalid_argument unless 1 <= n <= 6 and table fits.
  BooleanFunction(std::size_t n, std::uint64_t table);

  std::size_t size() const { return std::size_t{1} << n; }
  bool operator()(std::size_t input) const { return (table >> (size() - 1 - input)) & 1U; }
  /// Bit x_i of an input index.
  bool bit(std::size_t input, std::size_t i) const { return (input >> (n - 1 - i)) & 1U; }

  /// Decimal ("23") or binary ("00010111", exactly 2^n digits).
  static BooleanFunction parse(std::size_t n, std::string_view text);
  /// 2^n binary digits, f(0...0) first.
  std::string binary() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

/// Throws NotPromise when f is neither constant nor balanced.
Verdict classify(const BooleanFunction& f);

/// binomial(2^n, 2^(n-1)) for 1 <= n <= 6.
std::uint64_t count_balanced(std::size_t n);

/// All constant and balanced functions on n <= 3 bits, ascending table.
std::vector<BooleanFunction> enumerate_promise(std::size_t n);

/// Variants in table-column order: the two constants, then the balanced
/// functions ascending. Column k (1-based) is element k-1.
std::vector<BooleanFunction> variant_columns(std::size_t n);
/// Parses "1".."72" for n = 3, or roman "i".."viii" / "1".."8" for n <= 2.
BooleanFunction variant(std::size_t n, std::string_view column);

/// Multilinear integer polynomial; a monomial is a mask with bit i <-> x_i.
struct MultilinearPolynomial {
  std::size_t n = 0;
  std::map<std::uint32_t, std::int64_t> coeffs;

  std::int64_t operator()(const std::vector<int>& x) const;
};

/// Kronecker delta of `point` expanded over monomials of x.
MultilinearPolynomial delta_polynomial(const std::vector<int>& point);

/// theta(x) = c_0 + sum_S c_S * parity_S(x); mask bit i <-> x_i.
struct PhasePolynomial {
  std::size_t n = 0;
  Phase constant;
  std::map<std::uint32_t, Phase> coeffs;  // every non-empty mask present

  Phase coefficient(std::uint32_t mask) const;
  Phase operator()(std::size_t input) const;
};

/// Exact expansion of pi * f(x) over parity terms. Throws NotPromise.
PhasePolynomial phase_polynomial(const BooleanFunction& f);

/// Three-qubit diagonal oracle built from single-qubit phase gates wrapped in
/// CNOT ladders, one gate per parity term. Throws NotPromise.
Circuit oracle_circuit_3q(const BooleanFunction& f);

/// Z/Y-gate oracle for n = 1 or 2: f = c xor sum a_i x_i puts Z on each
/// wire with a_i = 1 when c = 0, Y when c = 1 and f is balanced.
Circuit dj_oracle_circuit(const BooleanFunction& f);

/// Per wire (alpha_X, alpha_Z) of the X(alpha_X) - Z(alpha_Z) oracle form;
/// n = 1 gives two angles, n = 2 four.
std::vector<Phase> oracle_spider_angles(const BooleanFunction& f);
std::array<Phase, 4> two_qubit_spider_angles(const BooleanFunction& f);

/// The 2-bit angle table as originally published, column order i..viii.
/// Kept for regression only: columns iv and v are wrong.
std::array<std::array<Phase, 4>, 8> published_two_qubit_angles();

/// Operator of the per-wire X(a) - Z(b) form as a 2^n x 2^n matrix.
Eigen::MatrixXcd spider_oracle_matrix(const std::vector<Phase>& angles);

/// True if op is proportional to diag((-1)^f) times X on some subset of
/// wires. Such a flip leaves <+...+| unchanged, so the verdict is unaffected.
bool implements_oracle(const Eigen::MatrixXcd& op, const BooleanFunction& f, double tol = 1e-9);

/// Closed-form gate angles as originally published (pi/4 multiples of the
/// output bits). Kept for regression: they are wrong whenever f(111) = 1.
std::map<std::uint32_t, Phase> published_closed_form_angles(const BooleanFunction& f);

/// Circuit of the form used in oracle_circuit_3q with explicit angles per
/// parity mask (missing masks are 0).
Circuit parity_circuit_3q(const std::map<std::uint32_t, Phase>& angles);

/// Balanced example circuit for table 23: P(pi/2) on each qubit and a
/// CNOT-wrapped P(-pi/2) on the full parity.
Circuit example_circuit_table23();

}  // namespace zxmbqc
