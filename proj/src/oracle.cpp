#include "zxmbqc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace zxmbqc {

BooleanFunction::BooleanFunction(std::size_t n_, std::uint64_t table_) : n(n_), table(table_) {
  if (n < 1 || n > 6) throw std::invalid_argument("n must be between 1 and 6");
  if (n < 6 && table >= (std::uint64_t{1} << size()))
    throw std::invalid_argument("table " + std::to_string(table) + " has more than 2^n bits");
}

BooleanFunction BooleanFunction::parse(std::size_t n, std::string_view text) {
  if (n < 1 || n > 6) throw std::invalid_argument("n must be between 1 and 6");
  const std::size_t bits = std::size_t{1} << n;
  const bool binary = text.size() == bits && bits > 1 &&
                      std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; });
  std::uint64_t v = 0;
  const int base = binary ? 2 : 10;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed truth table '" + std::string(text) + "'");
  return BooleanFunction(n, v);
}

std::string BooleanFunction::binary() const {
  std::string s;
  for (std::size_t i = 0; i < size(); ++i) s.push_back((*this)(i) ? '1' : '0');
  return s;
}

Verdict classify(const BooleanFunction& f) {
  const auto ones = static_cast<std::size_t>(std::popcount(f.table));
  if (ones == 0 || ones == f.size()) return Verdict::Constant;
  if (2 * ones == f.size()) return Verdict::Balanced;
  throw NotPromise("f has " + std::to_string(ones) + " ones out of " + std::to_string(f.size()));
}

std::uint64_t count_balanced(std::size_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("count_balanced supports 1 <= n <= 6");
  const unsigned __int128 total = std::uint64_t{1} << n;
  const unsigned __int128 half = total / 2;
  unsigned __int128 c = 1;
  for (unsigned __int128 k = 1; k <= half; ++k) c = c * (total - half + k) / k;
  return static_cast<std::uint64_t>(c);
}

std::vector<BooleanFunction> enumerate_promise(std::size_t n) {
  if (n < 1 || n > 3) throw std::invalid_argument("enumerate_promise supports 1 <= n <= 3");
  std::vector<BooleanFunction> out;
  const std::uint64_t limit = std::uint64_t{1} << (std::size_t{1} << n);
  for (std::uint64_t t = 0; t < limit; ++t) {
    const auto ones = static_cast<std::size_t>(std::popcount(t));
    const std::size_t size = std::size_t{1} << n;
    if (ones == 0 || ones == size || 2 * ones == size) out.emplace_back(n, t);
  }
  return out;
}

std::vector<BooleanFunction> variant_columns(std::size_t n) {
  auto all = enumerate_promise(n);
  std::stable_partition(all.begin(), all.end(),
                        [](const BooleanFunction& f) { return classify(f) == Verdict::Constant; });
  return all;
}

BooleanFunction variant(std::size_t n, std::string_view column) {
  static const std::vector<std::string_view> roman = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
  const auto cols = variant_columns(n);
  std::size_t k = 0;
  if (auto it = std::find(roman.begin(), roman.end(), column); it != roman.end() && n <= 2) {
    k = static_cast<std::size_t>(it - roman.begin()) + 1;
  } else {
    auto [ptr, ec] = std::from_chars(column.data(), column.data() + column.size(), k);
    if (column.empty() || ec != std::errc() || ptr != column.data() + column.size())
      throw std::invalid_argument("malformed variant '" + std::string(column) + "'");
  }
  if (k < 1 || k > cols.size())
    throw std::invalid_argument("variant '" + std::string(column) + "' out of range for n = " + std::to_string(n));
  return cols[k - 1];
}

std::int64_t MultilinearPolynomial::operator()(const std::vector<int>& x) const {
  std::int64_t sum = 0;
  for (const auto& [mask, c] : coeffs) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) all = all && x.at(i) != 0;
    if (all) sum += c;
  }
  return sum;
}

MultilinearPolynomial delta_polynomial(const std::vector<int>& point) {
  // prod_i (sigma_i ? x_i : 1 - x_i)
  MultilinearPolynomial p;
  p.n = point.size();
  p.coeffs[0] = 1;
  for (std::size_t i = 0; i < point.size(); ++i) {
    std::map<std::uint32_t, std::int64_t> next;
    for (const auto& [mask, c] : p.coeffs) {
      const std::uint32_t with = mask | (1U << i);
      if (point[i]) {
        next[with] += c;
      } else {
        next[mask] += c;
        next[with] -= c;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    p.coeffs = std::move(next);
  }
  return p;
}

Phase PhasePolynomial::coefficient(std::uint32_t mask) const {
  auto it = coeffs.find(mask);
  return it == coeffs.end() ? Phase() : it->second;
}

Phase PhasePolynomial::operator()(std::size_t input) const {
  Phase theta = constant;
  for (const auto& [mask, c] : coeffs) {
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) parity ^= static_cast<int>((input >> (n - 1 - i)) & 1U);
    if (parity) theta += c;
  }
  return theta;
}

PhasePolynomial phase_polynomial(const BooleanFunction& f) {
  classify(f);
  if (f.n > 3) throw std::invalid_argument("phase_polynomial supports n <= 3");

  // pi * f(x) as a sum of deltas over the points where f is 1.
  std::map<std::uint32_t, std::int64_t> mono;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f(i)) continue;
    std::vector<int> point(f.n);
    for (std::size_t b = 0; b < f.n; ++b) point[b] = f.bit(i, b);
    for (const auto& [mask, c] : delta_polynomial(point).coeffs) mono[mask] += c;
  }

  // A product of k bits equals 2^(1-k) * sum over non-empty T of
  // (-1)^(|T|+1) * parity_T, which is x_i x_j = (x_i + x_j - x_i^x_j) / 2
  // applied repeatedly.
  std::map<std::uint32_t, Rational> parity;
  Rational constant = 0;
  for (const auto& [s, c] : mono) {
    if (c == 0) continue;
    if (s == 0) {
      constant += c;
      continue;
    }
    const int k = std::popcount(s);
    const Rational scale(c, std::int64_t{1} << (k - 1));
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
      const int sign = (std::popcount(t) % 2 == 1) ? 1 : -1;
      parity[t] += scale * sign;
    }
  }

  PhasePolynomial p;
  p.n = f.n;
  p.constant = Phase(constant);
  for (std::uint32_t m = 1; m < (1U << f.n); ++m) p.coeffs[m] = Phase(parity[m]);
  return p;
}

Circuit parity_circuit_3q(const std::map<std::uint32_t, Phase>& angles) {
  auto a = [&](std::uint32_t mask) {
    auto it = angles.find(mask);
    return it == angles.end() ? Phase() : it->second;
  };
  // Each phase gate sits on a wire that currently carries the parity named
  // by its mask (bit i <-> x_i).
  Circuit c{3, {}};
  c.add(Gate::P(0, a(0b001))).add(Gate::P(1, a(0b010))).add(Gate::P(2, a(0b100)));
  c.add(Gate::CX(0, 1)).add(Gate::CX(0, 2));
  c.add(Gate::P(1, a(0b011))).add(Gate::P(2, a(0b101)));
  c.add(Gate::CX(1, 2)).add(Gate::P(2, a(0b110)));
  c.add(Gate::CX(0, 2)).add(Gate::P(2, a(0b111)));
  c.add(Gate::CX(1, 2)).add(Gate::CX(0, 1));
  return c;
}

Circuit oracle_circuit_3q(const BooleanFunction& f) {
  if (f.n != 3) throw std::invalid_argument("oracle_circuit_3q needs n = 3");
  const PhasePolynomial p = phase_polynomial(f);
  return parity_circuit_3q({p.coeffs.begin(), p.coeffs.end()});
}

std::map<std::uint32_t, Phase> published_closed_form_angles(const BooleanFunction& f) {
  if (f.n != 3) throw std::invalid_argument("closed-form angles need n = 3");
  auto b = [&](int k) { return static_cast<std::int64_t>((f.table >> k) & 1U); };
  // (pi/2)(...) with a b0/2 term: everything in quarters of pi.
  auto q = [](std::int64_t quarters) { return Phase(quarters, 4); };
  std::map<std::uint32_t, Phase> m;
  m[0b001] = q(2 * (-b(6) - b(5) + b(2) + b(1)) + b(0));
  m[0b010] = q(2 * (-b(6) + b(4) - b(3) + b(1)) + b(0));
  m[0b100] = q(2 * (-b(5) + b(4) - b(3) + b(2)) + b(0));
  m[0b011] = q(-(2 * (b(7) - b(5) - b(3) + b(1)) + b(0)));
  m[0b101] = q(-(2 * (b(7) - b(6) - b(3) + b(2)) + b(0)));
  m[0b110] = q(-(2 * (b(7) - b(6) - b(5) + b(4)) + b(0)));
  m[0b111] = q(b(0));
  return m;
}

Circuit example_circuit_table23() {
  Circuit c{3, {}};
  for (std::size_t q = 0; q < 3; ++q) c.add(Gate::P(q, Phase::half_pi()));
  c.add(Gate::CX(0, 2)).add(Gate::CX(1, 2)).add(Gate::P(2, Phase(-1, 2)));
  c.add(Gate::CX(1, 2)).add(Gate::CX(0, 2));
  return c;
}

namespace {

// f = c xor sum_i a_i x_i for affine f on n <= 2 bits; throws for anything
// else (n = 2 promise functions are all affine).
std::pair<bool, std::vector<bool>> affine_form(const BooleanFunction& f) {
  classify(f);
  if (f.n > 2) throw std::invalid_argument("Z/Y oracle form needs n <= 2");
  const bool c = f(0);
  std::vector<bool> a(f.n);
  for (std::size_t i = 0; i < f.n; ++i) a[i] = f(std::size_t{1} << (f.n - 1 - i)) != c;
  for (std::size_t in = 0; in < f.size(); ++in) {
    bool v = c;
    for (std::size_t i = 0; i < f.n; ++i) v ^= a[i] && f.bit(in, i);
    if (v != f(in)) throw std::logic_error("promise function is not affine");
  }
  return {c, a};
}

}  // namespace

Circuit dj_oracle_circuit(const BooleanFunction& f) {
  const auto [c, a] = affine_form(f);
  const bool balanced = classify(f) == Verdict::Balanced;
  Circuit circ{f.n, {}};
  for (std::size_t i = 0; i < f.n; ++i)
    if (a[i]) circ.add(c && balanced ? Gate::Y(i) : Gate::Z(i));
  return circ;
}

std::vector<Phase> oracle_spider_angles(const BooleanFunction& f) {
  const auto [c, a] = affine_form(f);
  const bool balanced = classify(f) == Verdict::Balanced;
  std::vector<Phase> out;
  for (std::size_t i = 0; i < f.n; ++i) {
    const bool y = a[i] && c && balanced;
    out.push_back(y ? Phase::pi() : Phase());                   // X spider
    out.push_back(a[i] ? Phase::pi() : Phase());                // Z spider
  }
  return out;
}

std::array<Phase, 4> two_qubit_spider_angles(const BooleanFunction& f) {
  if (f.n != 2) throw std::invalid_argument("two_qubit_spider_angles needs n = 2");
  const auto v = oracle_spider_angles(f);
  return {v[0], v[1], v[2], v[3]};
}

std::array<std::array<Phase, 4>, 8> published_two_qubit_angles() {
  const Phase o, p = Phase::pi();
  return {{{o, o, o, o}, {o, o, o, o}, {o, p, o, o}, {o, o, p, o},
           {p, o, p, o}, {p, p, p, p}, {o, o, p, p}, {p, p, o, o}}};
}

Eigen::MatrixXcd spider_oracle_matrix(const std::vector<Phase>& angles) {
  if (angles.size() % 2 != 0) throw std::invalid_argument("angles come in (X, Z) pairs");
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
  const Eigen::Matrix2cd h = (Eigen::Matrix2cd() << 1, 1, 1, -1).finished();
  for (std::size_t w = 0; w < angles.size(); w += 2) {
    // 2-leg spiders as matrices: Z(a) = diag(1, e^{ia}), X(a) = H Z(a) H.
    const Eigen::Matrix2cd zx = (Eigen::Matrix2cd() << 1, 0, 0, angles[w].unit()).finished();
    const Eigen::Matrix2cd zz = (Eigen::Matrix2cd() << 1, 0, 0, angles[w + 1].unit()).finished();
    const Eigen::Matrix2cd wire = zz * (h * zx * h);
    Eigen::MatrixXcd next(op.rows() * 2, op.cols() * 2);
    for (Eigen::Index r = 0; r < op.rows(); ++r)
      for (Eigen::Index c = 0; c < op.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = op(r, c) * wire;
    op = std::move(next);
  }
  return op;
}

bool implements_oracle(const Eigen::MatrixXcd& op, const BooleanFunction& f, double tol) {
  if (op.rows() != static_cast<Eigen::Index>(f.size()) || op.cols() != op.rows()) return false;
  Eigen::VectorXcd diag(op.rows());
  for (std::size_t i = 0; i < f.size(); ++i) diag(static_cast<Eigen::Index>(i)) = f(i) ? -1.0 : 1.0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    // D * X^s has entry D[i] at (i, i xor s).
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(op.rows(), op.cols());
    for (std::size_t i = 0; i < f.size(); ++i)
      target(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ s)) = diag(static_cast<Eigen::Index>(i));
    if (equivalent_up_to_scalar(Tensor::from_matrix(op), Tensor::from_matrix(target), tol).equivalent) return true;
  }
  return false;
}

}  // namespace zxmbqc
