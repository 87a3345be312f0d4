#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace zxmbqc {

using Rational = boost::rational<std::int64_t>;

/// A spider angle, stored as an exact rational multiple of pi.
///
/// The value is always reduced and normalized into [0, 2pi), so two phases
/// compare equal exactly when they denote the same angle modulo 2pi.
class Phase {
 public:
  Phase() = default;

  /// numerator/denominator * pi. Throws std::invalid_argument on a zero
  /// denominator.
  Phase(std::int64_t numerator, std::int64_t denominator = 1);
  explicit Phase(const Rational& multiple_of_pi);

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1); }
  static Phase half_pi() { return Phase(1, 2); }
  static Phase quarter_pi() { return Phase(1, 4); }

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }
  const Rational& multiple_of_pi() const { return value_; }

  bool is_zero() const { return value_.numerator() == 0; }
  bool is_pi() const { return value_ == Rational(1); }
  /// +pi/2 or -pi/2 (stored as 3pi/2).
  bool is_proper_clifford() const {
    return value_ == Rational(1, 2) || value_ == Rational(3, 2);
  }

  double radians() const;
  /// e^{i phase}, exact for multiples of pi/4.
  std::complex<double> unit() const;

  Phase operator-() const;
  Phase& operator+=(const Phase& other);
  Phase& operator-=(const Phase& other);
  friend Phase operator+(Phase a, const Phase& b) { return a += b; }
  friend Phase operator-(Phase a, const Phase& b) { return a -= b; }
  friend bool operator==(const Phase&, const Phase&) = default;
  friend bool operator<(const Phase& a, const Phase& b) { return a.value_ < b.value_; }

  /// Reduced fraction of pi: "0", "1", "1/2", "7/4".
  std::string to_string() const;
  /// Inverse of to_string; also accepts negative or unreduced input.
  static Phase parse(std::string_view text);

 private:
  void normalize();
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

}  // namespace zxmbqc
