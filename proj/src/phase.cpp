#include "zxmbqc/phase.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zxmbqc {

Phase::Phase(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("phase denominator is zero");
  value_ = Rational(numerator, denominator);
  normalize();
}

Phase::Phase(const Rational& multiple_of_pi) : value_(multiple_of_pi) { normalize(); }

void Phase::normalize() {
  // floor(value / 2) * 2 subtracted; boost::rational keeps the denominator positive.
  const std::int64_t num = value_.numerator();
  const std::int64_t two_den = 2 * value_.denominator();
  std::int64_t r = num % two_den;
  if (r < 0) r += two_den;
  value_ = Rational(r, value_.denominator());
}

double Phase::radians() const {
  return std::numbers::pi * static_cast<double>(value_.numerator()) /
         static_cast<double>(value_.denominator());
}

std::complex<double> Phase::unit() const {
  // Snap eighth roots of unity so that cancellation in tensor sums is exact.
  if (value_.denominator() <= 4 && (4 % value_.denominator()) == 0) {
    const auto k = value_.numerator() * (4 / value_.denominator());  // in units of pi/4
    constexpr double h = std::numbers::sqrt2 / 2.0;
    static constexpr std::complex<double> table[8] = {
        {1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
    return table[k % 8];
  }
  return std::polar(1.0, radians());
}

Phase Phase::operator-() const { return Phase(-value_); }

Phase& Phase::operator+=(const Phase& other) {
  value_ += other.value_;
  normalize();
  return *this;
}

Phase& Phase::operator-=(const Phase& other) {
  value_ -= other.value_;
  normalize();
  return *this;
}

std::string Phase::to_string() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

Phase Phase::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw std::invalid_argument("malformed phase '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Phase(parse_int(text));
  return Phase(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.to_string() << "pi"; }

}  // namespace zxmbqc
