#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace atgp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational coordinate. Always normalized: gcd(|num|, den) = 1, den > 0.
/// Every arithmetic operation is exact; there is no rounding anywhere.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int v) : value_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long long v) : value_(v) {}          // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  /// Parses "42", "-7/3" or an exact decimal like "2.5", "-0.125".
  static Rational parse(std::string_view text);
  static std::optional<Rational> try_parse(std::string_view text);

  /// Exact value of the binary double (not of its decimal rendering).
  static Rational from_double(double v);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  /// "p/q", or just "p" for integers. Round-trips bit-exactly through parse().
  std::string to_string() const;

  /// Exact decimal rendering truncated to `digits` fractional digits.
  /// Deterministic across platforms; used for SVG output.
  std::string to_decimal(int digits) const;

  double to_double() const { return value_.convert_to<double>(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace atgp
