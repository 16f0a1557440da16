#include "atgp/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace atgp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::invalid_argument("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  auto dot = s.find('.');
  BigInt num, den = 1;
  if (slash != std::string_view::npos) {
    std::string_view np = s.substr(0, slash), dp = s.substr(slash + 1);
    if (!all_digits(np) || !all_digits(dp)) return std::nullopt;
    num = BigInt(std::string(np));
    den = BigInt(std::string(dp));
    if (den == 0) return std::nullopt;
  } else if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) return std::nullopt;
    num = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!all_digits(s)) return std::nullopt;
    num = BigInt(std::string(s));
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  return *r;
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("Rational: non-finite double");
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // mant * 2^53 is integral for any finite double.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num(scaled), den(1);
  if (exp >= 0)
    num <<= exp;
  else
    den <<= -exp;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(int digits) const {
  BigInt num = numerator(), den = denominator();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  BigInt ip = num / den, rem = num % den;
  out += ip.str();
  if (digits <= 0 || rem == 0) return out;
  out += '.';
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace atgp
