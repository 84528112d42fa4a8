#include "laysem/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>

#include "laysem/error.hpp"

namespace laysem {

namespace {

using Wide = __int128;

Rational from_wide(Wide n, Wide d) {
  if (d == 0) raise("DivisionByZero", "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide a = n < 0 ? -n : n;
  Wide b = d;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    n /= a;
    d /= a;
  }
  constexpr Wide kMax = INT64_MAX;
  if (n > kMax || n < -kMax || d > kMax)
    raise("Overflow", "rational exceeds 64-bit range after reduction");
  Rational r;
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) raise("DivisionByZero", "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return from_wide(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return from_wide(Wide(num_) * o.den_ - Wide(o.num_) * den_, Wide(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return from_wide(Wide(num_) * o.num_, Wide(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) raise("DivisionByZero", "division by zero rational");
  return from_wide(Wide(num_) * o.den_, Wide(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return Wide(num_) * o.den_ < Wide(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) raise("ParseError", "empty rational");
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) raise("ParseError", "trailing junk in rational: " + text);
      return Rational(n);
    }
    std::int64_t n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) raise("ParseError", "bad numerator in: " + text);
    std::string dpart = text.substr(slash + 1);
    std::int64_t d = std::stoll(dpart, &used);
    if (used != dpart.size()) raise("ParseError", "bad denominator in: " + text);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    raise("ParseError", "not a rational: " + text);
  } catch (const std::out_of_range&) {
    raise("ParseError", "rational out of range: " + text);
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace laysem
