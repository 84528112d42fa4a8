#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace laysem {

// Exact rational number with int64 numerator/denominator, always normalized
// (gcd 1, denominator positive).  Intermediate products go through 128-bit
// arithmetic, which is ample for the magnitudes this library works with
// (series coefficients, monomial exponents, truncated carriers).
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  // Parses "p", "-p", "p/q"; throws Error("ParseError", ...) on junk.
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace laysem

template <>
struct std::hash<laysem::Rational> {
  std::size_t operator()(const laysem::Rational& r) const noexcept {
    return std::hash<std::int64_t>()(r.num()) * 1000003u ^
           std::hash<std::int64_t>()(r.den());
  }
};
