#pragma once

#include <map>
#include <string>
#include <vector>

#include "laysem/rational.hpp"

namespace laysem {

// Finite-support series sum c_tau * t^tau with exact rational exponents and
// coefficients.  Zero coefficients are never stored; equality is equality of
// the canonical support maps.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  static PuiseuxSeries zero() { return {}; }
  static PuiseuxSeries constant(const Rational& c);
  static PuiseuxSeries monomial(const Rational& coeff, const Rational& exponent);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Rational, Rational>& terms() const { return terms_; }

  PuiseuxSeries operator+(const PuiseuxSeries& o) const;
  PuiseuxSeries operator-() const;
  PuiseuxSeries operator-(const PuiseuxSeries& o) const { return *this + (-o); }
  PuiseuxSeries operator*(const PuiseuxSeries& o) const;
  PuiseuxSeries pow(unsigned k) const;

  bool operator==(const PuiseuxSeries& o) const { return terms_ == o.terms_; }
  bool operator!=(const PuiseuxSeries& o) const { return !(*this == o); }

  // Negated least support exponent; undefined on the zero series.
  Rational val() const;

  // "<p/q>*t^(<r/s>)" terms joined by +/-; "0" for the zero series.
  std::string str() const;
  // Parses the same grammar, e.g. "2t^(-3) + 5/1*t^(1/2)" with optional "*".
  static PuiseuxSeries parse(const std::string& text);

 private:
  void set(const Rational& exponent, const Rational& coeff);
  std::map<Rational, Rational> terms_;  // exponent -> nonzero coefficient
};

// Polynomials in one variable with Puiseux-series coefficients, used to
// state exact root membership before tropicalizing.
struct PuiseuxPoly {
  std::map<unsigned, PuiseuxSeries> coeffs;  // degree -> coefficient

  bool is_zero() const;
  void set(unsigned degree, const PuiseuxSeries& c);
  PuiseuxPoly operator+(const PuiseuxPoly& o) const;
  PuiseuxPoly operator*(const PuiseuxPoly& o) const;
  PuiseuxSeries eval(const PuiseuxSeries& x) const;
  unsigned degree() const;
  std::string str() const;
};

// Monic product of (lambda - r) over the given roots.
PuiseuxPoly poly_from_roots(const std::vector<PuiseuxSeries>& roots);

// File format: one "lambda^<k> : <series>" line per monomial.
PuiseuxPoly parse_poly_file(const std::string& text);
// One series per line; blank lines and leading '#' comments are skipped.
std::vector<PuiseuxSeries> parse_roots_file(const std::string& text);

}  // namespace laysem
