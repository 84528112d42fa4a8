#include "laysem/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "laysem/error.hpp"

namespace laysem {

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) {
  return monomial(c, Rational(0));
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& coeff, const Rational& exponent) {
  PuiseuxSeries p;
  p.set(exponent, coeff);
  return p;
}

void PuiseuxSeries::set(const Rational& exponent, const Rational& coeff) {
  if (coeff.is_zero())
    terms_.erase(exponent);
  else
    terms_[exponent] = coeff;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
  PuiseuxSeries out = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = out.terms_.find(e);
    out.set(e, it == out.terms_.end() ? c : it->second + c);
  }
  return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
  PuiseuxSeries out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rational e = e1 + e2;
      auto it = out.terms_.find(e);
      out.set(e, it == out.terms_.end() ? c1 * c2 : it->second + c1 * c2);
    }
  return out;
}

PuiseuxSeries PuiseuxSeries::pow(unsigned k) const {
  PuiseuxSeries out = constant(Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Rational PuiseuxSeries::val() const {
  if (is_zero()) raise("ZeroSeries", "valuation undefined on the zero series");
  return -terms_.begin()->first;  // least exponent, negated
}

std::string PuiseuxSeries::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << (c.num() < 0 ? " - " : " + ");
    Rational shown = (!first && c.num() < 0) ? -c : c;
    if (first && c.num() < 0) {
      out << "-";
      shown = -c;
    }
    out << shown.str() << "*t^(" << e.str() << ")";
    first = false;
  }
  return out.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Rational parse_rational_at(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  while (i < s.size() &&
         (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
    ++i;
  if (i == start) raise("ParseError", "expected a rational at '" + s.substr(start) + "'");
  return Rational::parse(s.substr(start, i - start));
}

}  // namespace

PuiseuxSeries PuiseuxSeries::parse(const std::string& text) {
  PuiseuxSeries out;
  std::size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
    return out;
  bool first = true;
  while (i < text.size()) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    Rational sign(1);
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = Rational(-1);
      ++i;
    } else if (!first) {
      raise("ParseError", "expected +/- between terms near '" + text.substr(i) + "'");
    }
    skip_ws(text, i);
    Rational coeff(1);
    bool have_coeff = false;
    if (i < text.size() && text[i] != 't') {
      coeff = parse_rational_at(text, i);
      have_coeff = true;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws(text, i);
      }
    }
    Rational exponent(0);
    if (i < text.size() && text[i] == 't') {
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws(text, i);
        bool paren = i < text.size() && text[i] == '(';
        if (paren) ++i;
        exponent = parse_rational_at(text, i);
        if (paren) {
          if (i >= text.size() || text[i] != ')')
            raise("ParseError", "missing ')' in exponent of '" + text + "'");
          ++i;
        }
      } else {
        exponent = Rational(1);
      }
    } else if (!have_coeff) {
      raise("ParseError", "expected a term near '" + text.substr(i) + "'");
    }
    PuiseuxSeries term = monomial(sign * coeff, exponent);
    out = out + term;
    first = false;
    skip_ws(text, i);
  }
  return out;
}

bool PuiseuxPoly::is_zero() const { return coeffs.empty(); }

void PuiseuxPoly::set(unsigned degree, const PuiseuxSeries& c) {
  if (c.is_zero())
    coeffs.erase(degree);
  else
    coeffs[degree] = c;
}

PuiseuxPoly PuiseuxPoly::operator+(const PuiseuxPoly& o) const {
  PuiseuxPoly out = *this;
  for (const auto& [d, c] : o.coeffs) {
    auto it = out.coeffs.find(d);
    out.set(d, it == out.coeffs.end() ? c : it->second + c);
  }
  return out;
}

PuiseuxPoly PuiseuxPoly::operator*(const PuiseuxPoly& o) const {
  PuiseuxPoly out;
  for (const auto& [d1, c1] : coeffs)
    for (const auto& [d2, c2] : o.coeffs) {
      unsigned d = d1 + d2;
      auto it = out.coeffs.find(d);
      out.set(d, it == out.coeffs.end() ? c1 * c2 : it->second + c1 * c2);
    }
  return out;
}

PuiseuxSeries PuiseuxPoly::eval(const PuiseuxSeries& x) const {
  PuiseuxSeries acc;
  for (const auto& [d, c] : coeffs) acc = acc + c * x.pow(d);
  return acc;
}

unsigned PuiseuxPoly::degree() const {
  return coeffs.empty() ? 0 : coeffs.rbegin()->first;
}

std::string PuiseuxPoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (!first) out << " + ";
    out << "(" << it->second.str() << ")*lambda^" << it->first;
    first = false;
  }
  return out.str();
}

PuiseuxPoly poly_from_roots(const std::vector<PuiseuxSeries>& roots) {
  PuiseuxPoly acc;
  acc.set(0, PuiseuxSeries::constant(Rational(1)));
  for (const PuiseuxSeries& r : roots) {
    PuiseuxPoly factor;
    factor.set(1, PuiseuxSeries::constant(Rational(1)));
    factor.set(0, -r);
    acc = acc * factor;
  }
  return acc;
}

PuiseuxPoly parse_poly_file(const std::string& text) {
  PuiseuxPoly out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    skip_ws(line, i);
    if (i >= line.size() || line[i] == '#') continue;
    if (line.compare(i, 7, "lambda^") != 0)
      raise("ParseError", "line " + std::to_string(lineno) + ": expected 'lambda^<k>'");
    i += 7;
    std::size_t start = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start)
      raise("ParseError", "line " + std::to_string(lineno) + ": missing degree");
    unsigned degree = static_cast<unsigned>(std::stoul(line.substr(start, i - start)));
    skip_ws(line, i);
    if (i >= line.size() || line[i] != ':')
      raise("ParseError", "line " + std::to_string(lineno) + ": expected ':'");
    ++i;
    PuiseuxSeries c;
    try {
      c = PuiseuxSeries::parse(line.substr(i));
    } catch (const Error& e) {
      raise("ParseError", "line " + std::to_string(lineno) + ": " + e.what());
    }
    if (out.coeffs.count(degree))
      raise("ParseError", "line " + std::to_string(lineno) + ": duplicate degree");
    out.set(degree, c);
  }
  return out;
}

std::vector<PuiseuxSeries> parse_roots_file(const std::string& text) {
  std::vector<PuiseuxSeries> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = 0;
    skip_ws(line, i);
    if (i >= line.size() || line[i] == '#') continue;
    try {
      out.push_back(PuiseuxSeries::parse(line.substr(i)));
    } catch (const Error& e) {
      raise("ParseError", "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace laysem
