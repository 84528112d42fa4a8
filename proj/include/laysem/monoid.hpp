#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laysem/rational.hpp"
#include "laysem/report.hpp"
#include "laysem/sorting.hpp"

namespace laysem {

using MonoidValue = Rational;

// A commutative monoid M carrying a multiplicative valuation v into a
// totally ordered monoid G.  G is never materialized: v maps into Rational
// labels and g_leq compares them.  For all stock instances v is the
// identity, so M inherits the order from G.
struct ValuedMonoid {
  std::string name;
  std::function<MonoidValue(const MonoidValue&, const MonoidValue&)> mul;
  MonoidValue one;
  std::function<Rational(const MonoidValue&)> v;       // the m-valuation
  std::function<bool(const Rational&, const Rational&)> g_leq;
  bool is_finite = false;
  std::vector<MonoidValue> carrier_list;  // finite carriers only
  bool cancellative = false;              // declared; required for infinite M
  std::optional<MonoidValue> absorbing;

  const std::vector<MonoidValue>& carrier() const;
  bool g_lt(const Rational& a, const Rational& b) const {
    return g_leq(a, b) && !(a == b);
  }
  bool g_eq(const Rational& a, const Rational& b) const {
    return g_leq(a, b) && g_leq(b, a);
  }
};

// Monoid ideal: membership predicate plus the cached element list (finite
// ambient monoids only; the empty list means the empty ideal there).
struct MonoidIdeal {
  std::function<bool(const MonoidValue&)> contains;
  std::vector<MonoidValue> elements;

  bool empty() const { return elements.empty() && !contains_known_nonempty; }
  bool contains_known_nonempty = false;

  static MonoidIdeal empty_ideal();
  static MonoidIdeal from_elements(std::vector<MonoidValue> elems);
};

struct TripleMorphism {
  std::string name;
  std::function<MonoidValue(const MonoidValue&)> phi_m;
  std::function<Rational(const Rational&)> phi_g;
};

// (Q, +, 0) with the usual order: the max-plus value monoid.  Cancellative.
ValuedMonoid make_qmax();

// {0, ..., q} with a*b = min(a+b, q); q is absorbing.
ValuedMonoid make_truncated_nat(std::int64_t q);

// One-element monoid {0}.
ValuedMonoid make_trivial_monoid();

// Quotient of M collapsing every value >= q (in G-order) to q.  q must lie
// strictly above the identity.  Applied to qmax this yields the finite-style
// monoids whose saturated value is the single noncancellative product.
ValuedMonoid truncate_monoid(const ValuedMonoid& m, const MonoidValue& q);

// Restricts M to an explicit finite carrier; rejects carriers that are not
// closed under the operation.
ValuedMonoid restrict_to_carrier(const ValuedMonoid& m,
                                 std::vector<MonoidValue> carrier);

// CLI grammar: qmax | trunc-nat:<q>.
ValuedMonoid parse_monoid_spec(const std::string& spec);

// The exact set { z : v(z) = v(ab) = v(ac), v(b) != v(c) }, by enumeration
// for finite M; the empty ideal for declared-cancellative M.  Rejects
// infinite monoids that are not declared cancellative.
MonoidIdeal noncancellative_ideal(const ValuedMonoid& m);

CheckReport check_triple_morphism(const TripleMorphism& f, const ValuedMonoid& src,
                                  const ValuedMonoid& dst,
                                  const CheckOptions& opts = {});

struct AbsorbingReport {
  std::vector<MonoidValue> partially_absorbing;  // ab = a for some b
  std::vector<MonoidValue> absorbing;            // ab = a for all b
  bool unique_partial_is_absorbing = true;
};

AbsorbingReport absorbing_analysis(const ValuedMonoid& m);

// ab in ideal => b in ideal or a in ideal, for every pair (finite M).
bool ideal_is_prime(const ValuedMonoid& m, const MonoidIdeal& ideal);

// Closure of the ideal under multiplication by arbitrary elements.
bool ideal_is_closed(const ValuedMonoid& m, const MonoidIdeal& ideal);

}  // namespace laysem
