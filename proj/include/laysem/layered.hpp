#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laysem/monoid.hpp"
#include "laysem/rational.hpp"
#include "laysem/report.hpp"
#include "laysem/sorting.hpp"

namespace laysem {

// An element <a>^k of a layered semiring: a monoid value tagged with a sort.
// Equality is strict pair equality; nu-equivalence (equality of values) is a
// separate relation on the owning semiring.
struct LayeredElement {
  SortValue sort;
  Rational value;

  bool operator==(const LayeredElement& o) const {
    return sort == o.sort && value == o.value;
  }
  bool operator!=(const LayeredElement& o) const { return !(*this == o); }

  std::string str() const { return value.str() + "@" + sort.str(); }
  static LayeredElement parse(const std::string& text);
};

// What lives at sort 0.
enum class ZeroLayerMode {
  None,           // no zero layer (cancellative-style carriers)
  IdealZero,      // exactly the values of a monoid ideal, each at sort 0
  FullCopy,       // a whole extra copy of the value monoid at sort 0
  SingletonZero,  // one adjoined zero element
};

// A layered semiring over a sorting semiring L and a valued monoid:
// elements <a>^k with componentwise multiplication (products whose value
// lands in the ideal drop to sort 0, or jump to the top sort when
// collapse_to_top is set) and value-dominance addition, nu-equal values
// adding their sorts.
class LayeredSemiring {
 public:
  SortingSemiring L;
  ValuedMonoid base;
  MonoidIdeal ideal;
  ZeroLayerMode mode = ZeroLayerMode::None;
  bool collapse_to_top = false;  // ideal products become ghosts, not zeros
  std::string name;

  LayeredElement one() const { return {SortValue::fin(1), base.one}; }
  LayeredElement zero_elem() const;  // SingletonZero instances only
  bool is_zero_elem(const LayeredElement& x) const;

  LayeredElement mul(const LayeredElement& x, const LayeredElement& y) const;
  LayeredElement add(const LayeredElement& x, const LayeredElement& y) const;
  LayeredElement pow(const LayeredElement& x, unsigned m) const;

  SortValue sort_of(const LayeredElement& x) const { return x.sort; }
  Rational v_of(const LayeredElement& x) const { return base.v(x.value); }

  bool contains(const LayeredElement& x) const;
  bool is_finite() const { return L.is_finite && base.is_finite; }
  // Deterministic enumeration: sorts in carrier order, values sorted.
  std::vector<LayeredElement> carrier() const;

  // Same value moved to sort m; requires 0 < sort(x) <= m.
  LayeredElement nu_transition(const LayeredElement& x, SortValue m) const;

  bool nu_equiv(const LayeredElement& x, const LayeredElement& y) const;
  bool nu_leq(const LayeredElement& x, const LayeredElement& y) const;
  bool nu_lt(const LayeredElement& x, const LayeredElement& y) const {
    return nu_leq(x, y) && !nu_equiv(x, y);
  }

  // Canonical representative of x in the top available sort.  For ideal
  // values this representative lies outside the carrier; it is only meant
  // for nu-level comparisons.
  LayeredElement ghost_image(const LayeredElement& x) const;

  // e_ell = <1>^ell; rejects ell = 0.
  LayeredElement layer_unit(SortValue ell) const;

  // surpassing relations and ghost sorts
  bool is_ghost(const LayeredElement& a, SortValue ell) const;
  bool surpasses_L(const LayeredElement& a, const LayeredElement& b) const;
  bool surpasses_Lnu(const LayeredElement& a, const LayeredElement& b) const;

  bool in_zero_layer(const LayeredElement& x) const { return x.sort.is_zero(); }
};

struct BuildOptions {
  // Build the naive componentwise construction with no zero layer even over
  // a noncancellative base; distributivity is expected to break, which is
  // exactly what the diagnostic path wants to demonstrate.
  bool force_empty_ideal = false;
};

// Builds R(L, M)_ideal.  AUTO (nullopt) computes the noncancellative ideal;
// a supplied ideal must contain it (IdealTooSmall) and be
// multiplication-closed (NotAnIdeal).
LayeredSemiring build_layered(const SortingSemiring& L, const ValuedMonoid& base,
                              const std::optional<MonoidIdeal>& ideal = std::nullopt,
                              const BuildOptions& opts = {});

// Element pool for law checking: the carrier when finite, otherwise a
// seeded sample of valid elements.
std::vector<LayeredElement> element_pool(const LayeredSemiring& R,
                                         const CheckOptions& opts);

// Semiring laws, the layering axioms A1-A6 and supertropicality B,
// nu-bipotence, the zero-layer ideal property, plus pointedness and
// prime-ideal diagnoses.  Exhaustive on finite carriers.
CheckReport check_axioms(const LayeredSemiring& R, const CheckOptions& opts = {});

// Half-congruence behaviour of the surpassing relations and the Frobenius
// property (a+b)^m surpasses a^m + b^m for m in {2,3,4}.
CheckReport check_surpassing_suite(const LayeredSemiring& R,
                                   const CheckOptions& opts = {});

struct TangibleSpan {
  LayeredSemiring sub;  // carrier restricted to the span (finite instances)
  std::vector<LayeredElement> span_elements;
  bool tangibly_generated = false;
};

// Smallest sub-semiring containing the sort-1 layer.
TangibleSpan tangible_span(const LayeredSemiring& R);

struct QuotientResult {
  LayeredSemiring quotient;
  std::function<LayeredElement(const LayeredElement&)> project;
  bool collapsed = false;  // false when the upper set was empty
};

// Rees-style quotient collapsing the nu-upper ideal at `threshold` (all
// elements nu-above it, strictly or not) to a single absorbing class.
QuotientResult quotient_by_upper_ideal(const LayeredSemiring& R,
                                       const LayeredElement& threshold, bool strict);

}  // namespace laysem
