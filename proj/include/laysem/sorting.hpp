#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laysem/report.hpp"

namespace laysem {

// A sort (layer index): a non-negative integer or the infinite sort.
struct SortValue {
  bool inf = false;
  std::uint32_t n = 0;

  static SortValue fin(std::uint32_t k) { return {false, k}; }
  static SortValue infinity() { return {true, 0}; }

  bool is_zero() const { return !inf && n == 0; }
  bool operator==(const SortValue& o) const { return inf == o.inf && (inf || n == o.n); }
  bool operator!=(const SortValue& o) const { return !(*this == o); }

  std::string str() const { return inf ? "inf" : std::to_string(n); }
  static SortValue parse(const std::string& text);
};

enum class SortingKind { Trivial01Inf, NatInf, Truncated, Custom };

// The sorting semiring L: carrier of sorts with commutative semiring
// operations and a directed preorder.  The stock instances are
//   trivial01inf : {0, 1, inf} with 1+1 = inf
//   nat_inf     : naturals with an infinite element
//   truncated(m): {0, ..., m}, both operations saturating at m
// Custom finite instances can supply their own tables (the law checker is
// the intended consumer).
class SortingSemiring {
 public:
  SortingKind kind = SortingKind::NatInf;
  std::uint32_t trunc_bound = 0;  // Truncated only
  std::string name;
  bool is_finite = false;
  bool has_inf = false;
  std::vector<SortValue> carrier_list;  // finite carriers only

  // Custom hooks; unset for the stock kinds.
  std::function<SortValue(SortValue, SortValue)> custom_add;
  std::function<SortValue(SortValue, SortValue)> custom_mul;
  std::function<bool(SortValue, SortValue)> custom_leq;

  SortValue add(SortValue a, SortValue b) const;
  SortValue mul(SortValue a, SortValue b) const;
  bool leq(SortValue a, SortValue b) const;
  bool lt(SortValue a, SortValue b) const { return leq(a, b) && !(a == b); }

  SortValue zero() const { return SortValue::fin(0); }
  SortValue one() const { return SortValue::fin(1); }
  // Largest sort of a finite carrier, or the infinite sort.
  SortValue top() const;

  bool contains(SortValue s) const;
  // A sort of the form ell + k with k positive; the top of a saturating
  // carrier and the infinite sort are ghosts of themselves.
  bool is_ghost_sort(SortValue s, SortValue ell) const;

  const std::vector<SortValue>& carrier() const;
};

enum class SortingInstance { Trivial01Inf, NatInf };

SortingSemiring make_sorting(SortingInstance which);
SortingSemiring make_sorting_truncated(std::uint32_t m);
SortingSemiring make_custom_sorting(std::vector<SortValue> carrier,
                                    std::function<SortValue(SortValue, SortValue)> add,
                                    std::function<SortValue(SortValue, SortValue)> mul,
                                    std::function<bool(SortValue, SortValue)> leq,
                                    std::string name);

// Parses the CLI grammar: trivial01inf | nat-inf | trunc:<m>.
SortingSemiring parse_sorting_spec(const std::string& spec);

struct CheckOptions {
  std::uint64_t seed = 1;      // default documented in the CLI help
  std::uint64_t budget = 10000;
};

// Semiring laws, identities, absorption, directedness and order
// compatibility; exhaustive on finite carriers, seeded sampling otherwise.
CheckReport check_sorting_semiring(const SortingSemiring& L,
                                   const CheckOptions& opts = {});

}  // namespace laysem
