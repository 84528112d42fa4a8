#include "laysem/sorting.hpp"

#include <algorithm>
#include <random>

#include "laysem/error.hpp"

namespace laysem {

SortValue SortValue::parse(const std::string& text) {
  if (text == "inf") return infinity();
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0) raise("ParseError", "bad sort: " + text);
    return fin(static_cast<std::uint32_t>(v));
  } catch (const std::invalid_argument&) {
    raise("ParseError", "bad sort: " + text);
  } catch (const std::out_of_range&) {
    raise("ParseError", "sort out of range: " + text);
  }
}

SortValue SortingSemiring::add(SortValue a, SortValue b) const {
  switch (kind) {
    case SortingKind::Trivial01Inf:
      if (a.is_zero()) return b;
      if (b.is_zero()) return a;
      if (a.inf || b.inf) return SortValue::infinity();
      return SortValue::infinity();  // 1 + 1
    case SortingKind::NatInf:
      if (a.inf || b.inf) return SortValue::infinity();
      return SortValue::fin(a.n + b.n);
    case SortingKind::Truncated:
      return SortValue::fin(std::min<std::uint32_t>(a.n + b.n, trunc_bound));
    case SortingKind::Custom:
      return custom_add(a, b);
  }
  raise("Internal", "unreachable sorting kind");
}

SortValue SortingSemiring::mul(SortValue a, SortValue b) const {
  switch (kind) {
    case SortingKind::Trivial01Inf:
    case SortingKind::NatInf:
      if (a.is_zero() || b.is_zero()) return SortValue::fin(0);
      if (a.inf || b.inf) return SortValue::infinity();
      return SortValue::fin(a.n * b.n);
    case SortingKind::Truncated:
      return SortValue::fin(
          std::min<std::uint64_t>(std::uint64_t(a.n) * b.n, trunc_bound));
    case SortingKind::Custom:
      return custom_mul(a, b);
  }
  raise("Internal", "unreachable sorting kind");
}

bool SortingSemiring::leq(SortValue a, SortValue b) const {
  if (kind == SortingKind::Custom) return custom_leq(a, b);
  if (b.inf) return true;
  if (a.inf) return false;
  return a.n <= b.n;
}

SortValue SortingSemiring::top() const {
  if (has_inf) return SortValue::infinity();
  if (kind == SortingKind::Truncated) return SortValue::fin(trunc_bound);
  if (!carrier_list.empty()) {
    SortValue best = carrier_list.front();
    for (SortValue s : carrier_list)
      if (leq(best, s)) best = s;
    return best;
  }
  return SortValue::infinity();
}

bool SortingSemiring::contains(SortValue s) const {
  switch (kind) {
    case SortingKind::Trivial01Inf:
      return s.inf || s.n <= 1;
    case SortingKind::NatInf:
      return true;
    case SortingKind::Truncated:
      return !s.inf && s.n <= trunc_bound;
    case SortingKind::Custom:
      return std::find(carrier_list.begin(), carrier_list.end(), s) !=
             carrier_list.end();
  }
  return false;
}

bool SortingSemiring::is_ghost_sort(SortValue s, SortValue ell) const {
  if (is_finite) {
    for (SortValue k : carrier_list) {
      if (k.is_zero()) continue;
      if (add(ell, k) == s) return true;
    }
    return false;
  }
  // nat_inf: solvable iff s strictly above ell, or both infinite.
  if (s.inf) return true;
  if (ell.inf) return false;
  return s.n > ell.n;
}

const std::vector<SortValue>& SortingSemiring::carrier() const {
  if (!is_finite) raise("InfiniteCarrier", "no carrier list for " + name);
  return carrier_list;
}

SortingSemiring make_sorting(SortingInstance which) {
  SortingSemiring L;
  if (which == SortingInstance::Trivial01Inf) {
    L.kind = SortingKind::Trivial01Inf;
    L.name = "trivial01inf";
    L.is_finite = true;
    L.has_inf = true;
    L.carrier_list = {SortValue::fin(0), SortValue::fin(1), SortValue::infinity()};
  } else {
    L.kind = SortingKind::NatInf;
    L.name = "nat-inf";
    L.is_finite = false;
    L.has_inf = true;
  }
  return L;
}

SortingSemiring make_sorting_truncated(std::uint32_t m) {
  if (m < 1) raise("ConfigError", "truncated sorting needs m >= 1");
  SortingSemiring L;
  L.kind = SortingKind::Truncated;
  L.trunc_bound = m;
  L.name = "trunc:" + std::to_string(m);
  L.is_finite = true;
  for (std::uint32_t k = 0; k <= m; ++k) L.carrier_list.push_back(SortValue::fin(k));
  return L;
}

SortingSemiring make_custom_sorting(std::vector<SortValue> carrier,
                                    std::function<SortValue(SortValue, SortValue)> add,
                                    std::function<SortValue(SortValue, SortValue)> mul,
                                    std::function<bool(SortValue, SortValue)> leq,
                                    std::string name) {
  SortingSemiring L;
  L.kind = SortingKind::Custom;
  L.name = std::move(name);
  L.is_finite = true;
  L.carrier_list = std::move(carrier);
  L.has_inf = std::any_of(L.carrier_list.begin(), L.carrier_list.end(),
                          [](SortValue s) { return s.inf; });
  L.custom_add = std::move(add);
  L.custom_mul = std::move(mul);
  L.custom_leq = std::move(leq);
  return L;
}

SortingSemiring parse_sorting_spec(const std::string& spec) {
  if (spec == "trivial01inf") return make_sorting(SortingInstance::Trivial01Inf);
  if (spec == "nat-inf") return make_sorting(SortingInstance::NatInf);
  if (spec.rfind("trunc:", 0) == 0) {
    const std::string arg = spec.substr(6);
    try {
      std::size_t used = 0;
      long long m = std::stoll(arg, &used);
      if (used != arg.size() || m < 1) raise("ConfigError", "bad trunc bound: " + arg);
      return make_sorting_truncated(static_cast<std::uint32_t>(m));
    } catch (const std::invalid_argument&) {
      raise("ConfigError", "bad trunc bound: " + arg);
    } catch (const std::out_of_range&) {
      raise("ConfigError", "trunc bound out of range: " + arg);
    }
  }
  raise("ConfigError",
        "unknown sorting '" + spec + "' (want trivial01inf | nat-inf | trunc:<m>)");
}

namespace {

std::string triple_witness(SortValue a, SortValue b, SortValue c) {
  return "a=" + a.str() + " b=" + b.str() + " c=" + c.str();
}

// Test pool: the carrier when finite, otherwise a seeded sample of sorts.
std::vector<SortValue> sort_pool(const SortingSemiring& L, const CheckOptions& opts) {
  if (L.is_finite) return L.carrier_list;
  std::vector<SortValue> pool;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, 24);
  std::size_t want = std::max<std::size_t>(8, std::min<std::size_t>(24, opts.budget));
  for (std::size_t i = 0; i < want; ++i) pool.push_back(SortValue::fin(dist(rng)));
  pool.push_back(SortValue::fin(0));
  pool.push_back(SortValue::fin(1));
  if (L.has_inf) pool.push_back(SortValue::infinity());
  return pool;
}

}  // namespace

CheckReport check_sorting_semiring(const SortingSemiring& L, const CheckOptions& opts) {
  CheckReport rep;
  const std::vector<SortValue> pool = sort_pool(L, opts);
  const std::uint64_t n = pool.size();

  auto ternary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (SortValue a : pool)
      for (SortValue b : pool)
        for (SortValue c : pool) {
          ++count;
          if (count > opts.budget && !L.is_finite) {
            rep.add_pass(law, count - 1);
            return;
          }
          if (!prop(a, b, c)) {
            rep.add_fail(law, triple_witness(a, b, c), count);
            return;
          }
        }
    rep.add_pass(law, count);
  };
  auto binary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (SortValue a : pool)
      for (SortValue b : pool) {
        ++count;
        if (!prop(a, b)) {
          rep.add_fail(law, "a=" + a.str() + " b=" + b.str(), count);
          return;
        }
      }
    rep.add_pass(law, count);
  };
  auto unary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (SortValue a : pool) {
      ++count;
      if (!prop(a)) {
        rep.add_fail(law, "a=" + a.str(), count);
        return;
      }
    }
    rep.add_pass(law, count);
  };

  ternary("add-associativity", [&](SortValue a, SortValue b, SortValue c) {
    return L.add(L.add(a, b), c) == L.add(a, L.add(b, c));
  });
  binary("add-commutativity",
         [&](SortValue a, SortValue b) { return L.add(a, b) == L.add(b, a); });
  ternary("mul-associativity", [&](SortValue a, SortValue b, SortValue c) {
    return L.mul(L.mul(a, b), c) == L.mul(a, L.mul(b, c));
  });
  binary("mul-commutativity",
         [&](SortValue a, SortValue b) { return L.mul(a, b) == L.mul(b, a); });
  ternary("distributivity", [&](SortValue a, SortValue b, SortValue c) {
    return L.mul(a, L.add(b, c)) == L.add(L.mul(a, b), L.mul(a, c));
  });
  unary("add-identity", [&](SortValue a) { return L.add(L.zero(), a) == a; });
  unary("mul-identity", [&](SortValue a) { return L.mul(L.one(), a) == a; });
  unary("zero-absorption", [&](SortValue a) { return L.mul(L.zero(), a) == L.zero(); });
  unary("zero-least", [&](SortValue a) { return L.leq(L.zero(), a); });
  binary("order-directedness", [&](SortValue a, SortValue b) {
    // The sampled pool for nat-inf contains the infinite sort, which
    // dominates everything, so the witness search stays honest there.
    return std::any_of(pool.begin(), pool.end(),
                       [&](SortValue c) { return L.leq(a, c) && L.leq(b, c); });
  });
  ternary("order-mul-compatibility", [&](SortValue a, SortValue b, SortValue c) {
    return !L.leq(b, c) || L.leq(L.mul(a, b), L.mul(a, c));
  });
  ternary("order-add-compatibility", [&](SortValue a, SortValue b, SortValue c) {
    return !L.leq(b, c) || L.leq(L.add(a, b), L.add(a, c));
  });
  (void)n;
  return rep;
}

}  // namespace laysem
