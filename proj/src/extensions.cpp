#include "laysem/extensions.hpp"

#include <algorithm>
#include <set>

#include "laysem/error.hpp"

namespace laysem {

LayeredSemiring relayer(const LayeredSemiring& R, const MonoidIdeal& values,
                        bool use_nu_closure) {
  std::vector<MonoidValue> merged = values.elements;
  if (R.base.is_finite) {
    for (const MonoidValue& a : values.elements)
      for (const MonoidValue& b : R.base.carrier_list)
        if (!values.contains(R.base.mul(a, b)))
          raise("NotAnIdeal",
                "relayer ideal not closed: " + a.str() + "*" + b.str() + " escapes");
    if (use_nu_closure) {
      for (const MonoidValue& b : R.base.carrier_list)
        for (const MonoidValue& a : values.elements)
          if (R.base.g_eq(R.base.v(a), R.base.v(b))) merged.push_back(b);
    }
  }
  for (const MonoidValue& z : R.ideal.elements) merged.push_back(z);
  if (merged.empty() && !values.contains_known_nonempty) return R;

  MonoidIdeal big = MonoidIdeal::from_elements(std::move(merged));
  LayeredSemiring out = build_layered(R.L, R.base, big);
  out.name = R.name + "[relayered]";
  return out;
}

LayeredSemiring relayer(const LayeredSemiring& R,
                        const std::vector<LayeredElement>& ideal_elements,
                        bool use_nu_closure) {
  // Element-level closure: the subset itself must absorb multiplication.
  for (const LayeredElement& x : ideal_elements)
    for (const LayeredElement& y : R.carrier()) {
      LayeredElement p = R.mul(x, y);
      if (std::find(ideal_elements.begin(), ideal_elements.end(), p) ==
          ideal_elements.end())
        raise("NotAnIdeal", "element ideal not closed: " + x.str() + "*" + y.str() +
                                " = " + p.str() + " escapes");
    }
  std::vector<MonoidValue> vals;
  vals.reserve(ideal_elements.size());
  for (const LayeredElement& x : ideal_elements) vals.push_back(x.value);
  return relayer(R, MonoidIdeal::from_elements(std::move(vals)), use_nu_closure);
}

LayeredSemiring nu_truncate(const SortingSemiring& L, const ValuedMonoid& base,
                            const MonoidValue& q) {
  ValuedMonoid trunc = truncate_monoid(base, q);
  // The saturated value is the one noncancellative product a cancellative
  // base acquires under truncation; finite bases get the full enumeration.
  std::optional<MonoidIdeal> ideal;
  if (!trunc.is_finite) ideal = MonoidIdeal::from_elements({q});
  LayeredSemiring out = build_layered(L, trunc, ideal);
  out.name = "R(" + L.name + ", " + base.name + ")[nu-trunc:" + q.str() + "]";
  return out;
}

LayeredSemiring l_truncate(const LayeredSemiring& R, std::uint32_t m) {
  if (m <= 1) raise("InvalidThreshold", "sort truncation needs m > 1");
  if (R.L.kind != SortingKind::NatInf && R.L.kind != SortingKind::Truncated)
    raise("InvalidThreshold", "sort truncation needs a numeric sorting semiring");
  if (R.L.kind == SortingKind::Truncated && R.L.trunc_bound <= m)
    raise("InvalidThreshold", "sorting already truncated at or below " +
                                  std::to_string(m));
  if (R.mode == ZeroLayerMode::SingletonZero || R.mode == ZeroLayerMode::FullCopy)
    raise("InvalidThreshold", "sort truncation applies to plain instances");
  LayeredSemiring out = build_layered(
      make_sorting_truncated(m), R.base,
      R.mode == ZeroLayerMode::IdealZero ? std::optional<MonoidIdeal>(R.ideal)
                                         : std::nullopt);
  out.name = R.name + "[sort-trunc:" + std::to_string(m) + "]";
  return out;
}

LayeredSemiring adjoin_zero(const LayeredSemiring& R) {
  if (R.mode != ZeroLayerMode::None)
    raise("AlreadyPointed", R.name + " already has a zero layer");
  LayeredSemiring out = R;
  out.mode = ZeroLayerMode::SingletonZero;
  out.name = R.name + "[+0]";
  return out;
}

LayeredSemiring adjoin_zero_layer(const LayeredSemiring& R) {
  if (R.mode != ZeroLayerMode::None)
    raise(R.mode == ZeroLayerMode::SingletonZero || R.mode == ZeroLayerMode::IdealZero
              ? "AlreadyPointed"
              : "NotUniform",
          R.name + " already has a zero layer");
  // Uniformity: totally ordered sorts with value-preserving transitions.
  // The stock sorting semirings are totally ordered; nothing else to check
  // for componentwise instances.
  LayeredSemiring out = R;
  out.mode = ZeroLayerMode::FullCopy;
  out.name = R.name + "[+0-layer]";
  return out;
}

LayeredElement GhostedSemiring::nu(const LayeredElement& x) const {
  return ghost_of(base.v_of(x));
}

LayeredElement GhostedSemiring::mul(const LayeredElement& x,
                                    const LayeredElement& y) const {
  if (!is_ghost(x) && !is_ghost(y)) return base.mul(x, y);
  return ghost_of(base.base.v(base.base.mul(x.value, y.value)));
}

LayeredElement GhostedSemiring::add(const LayeredElement& x,
                                    const LayeredElement& y) const {
  if (!is_ghost(x) && !is_ghost(y)) return base.add(x, y);
  const Rational vx = base.base.v(x.value), vy = base.base.v(y.value);
  if (is_ghost(x) && is_ghost(y))
    return ghost_of(base.base.g_leq(vx, vy) ? vy : vx);
  // one ghost: the ghost wins unless the plain element is nu-larger
  const LayeredElement& plain = is_ghost(x) ? y : x;
  const LayeredElement& ghost = is_ghost(x) ? x : y;
  if (base.base.g_lt(base.base.v(ghost.value), base.base.v(plain.value))) return plain;
  return ghost_of(base.base.v(ghost.value));
}

std::vector<LayeredElement> GhostedSemiring::carrier() const {
  std::vector<LayeredElement> out = base.carrier();
  std::set<Rational> seen;
  std::vector<LayeredElement> ghosts;
  for (const LayeredElement& x : base.carrier()) {
    Rational v = base.v_of(x);
    if (seen.insert(v).second) ghosts.push_back(ghost_of(v));
  }
  out.insert(out.end(), ghosts.begin(), ghosts.end());
  return out;
}

std::vector<LayeredElement> GhostedSemiring::window(
    const std::vector<Rational>& values) const {
  std::vector<LayeredElement> out;
  std::vector<SortValue> sorts;
  for (SortValue s : base.L.is_finite
                         ? base.L.carrier_list
                         : std::vector<SortValue>{SortValue::fin(1), SortValue::fin(2),
                                                  SortValue::fin(3)})
    if (!s.is_zero()) sorts.push_back(s);
  for (const Rational& v : values) {
    for (SortValue s : sorts) {
      LayeredElement e{s, v};
      if (base.contains(e)) out.push_back(e);
    }
    out.push_back(ghost_of(base.base.v(v)));
  }
  return out;
}

GhostedSemiring build_U(const LayeredSemiring& R) {
  if (R.L.has_inf)
    raise("ConfigError",
          "ghost adjunction encodes ghosts at the infinite sort; the base sorting "
          "semiring must not use it (sort-truncate first)");
  if (R.mode == ZeroLayerMode::SingletonZero || R.collapse_to_top)
    raise("ConfigError", "ghost adjunction applies to plain layered instances");
  GhostedSemiring u;
  u.base = R;
  return u;
}

LayeredSemiring degenerate_standard(const LayeredSemiring& R) {
  if (R.mode == ZeroLayerMode::SingletonZero || R.collapse_to_top)
    raise("ConfigError", "degeneration applies to plain layered instances");
  LayeredSemiring out;
  out.L = make_sorting(SortingInstance::Trivial01Inf);
  out.base = R.base;
  out.ideal = R.ideal;
  out.mode = ZeroLayerMode::None;
  out.collapse_to_top = true;
  out.name = R.name + "[standard]";
  return out;
}

std::function<LayeredElement(const LayeredElement&)> degeneration_map(
    const GhostedSemiring& U, const LayeredSemiring& standard) {
  LayeredSemiring base = U.base;
  LayeredSemiring std_r = standard;
  return [base, std_r](const LayeredElement& x) -> LayeredElement {
    if (x.sort.inf) return {SortValue::infinity(), x.value};  // ghost stays ghost
    LayeredElement tangible{SortValue::fin(1), x.value};
    if (x.sort == SortValue::fin(1) && std_r.contains(tangible)) return tangible;
    return {SortValue::infinity(), base.v_of(x)};
  };
}

CheckReport check_ghosted(const GhostedSemiring& U,
                          const std::vector<LayeredElement>& pool) {
  CheckReport rep;
  auto ternary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (const auto& z : pool) {
          ++count;
          if (!prop(x, y, z)) {
            rep.add_fail(law, "x=" + x.str() + " y=" + y.str() + " z=" + z.str(),
                         count);
            return;
          }
        }
    rep.add_pass(law, count);
  };
  auto binary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (const auto& x : pool)
      for (const auto& y : pool) {
        ++count;
        if (!prop(x, y)) {
          rep.add_fail(law, "x=" + x.str() + " y=" + y.str(), count);
          return;
        }
      }
    rep.add_pass(law, count);
  };
  auto unary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (const auto& x : pool) {
      ++count;
      if (!prop(x)) {
        rep.add_fail(law, "x=" + x.str(), count);
        return;
      }
    }
    rep.add_pass(law, count);
  };

  ternary("U-add-associativity", [&](const auto& x, const auto& y, const auto& z) {
    return U.add(U.add(x, y), z) == U.add(x, U.add(y, z));
  });
  binary("U-add-commutativity",
         [&](const auto& x, const auto& y) { return U.add(x, y) == U.add(y, x); });
  ternary("U-mul-associativity", [&](const auto& x, const auto& y, const auto& z) {
    return U.mul(U.mul(x, y), z) == U.mul(x, U.mul(y, z));
  });
  binary("U-mul-commutativity",
         [&](const auto& x, const auto& y) { return U.mul(x, y) == U.mul(y, x); });
  ternary("U-distributivity", [&](const auto& x, const auto& y, const auto& z) {
    return U.mul(x, U.add(y, z)) == U.add(U.mul(x, y), U.mul(x, z));
  });
  unary("U-mul-identity",
        [&](const auto& x) { return U.mul(U.base.one(), x) == x; });

  unary("nu-idempotent", [&](const auto& x) { return U.nu(U.nu(x)) == U.nu(x); });
  unary("nu-is-e-scaling",
        [&](const auto& x) { return U.nu(x) == U.mul(U.e_unit(), x); });
  binary("nu-multiplicative", [&](const auto& x, const auto& y) {
    return U.nu(U.mul(x, y)) == U.mul(U.nu(x), U.nu(y));
  });
  binary("nu-additive", [&](const auto& x, const auto& y) {
    return U.nu(U.add(x, y)) == U.add(U.nu(x), U.nu(y));
  });
  binary("ghost-layer-bipotent", [&](const auto& x, const auto& y) {
    if (!U.is_ghost(x) || !U.is_ghost(y)) return true;
    LayeredElement s = U.add(x, y);
    return s == x || s == y;
  });
  binary("ghost-layer-ideal", [&](const auto& x, const auto& y) {
    if (!U.is_ghost(x)) return true;
    return U.is_ghost(U.mul(x, y));
  });
  return rep;
}

CheckReport check_degeneration(const GhostedSemiring& U, const LayeredSemiring& std_r,
                               const std::vector<LayeredElement>& upool) {
  CheckReport rep;
  auto proj = degeneration_map(U, std_r);

  // the oplus case table against nu-dominance
  std::uint64_t count = 0;
  bool ok = true;
  std::string witness;
  std::vector<LayeredElement> spool;
  {
    std::set<std::string> seen;
    for (const auto& x : upool) {
      LayeredElement p = proj(x);
      if (seen.insert(p.str()).second) spool.push_back(p);
    }
  }
  for (const auto& a : spool) {
    for (const auto& b : spool) {
      ++count;
      Rational va = std_r.v_of(a), vb = std_r.v_of(b);
      LayeredElement s = std_r.add(a, b);
      LayeredElement expect;
      if (std_r.base.g_lt(vb, va))
        expect = a;
      else if (std_r.base.g_lt(va, vb))
        expect = b;
      else
        expect = {SortValue::infinity(), a.value};  // ea = eb goes ghost
      if (s != expect) {
        ok = false;
        witness = "a=" + a.str() + " b=" + b.str();
        break;
      }
    }
    if (!ok) break;
  }
  if (ok)
    rep.add_pass("oplus-case-table", count);
  else
    rep.add_fail("oplus-case-table", witness, count);

  // a (+) b stays nu-equal to the sum taken in U
  count = 0;
  ok = true;
  for (const auto& x : upool) {
    for (const auto& y : upool) {
      ++count;
      LayeredElement upstairs = proj(U.add(x, y));
      LayeredElement downstairs = std_r.add(proj(x), proj(y));
      if (!std_r.nu_equiv(upstairs, downstairs)) {
        ok = false;
        witness = "x=" + x.str() + " y=" + y.str();
        break;
      }
    }
    if (!ok) break;
  }
  if (ok)
    rep.add_pass("oplus-nu-congruent-to-add", count);
  else
    rep.add_fail("oplus-nu-congruent-to-add", witness, count);

  // the coalescing map is multiplicative and additive into the degeneration
  count = 0;
  ok = true;
  for (const auto& x : upool) {
    for (const auto& y : upool) {
      ++count;
      if (proj(U.mul(x, y)) != std_r.mul(proj(x), proj(y))) {
        ok = false;
        witness = "x=" + x.str() + " y=" + y.str() + " (mul)";
        break;
      }
      if (proj(U.add(x, y)) != std_r.add(proj(x), proj(y))) {
        ok = false;
        witness = "x=" + x.str() + " y=" + y.str() + " (add)";
        break;
      }
    }
    if (!ok) break;
  }
  if (ok)
    rep.add_pass("degeneration-map-hom", count);
  else
    rep.add_fail("degeneration-map-hom", witness, count);

  return rep;
}

}  // namespace laysem
