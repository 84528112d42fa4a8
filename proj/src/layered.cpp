#include "laysem/layered.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "laysem/error.hpp"

namespace laysem {

LayeredElement LayeredElement::parse(const std::string& text) {
  std::size_t at = text.rfind('@');
  if (at == std::string::npos) raise("ParseError", "element needs value@sort: " + text);
  return {SortValue::parse(text.substr(at + 1)), Rational::parse(text.substr(0, at))};
}

LayeredElement LayeredSemiring::zero_elem() const {
  if (mode != ZeroLayerMode::SingletonZero)
    raise("NoZeroElement", name + " has no adjoined zero");
  return {SortValue::fin(0), base.one};
}

bool LayeredSemiring::is_zero_elem(const LayeredElement& x) const {
  return mode == ZeroLayerMode::SingletonZero && x.sort.is_zero();
}

LayeredElement LayeredSemiring::mul(const LayeredElement& x,
                                    const LayeredElement& y) const {
  if (mode == ZeroLayerMode::SingletonZero && (is_zero_elem(x) || is_zero_elem(y)))
    return zero_elem();
  Rational value = base.mul(x.value, y.value);
  if (ideal.contains(value))
    return {collapse_to_top ? L.top() : SortValue::fin(0), value};
  return {L.mul(x.sort, y.sort), value};
}

LayeredElement LayeredSemiring::add(const LayeredElement& x,
                                    const LayeredElement& y) const {
  if (is_zero_elem(x)) return y;
  if (is_zero_elem(y)) return x;
  Rational vx = v_of(x), vy = v_of(y);
  if (base.g_lt(vy, vx)) return x;
  if (base.g_lt(vx, vy)) return y;
  return {L.add(x.sort, y.sort), x.value};
}

LayeredElement LayeredSemiring::pow(const LayeredElement& x, unsigned m) const {
  if (m == 0) return one();
  LayeredElement acc = x;
  for (unsigned i = 1; i < m; ++i) acc = mul(acc, x);
  return acc;
}

bool LayeredSemiring::contains(const LayeredElement& x) const {
  if (!L.contains(x.sort)) return false;
  if (base.is_finite &&
      std::find(base.carrier_list.begin(), base.carrier_list.end(), x.value) ==
          base.carrier_list.end())
    return false;
  if (x.sort.is_zero()) {
    switch (mode) {
      case ZeroLayerMode::None:
        return false;
      case ZeroLayerMode::IdealZero:
        return ideal.contains(x.value);
      case ZeroLayerMode::FullCopy:
        return true;
      case ZeroLayerMode::SingletonZero:
        return x.value == base.one;
    }
  }
  if (collapse_to_top && x.sort == L.top()) return true;
  return !ideal.contains(x.value);
}

std::vector<LayeredElement> LayeredSemiring::carrier() const {
  if (!is_finite()) raise("InfiniteCarrier", "no carrier list for " + name);
  std::vector<LayeredElement> out;
  for (SortValue s : L.carrier_list)
    for (const MonoidValue& a : base.carrier_list) {
      LayeredElement e{s, a};
      if (contains(e)) out.push_back(e);
    }
  return out;
}

LayeredElement LayeredSemiring::nu_transition(const LayeredElement& x,
                                              SortValue m) const {
  if (x.sort.is_zero() || m.is_zero() || !L.leq(x.sort, m))
    raise("InvalidTransition",
          "nu_{" + m.str() + "," + x.sort.str() + "} undefined on " + x.str());
  return {m, x.value};
}

bool LayeredSemiring::nu_equiv(const LayeredElement& x, const LayeredElement& y) const {
  if (mode == ZeroLayerMode::SingletonZero && (is_zero_elem(x) || is_zero_elem(y)))
    return is_zero_elem(x) && is_zero_elem(y);
  return base.g_eq(v_of(x), v_of(y));
}

bool LayeredSemiring::nu_leq(const LayeredElement& x, const LayeredElement& y) const {
  if (is_zero_elem(x)) return true;
  if (is_zero_elem(y)) return is_zero_elem(x);
  return base.g_leq(v_of(x), v_of(y));
}

LayeredElement LayeredSemiring::ghost_image(const LayeredElement& x) const {
  if (is_zero_elem(x)) return x;
  return {L.top(), x.value};
}

LayeredElement LayeredSemiring::layer_unit(SortValue ell) const {
  if (ell.is_zero()) raise("InvalidTransition", "no layer unit at sort 0");
  if (!L.contains(ell)) raise("InvalidTransition", "sort outside L: " + ell.str());
  return {ell, base.one};
}

bool LayeredSemiring::is_ghost(const LayeredElement& a, SortValue ell) const {
  return L.is_ghost_sort(a.sort, ell);
}

bool LayeredSemiring::surpasses_L(const LayeredElement& a,
                                  const LayeredElement& b) const {
  if (a == b) return true;
  return nu_leq(b, a) && is_ghost(a, b.sort);
}

bool LayeredSemiring::surpasses_Lnu(const LayeredElement& a,
                                    const LayeredElement& b) const {
  if (a == b) return true;
  return nu_equiv(a, b) && is_ghost(a, b.sort);
}

LayeredSemiring build_layered(const SortingSemiring& L, const ValuedMonoid& base,
                              const std::optional<MonoidIdeal>& ideal,
                              const BuildOptions& opts) {
  LayeredSemiring R;
  R.L = L;
  R.base = base;

  if (opts.force_empty_ideal) {
    R.ideal = MonoidIdeal::empty_ideal();
    R.mode = ZeroLayerMode::None;
    R.name = "R(" + L.name + ", " + base.name + ")[naive]";
    return R;
  }

  const bool can_enumerate = base.is_finite || base.cancellative;
  if (!ideal && !can_enumerate)
    raise("InfiniteCarrier",
          "AUTO ideal needs a finite or declared-cancellative base: " + base.name);
  MonoidIdeal auto_ideal =
      can_enumerate ? noncancellative_ideal(base) : MonoidIdeal::empty_ideal();
  if (ideal) {
    // A supplied ideal must cover every noncancellative product and be
    // closed under multiplication by the whole monoid.
    for (const MonoidValue& z : auto_ideal.elements)
      if (!ideal->contains(z))
        raise("IdealTooSmall", "ideal omits noncancellative product " + z.str());
    if (base.is_finite) {
      for (const MonoidValue& a : ideal->elements)
        for (const MonoidValue& b : base.carrier_list)
          if (!ideal->contains(base.mul(a, b)))
            raise("NotAnIdeal", "not multiplication-closed at " + a.str() + "*" +
                                    b.str());
      // nu-closure: a sort-0 value nu-equal to a positive-layer value would
      // let addition leave the carrier.
      for (const MonoidValue& a : ideal->elements)
        for (const MonoidValue& b : base.carrier_list)
          if (base.g_eq(base.v(a), base.v(b)) && !ideal->contains(b))
            raise("IdealNotNuClosed",
                  a.str() + " in ideal but nu-equal " + b.str() + " outside");
    }
    R.ideal = *ideal;
  } else {
    R.ideal = auto_ideal;
  }

  if (R.ideal.contains(base.one))
    raise("NotAnIdeal", "ideal contains the identity; no tangible layer remains");

  R.mode = (R.ideal.elements.empty() && !R.ideal.contains_known_nonempty)
               ? ZeroLayerMode::None
               : ZeroLayerMode::IdealZero;
  R.name = "R(" + L.name + ", " + base.name + ")";
  return R;
}

std::vector<LayeredElement> element_pool(const LayeredSemiring& R,
                                         const CheckOptions& opts) {
  if (R.is_finite()) return R.carrier();
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> num(-20, 20);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  std::uniform_int_distribution<std::uint32_t> sort_pick(0, 7);
  std::vector<LayeredElement> pool;
  const std::size_t want = 26;
  while (pool.size() < want) {
    Rational value(num(rng), den(rng));
    std::uint32_t raw = sort_pick(rng);
    SortValue s = (raw == 7 && R.L.has_inf) ? SortValue::infinity()
                                            : SortValue::fin(raw == 7 ? 1 : raw);
    if (s.is_zero()) {
      if (R.mode == ZeroLayerMode::SingletonZero) {
        pool.push_back(R.zero_elem());
        continue;
      }
      if (R.mode != ZeroLayerMode::FullCopy) s = SortValue::fin(1);
    }
    LayeredElement e{s, value};
    if (R.contains(e)) pool.push_back(e);
  }
  pool.push_back(R.one());
  return pool;
}

namespace {

std::string w2(const LayeredElement& x, const LayeredElement& y) {
  return "x=" + x.str() + " y=" + y.str();
}
std::string w3(const LayeredElement& x, const LayeredElement& y,
               const LayeredElement& z) {
  return w2(x, y) + " z=" + z.str();
}

// Sorts usable as transition targets.
std::vector<SortValue> transition_targets(const LayeredSemiring& R) {
  if (R.L.is_finite) {
    std::vector<SortValue> out;
    for (SortValue s : R.L.carrier_list)
      if (!s.is_zero()) out.push_back(s);
    return out;
  }
  std::vector<SortValue> out;
  for (std::uint32_t k = 1; k <= 6; ++k) out.push_back(SortValue::fin(k));
  if (R.L.has_inf) out.push_back(SortValue::infinity());
  return out;
}

}  // namespace

CheckReport check_axioms(const LayeredSemiring& R, const CheckOptions& opts) {
  CheckReport rep;
  const std::vector<LayeredElement> pool = element_pool(R, opts);
  const std::vector<SortValue> targets = transition_targets(R);
  const bool finite = R.is_finite();

  auto ternary = [&](const std::string& law, auto&& prop) {
    std::uint64_t count = 0;
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (const auto& z : pool) {
          ++count;
          if (!finite && count > opts.budget) {
            rep.add_pass(law, count - 1);
            return;
          }
          if (!prop(x, y, z)) {
            rep.add_fail(law, w3(x, y, z), count);
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
        if (!finite && count > opts.budget) {
          rep.add_pass(law, count - 1);
          return;
        }
        if (!prop(x, y)) {
          rep.add_fail(law, w2(x, y), count);
          return;
        }
      }
    rep.add_pass(law, count);
  };

  // semiring laws
  ternary("add-associativity", [&](const auto& x, const auto& y, const auto& z) {
    return R.add(R.add(x, y), z) == R.add(x, R.add(y, z));
  });
  binary("add-commutativity",
         [&](const auto& x, const auto& y) { return R.add(x, y) == R.add(y, x); });
  ternary("mul-associativity", [&](const auto& x, const auto& y, const auto& z) {
    return R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z));
  });
  binary("mul-commutativity",
         [&](const auto& x, const auto& y) { return R.mul(x, y) == R.mul(y, x); });
  ternary("distributivity", [&](const auto& x, const auto& y, const auto& z) {
    return R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z));
  });

  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      ++count;
      if (R.mul(R.one(), x) != x) {
        ok = false;
        witness = "x=" + x.str();
        break;
      }
    }
    if (ok)
      rep.add_pass("mul-identity", count);
    else
      rep.add_fail("mul-identity", witness, count);
  }

  // A1: the unit is tangible.
  if (R.contains(R.one()) && R.one().sort == SortValue::fin(1))
    rep.add_pass("axiom-A1-unit-tangible", 1);
  else
    rep.add_fail("axiom-A1-unit-tangible", R.one().str(), 1);

  // A2: products land in the expected sort or the zero layer (the top layer
  // stands in for sort 0 under collapse_to_top).
  binary("axiom-A2-product-sorts", [&](const auto& x, const auto& y) {
    LayeredElement p = R.mul(x, y);
    if (p.sort == R.L.mul(x.sort, y.sort)) return true;
    return R.collapse_to_top ? p.sort == R.L.top() : p.sort.is_zero();
  });

  // A3: multiplication commutes with sort transitions.
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      if (x.sort.is_zero()) continue;
      for (const auto& y : pool) {
        if (y.sort.is_zero()) continue;
        for (SortValue m : targets) {
          if (!R.L.leq(x.sort, m)) continue;
          for (SortValue m2 : targets) {
            if (!R.L.leq(y.sort, m2)) continue;
            ++count;
            if (!finite && count > opts.budget) goto a3_done;
            LayeredElement lhs = R.mul(R.nu_transition(x, m), R.nu_transition(y, m2));
            LayeredElement p = R.mul(x, y);
            LayeredElement rhs =
                (p.sort.is_zero() || (R.collapse_to_top && p.sort == R.L.top()))
                    ? p
                    : R.nu_transition(p, R.L.mul(m, m2));
            if (lhs != rhs) {
              ok = false;
              witness = w2(x, y) + " m=" + m.str() + " m'=" + m2.str();
              goto a3_done;
            }
          }
        }
      }
    }
  a3_done:
    if (ok)
      rep.add_pass("axiom-A3-product-transitions", count);
    else
      rep.add_fail("axiom-A3-product-transitions", witness, count);
  }

  // A4: nu_{l,k}(a) + nu_{l',k}(a) = nu_{l+l',k}(a).
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      if (x.sort.is_zero()) continue;
      for (SortValue l : targets) {
        if (!R.L.leq(x.sort, l)) continue;
        for (SortValue l2 : targets) {
          if (!R.L.leq(x.sort, l2)) continue;
          ++count;
          if (!finite && count > opts.budget) goto a4_done;
          LayeredElement lhs = R.add(R.nu_transition(x, l), R.nu_transition(x, l2));
          LayeredElement rhs = R.nu_transition(x, R.L.add(l, l2));
          if (lhs != rhs) {
            ok = false;
            witness = "x=" + x.str() + " l=" + l.str() + " l'=" + l2.str();
            goto a4_done;
          }
        }
      }
    }
  a4_done:
    if (ok)
      rep.add_pass("axiom-A4-sum-transitions", count);
    else
      rep.add_fail("axiom-A4-sum-transitions", witness, count);
  }

  // A5: pushing a sum up to sort m >= k+l agrees with summing the pushed
  // terms; on the nu-equal branch the comparison is nu-level, since the
  // right-hand sorts add twice.
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      if (x.sort.is_zero()) continue;
      for (const auto& y : pool) {
        if (y.sort.is_zero()) continue;
        LayeredElement c = R.add(x, y);
        if (c.sort.is_zero()) continue;
        for (SortValue m : targets) {
          if (!R.L.leq(R.L.add(x.sort, y.sort), m)) continue;
          ++count;
          if (!finite && count > opts.budget) goto a5_done;
          LayeredElement lhs = R.nu_transition(c, m);
          LayeredElement rhs = R.add(R.nu_transition(x, m), R.nu_transition(y, m));
          bool good = R.nu_equiv(x, y) ? (R.nu_equiv(lhs, rhs) && lhs.value == rhs.value)
                                       : lhs == rhs;
          if (!good) {
            ok = false;
            witness = w2(x, y) + " m=" + m.str();
            goto a5_done;
          }
        }
      }
    }
  a5_done:
    if (ok)
      rep.add_pass("axiom-A5-sum-compatibility", count);
    else
      rep.add_fail("axiom-A5-sum-compatibility", witness, count);
  }

  // A6 plus the ideal property of the zero layer.
  binary("axiom-A6-zero-layer-additive", [&](const auto& x, const auto& y) {
    if (!x.sort.is_zero() || !y.sort.is_zero()) return true;
    if (R.mode == ZeroLayerMode::SingletonZero) return true;  // 0 + 0 = 0
    return R.add(x, y).sort.is_zero();
  });
  binary("zero-layer-ideal", [&](const auto& x, const auto& y) {
    if (!x.sort.is_zero()) return true;
    return R.mul(x, y).sort.is_zero();
  });

  // B: nu-equal summands add their sorts and stay nu-equal; at an infinite
  // sort the sum is literally the first summand.
  binary("axiom-B-supertropicality", [&](const auto& x, const auto& y) {
    if (x.sort.is_zero() || y.sort.is_zero()) return true;
    if (!R.nu_equiv(x, y)) return true;
    LayeredElement s = R.add(x, y);
    if (s.sort != R.L.add(x.sort, y.sort)) return false;
    if (!R.nu_equiv(s, x)) return false;
    if (x.sort.inf && s != x) return false;
    return true;
  });

  binary("nu-bipotence", [&](const auto& x, const auto& y) {
    if (R.nu_equiv(x, y)) return true;
    LayeredElement s = R.add(x, y);
    return s == x || s == y;
  });

  // Diagnoses (always reported as PASS; the note records the finding).
  if (finite) {
    bool generated = true;
    std::string missing;
    for (const auto& z : R.carrier()) {
      if (!z.sort.is_zero()) continue;
      bool found = false;
      for (const auto& a : R.carrier()) {
        if (a.sort.is_zero()) continue;
        for (const auto& b : R.carrier()) {
          if (b.sort.is_zero()) continue;
          if (R.mul(a, b) == z) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        generated = false;
        missing = z.str();
        break;
      }
    }
    rep.add_pass("zero-layer-generation", R.carrier().size(),
                 generated ? std::optional<std::string>("every sort-0 element is a "
                                                        "product of tangibles")
                           : std::optional<std::string>("not generated: " + missing));

    std::string note;
    if (R.base.absorbing) {
      LayeredElement abs_elem{SortValue::fin(0), *R.base.absorbing};
      bool is_zero_of_r = true;
      bool is_infinite_of_r = true;
      for (const auto& x : R.carrier()) {
        if (R.contains(abs_elem)) {
          if (R.add(abs_elem, x) != x) is_zero_of_r = false;
          if (R.add(abs_elem, x) != abs_elem) is_infinite_of_r = false;
        }
      }
      if (!R.contains(abs_elem))
        note = "base pointed at " + R.base.absorbing->str() + "; image not in carrier";
      else if (is_zero_of_r)
        note = "base pointed; sort-0 absorber is the zero element";
      else if (is_infinite_of_r)
        note = "base pointed; sort-0 absorber is additively absorbing (infinite "
               "element)";
      else
        note = "base pointed; sort-0 absorber is neither zero nor infinite";
    } else {
      note = R.mode == ZeroLayerMode::SingletonZero ? "zero element adjoined"
                                                    : "base not pointed";
    }
    rep.add_pass("pointedness", 1, note);

    // Tangible complement is multiplicatively closed iff the ideal is prime;
    // both sides computed by direct enumeration and compared.
    bool prime = R.ideal.elements.empty() || ideal_is_prime(R.base, R.ideal);
    bool closed = true;
    for (const auto& x : R.carrier()) {
      if (x.sort.is_zero()) continue;
      for (const auto& y : R.carrier()) {
        if (y.sort.is_zero()) continue;
        if (R.mul(x, y).sort.is_zero()) closed = false;
      }
    }
    if (prime == closed)
      rep.add_pass("prime-iff-tangible-closed", R.carrier().size(),
                   std::string(prime ? "prime" : "not prime") + ", tangibles " +
                       (closed ? "closed" : "not closed"));
    else
      rep.add_fail("prime-iff-tangible-closed",
                   std::string("prime=") + (prime ? "yes" : "no") + " closed=" +
                       (closed ? "yes" : "no"),
                   R.carrier().size());
  } else {
    rep.add_pass("zero-layer-generation", 0, "skipped: infinite carrier");
    rep.add_pass("pointedness", 1,
                 R.mode == ZeroLayerMode::SingletonZero ? "zero element adjoined"
                                                        : "base not pointed");
    rep.add_pass("prime-iff-tangible-closed", 0,
                 "cancellative base: empty ideal is prime, tangibles closed");
  }

  return rep;
}

CheckReport check_surpassing_suite(const LayeredSemiring& R, const CheckOptions& opts) {
  CheckReport rep;
  const std::vector<LayeredElement> pool = element_pool(R, opts);
  const bool finite = R.is_finite();

  struct Rel {
    std::string tag;
    std::function<bool(const LayeredElement&, const LayeredElement&)> holds;
  };
  std::vector<Rel> rels = {
      {"surpass-L", [&](const auto& a, const auto& b) { return R.surpasses_L(a, b); }},
      {"surpass-Lnu",
       [&](const auto& a, const auto& b) { return R.surpasses_Lnu(a, b); }}};

  for (const Rel& rel : rels) {
    {
      std::uint64_t count = 0;
      bool ok = true;
      std::string witness;
      for (const auto& a : pool) {
        ++count;
        if (!rel.holds(a, a)) {
          ok = false;
          witness = "a=" + a.str();
          break;
        }
      }
      if (ok)
        rep.add_pass(rel.tag + "-reflexive", count);
      else
        rep.add_fail(rel.tag + "-reflexive", witness, count);
    }
    {
      std::uint64_t count = 0;
      bool ok = true;
      std::string witness;
      for (const auto& a : pool) {
        for (const auto& b : pool) {
          if (!rel.holds(a, b)) continue;
          for (const auto& c : pool) {
            if (!rel.holds(b, c)) continue;
            ++count;
            if (!finite && count > opts.budget) goto trans_done;
            if (!rel.holds(a, c)) {
              ok = false;
              witness = w3(a, b, c);
              goto trans_done;
            }
          }
        }
      }
    trans_done:
      if (ok)
        rep.add_pass(rel.tag + "-transitive", count);
      else
        rep.add_fail(rel.tag + "-transitive", witness, count);
    }
    {
      std::uint64_t count = 0;
      bool ok = true;
      std::string witness;
      for (const auto& a1 : pool) {
        for (const auto& a2 : pool) {
          if (!rel.holds(a1, a2)) continue;
          for (const auto& b : pool) {
            ++count;
            if (!finite && count > opts.budget) goto compat_done;
            if (!rel.holds(R.add(a1, b), R.add(a2, b))) {
              ok = false;
              witness = "a1=" + a1.str() + " a2=" + a2.str() + " b=" + b.str() +
                        " (addition)";
              goto compat_done;
            }
            if (!rel.holds(R.mul(a1, b), R.mul(a2, b))) {
              ok = false;
              witness = "a1=" + a1.str() + " a2=" + a2.str() + " b=" + b.str() +
                        " (multiplication)";
              goto compat_done;
            }
          }
        }
      }
    compat_done:
      if (ok)
        rep.add_pass(rel.tag + "-diagonal-compatible", count);
      else
        rep.add_fail(rel.tag + "-diagonal-compatible", witness, count);
    }
  }

  // If a surpasses b then a+b carries an s(b)-ghost sort.
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& a : pool)
      for (const auto& b : pool) {
        if (a == b || !R.surpasses_L(a, b)) continue;
        ++count;
        if (!R.is_ghost(R.add(a, b), b.sort)) {
          ok = false;
          witness = w2(a, b);
          break;
        }
      }
    if (ok)
      rep.add_pass("surpass-implies-ghost-sum", count);
    else
      rep.add_fail("surpass-implies-ghost-sum", witness, count);
  }

  // Frobenius: (a+b)^m surpasses a^m + b^m nu-equivalently.
  for (unsigned m = 2; m <= 4; ++m) {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        ++count;
        if (!finite && count > opts.budget) goto frob_done;
        LayeredElement lhs = R.pow(R.add(a, b), m);
        LayeredElement rhs = R.add(R.pow(a, m), R.pow(b, m));
        if (!R.surpasses_Lnu(lhs, rhs)) {
          ok = false;
          witness = w2(a, b);
          goto frob_done;
        }
      }
    }
  frob_done:
    if (ok)
      rep.add_pass("frobenius-m" + std::to_string(m), count);
    else
      rep.add_fail("frobenius-m" + std::to_string(m), witness, count);
  }

  return rep;
}

TangibleSpan tangible_span(const LayeredSemiring& R) {
  if (!R.is_finite()) raise("InfiniteCarrier", "tangible span needs a finite carrier");
  std::vector<LayeredElement> all = R.carrier();
  auto idx = [&](const LayeredElement& e) {
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i] == e) return i;
    raise("Internal", "element escaped the carrier: " + e.str());
  };
  std::vector<bool> in(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].sort == SortValue::fin(1)) in[i] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (!in[j]) continue;
        for (LayeredElement e : {R.add(all[i], all[j]), R.mul(all[i], all[j])}) {
          std::size_t k = idx(e);
          if (!in[k]) {
            in[k] = true;
            grew = true;
          }
        }
      }
    }
  }
  TangibleSpan out;
  out.sub = R;
  out.sub.name = R.name + "[tangible-span]";
  for (std::size_t i = 0; i < all.size(); ++i)
    if (in[i]) out.span_elements.push_back(all[i]);
  out.tangibly_generated = out.span_elements.size() == all.size();
  return out;
}

QuotientResult quotient_by_upper_ideal(const LayeredSemiring& R,
                                       const LayeredElement& threshold, bool strict) {
  if (!R.is_finite()) raise("InfiniteCarrier", "quotient needs a finite carrier");
  if (!R.contains(threshold))
    raise("InvalidIdeal", "threshold outside the carrier: " + threshold.str());

  // The upper set {r : r >=_nu threshold} (or strict).  It collapses to one
  // absorbing class; everything below keeps its arithmetic, so the quotient
  // is the value-truncation of the base at the least collapsed value.
  std::vector<LayeredElement> upper;
  for (const auto& r : R.carrier()) {
    bool in_upper = strict ? R.nu_lt(threshold, r) : R.nu_leq(threshold, r);
    if (in_upper) upper.push_back(r);
  }
  QuotientResult out;
  if (upper.empty()) {
    out.quotient = R;
    out.project = [](const LayeredElement& e) { return e; };
    out.collapsed = false;
    return out;
  }
  Rational rep_value = R.v_of(upper.front());
  for (const auto& r : upper)
    if (R.base.g_lt(R.v_of(r), rep_value)) rep_value = R.v_of(r);

  ValuedMonoid trunc_base = truncate_monoid(R.base, rep_value);
  LayeredSemiring Q = build_layered(R.L, trunc_base);
  Q.name = R.name + "/upper(" + threshold.str() + (strict ? ",strict)" : ")");

  Rational cap = rep_value;
  auto base = R.base;
  out.quotient = Q;
  out.project = [cap, base](const LayeredElement& e) -> LayeredElement {
    if (base.g_leq(base.v(cap), base.v(e.value))) return {SortValue::fin(0), cap};
    return e;
  };
  out.collapsed = true;
  return out;
}

}  // namespace laysem
