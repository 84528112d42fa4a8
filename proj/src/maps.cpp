#include "laysem/maps.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "laysem/error.hpp"

namespace laysem {

namespace {

std::string w2(const LayeredElement& x, const LayeredElement& y) {
  return "x=" + x.str() + " y=" + y.str();
}

// Universal sort comparison for criteria that span two sorting semirings
// sharing the same encoding (finite sorts by size, the infinite sort on top).
bool sort_leq_shared(SortValue a, SortValue b) {
  if (b.inf) return true;
  if (a.inf) return false;
  return a.n <= b.n;
}

void check_pairs(CheckReport& rep, const std::string& law,
                 const std::vector<LayeredElement>& pool, bool finite,
                 std::uint64_t budget,
                 const std::function<bool(const LayeredElement&, const LayeredElement&,
                                          std::string&)>& prop) {
  std::uint64_t count = 0;
  for (const auto& x : pool)
    for (const auto& y : pool) {
      ++count;
      if (!finite && count > budget) {
        rep.add_pass(law, count - 1);
        return;
      }
      std::string extra;
      if (!prop(x, y, extra)) {
        rep.add_fail(law, w2(x, y) + extra, count);
        return;
      }
    }
  rep.add_pass(law, count);
}

void check_unit(CheckReport& rep, const LayeredMap& f) {
  LayeredElement img = f.phi(f.src.one());
  if (img == f.dst.one())
    rep.add_pass("unit-preserved", 1);
  else
    rep.add_fail("unit-preserved", "phi(1)=" + img.str(), 1);
}

void check_multiplicative(CheckReport& rep, const LayeredMap& f,
                          const std::vector<LayeredElement>& pool,
                          const CheckOptions& opts) {
  check_pairs(rep, "multiplicative", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                return f.phi(f.src.mul(x, y)) == f.dst.mul(f.phi(x), f.phi(y));
              });
}

// Layer units of the sub-semiring generated by 1: e_n = 1 + ... + 1.
std::vector<std::pair<unsigned, LayeredElement>> generated_units(
    const LayeredSemiring& R, unsigned up_to) {
  std::vector<std::pair<unsigned, LayeredElement>> out;
  LayeredElement e = R.one();
  out.emplace_back(1, e);
  for (unsigned n = 2; n <= up_to; ++n) {
    e = R.add(e, R.one());
    out.emplace_back(n, e);
  }
  return out;
}

}  // namespace

CheckReport check_semiring_hom(const LayeredMap& f, const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = element_pool(f.src, opts);
  check_unit(rep, f);
  check_multiplicative(rep, f, pool, opts);
  check_pairs(rep, "additive", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                return f.phi(f.src.add(x, y)) == f.dst.add(f.phi(x), f.phi(y));
              });
  return rep;
}

CheckReport check_layered_hom(const LayeredMap& f, const CheckOptions& opts) {
  CheckReport rep = check_semiring_hom(f, opts);
  const auto pool = element_pool(f.src, opts);

  // M1: rho preserves the sort order.
  {
    std::vector<SortValue> sorts;
    if (f.src.L.is_finite)
      sorts = f.src.L.carrier_list;
    else {
      for (std::uint32_t k = 0; k <= 6; ++k) sorts.push_back(SortValue::fin(k));
      if (f.src.L.has_inf) sorts.push_back(SortValue::infinity());
    }
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (SortValue k : sorts)
      for (SortValue l : sorts) {
        ++count;
        if (f.src.L.leq(k, l) && !f.dst.L.leq(f.rho(k), f.rho(l))) {
          ok = false;
          witness = "k=" + k.str() + " l=" + l.str();
          break;
        }
      }
    if (ok)
      rep.add_pass("M1-rho-order", count);
    else
      rep.add_fail("M1-rho-order", witness, count);
  }

  // M2 (or its zero-escape form when the target has a zero layer).
  const bool zero_escape = f.dst.mode != ZeroLayerMode::None;
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      ++count;
      SortValue s = f.phi(x).sort;
      bool fine = f.dst.L.leq(f.rho(x.sort), s) || (zero_escape && s.is_zero());
      if (!fine) {
        ok = false;
        witness = "x=" + x.str() + " s'(phi)=" + s.str();
        break;
      }
    }
    if (ok)
      rep.add_pass(zero_escape ? "M2-sort-bound-or-zero" : "M2-sort-bound", count);
    else
      rep.add_fail(zero_escape ? "M2-sort-bound-or-zero" : "M2-sort-bound", witness,
                   count);
  }

  // Layer units generated by 1 map to their counterparts, and peel off
  // multiplicatively.
  {
    unsigned up_to = 5;
    auto src_units = generated_units(f.src, up_to);
    auto dst_units = generated_units(f.dst, up_to);
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (unsigned i = 0; i < src_units.size(); ++i) {
      ++count;
      if (f.phi(src_units[i].second) != dst_units[i].second) {
        ok = false;
        witness = "e_" + std::to_string(src_units[i].first);
        break;
      }
    }
    if (ok)
      rep.add_pass("layer-units-preserved", count);
    else
      rep.add_fail("layer-units-preserved", witness, count);

    count = 0;
    ok = true;
    for (const auto& [n, e] : src_units) {
      for (const auto& x : pool) {
        ++count;
        if (f.phi(f.src.mul(e, x)) != f.dst.mul(f.phi(e), f.phi(x))) {
          ok = false;
          witness = "e_" + std::to_string(n) + " x=" + x.str();
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      rep.add_pass("M3-unit-multiplicativity", count);
    else
      rep.add_fail("M3-unit-multiplicativity", witness, count);
  }
  return rep;
}

CheckReport check_zero_excepted(const LayeredMap& f, const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = element_pool(f.src, opts);
  check_unit(rep, f);
  check_multiplicative(rep, f, pool, opts);
  check_pairs(rep, "additive-at-positive-sorts", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                if (x.sort.is_zero() || y.sort.is_zero()) return true;
                return f.phi(f.src.add(x, y)) == f.dst.add(f.phi(x), f.phi(y));
              });
  return rep;
}

CheckReport check_surpassing_map(const LayeredMap& f, const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = element_pool(f.src, opts);
  check_unit(rep, f);
  check_multiplicative(rep, f, pool, opts);
  check_pairs(rep, "surpassing-additivity", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                return f.dst.surpasses_Lnu(f.phi(f.src.add(x, y)),
                                           f.dst.add(f.phi(x), f.phi(y)));
              });
  // surpassing maps are nu-monotone
  check_pairs(rep, "nu-monotone", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                if (!f.src.nu_leq(y, x)) return true;
                return f.dst.nu_leq(f.phi(y), f.phi(x));
              });
  return rep;
}

CheckReport check_surpassed_map(const LayeredMap& f, const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = element_pool(f.src, opts);
  check_unit(rep, f);
  check_multiplicative(rep, f, pool, opts);
  check_pairs(rep, "surpassed-additivity", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                return f.dst.surpasses_Lnu(f.dst.add(f.phi(x), f.phi(y)),
                                           f.phi(f.src.add(x, y)));
              });
  return rep;
}

CheckReport check_layered_morphism(const LayeredMap& f, const CheckOptions& opts) {
  CheckReport rep = check_zero_excepted(f, opts);
  const auto pool = element_pool(f.src, opts);

  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      ++count;
      SortValue s = f.phi(x).sort;
      if (!(f.dst.L.leq(f.rho(x.sort), s) || s.is_zero())) {
        ok = false;
        witness = "x=" + x.str() + " s'(phi)=" + s.str();
        break;
      }
    }
    if (ok)
      rep.add_pass("M1-sort-bound-or-zero", count);
    else
      rep.add_fail("M1-sort-bound-or-zero", witness, count);
  }

  // M2: phi commutes with sort transitions up to nu.
  {
    std::vector<SortValue> targets;
    if (f.src.L.is_finite) {
      for (SortValue s : f.src.L.carrier_list)
        if (!s.is_zero()) targets.push_back(s);
    } else {
      for (std::uint32_t k = 1; k <= 5; ++k) targets.push_back(SortValue::fin(k));
      if (f.src.L.has_inf) targets.push_back(SortValue::infinity());
    }
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      if (x.sort.is_zero()) continue;
      for (SortValue l : targets) {
        if (!f.src.L.leq(x.sort, l)) continue;
        ++count;
        if (!f.dst.nu_equiv(f.phi(f.src.nu_transition(x, l)), f.phi(x))) {
          ok = false;
          witness = "x=" + x.str() + " l=" + l.str();
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      rep.add_pass("M2-transition-compatible", count);
    else
      rep.add_fail("M2-transition-compatible", witness, count);
  }

  check_pairs(rep, "M3-nu-equivalence-preserved", pool, f.src.is_finite(), opts.budget,
              [&](const LayeredElement& x, const LayeredElement& y, std::string&) {
                if (!f.src.nu_equiv(x, y)) return true;
                return f.dst.nu_equiv(f.phi(x), f.phi(y));
              });

  // Reconstruction from the tangible action: phi(<a>^l) for finite l > 1
  // must equal e'_l * phi(<a>^1), with e'_l assembled from phi(1).
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      if (x.sort.is_zero() || x.sort.inf || x.sort.n <= 1) continue;
      if (x.sort.n > 8) continue;
      LayeredElement tangible{SortValue::fin(1), x.value};
      if (!f.src.contains(tangible)) continue;
      ++count;
      LayeredElement e_dst = f.dst.one();
      for (std::uint32_t i = 1; i < x.sort.n; ++i) e_dst = f.dst.add(e_dst, f.dst.one());
      LayeredElement rebuilt = f.dst.mul(e_dst, f.phi(tangible));
      if (rebuilt != f.phi(x)) {
        ok = false;
        witness = "x=" + x.str() + " rebuilt=" + rebuilt.str();
        break;
      }
    }
    if (ok)
      rep.add_pass("determined-by-tangible-action", count);
    else
      rep.add_fail("determined-by-tangible-action", witness, count);
  }
  return rep;
}

LayeredMap identity_map(const LayeredSemiring& R) {
  return {"identity", R, R, [](const LayeredElement& x) { return x; },
          [](SortValue s) { return s; }};
}

LayeredMap relayer_projection(const LayeredSemiring& src, const LayeredSemiring& dst) {
  auto ideal = dst.ideal;
  return {"relayer-projection", src, dst,
          [ideal](const LayeredElement& x) -> LayeredElement {
            if (ideal.contains(x.value)) return {SortValue::fin(0), x.value};
            return x;
          },
          [](SortValue s) { return s; }};
}

LayeredMap rho_induced_map(const LayeredSemiring& src, const LayeredSemiring& dst,
                           std::function<SortValue(SortValue)> rho) {
  auto r = rho;
  return {"rho-induced", src, dst,
          [r](const LayeredElement& x) -> LayeredElement {
            return {r(x.sort), x.value};
          },
          rho};
}

LayeredMap nu_trunc_projection(const LayeredSemiring& src, const LayeredSemiring& dst,
                               const MonoidValue& q) {
  auto base = src.base;
  MonoidValue cap = q;
  return {"nu-trunc-projection", src, dst,
          [base, cap](const LayeredElement& x) -> LayeredElement {
            if (base.g_leq(base.v(cap), base.v(x.value)))
              return {SortValue::fin(0), cap};
            return x;
          },
          [](SortValue s) { return s; }};
}

LayeredMap sort_trunc_projection(const LayeredSemiring& src, const LayeredSemiring& dst,
                                 std::uint32_t m) {
  return {"sort-trunc-projection", src, dst,
          [m](const LayeredElement& x) -> LayeredElement {
            if (!x.sort.inf && x.sort.n <= m) return x;
            return {SortValue::fin(m), x.value};
          },
          [m](SortValue s) {
            return (!s.inf && s.n <= m) ? s : SortValue::fin(m);
          }};
}

LayeredMap frobenius_map(const LayeredSemiring& R, unsigned m) {
  LayeredSemiring copy = R;
  return {"frobenius-" + std::to_string(m), R, R,
          [copy, m](const LayeredElement& x) { return copy.pow(x, m); },
          [copy, m](SortValue s) {
            SortValue acc = SortValue::fin(1);
            for (unsigned i = 0; i < m; ++i) acc = copy.L.mul(acc, s);
            return acc;
          }};
}

CheckReport check_supervaluation(const Supervaluation& phi, SupervalVariant variant,
                                 const CheckOptions& opts) {
  CheckReport rep;
  std::mt19937_64 rng(opts.seed);
  std::vector<PuiseuxSeries> pool;
  const std::size_t draws = std::max<std::size_t>(16, std::min<std::size_t>(
      48, static_cast<std::size_t>(opts.budget)));
  for (std::size_t i = 0; i < draws; ++i) pool.push_back(phi.sample(rng));
  pool.push_back(PuiseuxSeries::constant(Rational(1)));

  // LV1
  LayeredElement one_img = phi.map(PuiseuxSeries::constant(Rational(1)));
  if (one_img == phi.target.one())
    rep.add_pass("LV1-unit", 1);
  else
    rep.add_fail("LV1-unit", "phi(1)=" + one_img.str(), 1);

  // LV2: multiplicativity
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        ++count;
        PuiseuxSeries ab = a * b;
        if (ab.is_zero() && !phi.defined_at_zero) continue;
        if (phi.map(ab) != phi.target.mul(phi.map(a), phi.map(b))) {
          ok = false;
          witness = "a=" + a.str() + " b=" + b.str();
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      rep.add_pass("LV2-multiplicative", count);
    else
      rep.add_fail("LV2-multiplicative", witness, count);
  }

  // LV3: subadditivity with respect to the nu order
  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        ++count;
        PuiseuxSeries s = a + b;
        if (s.is_zero() && !phi.defined_at_zero) continue;
        if (!phi.target.nu_leq(phi.map(s),
                               phi.target.add(phi.map(a), phi.map(b)))) {
          ok = false;
          witness = "a=" + a.str() + " b=" + b.str();
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      rep.add_pass("LV3-subadditive", count);
    else
      rep.add_fail("LV3-subadditive", witness, count);
  }

  // LV4: zero goes to zero (only for maps defined at zero)
  if (!variant.dagger) {
    if (!phi.defined_at_zero) {
      rep.add_fail("LV4-zero", "map undefined at the zero series", 1);
    } else {
      LayeredElement z = phi.map(PuiseuxSeries::zero());
      if (phi.target.mode == ZeroLayerMode::SingletonZero &&
          z == phi.target.zero_elem())
        rep.add_pass("LV4-zero", 1);
      else
        rep.add_fail("LV4-zero", "phi(0)=" + z.str(), 1);
    }
  }

  if (variant.zo) {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& a : pool) {
      ++count;
      SortValue s = phi.map(a).sort;
      if (!(s.is_zero() || s == SortValue::fin(1))) {
        ok = false;
        witness = "a=" + a.str() + " sort=" + s.str();
        break;
      }
    }
    if (ok)
      rep.add_pass("ZO-range", count);
    else
      rep.add_fail("ZO-range", witness, count);

    // over a field domain every nonzero element is invertible, so images of
    // sampled elements must be tangible when the target has no zero layer
    if (phi.target.mode == ZeroLayerMode::None) {
      count = 0;
      ok = true;
      for (const auto& a : pool) {
        ++count;
        if (phi.map(a).sort != SortValue::fin(1)) {
          ok = false;
          witness = "a=" + a.str();
          break;
        }
      }
      if (ok)
        rep.add_pass("invertible-images-tangible", count);
      else
        rep.add_fail("invertible-images-tangible", witness, count);
    }
  }
  return rep;
}

namespace {

// Domain pairs for domination checks; roughly half share their valuation so
// the equal-image premises actually fire.
std::vector<std::pair<PuiseuxSeries, PuiseuxSeries>> domination_pairs(
    const Supervaluation& v, const CheckOptions& opts, std::size_t want) {
  std::mt19937_64 rng(opts.seed);
  std::vector<std::pair<PuiseuxSeries, PuiseuxSeries>> out;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::int64_t> small(1, 6);
  while (out.size() < want) {
    PuiseuxSeries a = v.sample(rng);
    if (coin(rng)) {
      out.emplace_back(a, v.sample(rng));
    } else {
      // same leading exponent, hence the same valuation
      PuiseuxSeries bump = PuiseuxSeries::monomial(
          Rational(small(rng)), -a.val() + Rational(small(rng)));
      out.emplace_back(a, a + bump);
    }
  }
  return out;
}

}  // namespace

CheckReport check_domination(const Supervaluation& v, const Supervaluation& w,
                             const CheckOptions& opts) {
  CheckReport rep;
  auto pairs = domination_pairs(v, opts, 64);

  std::uint64_t count = 0;
  bool ok = true;
  std::string witness;
  for (const auto& [a, b] : pairs) {
    ++count;
    if (v.map(a) == v.map(b) && w.map(a) != w.map(b)) {
      ok = false;
      witness = "a=" + a.str() + " b=" + b.str();
      break;
    }
  }
  if (ok)
    rep.add_pass("D1-image-equality", count);
  else
    rep.add_fail("D1-image-equality", witness, count);

  count = 0;
  ok = true;
  for (const auto& [a, b] : pairs) {
    ++count;
    if (v.target.nu_leq(v.map(a), v.map(b)) && !w.target.nu_leq(w.map(a), w.map(b))) {
      ok = false;
      witness = "a=" + a.str() + " b=" + b.str();
      break;
    }
  }
  if (ok)
    rep.add_pass("D2-nu-order", count);
  else
    rep.add_fail("D2-nu-order", witness, count);

  count = 0;
  ok = true;
  for (const auto& [a, b] : pairs) {
    ++count;
    if (v.map(a).sort.is_zero() && !w.map(a).sort.is_zero()) {
      ok = false;
      witness = "a=" + a.str();
      break;
    }
  }
  if (ok)
    rep.add_pass("D3-zero-layer", count);
  else
    rep.add_fail("D3-zero-layer", witness, count);

  count = 0;
  ok = true;
  for (const auto& [a, b] : pairs) {
    ++count;
    if (!w.map(a).sort.is_zero() &&
        !sort_leq_shared(v.map(a).sort, w.map(a).sort)) {
      ok = false;
      witness = "a=" + a.str();
      break;
    }
  }
  if (ok)
    rep.add_pass("D4-sort-bound", count);
  else
    rep.add_fail("D4-sort-bound", witness, count);

  return rep;
}

Transmission induced_transmission(const Supervaluation& v, const Supervaluation& w,
                                  const CheckOptions& opts) {
  CheckReport dom = check_domination(v, w, opts);
  if (!dom.all_pass()) {
    std::string why;
    for (const auto& e : dom.entries())
      if (!e.pass) why += e.law + " ";
    raise("NotDominated", "domination fails: " + why);
  }

  std::mt19937_64 rng(opts.seed + 1);
  std::vector<PuiseuxSeries> sample;
  for (std::size_t i = 0; i < 20; ++i) sample.push_back(v.sample(rng));
  sample.push_back(PuiseuxSeries::constant(Rational(1)));

  // Table alpha(Phi_v(a)) = Phi_w(a) over the sample and its pairwise
  // products; well-definedness is re-checked on every collision.
  std::vector<PuiseuxSeries> closure = sample;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i; j < sample.size(); ++j)
      closure.push_back(sample[i] * sample[j]);

  auto table = std::make_shared<std::map<std::string, LayeredElement>>();
  std::vector<LayeredElement> domain;
  for (const PuiseuxSeries& a : closure) {
    if (a.is_zero()) continue;
    LayeredElement key = v.map(a);
    LayeredElement value = w.map(a);
    auto [it, inserted] = table->emplace(key.str(), value);
    if (inserted)
      domain.push_back(key);
    else if (it->second != value)
      raise("NotDominated", "alpha ill-defined at " + key.str());
  }

  Transmission t;
  t.name = "induced(" + v.name + " -> " + w.name + ")";
  t.src = v.target;
  t.dst = w.target;
  t.domain_pool = domain;
  t.in_domain = [table](const LayeredElement& x) { return table->count(x.str()) > 0; };
  t.alpha = [table](const LayeredElement& x) -> LayeredElement {
    auto it = table->find(x.str());
    if (it == table->end())
      raise("DomainMismatch", "alpha undefined at " + x.str());
    return it->second;
  };
  t.via_domain = w.map;
  return t;
}

namespace {

std::vector<LayeredElement> transmission_pool(const Transmission& t,
                                              const CheckOptions& opts) {
  if (!t.domain_pool.empty()) return t.domain_pool;
  std::vector<LayeredElement> pool;
  for (const auto& x : element_pool(t.src, opts))
    if (t.in_domain(x)) pool.push_back(x);
  return pool;
}

bool nu_preserving_holds(const Transmission& t,
                         const std::vector<LayeredElement>& pool, std::string& witness) {
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (!t.src.nu_leq(x, y)) continue;
      if (!t.dst.nu_leq(t.alpha(x), t.alpha(y))) {
        witness = w2(x, y);
        return false;
      }
    }
  return true;
}

bool tm3_holds(const Transmission& t, const std::vector<LayeredElement>& pool,
               std::string& witness) {
  for (const auto& x : pool)
    for (const auto& y : pool) {
      LayeredElement s = t.src.add(x, y);
      if (!t.in_domain(s)) continue;
      if (!t.dst.nu_equiv(t.alpha(s), t.dst.add(t.alpha(x), t.alpha(y)))) {
        witness = w2(x, y);
        return false;
      }
    }
  return true;
}

}  // namespace

CheckReport check_transmission(const Transmission& t, TransmissionVariant variant,
                               const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = transmission_pool(t, opts);

  if (t.in_domain(t.src.one())) {
    if (t.alpha(t.src.one()) == t.dst.one())
      rep.add_pass("TM1-unit", 1);
    else
      rep.add_fail("TM1-unit", "alpha(1)=" + t.alpha(t.src.one()).str(), 1);
  } else {
    rep.add_pass("TM1-unit", 0, "unit outside the described domain");
  }

  {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      for (const auto& y : pool) {
        LayeredElement p = t.src.mul(x, y);
        if (!t.in_domain(p)) continue;
        ++count;
        if (t.alpha(p) != t.dst.mul(t.alpha(x), t.alpha(y))) {
          ok = false;
          witness = w2(x, y);
          break;
        }
      }
      if (!ok) break;
    }
    if (ok)
      rep.add_pass("TM2-multiplicative", count);
    else
      rep.add_fail("TM2-multiplicative", witness, count);
  }

  std::string tm3_witness;
  bool tm3 = tm3_holds(t, pool, tm3_witness);
  if (tm3)
    rep.add_pass("TM3-additive-nu-congruence", pool.size() * pool.size());
  else
    rep.add_fail("TM3-additive-nu-congruence", tm3_witness, 0);

  std::string nu_witness;
  bool nu_pres = nu_preserving_holds(t, pool, nu_witness);
  if (tm3 == nu_pres)
    rep.add_pass("tm3-iff-nu-preserving", pool.size() * pool.size(),
                 std::string("both ") + (tm3 ? "hold" : "fail"));
  else
    rep.add_fail("tm3-iff-nu-preserving",
                 std::string("tm3=") + (tm3 ? "pass" : "fail") + " nu-preserving=" +
                     (nu_pres ? "pass" : "fail"),
                 pool.size() * pool.size());

  if (variant.zo) {
    std::uint64_t count = 0;
    bool ok = true;
    std::string witness;
    for (const auto& x : pool) {
      if (x.sort != SortValue::fin(1)) continue;
      ++count;
      SortValue s = t.alpha(x).sort;
      if (!(s.is_zero() || s == SortValue::fin(1))) {
        ok = false;
        witness = "x=" + x.str();
        break;
      }
    }
    if (ok)
      rep.add_pass("ZO-range", count);
    else
      rep.add_fail("ZO-range", witness, count);
  }
  return rep;
}

CheckReport check_nu_preserving(const Transmission& t, const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = transmission_pool(t, opts);
  std::string witness;
  if (nu_preserving_holds(t, pool, witness))
    rep.add_pass("nu-preserving", pool.size() * pool.size());
  else
    rep.add_fail("nu-preserving", witness, pool.size() * pool.size());
  return rep;
}

CheckReport check_strictly_nu_preserving(const Transmission& t,
                                         const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = transmission_pool(t, opts);
  std::uint64_t count = 0;
  bool ok = true;
  std::string witness;
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      if (!t.src.nu_lt(x, y)) continue;
      ++count;
      LayeredElement ax = t.alpha(x);
      if (ax.sort.is_zero()) continue;
      if (!t.dst.nu_lt(ax, t.alpha(y))) {
        ok = false;
        witness = w2(x, y);
        break;
      }
    }
    if (!ok) break;
  }
  if (ok)
    rep.add_pass("strictly-nu-preserving", count);
  else
    rep.add_fail("strictly-nu-preserving", witness, count);
  return rep;
}

CheckReport check_homomorphic(const Transmission& t, const CheckOptions& opts) {
  CheckReport rep;
  const auto pool = transmission_pool(t, opts);
  std::uint64_t count = 0;
  bool ok = true;
  std::string witness;
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      LayeredElement s = t.src.add(x, y);
      if (!t.in_domain(s)) continue;
      ++count;
      if (t.alpha(s) != t.dst.add(t.alpha(x), t.alpha(y))) {
        ok = false;
        witness = w2(x, y);
        break;
      }
    }
    if (!ok) break;
  }
  if (ok)
    rep.add_pass("homomorphic", count);
  else
    rep.add_fail("homomorphic", witness, count);
  return rep;
}

Supervaluation compose_with_supervaluation(const Transmission& t,
                                           const Supervaluation& v,
                                           const CheckOptions& opts) {
  Supervaluation out;
  out.name = t.name + " o " + v.name;
  out.target = t.dst;
  out.sample = v.sample;
  out.defined_at_zero = v.defined_at_zero;
  if (t.via_domain) {
    out.map = t.via_domain;  // alpha(Phi_v(a)) = Phi_w(a) by construction
    return out;
  }
  std::mt19937_64 rng(opts.seed + 2);
  for (std::size_t i = 0; i < 16; ++i) {
    LayeredElement img = v.map(v.sample(rng));
    if (!t.in_domain(img))
      raise("DomainMismatch", "Phi_v image " + img.str() + " outside alpha's domain");
  }
  auto alpha = t.alpha;
  auto vmap = v.map;
  out.map = [alpha, vmap](const PuiseuxSeries& p) { return alpha(vmap(p)); };
  return out;
}

Transmission transmission_from_map(const LayeredMap& f) {
  Transmission t;
  t.name = f.name;
  t.src = f.src;
  t.dst = f.dst;
  t.alpha = f.phi;
  return t;
}

LayeredElement permanent(const LayeredSemiring& R, const LayeredMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) raise("ConfigError", "permanent of an empty matrix");
  for (const auto& row : a)
    if (row.size() != n) raise("ConfigError", "permanent needs a square matrix");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  bool first = true;
  LayeredElement acc = R.one();
  do {
    LayeredElement prod = R.one();
    for (std::size_t i = 0; i < n; ++i) prod = R.mul(prod, a[i][perm[i]]);
    acc = first ? prod : R.add(acc, prod);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

LayeredMatrix matrix_mul(const LayeredSemiring& R, const LayeredMatrix& a,
                         const LayeredMatrix& b) {
  const std::size_t n = a.size();
  LayeredMatrix c(n, std::vector<LayeredElement>(n, R.one()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LayeredElement acc = R.mul(a[i][0], b[0][j]);
      for (std::size_t k = 1; k < n; ++k)
        acc = R.add(acc, R.mul(a[i][k], b[k][j]));
      c[i][j] = acc;
    }
  return c;
}

CheckReport matrix_frobenius_check(const LayeredSemiring& R, std::size_t n, unsigned m,
                                   std::uint64_t matrices, const CheckOptions& opts) {
  CheckReport rep;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> num(-12, 12);
  std::uniform_int_distribution<std::uint32_t> sort_pick(1, 4);
  auto draw = [&]() -> LayeredElement {
    while (true) {
      LayeredElement e{SortValue::fin(sort_pick(rng)), Rational(num(rng))};
      if (R.contains(e)) return e;
    }
  };
  std::uint64_t count = 0;
  bool ok = true;
  std::string witness;
  for (std::uint64_t trial = 0; trial < matrices && ok; ++trial) {
    LayeredMatrix a(n, std::vector<LayeredElement>(n, R.one()));
    LayeredMatrix b = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = draw();
        b[i][j] = draw();
      }
    LayeredMatrix c = matrix_mul(R, a, b);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        ++count;
        LayeredElement lhs = R.pow(c[i][j], m);
        LayeredElement rhs = R.mul(R.pow(a[i][0], m), R.pow(b[0][j], m));
        for (std::size_t k = 1; k < n; ++k)
          rhs = R.add(rhs, R.mul(R.pow(a[i][k], m), R.pow(b[k][j], m)));
        if (!R.surpasses_L(lhs, rhs)) {
          ok = false;
          witness = "trial=" + std::to_string(trial) + " i=" + std::to_string(i) +
                    " j=" + std::to_string(j);
        }
      }
  }
  if (ok)
    rep.add_pass("matrix-frobenius-m" + std::to_string(m), count);
  else
    rep.add_fail("matrix-frobenius-m" + std::to_string(m), witness, count);
  return rep;
}

}  // namespace laysem
