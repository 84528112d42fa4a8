#include "laysem/tropical.hpp"

#include <sstream>

#include "laysem/error.hpp"

namespace laysem {

LayeredElement psi_ell(const LayeredSemiring& R, SortValue ell,
                       const PuiseuxSeries& p) {
  if (p.is_zero()) raise("ZeroSeries", "psi undefined on the zero series");
  Rational value = p.val();
  if (R.ideal.contains(value)) return {SortValue::fin(0), value};
  return {ell, value};
}

Supervaluation make_psi(const LayeredSemiring& R, SortValue ell, std::string name) {
  Supervaluation out;
  out.name = std::move(name);
  out.target = R;
  LayeredSemiring target = R;
  SortValue layer = ell;
  out.map = [target, layer](const PuiseuxSeries& p) {
    return psi_ell(target, layer, p);
  };
  out.sample = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coeff(-20, 20);
    std::uniform_int_distribution<std::int64_t> expo_num(-12, 12);
    std::uniform_int_distribution<std::int64_t> expo_den(1, 6);
    std::uniform_int_distribution<int> extra_terms(0, 2);
    PuiseuxSeries p;
    do {
      p = PuiseuxSeries::zero();
      int terms = 1 + extra_terms(rng);
      for (int i = 0; i < terms; ++i) {
        std::int64_t c = coeff(rng);
        if (c == 0) c = 1;
        p = p + PuiseuxSeries::monomial(Rational(c),
                                        Rational(expo_num(rng), expo_den(rng)));
      }
    } while (p.is_zero());
    return p;
  };
  return out;
}

LayeredSemiring layering_functor_object(const SortingSemiring& L,
                                        const ValuedMonoid& m) {
  // noncancellative_ideal collects whole value classes, so the ideal is
  // already nu-closed.
  return build_layered(L, m);
}

namespace {

LayeredMap functor_morphism(const std::string& name, const SortingSemiring& L,
                            const TripleMorphism& f, const ValuedMonoid& src,
                            const ValuedMonoid& dst) {
  LayeredSemiring robj_src = build_layered(L, src);
  LayeredSemiring robj_dst = build_layered(L, dst);
  auto phi_m = f.phi_m;
  MonoidIdeal dst_ideal = robj_dst.ideal;
  return {name, robj_src, robj_dst,
          [phi_m, dst_ideal](const LayeredElement& x) -> LayeredElement {
            MonoidValue image = phi_m(x.value);
            if (dst_ideal.contains(image)) return {SortValue::fin(0), image};
            return {x.sort.is_zero() ? SortValue::fin(1) : x.sort, image};
          },
          [](SortValue s) { return s; }};
}

}  // namespace

LayeredMap layering_functor_morphism(const SortingSemiring& L, const TripleMorphism& f,
                                     const ValuedMonoid& src, const ValuedMonoid& dst) {
  return functor_morphism("F(" + f.name + ")", L, f, src, dst);
}

LayeredSemiring tropicalization_functor_object(const SortingSemiring& L,
                                               const ValuedMonoid& m) {
  return build_layered(L, m);
}

LayeredMap tropicalization_functor_morphism(const SortingSemiring& L,
                                            const TripleMorphism& f,
                                            const ValuedMonoid& src,
                                            const ValuedMonoid& dst) {
  return functor_morphism("Trop(" + f.name + ")", L, f, src, dst);
}

std::string LayeredPolynomial::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (!first) out << " + ";
    out << it->second.str() << "*lambda^" << it->first;
    first = false;
  }
  return out.str();
}

LayeredPolynomial tropicalize_poly(const LayeredSemiring& R, const PuiseuxPoly& f) {
  LayeredPolynomial out;
  out.target = R;
  for (const auto& [d, c] : f.coeffs) {
    if (c.is_zero()) continue;
    out.coeffs[d] = psi_ell(R, SortValue::fin(1), c);
  }
  return out;
}

LayeredElement eval_layered_poly(const LayeredPolynomial& f, const LayeredElement& x) {
  if (f.coeffs.empty()) raise("ConfigError", "evaluation of the zero polynomial");
  const LayeredSemiring& R = f.target;
  bool first = true;
  LayeredElement acc = R.one();
  for (const auto& [d, c] : f.coeffs) {
    LayeredElement term = R.mul(c, R.pow(x, d));
    acc = first ? term : R.add(acc, term);
    first = false;
  }
  return acc;
}

bool is_corner_root(const LayeredPolynomial& f, const LayeredElement& x) {
  SortValue s = eval_layered_poly(f, x).sort;
  if (s.inf) return true;
  const SortingSemiring& L = f.target.L;
  if (L.contains(SortValue::fin(2))) return L.leq(SortValue::fin(2), s);
  // carriers without a literal 2 (e.g. {0,1,inf}): ghost = above tangible
  return !s.is_zero() && L.lt(SortValue::fin(1), s);
}

CheckReport kapranov_check(const LayeredSemiring& R, const PuiseuxPoly& f,
                           const std::vector<PuiseuxSeries>& roots) {
  CheckReport rep;
  if (f.is_zero()) raise("ConfigError", "kapranov check on the zero polynomial");
  for (const PuiseuxSeries& r : roots) {
    PuiseuxSeries residual = f.eval(r);
    if (!residual.is_zero())
      raise("NotARoot", r.str() + " leaves residual " + residual.str());
  }
  LayeredPolynomial trop = tropicalize_poly(R, f);
  std::size_t index = 0;
  for (const PuiseuxSeries& r : roots) {
    LayeredElement image = psi_ell(R, SortValue::fin(1), r);
    std::string law = "corner-root-" + std::to_string(index++);
    if (is_corner_root(trop, image))
      rep.add_pass(law, 1, "root " + r.str() + " -> " + image.str());
    else
      rep.add_fail(law,
                   "root " + r.str() + " image " + image.str() + " evaluates to " +
                       eval_layered_poly(trop, image).str(),
                   1);
  }
  return rep;
}

CheckReport check_kapranov_property(const Supervaluation& phi,
                                    const CheckOptions& opts) {
  CheckReport rep;
  std::mt19937_64 rng(opts.seed);
  std::vector<PuiseuxSeries> pool;
  for (std::size_t i = 0; i < 40; ++i) pool.push_back(phi.sample(rng));
  std::uint64_t count = 0;
  bool ok = true;
  std::string witness;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      PuiseuxSeries s = a + b;
      if (s.is_zero() && !phi.defined_at_zero) continue;
      ++count;
      LayeredElement lhs = phi.target.add(phi.map(a), phi.map(b));
      if (!phi.target.surpasses_L(lhs, phi.map(s))) {
        ok = false;
        witness = "a=" + a.str() + " b=" + b.str();
        break;
      }
    }
    if (!ok) break;
  }
  if (ok)
    rep.add_pass("kapranov-surpassing", count);
  else
    rep.add_fail("kapranov-surpassing", witness, count);
  return rep;
}

}  // namespace laysem
