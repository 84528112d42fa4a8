#pragma once

#include <map>
#include <vector>

#include "laysem/maps.hpp"
#include "laysem/puiseux.hpp"

namespace laysem {

// <val(p)>^ell, dropping to sort 0 when the valuation lands in the target's
// ideal (relayered targets); rejects the zero series.
LayeredElement psi_ell(const LayeredSemiring& R, SortValue ell, const PuiseuxSeries& p);

// psi_ell packaged as a supervaluation over the Puiseux field with a seeded
// series sampler.
Supervaluation make_psi(const LayeredSemiring& R, SortValue ell, std::string name);

// The layering functor: objects M -> R(L, M) over the nu-closed ideal of
// noncancellative products; morphisms send <a>^l to <phi(a)>^l, dropping to
// sort 0 when phi(a) is noncancellative in the target.
LayeredSemiring layering_functor_object(const SortingSemiring& L,
                                        const ValuedMonoid& m);
LayeredMap layering_functor_morphism(const SortingSemiring& L, const TripleMorphism& f,
                                     const ValuedMonoid& src, const ValuedMonoid& dst);

// The tropicalization functor acts by the same elementwise rule on every
// sort; objects are built over the value monoid.
LayeredSemiring tropicalization_functor_object(const SortingSemiring& L,
                                               const ValuedMonoid& m);
LayeredMap tropicalization_functor_morphism(const SortingSemiring& L,
                                            const TripleMorphism& f,
                                            const ValuedMonoid& src,
                                            const ValuedMonoid& dst);

// Univariate polynomial over a layered semiring.
struct LayeredPolynomial {
  std::map<unsigned, LayeredElement> coeffs;
  LayeredSemiring target;

  std::string str() const;
};

// Coefficientwise psi_1; zero coefficients are dropped.
LayeredPolynomial tropicalize_poly(const LayeredSemiring& R, const PuiseuxPoly& f);

// Direct sum of monomial evaluations.
LayeredElement eval_layered_poly(const LayeredPolynomial& f, const LayeredElement& x);

// Corner root: the evaluation sort records the maximum being attained at
// least twice (sort >= 2, the top of a saturating carrier, or the infinite
// sort).
bool is_corner_root(const LayeredPolynomial& f, const LayeredElement& x);

// Validates each claimed root exactly (NotARoot otherwise), then checks that
// its valuation image is a corner root of the tropicalized polynomial.
CheckReport kapranov_check(const LayeredSemiring& R, const PuiseuxPoly& f,
                           const std::vector<PuiseuxSeries>& roots);

// The defining inequality of a Kapranov map, sampled: Phi(a) + Phi(b)
// surpasses Phi(a+b).
CheckReport check_kapranov_property(const Supervaluation& phi,
                                    const CheckOptions& opts = {});

}  // namespace laysem
