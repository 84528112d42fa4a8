#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "laysem/layered.hpp"
#include "laysem/puiseux.hpp"

namespace laysem {

// A black-box map between layered semirings together with its sort map.
// Checkers never introspect the function; every axiom set below is verified
// pointwise over pools.
struct LayeredMap {
  std::string name;
  LayeredSemiring src;
  LayeredSemiring dst;
  std::function<LayeredElement(const LayeredElement&)> phi;
  std::function<SortValue(SortValue)> rho = [](SortValue s) { return s; };
};

CheckReport check_semiring_hom(const LayeredMap& f, const CheckOptions& opts = {});
// Semiring homomorphism plus order preservation of rho and the sort bound
// s'(phi(a)) >= rho(s(a)) (sort 0 escaping allowed when the target has a
// zero layer), plus agreement on the layer units generated by 1.
CheckReport check_layered_hom(const LayeredMap& f, const CheckOptions& opts = {});
// Multiplicative monoid map, additive whenever both summands have positive
// sort.
CheckReport check_zero_excepted(const LayeredMap& f, const CheckOptions& opts = {});
CheckReport check_surpassing_map(const LayeredMap& f, const CheckOptions& opts = {});
CheckReport check_surpassed_map(const LayeredMap& f, const CheckOptions& opts = {});
// Zero-excepted plus M1 (sort bound or zero), M2 (transition compatibility
// up to nu), M3 (nu-equivalence preserved), and reconstruction from the
// action on the tangible submonoid.
CheckReport check_layered_morphism(const LayeredMap& f, const CheckOptions& opts = {});

// --- stock map builders -------------------------------------------------

// Identity on a semiring.
LayeredMap identity_map(const LayeredSemiring& R);
// Values fixed, ideal values dropped to sort 0 (into a relayered target).
LayeredMap relayer_projection(const LayeredSemiring& src, const LayeredSemiring& dst);
// <a>^l -> <a>^rho(l) for a sorting-semiring homomorphism rho.
LayeredMap rho_induced_map(const LayeredSemiring& src, const LayeredSemiring& dst,
                           std::function<SortValue(SortValue)> rho);
// Value truncation onto nu_truncate(L, base, q).
LayeredMap nu_trunc_projection(const LayeredSemiring& src, const LayeredSemiring& dst,
                               const MonoidValue& q);
// Sort truncation onto l_truncate(src, m).
LayeredMap sort_trunc_projection(const LayeredSemiring& src, const LayeredSemiring& dst,
                                 std::uint32_t m);
// a -> a^m with sorts following along.
LayeredMap frobenius_map(const LayeredSemiring& R, unsigned m);

// --- supervaluations -----------------------------------------------------

// A map from a ring of finite Puiseux series (exact rationals embed as
// constant series) into a layered semiring.  `sample` draws nonzero domain
// elements; `map` need not be defined at the zero series unless
// defined_at_zero is set.
struct Supervaluation {
  std::string name;
  LayeredSemiring target;
  std::function<LayeredElement(const PuiseuxSeries&)> map;
  std::function<PuiseuxSeries(std::mt19937_64&)> sample;
  bool defined_at_zero = false;
};

struct SupervalVariant {
  bool dagger = true;  // domain excludes zero; no zero-image axiom
  bool zo = false;     // image confined to the tangible submonoid
};

CheckReport check_supervaluation(const Supervaluation& phi, SupervalVariant variant,
                                 const CheckOptions& opts = {});

// D1-D4 on sampled domain pairs (the sampler is biased to hit equal-value
// pairs so the implication premises fire).
CheckReport check_domination(const Supervaluation& v, const Supervaluation& w,
                             const CheckOptions& opts = {});

// --- transmissions -------------------------------------------------------

struct Transmission {
  std::string name;
  LayeredSemiring src;
  LayeredSemiring dst;
  std::function<LayeredElement(const LayeredElement&)> alpha;
  std::function<bool(const LayeredElement&)> in_domain =
      [](const LayeredElement&) { return true; };
  // Explicit domain sample (used instead of src pools when nonempty; always
  // set for induced transmissions, whose alpha is a sample-backed table).
  std::vector<LayeredElement> domain_pool;
  // For induced transmissions: the dominated supervaluation, giving the
  // composite alpha(Phi_v(w)) in closed form.
  std::function<LayeredElement(const PuiseuxSeries&)> via_domain;
};

struct TransmissionVariant {
  bool zo = false;  // alpha(M_1) inside the tangible submonoid of the target
};

// TM1-TM3, with the crosscheck that the TM3 verdict coincides with the
// nu-preservation verdict.
CheckReport check_transmission(const Transmission& t, TransmissionVariant variant,
                               const CheckOptions& opts = {});
CheckReport check_nu_preserving(const Transmission& t, const CheckOptions& opts = {});
CheckReport check_strictly_nu_preserving(const Transmission& t,
                                         const CheckOptions& opts = {});
// alpha(a+b) = alpha(a) + alpha(b) whenever a, b, a+b lie in the domain.
CheckReport check_homomorphic(const Transmission& t, const CheckOptions& opts = {});

// Builds alpha with alpha(Phi_v(a)) = Phi_w(a) from a dominating pair;
// raises NotDominated when the domination axioms fail on the sample.
Transmission induced_transmission(const Supervaluation& v, const Supervaluation& w,
                                  const CheckOptions& opts = {});

// alpha composed after Phi_v; raises DomainMismatch when sampled images of
// Phi_v escape alpha's domain.
Supervaluation compose_with_supervaluation(const Transmission& t,
                                           const Supervaluation& v,
                                           const CheckOptions& opts = {});

// Transmission wrapper around a plain layered map (total domain).
Transmission transmission_from_map(const LayeredMap& f);

// --- matrices ------------------------------------------------------------

using LayeredMatrix = std::vector<std::vector<LayeredElement>>;

// Sum over permutations of entry products (the tropical determinant).
LayeredElement permanent(const LayeredSemiring& R, const LayeredMatrix& a);

LayeredMatrix matrix_mul(const LayeredSemiring& R, const LayeredMatrix& a,
                         const LayeredMatrix& b);

// Entrywise (sum_k a_ik b_kj)^m surpasses sum_k a_ik^m b_kj^m on seeded
// random n-by-n matrices.
CheckReport matrix_frobenius_check(const LayeredSemiring& R, std::size_t n, unsigned m,
                                   std::uint64_t matrices, const CheckOptions& opts = {});

}  // namespace laysem
