#pragma once

#include <functional>
#include <vector>

#include "laysem/layered.hpp"

namespace laysem {

// Moves every element whose value lies in `values` into the zero layer.
// `values` must be a multiplication-closed set of base-monoid values; with
// use_nu_closure it is first fattened to all nu-equal values.  The result is
// an ordinary layered semiring over the enlarged ideal.
LayeredSemiring relayer(const LayeredSemiring& R, const MonoidIdeal& values,
                        bool use_nu_closure);

// Convenience overload taking carrier elements; validates that the element
// set itself is closed under multiplication by the carrier (finite R).
LayeredSemiring relayer(const LayeredSemiring& R,
                        const std::vector<LayeredElement>& ideal_elements,
                        bool use_nu_closure);

// Collapses all values >= q to a single sort-0 element <q>^0, which is
// additively absorbing (the special infinite element).
LayeredSemiring nu_truncate(const SortingSemiring& L, const ValuedMonoid& base,
                            const MonoidValue& q);

// Caps all sorts at m; the top layer absorbs higher sort arithmetic.
LayeredSemiring l_truncate(const LayeredSemiring& R, std::uint32_t m);

// Adjoins a single zero element in the zero layer.
LayeredSemiring adjoin_zero(const LayeredSemiring& R);

// Adjoins a whole zero layer e_0 R_1 (an extra copy of the tangible layer);
// requires a uniform instance with no existing zero layer.
LayeredSemiring adjoin_zero_layer(const LayeredSemiring& R);

// U(R) = R together with a freshly adjoined absolute ghost layer, one ghost
// per nu-class.  Ghosts are encoded at the infinite sort, so the base must
// not use it (truncate first).
class GhostedSemiring {
 public:
  LayeredSemiring base;

  bool is_ghost(const LayeredElement& x) const { return x.sort.inf; }
  LayeredElement ghost_of(const Rational& value) const {
    return {SortValue::infinity(), value};
  }

  // the absolute ghost map and its unit e = nu(1)
  LayeredElement nu(const LayeredElement& x) const;
  LayeredElement e_unit() const { return nu(base.one()); }

  LayeredElement mul(const LayeredElement& x, const LayeredElement& y) const;
  LayeredElement add(const LayeredElement& x, const LayeredElement& y) const;

  // base carrier plus one ghost per value class (finite base).
  std::vector<LayeredElement> carrier() const;
  // Window enumeration for infinite bases: all sorts over the given values,
  // plus their ghosts.
  std::vector<LayeredElement> window(const std::vector<Rational>& values) const;
};

GhostedSemiring build_U(const LayeredSemiring& R);

// The two-layer degeneration: tangibles at sort 1, every nu-class ghosted at
// the infinite sort, ties and ideal products going ghost.  Zero layers of
// the input are absorbed into the ghost layer.
LayeredSemiring degenerate_standard(const LayeredSemiring& R);

// The coalescing map U(R) -> degenerate_standard(R).
std::function<LayeredElement(const LayeredElement&)> degeneration_map(
    const GhostedSemiring& U, const LayeredSemiring& standard);

// Semiring laws of U over an element pool, plus: nu is an idempotent
// additive and multiplicative retraction onto the ghost layer, nu(x) = e*x,
// the ghost layer is bipotent and forms an ideal.
CheckReport check_ghosted(const GhostedSemiring& U,
                          const std::vector<LayeredElement>& pool);

// The case table of the degenerated addition against the base: a (+) b
// equals a or b by nu-dominance and goes ghost on ties; a (+) b is nu-equal
// to a + b taken upstairs.
CheckReport check_degeneration(const GhostedSemiring& U, const LayeredSemiring& std_r,
                               const std::vector<LayeredElement>& upool);

}  // namespace laysem
