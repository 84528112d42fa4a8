#include "laysem/monoid.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "laysem/error.hpp"

namespace laysem {

const std::vector<MonoidValue>& ValuedMonoid::carrier() const {
  if (!is_finite) raise("InfiniteCarrier", "no carrier list for monoid " + name);
  return carrier_list;
}

MonoidIdeal MonoidIdeal::empty_ideal() {
  MonoidIdeal a;
  a.contains = [](const MonoidValue&) { return false; };
  return a;
}

MonoidIdeal MonoidIdeal::from_elements(std::vector<MonoidValue> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  MonoidIdeal a;
  a.elements = elems;
  a.contains_known_nonempty = !elems.empty();
  a.contains = [elems](const MonoidValue& x) {
    return std::binary_search(elems.begin(), elems.end(), x);
  };
  return a;
}

ValuedMonoid make_qmax() {
  ValuedMonoid m;
  m.name = "qmax";
  m.mul = [](const MonoidValue& a, const MonoidValue& b) { return a + b; };
  m.one = Rational(0);
  m.v = [](const MonoidValue& a) { return a; };
  m.g_leq = [](const Rational& a, const Rational& b) { return a <= b; };
  m.is_finite = false;
  m.cancellative = true;
  return m;
}

ValuedMonoid make_truncated_nat(std::int64_t q) {
  if (q < 1) raise("ConfigError", "trunc-nat needs q >= 1");
  ValuedMonoid m;
  m.name = "trunc-nat:" + std::to_string(q);
  m.mul = [q](const MonoidValue& a, const MonoidValue& b) {
    Rational s = a + b;
    return s < Rational(q) ? s : Rational(q);
  };
  m.one = Rational(0);
  m.v = [](const MonoidValue& a) { return a; };
  m.g_leq = [](const Rational& a, const Rational& b) { return a <= b; };
  m.is_finite = true;
  for (std::int64_t k = 0; k <= q; ++k) m.carrier_list.push_back(Rational(k));
  m.absorbing = Rational(q);
  return m;
}

ValuedMonoid make_trivial_monoid() {
  ValuedMonoid m;
  m.name = "trivial";
  m.mul = [](const MonoidValue&, const MonoidValue&) { return Rational(0); };
  m.one = Rational(0);
  m.v = [](const MonoidValue& a) { return a; };
  m.g_leq = [](const Rational& a, const Rational& b) { return a <= b; };
  m.is_finite = true;
  m.carrier_list = {Rational(0)};
  m.cancellative = true;
  m.absorbing = Rational(0);
  return m;
}

ValuedMonoid truncate_monoid(const ValuedMonoid& m, const MonoidValue& q) {
  if (!m.g_lt(m.v(m.one), m.v(q)))
    raise("InvalidThreshold", "truncation threshold must exceed the identity");
  ValuedMonoid t;
  t.name = m.name + "|nu-trunc:" + q.str();
  auto base_mul = m.mul;
  auto v = m.v;
  auto leq = m.g_leq;
  MonoidValue cap = q;
  auto saturate = [v, leq, cap](const MonoidValue& x) {
    return leq(v(cap), v(x)) ? cap : x;
  };
  t.mul = [base_mul, saturate](const MonoidValue& a, const MonoidValue& b) {
    return saturate(base_mul(a, b));
  };
  t.one = m.one;
  t.v = v;
  t.g_leq = leq;
  t.absorbing = cap;
  if (m.is_finite) {
    t.is_finite = true;
    for (const MonoidValue& x : m.carrier_list)
      if (m.g_lt(m.v(x), m.v(cap))) t.carrier_list.push_back(x);
    t.carrier_list.push_back(cap);
    std::sort(t.carrier_list.begin(), t.carrier_list.end());
    t.carrier_list.erase(std::unique(t.carrier_list.begin(), t.carrier_list.end()),
                         t.carrier_list.end());
  }
  return t;
}

ValuedMonoid restrict_to_carrier(const ValuedMonoid& m,
                                 std::vector<MonoidValue> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  for (const MonoidValue& a : carrier)
    for (const MonoidValue& b : carrier) {
      MonoidValue p = m.mul(a, b);
      if (!std::binary_search(carrier.begin(), carrier.end(), p))
        raise("NotClosed", "carrier not closed: " + a.str() + "*" + b.str() + "=" +
                               p.str() + " escapes");
    }
  if (!std::binary_search(carrier.begin(), carrier.end(), m.one))
    raise("NotClosed", "carrier omits the identity");
  ValuedMonoid r = m;
  r.name = m.name + "|restricted";
  r.is_finite = true;
  r.carrier_list = std::move(carrier);
  r.cancellative = false;  // decided by enumeration from here on
  return r;
}

ValuedMonoid parse_monoid_spec(const std::string& spec) {
  if (spec == "qmax") return make_qmax();
  if (spec.rfind("trunc-nat:", 0) == 0) {
    const std::string arg = spec.substr(10);
    try {
      std::size_t used = 0;
      long long q = std::stoll(arg, &used);
      if (used != arg.size() || q < 1) raise("ConfigError", "bad trunc-nat bound: " + arg);
      return make_truncated_nat(q);
    } catch (const std::invalid_argument&) {
      raise("ConfigError", "bad trunc-nat bound: " + arg);
    } catch (const std::out_of_range&) {
      raise("ConfigError", "trunc-nat bound out of range: " + arg);
    }
  }
  raise("ConfigError", "unknown monoid '" + spec + "' (want qmax | trunc-nat:<q>)");
}

MonoidIdeal noncancellative_ideal(const ValuedMonoid& m) {
  if (!m.is_finite) {
    if (m.cancellative) return MonoidIdeal::empty_ideal();
    raise("InfiniteCarrier",
          "cannot enumerate noncancellative products of infinite monoid " + m.name);
  }
  const auto& xs = m.carrier_list;
  std::set<Rational> bad_values;
  for (const MonoidValue& a : xs)
    for (const MonoidValue& b : xs)
      for (const MonoidValue& c : xs) {
        if (m.g_eq(m.v(b), m.v(c))) continue;
        if (m.g_eq(m.v(m.mul(a, b)), m.v(m.mul(a, c))))
          bad_values.insert(m.v(m.mul(a, b)));
      }
  std::vector<MonoidValue> members;
  for (const MonoidValue& z : xs)
    if (bad_values.count(m.v(z))) members.push_back(z);
  return MonoidIdeal::from_elements(std::move(members));
}

CheckReport check_triple_morphism(const TripleMorphism& f, const ValuedMonoid& src,
                                  const ValuedMonoid& dst, const CheckOptions& opts) {
  CheckReport rep;
  std::vector<MonoidValue> pool;
  if (src.is_finite) {
    pool = src.carrier_list;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::int64_t> num(-20, 20);
    std::uniform_int_distribution<std::int64_t> den(1, 6);
    for (std::size_t i = 0; i < 32; ++i) pool.push_back(Rational(num(rng), den(rng)));
    pool.push_back(src.one);
  }

  if (f.phi_m(src.one) == dst.one) {
    rep.add_pass("phiM-unit", 1);
  } else {
    rep.add_fail("phiM-unit", "phiM(" + src.one.str() + ")=" + f.phi_m(src.one).str(),
                 1);
  }

  std::uint64_t count = 0;
  bool ok = true;
  for (const MonoidValue& a : pool) {
    for (const MonoidValue& b : pool) {
      ++count;
      if (f.phi_m(src.mul(a, b)) != dst.mul(f.phi_m(a), f.phi_m(b))) {
        rep.add_fail("phiM-multiplicative", "a=" + a.str() + " b=" + b.str(), count);
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  if (ok) rep.add_pass("phiM-multiplicative", count);

  count = 0;
  ok = true;
  for (const MonoidValue& a : pool) {
    for (const MonoidValue& b : pool) {
      ++count;
      Rational va = src.v(a), vb = src.v(b);
      if (src.g_leq(va, vb) && !dst.g_leq(f.phi_g(va), f.phi_g(vb))) {
        rep.add_fail("phiG-order-preserving", "v(a)=" + va.str() + " v(b)=" + vb.str(),
                     count);
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  if (ok) rep.add_pass("phiG-order-preserving", count);

  // phi_g is multiplicative on the value image: phi_g(v(a)v(b)) agrees with
  // phi_g(v(a)) phi_g(v(b)), both computed through the monoid operations.
  count = 0;
  ok = true;
  for (const MonoidValue& a : pool) {
    for (const MonoidValue& b : pool) {
      ++count;
      Rational lhs = f.phi_g(src.v(src.mul(a, b)));
      Rational rhs = dst.v(dst.mul(f.phi_m(a), f.phi_m(b)));
      if (!dst.g_eq(lhs, rhs)) {
        rep.add_fail("phiG-multiplicative", "a=" + a.str() + " b=" + b.str(), count);
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  if (ok) rep.add_pass("phiG-multiplicative", count);

  count = 0;
  ok = true;
  for (const MonoidValue& a : pool) {
    ++count;
    if (!dst.g_eq(dst.v(f.phi_m(a)), f.phi_g(src.v(a)))) {
      rep.add_fail("valuation-compatibility", "a=" + a.str(), count);
      ok = false;
      break;
    }
  }
  if (ok) rep.add_pass("valuation-compatibility", count);

  return rep;
}

AbsorbingReport absorbing_analysis(const ValuedMonoid& m) {
  if (!m.is_finite) raise("InfiniteCarrier", "absorbing analysis needs a finite monoid");
  AbsorbingReport out;
  for (const MonoidValue& a : m.carrier_list) {
    bool partial = false;
    bool total = true;
    for (const MonoidValue& b : m.carrier_list) {
      if (m.mul(a, b) == a)
        partial = true;
      else
        total = false;
    }
    if (partial) out.partially_absorbing.push_back(a);
    if (total) out.absorbing.push_back(a);
  }
  if (out.partially_absorbing.size() == 1)
    out.unique_partial_is_absorbing =
        out.absorbing == out.partially_absorbing;
  return out;
}

bool ideal_is_prime(const ValuedMonoid& m, const MonoidIdeal& ideal) {
  for (const MonoidValue& a : m.carrier())
    for (const MonoidValue& b : m.carrier())
      if (ideal.contains(m.mul(a, b)) && !ideal.contains(a) && !ideal.contains(b))
        return false;
  return true;
}

bool ideal_is_closed(const ValuedMonoid& m, const MonoidIdeal& ideal) {
  for (const MonoidValue& a : ideal.elements)
    for (const MonoidValue& b : m.carrier())
      if (!ideal.contains(m.mul(a, b))) return false;
  return true;
}

}  // namespace laysem
