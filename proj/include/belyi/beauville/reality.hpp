#ifndef BELYI_BEAUVILLE_REALITY_HPP
#define BELYI_BEAUVILLE_REALITY_HPP

// Whether the surface of an unmixed structure is isomorphic to its complex
// conjugate, decided through automorphisms inverting both generators of each
// pair. Only groups whose automorphisms are known are handled:
//   S_n (n != 2, 6): inner automorphisms only,
//   A_n (n >= 4, n != 6): conjugation inside S_n,
//   abelian groups: x -> -x inverts everything.

#include <optional>
#include <set>
#include <string>
#include <type_traits>

#include "belyi/beauville/core.hpp"
#include "belyi/groups/abelian.hpp"
#include "belyi/groups/symmetric.hpp"
#include "belyi/perm.hpp"

namespace belyi {

enum class AutSupply { inner_only, ambient_symmetric, abelian_negation, none };

inline std::string to_string(AutSupply s) {
  switch (s) {
    case AutSupply::inner_only: return "inner-only";
    case AutSupply::ambient_symmetric: return "ambient-symmetric";
    case AutSupply::abelian_negation: return "abelian-negation";
    case AutSupply::none: return "none";
  }
  return "none";
}

inline AutSupply default_aut_supply(const SymmetricGroup& g) {
  return g.degree() == 2 || g.degree() == 6 ? AutSupply::none : AutSupply::inner_only;
}
inline AutSupply default_aut_supply(const AlternatingGroup& g) {
  return g.degree() < 4 || g.degree() == 6 ? AutSupply::none : AutSupply::ambient_symmetric;
}
inline AutSupply default_aut_supply(const CyclicSquare&) { return AutSupply::abelian_negation; }
template <class G>
AutSupply default_aut_supply(const G&) {
  return AutSupply::none;
}

enum class RealityVerdict { real_isomorphic, not_isomorphic_to_conjugate, hypotheses_not_met };

inline std::string to_string(RealityVerdict v) {
  switch (v) {
    case RealityVerdict::real_isomorphic: return "real-isomorphic";
    case RealityVerdict::not_isomorphic_to_conjugate: return "not-isomorphic-to-conjugate";
    case RealityVerdict::hypotheses_not_met: return "hypotheses-not-met";
  }
  return "hypotheses-not-met";
}

template <class E>
struct RealityReport {
  RealityVerdict verdict = RealityVerdict::hypotheses_not_met;
  std::string reason;
  TypeTriple type1, type2;
  bool increasing1 = false, increasing2 = false;  // ord(a) < ord(ac) < ord(c)
  bool order_sets_differ = false;
  std::optional<E> inverter1, inverter2;  // conjugators inverting a_i and c_i
};

/// A permutation g with g a g^-1 = a^-1 and g c g^-1 = c^-1.
inline std::optional<Permutation> inverting_conjugator(const Permutation& a, const Permutation& c) {
  return simultaneous_conjugator({{a, a.inverse()}, {c, c.inverse()}});
}

template <FiniteGroup G>
RealityReport<typename G::element_type> reality_verdict(
    const G& grp, const UnmixedStructure<typename G::element_type>& v, AutSupply supply) {
  using E = typename G::element_type;
  RealityReport<E> r;
  r.type1 = type_of(grp, v.a1, v.c1);
  r.type2 = type_of(grp, v.a2, v.c2);
  auto increasing = [](const TypeTriple& t) { return t.r < t.t && t.t < t.s; };
  r.increasing1 = increasing(r.type1);
  r.increasing2 = increasing(r.type2);
  const std::set<std::uint64_t> set1{r.type1.r, r.type1.s, r.type1.t};
  const std::set<std::uint64_t> set2{r.type2.r, r.type2.s, r.type2.t};
  r.order_sets_differ = set1 != set2;

  if (supply == AutSupply::abelian_negation) {
    r.verdict = RealityVerdict::real_isomorphic;
    r.reason = "x -> -x inverts every element";
    return r;
  }
  if (supply == AutSupply::none) {
    r.reason = "automorphisms of " + grp.name() + " not supplied";
    return r;
  }
  if constexpr (std::is_same_v<E, Permutation>) {
    r.inverter1 = inverting_conjugator(v.a1, v.c1);
    r.inverter2 = inverting_conjugator(v.a2, v.c2);
    if (!r.order_sets_differ) {
      r.reason = "the two order sets coincide";
      return r;
    }
    if (r.increasing1 && r.increasing2) {
      // For A_n the conjugators come from S_n and are unique, so they must
      // agree modulo A_n to share the outer part.
      bool real = r.inverter1 && r.inverter2;
      if (real && supply == AutSupply::ambient_symmetric)
        real = r.inverter1->is_even() == r.inverter2->is_even();
      r.verdict = real ? RealityVerdict::real_isomorphic : RealityVerdict::not_isomorphic_to_conjugate;
      r.reason = real ? "both pairs are inverted compatibly"
                      : (!r.inverter1 || !r.inverter2
                             ? std::string("some pair admits no inverting automorphism")
                             : std::string("inverting automorphisms lie in different outer classes"));
      return r;
    }
    if ((r.increasing1 && !r.inverter1) || (r.increasing2 && !r.inverter2)) {
      r.verdict = RealityVerdict::not_isomorphic_to_conjugate;
      r.reason = std::string("pair ") + (r.increasing1 && !r.inverter1 ? "1" : "2") +
                 " has increasing orders and no inverting automorphism";
      return r;
    }
    r.reason = "order hypotheses not met";
    return r;
  } else {
    r.reason = "automorphism search only implemented for permutation groups";
    return r;
  }
}

}  // namespace belyi

#endif  // BELYI_BEAUVILLE_REALITY_HPP
