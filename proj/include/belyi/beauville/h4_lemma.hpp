#ifndef BELYI_BEAUVILLE_H4_LEMMA_HPP
#define BELYI_BEAUVILLE_H4_LEMMA_HPP

// Sufficient conditions on a1, c1, a2, c2 in H for (H x H x 2Z/4; a, c; g)
// to be a mixed quadruple on H4, with a = (a1, a2, 2), c = (c1, c2, 2) and
// g = (1, 1, 1):
//   1. ord(a1) and ord(c1) are even,
//   2. a1^2, a1 c1, c1^2 generate H,
//   3. a2, c2 generate H,
//   4. ord(a1) ord(c1) ord(a1 c1) is coprime to ord(a2) ord(c2) ord(a2 c2).

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "belyi/beauville/mixed.hpp"
#include "belyi/groups/h4.hpp"

namespace belyi {

struct H4Hypotheses {
  std::array<Tristate, 4> holds{Tristate::unknown, Tristate::unknown, Tristate::unknown,
                                Tristate::unknown};
  std::array<std::string, 4> witness;
  TypeTriple type1, type2;

  bool all() const {
    for (auto h : holds)
      if (h != Tristate::yes) return false;
    return true;
  }
  /// First failing hypothesis, 1-based, or 0.
  int first_failure() const {
    for (int i = 0; i < 4; ++i)
      if (holds[i] != Tristate::yes) return i + 1;
    return 0;
  }
};

template <class B>
struct H4LemmaResult {
  H4Hypotheses hypotheses;
  std::optional<MixedQuadruple<H4Element>> quadruple;
  std::optional<MixedVerdict<H4Element>> direct;  // is_mixed run on H4 itself
};

inline std::uint64_t type_product(const TypeTriple& t) { return t.r * t.s * t.t; }

/// Hypotheses 1-4 on indices into the tabulated H.
template <FiniteGroup B>
H4Hypotheses h4_hypotheses(const EnumeratedGroup<B>& h, std::uint32_t a1, std::uint32_t c1,
                           std::uint32_t a2, std::uint32_t c2) {
  H4Hypotheses r;
  r.type1 = type_of(h, a1, c1);
  r.type2 = type_of(h, a2, c2);
  const bool even = r.type1.r % 2 == 0 && r.type1.s % 2 == 0;
  r.holds[0] = even ? Tristate::yes : Tristate::no;
  if (!even)
    r.witness[0] = "orders even: ord(a1)=" + std::to_string(r.type1.r) +
                   ", ord(c1)=" + std::to_string(r.type1.s);
  r.holds[1] = generates(h, {h.multiply(a1, a1), h.multiply(a1, c1), h.multiply(c1, c1)});
  if (r.holds[1] != Tristate::yes) r.witness[1] = "a1^2, a1c1, c1^2 do not generate H";
  r.holds[2] = generates(h, {a2, c2});
  if (r.holds[2] != Tristate::yes) r.witness[2] = "a2, c2 do not generate H";
  const auto g = std::gcd(type_product(r.type1), type_product(r.type2));
  r.holds[3] = g == 1 ? Tristate::yes : Tristate::no;
  if (g != 1)
    r.witness[3] = "order products " + std::to_string(type_product(r.type1)) + " and " +
                   std::to_string(type_product(r.type2)) + " share the factor " + std::to_string(g);
  return r;
}

/// Checks the hypotheses and, when they hold, assembles the quadruple. With
/// `verify` the quadruple is also tested directly against the definition.
template <FiniteGroup B>
H4LemmaResult<B> h4_lemma_check(const H4Group<B>& g4, std::uint32_t a1, std::uint32_t c1,
                                std::uint32_t a2, std::uint32_t c2, bool verify = true,
                                ClosureBudget budget = {}) {
  H4LemmaResult<B> r;
  r.hypotheses = h4_hypotheses(g4.h(), a1, c1, a2, c2);
  if (!r.hypotheses.all()) return r;
  auto s = [](std::uint32_t x) { return static_cast<std::uint16_t>(x); };
  const auto id = s(g4.h().identity());
  r.quadruple = MixedQuadruple<H4Element>{
      h4_even_part(g4), {s(a1), s(a2), 2}, {s(c1), s(c2), 2}, {id, id, 1}};
  if (verify && g4.order() <= budget.dense) r.direct = is_mixed(g4, *r.quadruple, budget);
  return r;
}

struct H4Quadruple {
  std::uint32_t a1, c1, a2, c2;
};

namespace detail {

inline std::uint64_t prime_mask(std::uint64_t v) {
  // bit i set when the i-th prime divides v; enough for element orders of small groups
  static constexpr std::array<std::uint64_t, 16> primes{2,  3,  5,  7,  11, 13, 17, 19,
                                                        23, 29, 31, 37, 41, 43, 47, 53};
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (v % primes[i] == 0) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace detail

/// First quadruple in H satisfying hypotheses 1-4, searching a1 and a2 over
/// class representatives and c1, c2 over all of H.
template <FiniteGroup B>
std::optional<H4Quadruple> search_h4_quadruple(const EnumeratedGroup<B>& h) {
  struct Found {
    std::uint32_t a, c;
  };
  // one pair per prime set, for each role
  std::map<std::uint64_t, Found> role1, role2;
  const auto reps = class_representatives(h);
  for (auto a : reps) {
    const auto oa = element_order(h, a);
    for (std::uint32_t c = 0; c < h.order(); ++c) {
      const auto oc = element_order(h, c);
      const auto t = TypeTriple{oa, oc, element_order(h, h.multiply(a, c))};
      const auto mask = detail::prime_mask(type_product(t));
      if (t.r % 2 == 0 && t.s % 2 == 0 && !role1.contains(mask) &&
          generates(h, {h.multiply(a, a), h.multiply(a, c), h.multiply(c, c)}) == Tristate::yes) {
        role1.emplace(mask, Found{a, c});
        for (const auto& [m2, f] : role2)
          if ((mask & m2) == 0) return H4Quadruple{a, c, f.a, f.c};
      }
      if (!role2.contains(mask) && generates(h, {a, c}) == Tristate::yes) {
        role2.emplace(mask, Found{a, c});
        for (const auto& [m1, f] : role1)
          if ((mask & m1) == 0) return H4Quadruple{f.a, f.c, a, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace belyi

#endif  // BELYI_BEAUVILLE_H4_LEMMA_HPP
