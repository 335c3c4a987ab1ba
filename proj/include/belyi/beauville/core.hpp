#ifndef BELYI_BEAUVILLE_CORE_HPP
#define BELYI_BEAUVILLE_CORE_HPP

// Sigma sets, types and genera, and the unmixed structure test.
//
// Sigma(a, c) is the union of the conjugacy classes of all powers of a, c and
// ac. Since class_key is a complete conjugacy invariant, membership reduces
// to a lookup among the keys of those finitely many powers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/groups/group.hpp"
#include "belyi/polyexact.hpp"

namespace belyi {

class inconsistent_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class E>
struct UnmixedStructure {
  E a1, c1, a2, c2;
};

struct TypeTriple {
  std::uint64_t r = 1, s = 1, t = 1;  // ord(a), ord(c), ord(ac)

  std::array<std::uint64_t, 3> sorted() const {
    std::array<std::uint64_t, 3> v{r, s, t};
    std::sort(v.begin(), v.end());
    return v;
  }
  std::string to_string() const {
    return "(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
  }
  friend bool operator==(const TypeTriple&, const TypeTriple&) = default;
};

inline Rational mu(const TypeTriple& t) {
  return Rational(1, t.r) + Rational(1, t.s) + Rational(1, t.t);
}

inline bool is_hyperbolic(const TypeTriple& t) { return mu(t) < 1; }

struct TypeAndMu {
  TypeTriple type;
  Rational mu;
  bool hyperbolic = false;
};

template <FiniteGroup G>
TypeTriple type_of(const G& grp, const typename G::element_type& a,
                   const typename G::element_type& c) {
  return {element_order(grp, a), element_order(grp, c), element_order(grp, grp.multiply(a, c))};
}

template <FiniteGroup G>
TypeAndMu type_and_mu(const G& grp, const typename G::element_type& a,
                      const typename G::element_type& c) {
  auto t = type_of(grp, a, c);
  auto m = mu(t);
  return {t, m, m < 1};
}

/// Riemann-Hurwitz for the triangle cover: g = 1 + |G|/2 (1 - 1/r - 1/s - 1/t).
inline std::int64_t genus_triangle(std::uint64_t order, const TypeTriple& t) {
  if (order == 0 || t.r == 0 || t.s == 0 || t.t == 0)
    throw inconsistent_input("genus_triangle: orders must be positive");
  for (auto o : {t.r, t.s, t.t})
    if (order % o != 0)
      throw inconsistent_input("genus_triangle: element order " + std::to_string(o) +
                               " does not divide " + std::to_string(order));
  Rational g = 1 + Rational(order, 2) * (1 - mu(t));
  if (denominator(g) != 1)
    throw inconsistent_input("genus_triangle: non-integral genus " + g.str());
  return static_cast<std::int64_t>(numerator(g));
}

/// All distinct powers x^0, x^1, ..., x^(ord-1).
template <FiniteGroup G>
std::vector<typename G::element_type> powers(const G& grp, const typename G::element_type& x) {
  std::vector<typename G::element_type> out{grp.identity()};
  auto y = x;
  while (!(y == out.front())) {
    out.push_back(y);
    y = grp.multiply(y, x);
  }
  return out;
}

/// Membership oracle for Sigma(a, c): class keys of all powers of a, c, ac,
/// each with one power realizing it. `key` defaults to the group's class_key;
/// a relative key (conjugacy within a subgroup) may be supplied instead.
template <FiniteGroup G>
class SigmaOracle {
public:
  using E = typename G::element_type;
  using KeyFn = std::function<ClassKey(const E&)>;

  SigmaOracle(const G& grp, const E& a, const E& c, KeyFn key = {})
      : key_(key ? std::move(key) : KeyFn([&grp](const E& x) { return grp.class_key(x); })) {
    identity_key_ = key_(grp.identity());
    for (const auto& gen : {a, c, grp.multiply(a, c)})
      for (const auto& p : powers(grp, gen)) witnesses_.emplace(key_(p), p);
  }

  bool contains(const E& x) const { return witnesses_.contains(key_(x)); }
  bool contains_key(const ClassKey& k) const { return witnesses_.contains(k); }
  const ClassKey& identity_key() const { return identity_key_; }
  ClassKey key(const E& x) const { return key_(x); }

  /// Keys other than the identity's, in sorted order.
  std::vector<ClassKey> nontrivial_keys() const {
    std::vector<ClassKey> out;
    for (const auto& [k, _] : witnesses_)
      if (k != identity_key_) out.push_back(k);
    return out;
  }

  /// A power of a, c or ac realizing the given key.
  const E& witness(const ClassKey& k) const { return witnesses_.at(k); }

  /// A nontrivial key shared with another oracle, if any.
  std::optional<ClassKey> common_key(const SigmaOracle& other) const {
    for (const auto& [k, _] : witnesses_)
      if (k != identity_key_ && other.contains_key(k)) return k;
    return std::nullopt;
  }

private:
  KeyFn key_;
  ClassKey identity_key_;
  std::map<ClassKey, E> witnesses_;
};

/// Sigma(a, c) as an explicit list in enumeration order. Throws when the group
/// exceeds the budget; use SigmaOracle there.
template <FiniteGroup G>
std::vector<typename G::element_type> sigma_set(const G& grp, const typename G::element_type& a,
                                                const typename G::element_type& c,
                                                std::uint64_t budget = ClosureBudget{}.hashed) {
  if (grp.order() > budget)
    throw std::length_error("sigma_set: " + grp.name() + " exceeds the enumeration budget");
  SigmaOracle<G> oracle(grp, a, c);
  std::vector<typename G::element_type> out;
  grp.for_each_element([&](const typename G::element_type& x) {
    if (oracle.contains(x)) out.push_back(x);
  });
  return out;
}

template <class E>
struct UnmixedVerdict {
  Tristate valid = Tristate::unknown;
  Tristate generates1 = Tristate::unknown;
  Tristate generates2 = Tristate::unknown;
  bool sigma_disjoint = false;
  std::optional<E> common;  // nontrivial element of both Sigma sets
  std::string witness;      // human-readable reason when not valid
};

template <FiniteGroup G>
UnmixedVerdict<typename G::element_type> is_unmixed(
    const G& grp, const UnmixedStructure<typename G::element_type>& v, ClosureBudget budget = {}) {
  UnmixedVerdict<typename G::element_type> r;
  r.generates1 = generates(grp, {v.a1, v.c1}, budget);
  r.generates2 = generates(grp, {v.a2, v.c2}, budget);
  SigmaOracle<G> s1(grp, v.a1, v.c1), s2(grp, v.a2, v.c2);
  if (auto k = s1.common_key(s2)) r.common = s1.witness(*k);
  r.sigma_disjoint = !r.common;
  if (r.generates1 == Tristate::no) {
    r.witness = "a1, c1 do not generate " + grp.name();
  } else if (r.generates2 == Tristate::no) {
    r.witness = "a2, c2 do not generate " + grp.name();
  } else if (!r.sigma_disjoint) {
    r.witness = "Sigma(a1,c1) and Sigma(a2,c2) share a nontrivial element";
  }
  if (!r.witness.empty())
    r.valid = Tristate::no;
  else if (r.generates1 == Tristate::yes && r.generates2 == Tristate::yes)
    r.valid = Tristate::yes;
  else
    r.witness = "generation undecided within budget";
  return r;
}

template <FiniteGroup G>
UnmixedStructure<typename G::element_type> conjugate_structure(
    const G& grp, const UnmixedStructure<typename G::element_type>& v,
    const typename G::element_type& g) {
  return {conjugate_by(grp, v.a1, g), conjugate_by(grp, v.c1, g), conjugate_by(grp, v.a2, g),
          conjugate_by(grp, v.c2, g)};
}

/// (Z/n)^2 carries an unmixed structure iff n > 1 and gcd(n, 6) = 1.
inline bool abelian_criterion(std::uint64_t n) { return n > 1 && std::gcd(n, std::uint64_t{6}) == 1; }

}  // namespace belyi

#endif  // BELYI_BEAUVILLE_CORE_HPP
