#ifndef BELYI_BEAUVILLE_MIXED_HPP
#define BELYI_BEAUVILLE_MIXED_HPP

// Mixed quadruples (G0; a, c; g).
//
// Sigma sets here are taken with conjugation inside G0. With conjugation by
// all of G the fourth condition could never hold, because conjugating a and c
// by g leaves a G-conjugation-invariant set unchanged.
//
// Condition iii only depends on the coset G \ G0, and condition iv only on g
// modulo G0, so searches fix one g per subgroup.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "belyi/beauville/core.hpp"
#include "belyi/beauville/search.hpp"
#include "belyi/groups/group.hpp"
#include "belyi/groups/h4.hpp"

namespace belyi {

class index_two_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class E>
struct IndexTwoSubgroup {
  std::string descriptor;
  std::function<bool(const E&)> contains;
  // Complete conjugacy invariant within the subgroup, when one is known.
  std::function<ClassKey(const E&)> class_key;
};

template <class E>
struct MixedQuadruple {
  IndexTwoSubgroup<E> g0;
  E a, c, g;
};

/// Throws index_two_error unless the predicate cuts out a subgroup of index 2:
/// it must hold on exactly half of G and x -> [x not in G0] must be additive
/// along every generator.
template <FiniteGroup G>
void verify_index_two(const G& grp, const IndexTwoSubgroup<typename G::element_type>& sub,
                      ClosureBudget budget = {}) {
  using E = typename G::element_type;
  if (grp.order() % 2) throw index_two_error(grp.name() + " has odd order");
  if (grp.order() > budget.dense)
    throw index_two_error(grp.name() + " is too large to verify an index-2 subgroup");
  if (!sub.contains(grp.identity())) throw index_two_error(sub.descriptor + " misses the identity");
  const auto gens = grp.generators();
  std::vector<bool> gin;
  for (const auto& s : gens) gin.push_back(sub.contains(s));
  std::uint64_t count = 0;
  std::string bad;
  grp.for_each_element([&](const E& x) {
    const bool in = sub.contains(x);
    count += in;
    if (!bad.empty()) return;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (sub.contains(grp.multiply(x, gens[i])) != (in == gin[i])) {
        bad = sub.descriptor + " is not closed under multiplication";
        return;
      }
  });
  if (!bad.empty()) throw index_two_error(bad);
  if (2 * count != grp.order())
    throw index_two_error(sub.descriptor + " has " + std::to_string(count) + " elements, not " +
                          std::to_string(grp.order() / 2));
}

template <class E>
struct MixedVerdict {
  Tristate valid = Tristate::unknown;
  Tristate cond1 = Tristate::unknown;  // a, c generate G0
  bool cond2 = false;                  // g not in G0
  Tristate cond3 = Tristate::unknown;  // (g gamma)^2 not in Sigma(a, c) for all gamma in G0
  Tristate cond4 = Tristate::unknown;  // Sigma(a, c) and Sigma(gag^-1, gcg^-1) meet only in 1
  std::optional<E> gamma;              // witness against iii
  std::optional<E> common;             // witness against iv
  std::string witness;
};

namespace detail {

/// Sigma(a, c) with conjugation in G0 = <a, c>, listed explicitly: orbits of
/// the powers of a, c and ac under conjugation by a and c.
template <FiniteGroup G>
std::unordered_set<typename G::element_type> relative_sigma(const G& grp,
                                                            const typename G::element_type& a,
                                                            const typename G::element_type& c) {
  using E = typename G::element_type;
  std::unordered_set<E> out;
  std::vector<E> stack;
  const E conj[2] = {a, c};
  const E conj_inv[2] = {grp.inverse(a), grp.inverse(c)};
  for (const auto& gen : {a, c, grp.multiply(a, c)})
    for (const auto& p : powers(grp, gen))
      if (out.insert(p).second) stack.push_back(p);
  while (!stack.empty()) {
    E x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 2; ++k) {
      E y = grp.multiply(grp.multiply(conj[k], x), conj_inv[k]);
      if (out.insert(y).second) stack.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace detail

template <FiniteGroup G>
MixedVerdict<typename G::element_type> is_mixed(const G& grp,
                                                const MixedQuadruple<typename G::element_type>& m,
                                                ClosureBudget budget = {},
                                                bool verify_subgroup = true) {
  using E = typename G::element_type;
  if (verify_subgroup) verify_index_two(grp, m.g0, budget);
  MixedVerdict<E> r;
  const E e = grp.identity();
  r.cond2 = !m.g0.contains(m.g);

  if (!m.g0.contains(m.a) || !m.g0.contains(m.c)) {
    r.cond1 = Tristate::no;
    r.witness = "a or c lies outside " + m.g0.descriptor;
  } else {
    r.cond1 = generates(grp, {m.a, m.c}, budget, grp.order() / 2);
    if (r.cond1 == Tristate::no) r.witness = "a, c do not generate " + m.g0.descriptor;
  }
  if (!r.cond2 && r.witness.empty()) r.witness = "g lies in " + m.g0.descriptor;
  if (r.cond1 != Tristate::yes || !r.cond2) {
    r.valid = r.cond1 == Tristate::unknown && r.cond2 ? Tristate::unknown : Tristate::no;
    if (r.valid == Tristate::unknown) r.witness = "generation undecided within budget";
    return r;
  }

  // Membership in the G0-relative Sigma, by key when available.
  std::function<bool(const E&)> in_sigma;
  std::optional<SigmaOracle<G>> oracle;
  std::unordered_set<E> explicit_sigma;
  if (m.g0.class_key) {
    oracle.emplace(grp, m.a, m.c, m.g0.class_key);
    in_sigma = [&](const E& x) { return oracle->contains(x); };
  } else {
    if (grp.order() / 2 > budget.hashed)
      throw index_two_error("no conjugacy invariant for " + m.g0.descriptor + " and too large to list");
    explicit_sigma = detail::relative_sigma(grp, m.a, m.c);
    in_sigma = [&](const E& x) { return explicit_sigma.contains(x); };
  }

  r.cond3 = Tristate::yes;
  grp.for_each_element([&](const E& gamma) {
    if (r.gamma || !m.g0.contains(gamma)) return;
    const E h = grp.multiply(m.g, gamma);
    if (in_sigma(grp.multiply(h, h))) r.gamma = gamma;
  });
  if (r.gamma) {
    r.cond3 = Tristate::no;
    r.witness = "(g gamma)^2 lies in Sigma(a,c) for some gamma in " + m.g0.descriptor;
  }

  const E gi = grp.inverse(m.g);
  auto conj_g = [&](const E& x) { return grp.multiply(grp.multiply(m.g, x), gi); };
  if (oracle) {
    SigmaOracle<G> other(grp, conj_g(m.a), conj_g(m.c), m.g0.class_key);
    if (auto k = oracle->common_key(other)) r.common = oracle->witness(*k);
  } else {
    // y = g x g^-1 lies in both sets exactly when x and y lie in Sigma(a, c)
    for (const auto& x : explicit_sigma) {
      if (x == e) continue;
      auto y = conj_g(x);
      if (explicit_sigma.contains(y) && (!r.common || y < *r.common)) r.common = y;
    }
  }
  r.cond4 = r.common ? Tristate::no : Tristate::yes;
  if (r.common && r.witness.empty())
    r.witness = "Sigma(a,c) and Sigma(gag^-1,gcg^-1) share a nontrivial element";
  r.valid = r.cond3 == Tristate::yes && r.cond4 == Tristate::yes ? Tristate::yes : Tristate::no;
  return r;
}

/// All index-2 subgroups, as kernels of the homomorphisms G -> Z/2 that are
/// nontrivial on some generator. Elements are coloured by a walk along the
/// generators from the identity; an assignment is kept when the colouring is
/// consistent.
template <FiniteGroup G>
std::vector<IndexTwoSubgroup<typename G::element_type>> index_two_subgroups(
    const G& grp, std::uint64_t max_order = 5000) {
  using E = typename G::element_type;
  if (grp.order() > max_order)
    throw std::length_error("index_two_subgroups: " + grp.name() + " is too large");
  const auto gens = grp.generators();
  std::vector<IndexTwoSubgroup<E>> out;
  if (gens.size() >= 20) return out;
  for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    std::unordered_map<E, bool> colour{{grp.identity(), false}};
    std::vector<E> stack{grp.identity()};
    bool ok = true;
    while (!stack.empty() && ok) {
      E x = stack.back();
      stack.pop_back();
      const bool cx = colour.at(x);
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        E y = grp.multiply(x, gens[i]);
        const bool cy = cx != static_cast<bool>((mask >> i) & 1);
        auto [it, fresh] = colour.emplace(y, cy);
        if (fresh)
          stack.push_back(std::move(y));
        else if (it->second != cy)
          ok = false;
      }
    }
    if (!ok) continue;
    auto set = std::make_shared<std::unordered_set<E>>();
    for (const auto& [x, odd] : colour)
      if (!odd) set->insert(x);
    out.push_back({"kernel#" + std::to_string(mask),
                   [set](const E& x) { return set->contains(x); }, {}});
  }
  return out;
}

template <class E>
struct MixedSearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<MixedQuadruple<E>> quadruple;
  std::uint64_t subgroups = 0;
  std::uint64_t pairs_examined = 0;
};

/// Exhaustive search over every index-2 subgroup and every pair a, c in it.
/// Meant for groups of at most a few hundred elements.
template <FiniteGroup G>
MixedSearchResult<typename G::element_type> search_mixed(const G& grp, ClosureBudget budget = {}) {
  using E = typename G::element_type;
  MixedSearchResult<E> res;
  const auto all = all_elements(grp);
  for (auto& sub : index_two_subgroups(grp)) {
    ++res.subgroups;
    std::vector<E> inside;
    std::optional<E> g;
    for (const auto& x : all) {
      if (sub.contains(x))
        inside.push_back(x);
      else if (!g)
        g = x;
    }
    for (const auto& a : inside)
      for (const auto& c : inside) {
        ++res.pairs_examined;
        MixedQuadruple<E> m{sub, a, c, *g};
        auto v = is_mixed(grp, m, budget, false);
        if (v.valid == Tristate::yes) {
          res.quadruple = std::move(m);
          res.outcome = SearchOutcome::found;
          return res;
        }
        if (v.valid == Tristate::unknown) res.outcome = SearchOutcome::budget_exhausted;
      }
  }
  return res;
}

/// The index-2 subgroup H x H x 2Z/4 of H4. Keeps a reference to g4.
template <FiniteGroup B>
IndexTwoSubgroup<H4Element> h4_even_part(const H4Group<B>& g4) {
  return {"h2", [](const H4Element& x) { return x.k % 2 == 0; },
          [&g4](const H4Element& x) { return g4.subgroup_class_key(x); }};
}

}  // namespace belyi

#endif  // BELYI_BEAUVILLE_MIXED_HPP
