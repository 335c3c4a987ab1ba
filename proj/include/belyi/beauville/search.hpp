#ifndef BELYI_BEAUVILLE_SEARCH_HPP
#define BELYI_BEAUVILLE_SEARCH_HPP

// Exhaustive search for unmixed structures.
//
// Both generation and Sigma are invariant under simultaneous conjugation of a
// pair, so every pair is equivalent to one whose first entry is a class
// representative. The search lists such pairs (a = representative, c over all
// of G), keeps the hyperbolic generating ones, and only one pair per Sigma
// signature, since disjointness depends on nothing else. A structure is any
// two kept pairs with disjoint signatures.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "belyi/beauville/core.hpp"
#include "belyi/groups/group.hpp"

namespace belyi {

struct UnmixedSearchOptions {
  std::optional<TypeTriple> type1;  // restrict the first pair to this type (as a multiset)
  std::optional<TypeTriple> type2;
  ClosureBudget budget{};
  unsigned jobs = 1;
};

enum class SearchOutcome { found, exhausted, budget_exhausted };

inline std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::exhausted: return "exhausted";
    case SearchOutcome::budget_exhausted: return "budget-exhausted";
  }
  return "exhausted";
}

template <class E>
struct UnmixedSearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<UnmixedStructure<E>> structure;
  std::uint64_t pairs_examined = 0;
  std::uint64_t signatures = 0;        // generating pairs kept, one per Sigma signature
  std::uint64_t undecided_pairs = 0;   // generation unknown within budget
};

namespace detail {

template <class E>
struct PairCandidate {
  E a, c;
  TypeTriple type;
  std::vector<ClassKey> signature;  // sorted nontrivial keys
  bool fits1 = false, fits2 = false;
};

inline bool same_multiset(const TypeTriple& x, const TypeTriple& y) {
  return x.sorted() == y.sorted();
}

inline bool disjoint_sorted(const std::vector<ClassKey>& x, const std::vector<ClassKey>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

/// Hyperbolic generating pairs with first entry `a`, one per signature, in
/// enumeration order of c.
template <FiniteGroup G>
std::vector<PairCandidate<typename G::element_type>> pairs_from(
    const G& grp, const typename G::element_type& a, const std::vector<typename G::element_type>& all,
    const UnmixedSearchOptions& opt, std::uint64_t& examined, std::uint64_t& undecided) {
  using E = typename G::element_type;
  std::vector<PairCandidate<E>> out;
  std::set<std::pair<std::vector<ClassKey>, int>> seen;
  const auto ord_a = element_order(grp, a);
  for (const auto& c : all) {
    ++examined;
    TypeTriple t{ord_a, element_order(grp, c), element_order(grp, grp.multiply(a, c))};
    if (!is_hyperbolic(t)) continue;
    const bool f1 = !opt.type1 || same_multiset(t, *opt.type1);
    const bool f2 = !opt.type2 || same_multiset(t, *opt.type2);
    if (!f1 && !f2) continue;
    SigmaOracle<G> sigma(grp, a, c);
    auto sig = sigma.nontrivial_keys();
    const int fits = (f1 ? 1 : 0) | (f2 ? 2 : 0);
    if (seen.contains({sig, fits})) continue;
    auto gen = generates(grp, {a, c}, opt.budget);
    if (gen == Tristate::unknown) ++undecided;
    if (gen != Tristate::yes) continue;
    seen.emplace(sig, fits);
    out.push_back({a, c, t, std::move(sig), f1, f2});
  }
  return out;
}

}  // namespace detail

template <FiniteGroup G>
UnmixedSearchResult<typename G::element_type> search_unmixed(const G& grp,
                                                             const UnmixedSearchOptions& opt = {}) {
  using E = typename G::element_type;
  UnmixedSearchResult<E> res;
  std::vector<E> reps;
  for (auto& r : class_representatives(grp))
    if (!(r == grp.identity())) reps.push_back(r);
  const auto all = all_elements(grp);

  std::vector<detail::PairCandidate<E>> kept;
  std::set<std::pair<std::vector<ClassKey>, int>> seen;
  // Returns true once a structure is assembled.
  auto merge = [&](std::vector<detail::PairCandidate<E>>& batch) {
    for (auto& cand : batch) {
      const int fits = (cand.fits1 ? 1 : 0) | (cand.fits2 ? 2 : 0);
      if (!seen.emplace(cand.signature, fits).second) continue;
      for (const auto& prev : kept) {
        const bool order12 = prev.fits1 && cand.fits2;
        const bool order21 = cand.fits1 && prev.fits2;
        if (!(order12 || order21)) continue;
        if (!detail::disjoint_sorted(prev.signature, cand.signature)) continue;
        const auto& p1 = order12 ? prev : cand;
        const auto& p2 = order12 ? cand : prev;
        res.structure = UnmixedStructure<E>{p1.a, p1.c, p2.a, p2.c};
        return true;
      }
      kept.push_back(std::move(cand));
    }
    return false;
  };

  const unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1) {
    for (const auto& a : reps) {
      auto batch = detail::pairs_from(grp, a, all, opt, res.pairs_examined, res.undecided_pairs);
      if (merge(batch)) break;
    }
  } else {
    std::vector<std::vector<detail::PairCandidate<E>>> batches(reps.size());
    std::vector<std::uint64_t> examined(reps.size(), 0), undecided(reps.size(), 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < reps.size(); i += jobs)
          batches[i] = detail::pairs_from(grp, reps[i], all, opt, examined[i], undecided[i]);
      });
    for (auto& t : pool) t.join();
    // same merge order as the sequential path; counters cover pairs merged so far
    for (std::size_t i = 0; i < reps.size(); ++i) {
      res.pairs_examined += examined[i];
      res.undecided_pairs += undecided[i];
      if (merge(batches[i])) break;
    }
  }
  res.signatures = seen.size();

  if (res.structure) {
    auto check = is_unmixed(grp, *res.structure, opt.budget);
    if (check.valid != Tristate::yes)
      throw std::logic_error("search_unmixed: assembled structure failed re-verification");
    res.outcome = SearchOutcome::found;
  } else {
    res.outcome = res.undecided_pairs ? SearchOutcome::budget_exhausted : SearchOutcome::exhausted;
  }
  return res;
}

}  // namespace belyi

#endif  // BELYI_BEAUVILLE_SEARCH_HPP
