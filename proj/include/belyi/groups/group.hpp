#ifndef BELYI_GROUPS_GROUP_HPP
#define BELYI_GROUPS_GROUP_HPP

// The finite-group interface used by the Beauville machinery, and the generic
// algorithms (element order, closure, generation) written against it.
//
// A group G supplies identity / multiply / inverse / order, a deterministic
// element enumeration, a generating set and class_key(x): a complete
// conjugacy invariant, so x ~ y iff class_key(x) == class_key(y).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace belyi {

using ClassKey = std::vector<std::int64_t>;

struct ClassKeyHash {
  std::size_t operator()(const ClassKey& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : k) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using ClassKeySet = std::unordered_set<ClassKey, ClassKeyHash>;

template <class G>
concept FiniteGroup = requires(const G& g, const typename G::element_type& x,
                               std::function<void(const typename G::element_type&)> visit) {
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.inverse(x) } -> std::convertible_to<typename G::element_type>;
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.class_key(x) } -> std::convertible_to<ClassKey>;
  { g.generators() } -> std::convertible_to<std::vector<typename G::element_type>>;
  { g.contains(x) } -> std::convertible_to<bool>;
  { g.name() } -> std::convertible_to<std::string>;
  g.for_each_element(visit);
  { std::hash<typename G::element_type>{}(x) } -> std::convertible_to<std::size_t>;
  { x == x } -> std::convertible_to<bool>;
};

/// Groups whose elements map bijectively onto 0..order()-1.
template <class G>
concept DenselyIndexed = FiniteGroup<G> && requires(const G& g, const typename G::element_type& x) {
  { g.dense_index(x) } -> std::convertible_to<std::uint64_t>;
};

/// Groups with a cheaper element_order than repeated multiplication.
template <class G>
concept HasElementOrder = requires(const G& g, const typename G::element_type& x) {
  { g.element_order(x) } -> std::convertible_to<std::uint64_t>;
};

/// Groups that can sometimes settle generation without a closure.
template <class G>
concept HasGenerationCertificate =
    requires(const G& g, const std::vector<typename G::element_type>& gens) {
      { g.generation_certificate(gens) } -> std::convertible_to<std::optional<bool>>;
    };

template <FiniteGroup G>
typename G::element_type conjugate_by(const G& grp, const typename G::element_type& x,
                                      const typename G::element_type& g) {
  return grp.multiply(grp.multiply(g, x), grp.inverse(g));
}

template <FiniteGroup G>
typename G::element_type power(const G& grp, typename G::element_type x, long long k) {
  if (k < 0) {
    x = grp.inverse(x);
    k = -k;
  }
  auto r = grp.identity();
  while (k) {
    if (k & 1) r = grp.multiply(r, x);
    x = grp.multiply(x, x);
    k >>= 1;
  }
  return r;
}

template <FiniteGroup G>
std::uint64_t element_order(const G& grp, const typename G::element_type& x) {
  if constexpr (HasElementOrder<G>) {
    return grp.element_order(x);
  } else {
    const auto e = grp.identity();
    auto y = x;
    std::uint64_t k = 1;
    while (!(y == e)) {
      y = grp.multiply(y, x);
      ++k;
    }
    return k;
  }
}

template <FiniteGroup G>
bool conjugacy_related(const G& grp, const typename G::element_type& x,
                       const typename G::element_type& y) {
  return grp.class_key(x) == grp.class_key(y);
}

/// One representative per conjugacy class: the first member met by
/// for_each_element.
template <FiniteGroup G>
std::vector<typename G::element_type> class_representatives(const G& grp) {
  std::vector<typename G::element_type> reps;
  ClassKeySet seen;
  grp.for_each_element([&](const typename G::element_type& x) {
    if (seen.insert(grp.class_key(x)).second) reps.push_back(x);
  });
  return reps;
}

template <FiniteGroup G>
std::vector<typename G::element_type> all_elements(const G& grp) {
  std::vector<typename G::element_type> out;
  grp.for_each_element([&](const typename G::element_type& x) { out.push_back(x); });
  return out;
}

struct ClosureBudget {
  std::uint64_t hashed = 2'000'000;  // element-set closure
  std::uint64_t dense = 10'000'000;  // bitmap closure for densely indexed groups
};

template <class E>
struct SubgroupClosure {
  std::uint64_t size = 0;
  bool overflow = false;
  std::vector<E> elements;  // filled only when requested
};

/// The subgroup generated by gens. Uses a bitmap when the group is densely
/// indexed and small enough, a hash set otherwise.
template <FiniteGroup G>
SubgroupClosure<typename G::element_type> subgroup_closure(
    const G& grp, const std::vector<typename G::element_type>& gens, ClosureBudget budget = {},
    bool keep_elements = false) {
  using E = typename G::element_type;
  SubgroupClosure<E> r;
  std::vector<E> frontier{grp.identity()};
  if (keep_elements) r.elements.push_back(grp.identity());
  r.size = 1;
  auto run = [&](auto&& insert, std::uint64_t cap) {
    while (!frontier.empty()) {
      std::vector<E> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          auto y = grp.multiply(x, g);
          if (insert(y)) {
            if (++r.size > cap) {
              r.overflow = true;
              return;
            }
            if (keep_elements) r.elements.push_back(y);
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
  };
  if constexpr (DenselyIndexed<G>) {
    if (grp.order() <= budget.dense) {
      std::vector<bool> seen(grp.order(), false);
      seen[grp.dense_index(grp.identity())] = true;
      run(
          [&](const E& y) {
            auto i = grp.dense_index(y);
            if (seen[i]) return false;
            seen[i] = true;
            return true;
          },
          budget.dense);
      return r;
    }
  }
  std::unordered_set<E> seen{grp.identity()};
  run([&](const E& y) { return seen.insert(y).second; }, budget.hashed);
  return r;
}

enum class Tristate { no, yes, unknown };

inline std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::no: return "no";
    case Tristate::yes: return "yes";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

/// Whether gens generate a subgroup of the given order (default: all of G).
template <FiniteGroup G>
Tristate generates(const G& grp, const std::vector<typename G::element_type>& gens,
                   ClosureBudget budget = {}, std::optional<std::uint64_t> target = std::nullopt) {
  const std::uint64_t want = target.value_or(grp.order());
  if constexpr (HasGenerationCertificate<G>) {
    if (!target)
      if (auto cert = grp.generation_certificate(gens)) return *cert ? Tristate::yes : Tristate::no;
  }
  auto c = subgroup_closure(grp, gens, budget);
  if (c.overflow) return Tristate::unknown;
  return c.size == want ? Tristate::yes : Tristate::no;
}

}  // namespace belyi

#endif  // BELYI_GROUPS_GROUP_HPP
