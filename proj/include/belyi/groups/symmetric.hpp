#ifndef BELYI_GROUPS_SYMMETRIC_HPP
#define BELYI_GROUPS_SYMMETRIC_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/groups/group.hpp"
#include "belyi/perm.hpp"

namespace belyi {

namespace detail {

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Lehmer rank of a permutation among all n! in lexicographic image order.
inline std::uint64_t lehmer_rank(const Permutation& p) {
  const std::size_t n = p.degree();
  std::uint64_t rank = 0;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t v = 0; v < p(i); ++v)
      if (!used[v]) ++smaller;
    used[p(i)] = true;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

/// Cycle type as a key, parts non-increasing.
inline ClassKey cycle_type_key(const Permutation& p) {
  ClassKey k;
  for (auto part : cycle_type(p).parts) k.push_back(static_cast<std::int64_t>(part));
  return k;
}

/// True when the transitive group <gens> preserves no nontrivial block system.
/// For every b != 0, the finest block system joining 0 and b must be trivial.
inline bool is_prime_number(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline bool is_primitive(const std::vector<Permutation>& gens, std::size_t n) {
  if (n <= 2) return true;
  for (std::size_t b = 1; b < n; ++b) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<std::size_t, std::size_t>> queue{{0, b}};
    parent[b] = 0;
    std::size_t classes = n - 1;
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      for (const auto& g : gens) {
        auto u = find(g(x)), v = find(g(y));
        if (u != v) {
          parent[std::max(u, v)] = std::min(u, v);
          --classes;
          queue.emplace_back(u, v);
        }
      }
    }
    if (classes != 1) return false;
  }
  return true;
}

/// Permutations of the listed degree in lexicographic image order.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<Permutation::point_type> img(n);
  std::iota(img.begin(), img.end(), Permutation::point_type{0});
  do {
    f(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace detail

/// S_n acting on {1..n}. Conjugacy classes are cycle types.
class SymmetricGroup {
public:
  using element_type = Permutation;

  explicit SymmetricGroup(std::size_t n) : n_(n) {
    if (n < 1 || n > 20) throw std::invalid_argument("sym: degree must be in 1..20");
  }

  std::size_t degree() const { return n_; }
  std::string name() const { return "sym:" + std::to_string(n_); }
  Permutation identity() const { return Permutation(n_); }
  Permutation multiply(const Permutation& x, const Permutation& y) const { return compose(x, y); }
  Permutation inverse(const Permutation& x) const { return x.inverse(); }
  std::uint64_t order() const { return detail::factorial(n_); }
  bool contains(const Permutation& x) const { return x.degree() == n_; }
  ClassKey class_key(const Permutation& x) const { return detail::cycle_type_key(x); }
  std::uint64_t element_order(const Permutation& x) const { return x.order(); }
  std::uint64_t dense_index(const Permutation& x) const { return detail::lehmer_rank(x); }

  std::vector<Permutation> generators() const {
    if (n_ == 1) return {};
    if (n_ == 2) return {standard_cycle(2)};
    return {Permutation::from_cycles(n_, {{1, 2}}), standard_cycle(n_)};
  }

  template <class F>
  void for_each_element(F&& f) const {
    detail::for_each_permutation(n_, f);
  }

  /// Jordan: a primitive group containing a transposition is S_n, and one
  /// containing a p-cycle with p prime and p <= n - 3 contains A_n. Such a
  /// cycle is looked for among powers of the generators, their pairwise
  /// products and a fixed-seed product-replacement walk, so the answer is
  /// deterministic; nullopt when nothing turns up.
  std::optional<bool> generation_certificate(const std::vector<Permutation>& gens) const {
    if (n_ < 3) return std::nullopt;
    if (!is_transitive(gens, n_)) return false;
    bool odd = false;
    for (const auto& g : gens) odd = odd || !g.is_even();
    if (!odd) return false;  // inside A_n
    if (!detail::is_primitive(gens, n_)) return false;
    auto jordan = [&](const Permutation& g) {
      const auto ord = g.order();
      for (std::uint64_t k = 1; k < ord; ++k) {
        if (ord % k) continue;
        auto t = cycle_type(g.pow(static_cast<long long>(k))).nontrivial();
        if (t.size() == 1 && (t.front() == 2 || (t.front() + 3 <= n_ && detail::is_prime_number(t.front()))))
          return true;
      }
      return false;
    };
    for (const auto& g : gens)
      if (jordan(g)) return true;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j && jordan(compose(gens[i], gens[j]))) return true;
    std::vector<Permutation> state;
    while (state.size() < std::max<std::size_t>(8, gens.size()))
      for (const auto& g : gens) state.push_back(g);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int step = 0; step < 400; ++step) {
      const auto i = rng() % state.size();
      auto j = rng() % (state.size() - 1);
      if (j >= i) ++j;
      state[i] = rng() % 2 ? compose(state[i], state[j]) : compose(state[i], state[j].inverse());
      if (step >= 20 && jordan(state[i])) return true;
    }
    return std::nullopt;
  }

private:
  std::size_t n_;
};

/// A_n. A class of S_n contained in A_n splits into two A_n-classes exactly
/// when its cycle lengths are odd and pairwise distinct; the halves are told
/// apart by the parity of a conjugator from a fixed representative.
class AlternatingGroup {
public:
  using element_type = Permutation;

  explicit AlternatingGroup(std::size_t n) : n_(n) {
    if (n < 1 || n > 20) throw std::invalid_argument("alt: degree must be in 1..20");
  }

  std::size_t degree() const { return n_; }
  std::string name() const { return "alt:" + std::to_string(n_); }
  Permutation identity() const { return Permutation(n_); }
  Permutation multiply(const Permutation& x, const Permutation& y) const { return compose(x, y); }
  Permutation inverse(const Permutation& x) const { return x.inverse(); }
  std::uint64_t order() const { return n_ < 2 ? 1 : detail::factorial(n_) / 2; }
  bool contains(const Permutation& x) const { return x.degree() == n_ && x.is_even(); }
  std::uint64_t element_order(const Permutation& x) const { return x.order(); }
  std::uint64_t dense_index(const Permutation& x) const { return detail::lehmer_rank(x) / 2; }

  static bool splits(const CycleType& t) {
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
      if (t.parts[i] % 2 == 0) return false;
      if (i > 0 && t.parts[i] == t.parts[i - 1]) return false;
    }
    return true;
  }

  /// Parity of the conjugator taking the standard element of x's cycle type
  /// (cycles of non-increasing length laid out on 1,2,3,...) to x.
  static bool split_half(const Permutation& x) {
    auto cyc = x.cycles(true);
    std::stable_sort(cyc.begin(), cyc.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<Permutation::point_type> g;
    for (const auto& c : cyc) g.insert(g.end(), c.begin(), c.end());
    return !Permutation::from_images(std::move(g)).is_even();
  }

  ClassKey class_key(const Permutation& x) const {
    auto key = detail::cycle_type_key(x);
    key.push_back(splits(cycle_type(x)) ? (split_half(x) ? 1 : 0) : -1);
    return key;
  }

  std::vector<Permutation> generators() const {
    if (n_ < 3) return {};
    std::vector<Permutation> gens{Permutation::from_cycles(n_, {{1, 2, 3}})};
    if (n_ > 3) {
      std::vector<int> cyc;
      for (std::size_t k = (n_ % 2 ? 1 : 2); k <= n_; ++k) cyc.push_back(static_cast<int>(k));
      gens.push_back(Permutation::from_cycles(n_, {cyc}));
    }
    return gens;
  }

  template <class F>
  void for_each_element(F&& f) const {
    detail::for_each_permutation(n_, [&](const Permutation& p) {
      if (p.is_even()) f(p);
    });
  }

private:
  std::size_t n_;
};

}  // namespace belyi

#endif  // BELYI_GROUPS_SYMMETRIC_HPP
