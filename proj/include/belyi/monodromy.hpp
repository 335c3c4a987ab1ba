#ifndef BELYI_MONODROMY_HPP
#define BELYI_MONODROMY_HPP

// Monodromy of polynomials whose only critical values are 0 and 1.
//
// A class is stored as a pair (tau0, tau1) of permutations of the n sheets
// over the base point 1/2, tau0 the local monodromy around 0, tau1 around 1,
// normalized so that compose(tau0, tau1) is the standard cycle (1,2,...,n).
// Two normalized pairs describe the same polynomial class iff they are
// conjugate by a power of that cycle.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "belyi/perm.hpp"

namespace belyi {

struct MonodromyPair {
  Permutation tau0;
  Permutation tau1;

  std::size_t degree() const { return tau0.degree(); }
  Permutation product() const { return compose(tau0, tau1); }

  friend bool operator==(const MonodromyPair&, const MonodromyPair&) = default;
  friend auto operator<=>(const MonodromyPair& a, const MonodromyPair& b) {
    if (auto c = a.tau0 <=> b.tau0; c != 0) return c;
    return a.tau1 <=> b.tau1;
  }
};

struct BranchDatum {
  std::size_t degree = 0;
  CycleType type0;
  CycleType type1;

  /// Deficiency sum (n - #cycles) over both types equals n - 1.
  bool satisfies_deficiency() const {
    return degree >= 1 && type0.degree() == degree && type1.degree() == degree &&
           type0.deficiency() + type1.deficiency() == degree - 1;
  }
  BranchDatum swapped() const { return {degree, type1, type0}; }
  std::string to_string() const { return type0.to_string() + "/" + type1.to_string(); }

  friend bool operator==(const BranchDatum&, const BranchDatum&) = default;
  friend auto operator<=>(const BranchDatum& a, const BranchDatum& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    if (auto c = a.type0 <=> b.type0; c != 0) return c;
    return a.type1 <=> b.type1;
  }
};

inline BranchDatum branch_datum(const MonodromyPair& p) {
  return {p.degree(), cycle_type(p.tau0), cycle_type(p.tau1)};
}

struct PairValidity {
  bool product_is_full_cycle = false;
  bool transitive = false;
  bool deficiency_ok = false;

  bool valid() const { return product_is_full_cycle && transitive && deficiency_ok; }
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    if (!product_is_full_cycle) f.emplace_back("product is not an n-cycle");
    if (!transitive) f.emplace_back("generated group is not transitive");
    if (!deficiency_ok) f.emplace_back("deficiency sum differs from n-1");
    return f;
  }
};

inline PairValidity validate_pair(const MonodromyPair& p) {
  PairValidity v;
  const std::size_t n = p.degree();
  if (p.tau1.degree() != n) return v;
  const auto prod = p.product();
  v.product_is_full_cycle = n >= 1 && prod.cycle_count() == 1;
  const std::vector<Permutation> gens{p.tau0, p.tau1};
  v.transitive = is_transitive(gens, n);
  v.deficiency_ok = branch_datum(p).satisfies_deficiency();
  return v;
}

class inconsistent_data : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Genus of the cover with the given local monodromies, all branch points
/// (including infinity) supplied: 2 - 2g = 2n - sum (n - #cycles).
inline long long genus_of_cover(std::span<const Permutation> branch, std::size_t degree) {
  long long total = 0;
  for (const auto& p : branch) {
    if (p.degree() != degree) throw std::invalid_argument("genus_of_cover: degree mismatch");
    total += static_cast<long long>(degree - p.cycle_count());
  }
  const long long twice = total - 2 * static_cast<long long>(degree) + 2;  // 2g
  if (twice % 2 != 0 || twice < 0)
    throw inconsistent_data("Riemann-Hurwitz count gives non-integral or negative genus");
  return twice / 2;
}

/// Calls f on every permutation of the given cycle type on {0..n-1}, each once.
/// The least unassigned point always opens the next cycle.
inline void for_each_of_type(const CycleType& type,
                             const std::function<void(const Permutation&)>& f) {
  const std::size_t n = type.degree();
  std::vector<Permutation::point_type> img(n);
  std::vector<bool> used(n, false);
  std::map<std::size_t, std::size_t> remaining;
  for (auto len : type.parts) ++remaining[len];

  std::function<void()> open_cycle;
  std::function<void(std::vector<std::size_t>&, std::size_t)> extend =
      [&](std::vector<std::size_t>& cyc, std::size_t len) {
        if (cyc.size() == len) {
          for (std::size_t i = 0; i < len; ++i)
            img[cyc[i]] = static_cast<Permutation::point_type>(cyc[(i + 1) % len]);
          open_cycle();
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (used[v]) continue;
          used[v] = true;
          cyc.push_back(v);
          extend(cyc, len);
          cyc.pop_back();
          used[v] = false;
        }
      };
  open_cycle = [&]() {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first == n) {
      f(Permutation::from_images(img));
      return;
    }
    for (auto& [len, count] : remaining) {
      if (count == 0) continue;
      --count;
      used[first] = true;
      std::vector<std::size_t> cyc{first};
      extend(cyc, len);
      used[first] = false;
      ++count;
    }
  };
  open_cycle();
}

struct EnumerationOptions {
  std::size_t max_degree = 9;
  unsigned jobs = 1;
};

struct FactorizationResult {
  std::vector<MonodromyPair> pairs;         // transitive, sorted
  std::vector<MonodromyPair> intransitive;  // excluded, reported
};

class refused_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// All (tau0, tau1) of the given types with compose(tau0, tau1) equal to the
/// standard n-cycle.
inline FactorizationResult enumerate_factorizations(const BranchDatum& d,
                                                    const EnumerationOptions& opt = {}) {
  if (d.degree > opt.max_degree)
    throw refused_error("degree " + std::to_string(d.degree) + " exceeds the enumeration guard " +
                        std::to_string(opt.max_degree) + "; raise --max-degree to proceed");
  if (d.type0.degree() != d.degree || d.type1.degree() != d.degree)
    throw std::invalid_argument("branch datum types do not match degree");
  FactorizationResult r;
  if (!d.satisfies_deficiency()) return r;

  const auto sigma = standard_cycle(d.degree);
  std::vector<Permutation> candidates;
  for_each_of_type(d.type0, [&](const Permutation& p) { candidates.push_back(p); });

  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<FactorizationResult> shards(jobs);
  auto work = [&](unsigned shard) {
    auto& out = shards[shard];
    for (std::size_t i = shard; i < candidates.size(); i += jobs) {
      const auto& tau0 = candidates[i];
      auto tau1 = compose(tau0.inverse(), sigma);
      if (cycle_type(tau1) != d.type1) continue;
      MonodromyPair p{tau0, std::move(tau1)};
      const std::vector<Permutation> gens{p.tau0, p.tau1};
      (is_transitive(gens, d.degree) ? out.pairs : out.intransitive).push_back(std::move(p));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < jobs; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  for (auto& s : shards) {
    r.pairs.insert(r.pairs.end(), s.pairs.begin(), s.pairs.end());
    r.intransitive.insert(r.intransitive.end(), s.intransitive.begin(), s.intransitive.end());
  }
  std::sort(r.pairs.begin(), r.pairs.end());
  std::sort(r.intransitive.begin(), r.intransitive.end());
  return r;
}

namespace detail {

inline std::vector<Permutation::point_type> pair_key(const MonodromyPair& p) {
  std::vector<Permutation::point_type> k(p.tau0.images().begin(), p.tau0.images().end());
  k.insert(k.end(), p.tau1.images().begin(), p.tau1.images().end());
  return k;
}

}  // namespace detail

/// Lexicographically least conjugate of a normalized pair under <sigma>.
inline MonodromyPair canonical_form(const MonodromyPair& p) {
  const auto sigma = standard_cycle(p.degree());
  MonodromyPair best = p;
  auto best_key = detail::pair_key(p);
  auto g = sigma;
  for (std::size_t k = 1; k < p.degree(); ++k, g = compose(g, sigma)) {
    MonodromyPair q{conjugate(p.tau0, g), conjugate(p.tau1, g)};
    auto key = detail::pair_key(q);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(q);
    }
  }
  return best;
}

/// Relabels sheets along the product cycle so that the product becomes the
/// standard cycle: the cycle (x1 = 1, x2, ..., xn) is sent to (1, 2, ..., n).
inline MonodromyPair normalize(const MonodromyPair& p) {
  const std::size_t n = p.degree();
  const auto prod = p.product();
  if (prod.cycle_count() != 1) throw std::invalid_argument("normalize: product is not an n-cycle");
  std::vector<Permutation::point_type> h(n);
  std::size_t x = 0;
  for (std::size_t k = 0; k < n; ++k, x = prod(x)) h[x] = static_cast<Permutation::point_type>(k);
  const auto g = Permutation::from_images(std::move(h));
  MonodromyPair q{conjugate(p.tau0, g), conjugate(p.tau1, g)};
  return q;
}

struct MonodromyClass {
  MonodromyPair representative;  // canonical form
  std::size_t orbit_size = 0;
};

inline std::vector<MonodromyClass> classes_of(const std::vector<MonodromyPair>& pairs) {
  std::map<MonodromyPair, std::size_t> orbit;
  for (const auto& p : pairs) ++orbit[canonical_form(p)];
  std::vector<MonodromyClass> out;
  for (auto& [rep, size] : orbit) out.push_back({rep, size});
  return out;
}

inline std::vector<MonodromyClass> enumerate_classes(const BranchDatum& d,
                                                     const EnumerationOptions& opt = {}) {
  return classes_of(enumerate_factorizations(d, opt).pairs);
}

enum class PolynomialClassKind { chebyshev, belyi, other };

inline std::string to_string(PolynomialClassKind k) {
  switch (k) {
    case PolynomialClassKind::chebyshev: return "chebyshev";
    case PolynomialClassKind::belyi: return "belyi";
    case PolynomialClassKind::other: return "other";
  }
  return "other";
}

/// Both types are products of disjoint transpositions.
inline bool is_chebyshev_datum(const BranchDatum& d) {
  auto only_twos = [](const CycleType& t) {
    auto nt = t.nontrivial();
    return std::all_of(nt.begin(), nt.end(), [](auto x) { return x == 2; });
  };
  return only_twos(d.type0) && only_twos(d.type1);
}

/// One type is a single transposition, the other has at most two nontrivial cycles.
inline bool is_belyi_datum(const BranchDatum& d) {
  auto transposition = [](const CycleType& t) {
    auto nt = t.nontrivial();
    return nt.size() == 1 && nt.front() == 2;
  };
  return (transposition(d.type1) && d.type0.nontrivial().size() <= 2) ||
         (transposition(d.type0) && d.type1.nontrivial().size() <= 2);
}

/// Belyi wins when both predicates hold; that only happens in degree <= 4,
/// where the two families are extendedly equivalent.
inline PolynomialClassKind classify(const BranchDatum& d) {
  if (is_belyi_datum(d)) return PolynomialClassKind::belyi;
  if (is_chebyshev_datum(d)) return PolynomialClassKind::chebyshev;
  return PolynomialClassKind::other;
}

/// Monodromy of the complex-conjugate polynomial: (tau0^-1, tau1^-1), renormalized.
inline MonodromyPair conjugate_pair(const MonodromyPair& p) {
  return normalize({p.tau0.inverse(), p.tau1.inverse()});
}

/// Monodromy of 1 - P: the fibres over 0 and 1 exchange roles.
inline MonodromyPair swap_pair(const MonodromyPair& p) { return normalize({p.tau1, p.tau0}); }

inline bool equivalent(const MonodromyPair& a, const MonodromyPair& b) {
  if (a.degree() != b.degree()) return false;
  return canonical_form(normalize(a)) == canonical_form(normalize(b));
}

inline bool is_real_class(const MonodromyPair& p, bool extended) {
  const auto conj = conjugate_pair(p);
  if (equivalent(conj, p)) return true;
  return extended && equivalent(conj, swap_pair(p));
}

struct GroupOrder {
  std::size_t order = 0;
  bool overflow = false;
};

inline GroupOrder monodromy_group_order(const MonodromyPair& p, std::size_t cap = 2'000'000) {
  auto c = closure({p.tau0, p.tau1}, cap);
  return {c.count, c.overflow};
}

/// Branch data of degree n with deficiency sum n - 1; when `two_critical` is
/// set, data with an identity type (P = z^n) are left out.
inline std::vector<BranchDatum> polynomial_branch_data(std::size_t n, bool two_critical = true) {
  std::vector<BranchDatum> out;
  const auto parts = partitions(n);
  for (const auto& a : parts)
    for (const auto& b : parts) {
      BranchDatum d{n, a, b};
      if (!d.satisfies_deficiency()) continue;
      if (two_critical && (a.is_identity() || b.is_identity())) continue;
      out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace belyi

#endif  // BELYI_MONODROMY_HPP
