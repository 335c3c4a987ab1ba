#ifndef BELYI_PERM_HPP
#define BELYI_PERM_HPP

// Permutations of {1..n}. Points are 0-based internally and 1-based in every
// textual form (cycle notation, JSON).
//
// Composition convention: compose(p, q) applies q first, then p, so that
// compose(p, q)(i) == p(q(i)). With this convention the Schur action
// t1(i,j) = (-i,-j), t2(i,j) = (-i-1,-j-1) satisfies t1*t2 = (i+1, j+1), and
// the sextic pair (1,3,6)(4,5) * (1,2)(3,5) is exactly (1,2,3,4,5,6).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace belyi {

class parse_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Permutation {
public:
  using point_type = std::uint16_t;

  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), point_type{0});
  }

  /// Builds from 0-based images; throws std::invalid_argument unless bijective.
  static Permutation from_images(std::vector<point_type> images) {
    std::vector<bool> hit(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || hit[v])
        throw std::invalid_argument("images do not form a bijection");
      hit[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds from 1-based images as written in the external formats.
  static Permutation from_one_based(std::span<const int> images) {
    std::vector<point_type> v;
    v.reserve(images.size());
    for (int x : images) {
      if (x < 1 || static_cast<std::size_t>(x) > images.size())
        throw std::invalid_argument("image out of range: " + std::to_string(x));
      v.push_back(static_cast<point_type>(x - 1));
    }
    return from_images(std::move(v));
  }

  /// Builds from 1-based cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      for (int x : cyc) {
        if (x < 1 || static_cast<std::size_t>(x) > degree)
          throw parse_error("point " + std::to_string(x) + " exceeds degree " +
                            std::to_string(degree));
        if (used[x - 1])
          throw parse_error("repeated point " + std::to_string(x));
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p.images_[cyc[i] - 1] =
            static_cast<point_type>(cyc[(i + 1) % cyc.size()] - 1);
    }
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_type operator()(std::size_t i) const { return images_[i]; }
  std::span<const point_type> images() const noexcept { return images_; }

  std::vector<int> one_based_images() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (auto v : images_) out.push_back(static_cast<int>(v) + 1);
    return out;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<point_type>(i);
    return r;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Cycles with 0-based points, each starting at its least point, listed by
  /// increasing first point.
  std::vector<std::vector<point_type>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<point_type>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<point_type> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<point_type>(j));
      }
      if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
  }

  std::vector<std::vector<int>> one_based_cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> out;
    for (const auto& c : cycles(include_fixed)) {
      std::vector<int> v;
      for (auto x : c) v.push_back(static_cast<int>(x) + 1);
      out.push_back(std::move(v));
    }
    return out;
  }

  std::size_t cycle_count() const {
    std::size_t count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      ++count;
      for (std::size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return count;
  }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& c : cycles()) r = std::lcm(r, static_cast<std::uint64_t>(c.size()));
    return r;
  }

  bool is_even() const { return (degree() - cycle_count()) % 2 == 0; }

  Permutation pow(long long k) const {
    const auto n = images_.size();
    Permutation r(n);
    if (n == 0) return r;
    for (const auto& c : cycles()) {
      const long long len = static_cast<long long>(c.size());
      const long long shift = ((k % len) + len) % len;
      for (std::size_t i = 0; i < c.size(); ++i)
        r.images_[c[i]] = c[(i + static_cast<std::size_t>(shift)) % c.size()];
    }
    return r;
  }

  /// Cycle notation, 1-based, fixed points omitted; "()" for the identity.
  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i] + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<point_type> images_;
};

/// compose(p, q)(i) = p(q(i)): q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in compose: " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  std::vector<Permutation::point_type> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(i));
  return Permutation::from_images(std::move(img));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// g * x * g^-1.
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g, x), g.inverse());
}

/// The canonical n-cycle (1,2,...,n).
inline Permutation standard_cycle(std::size_t n) {
  std::vector<Permutation::point_type> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Permutation::point_type>((i + 1) % n);
  return Permutation::from_images(std::move(img));
}

struct CycleType {
  std::vector<std::size_t> parts;  // non-increasing, fixed points included

  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }

  std::size_t degree() const {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  }
  std::size_t length() const { return parts.size(); }
  /// n minus the number of cycles.
  std::size_t deficiency() const { return degree() - parts.size(); }
  bool is_identity() const {
    return std::all_of(parts.begin(), parts.end(), [](auto x) { return x == 1; });
  }
  std::vector<std::size_t> nontrivial() const {
    std::vector<std::size_t> v;
    for (auto x : parts)
      if (x > 1) v.push_back(x);
    return v;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.parts <=> b.parts;
  }
};

inline CycleType cycle_type(const Permutation& p) {
  std::vector<std::size_t> parts;
  for (const auto& c : p.cycles(true)) parts.push_back(c.size());
  return CycleType(std::move(parts));
}

/// All partitions of n in non-increasing order, lexicographically decreasing.
inline std::vector<CycleType> partitions(std::size_t n) {
  std::vector<CycleType> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// Parses cycle notation such as "(1,3,6)(4,5)"; whitespace is ignored.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto token_at = [&](std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
           end - pos < 12)
      ++end;
    return "'" + std::string(text.substr(pos, std::max<std::size_t>(1, end - pos))) + "'";
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' at " + token_at(i));
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip();
      const std::size_t start = i;
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 65535) throw parse_error("point too large at " + token_at(start));
        ++i;
      }
      if (i == start) {
        if (i < text.size() && text[i] == ')' && cyc.empty()) break;  // "()"
        throw parse_error("expected point at " + token_at(start));
      }
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw parse_error("point " + std::to_string(v) + " exceeds degree " +
                          std::to_string(degree));
      cyc.push_back(static_cast<int>(v));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') break;
      throw parse_error("expected ',' or ')' at " + token_at(std::min(i, text.size())));
    }
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return Permutation::from_cycles(degree, cycles);
}

/// Some g with g*x_i*g^-1 == y_i for every pair, or nullopt when none exists.
/// Deterministic backtracking: orbits of <x_i> are seeded smallest first, and a
/// candidate image must match cycle lengths under every x_i / y_i.
inline std::optional<Permutation> simultaneous_conjugator(
    std::span<const std::pair<Permutation, Permutation>> pairs) {
  if (pairs.empty()) return std::nullopt;
  const std::size_t n = pairs.front().first.degree();
  for (const auto& [x, y] : pairs) {
    if (x.degree() != n || y.degree() != n)
      throw std::invalid_argument("simultaneous_conjugator: degree mismatch");
    if (cycle_type(x) != cycle_type(y)) return std::nullopt;
  }
  if (n == 0) return Permutation(0);

  // cycle length of each point under each x_i / y_i
  auto lengths = [n](const Permutation& p) {
    std::vector<std::size_t> len(n);
    for (const auto& c : p.cycles(true))
      for (auto v : c) len[v] = c.size();
    return len;
  };
  std::vector<std::vector<std::size_t>> xlen, ylen;
  for (const auto& [x, y] : pairs) {
    xlen.push_back(lengths(x));
    ylen.push_back(lengths(y));
  }

  // seed order: points sorted by (cycle length under x_0, point)
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return xlen[0][a] < xlen[0][b]; });

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> g(n, unset), ginv(n, unset);

  // Assign g(k) = v and close under all x_i; on conflict undo and fail.
  auto propagate = [&](std::size_t k, std::size_t v, std::vector<std::size_t>& trail) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{k, v}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (g[a] != unset) {
        if (g[a] != b) return false;
        continue;
      }
      if (ginv[b] != unset) return false;
      for (std::size_t t = 0; t < pairs.size(); ++t)
        if (xlen[t][a] != ylen[t][b]) return false;
      g[a] = b;
      ginv[b] = a;
      trail.push_back(a);
      for (const auto& [x, y] : pairs) stack.emplace_back(x(a), y(b));
    }
    return true;
  };
  auto undo = [&](std::vector<std::size_t>& trail) {
    for (auto a : trail) {
      ginv[g[a]] = unset;
      g[a] = unset;
    }
    trail.clear();
  };

  std::function<bool()> search = [&]() -> bool {
    std::size_t k = unset;
    for (auto p : order)
      if (g[p] == unset) {
        k = p;
        break;
      }
    if (k == unset) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (ginv[v] != unset) continue;
      std::vector<std::size_t> trail;
      if (propagate(k, v, trail) && search()) return true;
      undo(trail);
    }
    return false;
  };
  if (!search()) return std::nullopt;

  std::vector<Permutation::point_type> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Permutation::point_type>(g[i]);
  auto result = Permutation::from_images(std::move(img));
  for (const auto& [x, y] : pairs)
    if (conjugate(x, result) != y)
      throw std::logic_error("simultaneous_conjugator: post-check failed");
  return result;
}

inline std::optional<Permutation> simultaneous_conjugator(
    std::initializer_list<std::pair<Permutation, Permutation>> pairs) {
  std::vector<std::pair<Permutation, Permutation>> v(pairs);
  return simultaneous_conjugator(std::span<const std::pair<Permutation, Permutation>>(v));
}

}  // namespace belyi

template <>
struct std::hash<belyi::Permutation> {
  std::size_t operator()(const belyi::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

namespace belyi {

struct ClosureResult {
  std::vector<Permutation> elements;  // sorted; empty on overflow
  std::size_t count = 0;              // elements found (partial on overflow)
  bool overflow = false;
};

/// The subgroup generated by `generators`, or an overflow signal once more than
/// `cap` elements have been produced.
inline ClosureResult closure(std::span<const Permutation> generators, std::size_t cap,
                             std::size_t degree_if_empty = 0) {
  const std::size_t n = generators.empty() ? degree_if_empty : generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw std::invalid_argument("closure: degree mismatch");
  std::unordered_set<Permutation> seen;
  std::vector<Permutation> frontier{Permutation(n)};
  seen.insert(frontier.front());
  ClosureResult r;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            r.count = seen.size();
            r.overflow = true;
            return r;
          }
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  r.elements.assign(seen.begin(), seen.end());
  std::sort(r.elements.begin(), r.elements.end());
  r.count = r.elements.size();
  return r;
}

inline ClosureResult closure(std::initializer_list<Permutation> generators, std::size_t cap,
                             std::size_t degree_if_empty = 0) {
  std::vector<Permutation> v(generators);
  return closure(std::span<const Permutation>(v), cap, degree_if_empty);
}

/// Orbits of <generators> on {0..n-1}.
inline std::vector<std::vector<std::size_t>> orbits(std::span<const Permutation> generators,
                                                    std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators)
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

inline bool is_transitive(std::span<const Permutation> generators, std::size_t n) {
  return n == 0 || orbits(generators, n).size() == 1;
}

}  // namespace belyi

#endif  // BELYI_PERM_HPP
