#ifndef BELYI_DIFFPOLY_HPP
#define BELYI_DIFFPOLY_HPP

// Factor counts of difference polynomials f(x) - g(y) from the product of the
// two monodromies. Irreducible factors correspond to orbits of the diagonal
// action on the n x m grid; a factor's bidegree is read off the orbit's fibres.
//
// Z/k-indexed actions use residue r <-> point r + 1.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/perm.hpp"

namespace belyi {

struct BranchAction {
  std::string name;
  Permutation tau;  // on the n roots of f
  Permutation rho;  // on the m roots of g
};

struct ProductMonodromy {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<BranchAction> labels;

  void validate() const {
    for (const auto& l : labels)
      if (l.tau.degree() != n || l.rho.degree() != m)
        throw std::invalid_argument("branch label '" + l.name + "' has wrong degrees");
  }
};

struct GridOrbit {
  std::size_t size = 0;
  std::size_t x_degree = 0;  // points of the orbit over one root of g
  std::size_t y_degree = 0;  // points of the orbit over one root of f
  std::vector<std::pair<std::size_t, std::size_t>> points;  // 0-based, sorted
};

class structure_mismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::vector<GridOrbit> component_orbits(const ProductMonodromy& pm) {
  pm.validate();
  const std::size_t n = pm.n, m = pm.m, total = n * m;
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& l : pm.labels)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto a = find(i * m + j), b = find(l.tau(i) * m + l.rho(j));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<GridOrbit> out;
  std::vector<std::size_t> slot(total, static_cast<std::size_t>(-1));
  for (std::size_t p = 0; p < total; ++p) {
    auto r = find(p);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].points.emplace_back(p / m, p % m);
  }
  for (auto& o : out) {
    o.size = o.points.size();
    std::vector<std::size_t> over_x(n, 0), over_y(m, 0);
    for (auto [i, j] : o.points) {
      ++over_x[i];
      ++over_y[j];
    }
    auto constant_nonzero = [](const std::vector<std::size_t>& v) {
      std::size_t val = 0;
      for (auto c : v) {
        if (c == 0) continue;
        if (val != 0 && c != val) return std::size_t{0};
        val = c;
      }
      return val;
    };
    o.x_degree = constant_nonzero(over_y);
    o.y_degree = constant_nonzero(over_x);
    if (o.x_degree == 0 || o.y_degree == 0)
      throw structure_mismatch("fibre sizes vary along an orbit; actions are inconsistent");
  }
  return out;
}

namespace detail {

template <class F>
Permutation residue_action(std::size_t k, F f) {
  std::vector<Permutation::point_type> img(k);
  for (std::size_t r = 0; r < k; ++r) {
    const long long v = f(static_cast<long long>(r));
    img[r] = static_cast<Permutation::point_type>(((v % static_cast<long long>(k)) +
                                                   static_cast<long long>(k)) %
                                                  static_cast<long long>(k));
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace detail

/// T_{2n}(x) + T_{2n}(y): dihedral monodromy of T_{2n} against that of -T_{2n}
/// on Z/2n, i.e. t1(i,j) = (-i, -j-1), t2(i,j) = (-i-1, -j).
inline ProductMonodromy cheb_sum(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cheb_sum: n must be positive");
  const std::size_t k = 2 * n;
  ProductMonodromy pm{k, k, {}};
  pm.labels.push_back({"-1", detail::residue_action(k, [](long long i) { return -i; }),
                       detail::residue_action(k, [](long long j) { return -j - 1; })});
  pm.labels.push_back({"1", detail::residue_action(k, [](long long i) { return -i - 1; }),
                       detail::residue_action(k, [](long long j) { return -j; })});
  return pm;
}

struct SchurResult {
  ProductMonodromy monodromy;
  std::vector<GridOrbit> orbits;
  std::size_t factor_count = 0;  // orbits other than the diagonal
};

/// (T_n(x) - T_n(y)) / (x - y): t1(i,j) = (-i,-j), t2(i,j) = (-i-1,-j-1) on (Z/n)^2.
inline SchurResult schur(std::size_t n) {
  if (n < 2) throw std::invalid_argument("schur: n must be at least 2");
  ProductMonodromy pm{n, n, {}};
  auto t1 = detail::residue_action(n, [](long long i) { return -i; });
  auto t2 = detail::residue_action(n, [](long long i) { return -i - 1; });
  pm.labels.push_back({"-1", t1, t1});
  pm.labels.push_back({"1", t2, t2});
  SchurResult r{pm, component_orbits(pm), 0};
  std::size_t diagonal = 0;
  for (const auto& o : r.orbits) {
    bool on_diag = false;
    for (auto [i, j] : o.points) on_diag = on_diag || i == j;
    if (on_diag) ++diagonal;
  }
  if (diagonal != 1) throw structure_mismatch("diagonal does not form a single orbit");
  r.factor_count = r.orbits.size() - 1;
  return r;
}

namespace detail {

using F2Matrix = std::array<std::array<int, 3>, 3>;

inline int apply_f2(const F2Matrix& a, int v) {
  int out = 0;
  for (int r = 0; r < 3; ++r) {
    int bit = 0;
    for (int c = 0; c < 3; ++c) bit ^= a[r][c] & ((v >> c) & 1);
    out |= bit << r;
  }
  return out;
}

inline F2Matrix transpose(const F2Matrix& a) {
  F2Matrix t{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t[r][c] = a[c][r];
  return t;
}

inline F2Matrix inverse_f2(const F2Matrix& a) {
  // brute force over the 512 candidates; GL(3,2) is tiny
  for (int bits = 0; bits < 512; ++bits) {
    F2Matrix b{};
    for (int k = 0; k < 9; ++k) b[k / 3][k % 3] = (bits >> k) & 1;
    bool ok = true;
    for (int v = 1; v < 8 && ok; ++v) ok = apply_f2(a, apply_f2(b, v)) == v;
    if (ok) return b;
  }
  throw std::invalid_argument("matrix is singular over F_2");
}

/// Action on the nonzero vectors of F_2^3; vector with bits v <-> point v.
inline Permutation projective_action(const F2Matrix& a) {
  std::vector<Permutation::point_type> img(7);
  for (int v = 1; v < 8; ++v) img[v - 1] = static_cast<Permutation::point_type>(apply_f2(a, v) - 1);
  return Permutation::from_images(std::move(img));
}

}  // namespace detail

/// Three involutions of GL(3,2) on the points of the Fano plane, against their
/// inverse transposes on the lines. Branch labels 0, 1 and an abstract lambda.
inline ProductMonodromy fano() {
  using detail::F2Matrix;
  const std::array<F2Matrix, 3> mats{F2Matrix{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}},
                                   F2Matrix{{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}},
                                   F2Matrix{{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}};
  const std::array<const char*, 3> names{"0", "1", "lambda"};
  ProductMonodromy pm{7, 7, {}};
  for (std::size_t k = 0; k < 3; ++k)
    pm.labels.push_back({names[k], detail::projective_action(mats[k]),
                         detail::projective_action(detail::transpose(detail::inverse_f2(mats[k])))});
  return pm;
}

/// Point v lies on line w iff the F_2 dot product of their bit vectors vanishes.
inline bool fano_incident(std::size_t point, std::size_t line) {
  return std::popcount(static_cast<unsigned>((point + 1) & (line + 1))) % 2 == 0;
}

struct BranchesAtInfinity {
  std::size_t branches = 0;
  bool irreducible_advisory = false;  // sufficient condition only
};

inline BranchesAtInfinity gcd_branches(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("gcd_branches: degrees must be positive");
  const auto d = std::gcd(n, m);
  return {d, d == 1};
}

}  // namespace belyi

#endif  // BELYI_DIFFPOLY_HPP
