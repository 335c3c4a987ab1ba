#ifndef BELYI_GROUPS_ABELIAN_HPP
#define BELYI_GROUPS_ABELIAN_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/groups/group.hpp"

namespace belyi {

struct Residue2 {
  std::uint32_t x = 0, y = 0;
  friend bool operator==(const Residue2&, const Residue2&) = default;
  friend auto operator<=>(const Residue2&, const Residue2&) = default;
};

}  // namespace belyi

template <>
struct std::hash<belyi::Residue2> {
  std::size_t operator()(const belyi::Residue2& r) const noexcept {
    return (static_cast<std::size_t>(r.x) << 32) ^ r.y;
  }
};

namespace belyi {

/// (Z/n)^2, written additively. Conjugation is trivial, so every element is
/// its own class.
class CyclicSquare {
public:
  using element_type = Residue2;

  explicit CyclicSquare(std::uint32_t n) : n_(n) {
    if (n < 1 || n > 4096) throw std::invalid_argument("znxzn: n must be in 1..4096");
  }

  std::uint32_t modulus() const { return n_; }
  std::string name() const { return "znxzn:" + std::to_string(n_); }
  Residue2 identity() const { return {}; }
  Residue2 multiply(const Residue2& a, const Residue2& b) const {
    return {(a.x + b.x) % n_, (a.y + b.y) % n_};
  }
  Residue2 inverse(const Residue2& a) const { return {(n_ - a.x) % n_, (n_ - a.y) % n_}; }
  std::uint64_t order() const { return std::uint64_t{n_} * n_; }
  bool contains(const Residue2& a) const { return a.x < n_ && a.y < n_; }
  ClassKey class_key(const Residue2& a) const { return {a.x, a.y}; }
  std::uint64_t dense_index(const Residue2& a) const { return std::uint64_t{a.x} * n_ + a.y; }
  std::uint64_t element_order(const Residue2& a) const {
    return n_ / std::gcd(n_, std::gcd(a.x, a.y));
  }
  std::vector<Residue2> generators() const {
    if (n_ == 1) return {};
    return {{1, 0}, {0, 1}};
  }

  template <class F>
  void for_each_element(F&& f) const {
    for (std::uint32_t x = 0; x < n_; ++x)
      for (std::uint32_t y = 0; y < n_; ++y) f(Residue2{x, y});
  }

  /// <a, b> = G iff the 2x2 determinant is a unit mod n.
  std::optional<bool> generation_certificate(const std::vector<Residue2>& gens) const {
    if (gens.size() != 2) return std::nullopt;
    const std::int64_t det = (std::int64_t{gens[0].x} * gens[1].y -
                              std::int64_t{gens[0].y} * gens[1].x) % n_;
    return std::gcd<std::int64_t, std::int64_t>((det + n_) % n_, n_) == 1;
  }

  Residue2 make(long long x, long long y) const {
    auto r = [this](long long v) {
      return static_cast<std::uint32_t>(((v % n_) + n_) % n_);
    };
    return {r(x), r(y)};
  }

  Residue2 negate(const Residue2& a) const { return inverse(a); }

private:
  std::uint32_t n_;
};

}  // namespace belyi

#endif  // BELYI_GROUPS_ABELIAN_HPP
