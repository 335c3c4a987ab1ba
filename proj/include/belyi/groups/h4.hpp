#ifndef BELYI_GROUPS_H4_HPP
#define BELYI_GROUPS_H4_HPP

// (H x H) x| Z/4 where 1 in Z/4 acts by swapping the two coordinates:
//   (a, b, k)(c, d, l) = (a d, b c, k + l)  for odd k
//                        (a c, b d, k + l)  for even k.
// The subgroup with k even is H x H x Z/2, of index 2.
//
// Conjugacy in the whole group: for even k the unordered pair of H-classes of
// the coordinates together with k; for odd k the H-class of the product of the
// coordinates together with k. Inside the index-2 subgroup the pair is ordered.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "belyi/groups/enumerated.hpp"
#include "belyi/groups/group.hpp"

namespace belyi {

struct H4Element {
  std::uint16_t h1 = 0, h2 = 0;
  std::uint8_t k = 0;
  friend bool operator==(const H4Element&, const H4Element&) = default;
  friend auto operator<=>(const H4Element&, const H4Element&) = default;
};

}  // namespace belyi

template <>
struct std::hash<belyi::H4Element> {
  std::size_t operator()(const belyi::H4Element& e) const noexcept {
    return (std::size_t{e.h1} << 24) ^ (std::size_t{e.h2} << 2) ^ e.k;
  }
};

namespace belyi {

template <FiniteGroup G>
class H4Group {
public:
  using element_type = H4Element;
  using base_group = EnumeratedGroup<G>;

  explicit H4Group(G base) : h_(std::move(base)) {}

  const base_group& h() const { return h_; }
  std::string name() const { return "h4:" + h_.name(); }
  H4Element identity() const { return {id(), id(), 0}; }
  H4Element multiply(const H4Element& x, const H4Element& y) const {
    const bool odd = x.k % 2;
    return {mul(x.h1, odd ? y.h2 : y.h1), mul(x.h2, odd ? y.h1 : y.h2),
            static_cast<std::uint8_t>((x.k + y.k) % 4)};
  }
  H4Element inverse(const H4Element& x) const {
    const auto a = inv(x.h1), b = inv(x.h2);
    const bool odd = x.k % 2;
    return {odd ? b : a, odd ? a : b, static_cast<std::uint8_t>((4 - x.k) % 4)};
  }
  std::uint64_t order() const { return 4 * h_.order() * h_.order(); }
  bool contains(const H4Element& x) const {
    return x.h1 < h_.order() && x.h2 < h_.order() && x.k < 4;
  }
  ClassKey class_key(const H4Element& x) const {
    if (x.k % 2) return {x.k, h_.class_id(mul(x.h1, x.h2))};
    auto c1 = h_.class_id(x.h1), c2 = h_.class_id(x.h2);
    return {x.k, std::min(c1, c2), std::max(c1, c2)};
  }
  /// Conjugacy key relative to the index-2 subgroup (k even); only meaningful
  /// for elements of that subgroup.
  ClassKey subgroup_class_key(const H4Element& x) const {
    return {x.k, h_.class_id(x.h1), h_.class_id(x.h2)};
  }
  bool in_index_two(const H4Element& x) const { return x.k % 2 == 0; }
  std::uint64_t dense_index(const H4Element& x) const {
    return (std::uint64_t{x.h1} * h_.order() + x.h2) * 4 + x.k;
  }
  std::vector<H4Element> generators() const {
    std::vector<H4Element> out;
    for (auto s : h_.generators()) out.push_back({static_cast<std::uint16_t>(s), id(), 0});
    out.push_back({id(), id(), 1});
    return out;
  }

  template <class F>
  void for_each_element(F&& f) const {
    const auto n = static_cast<std::uint16_t>(h_.order());
    for (std::uint16_t a = 0; a < n; ++a)
      for (std::uint16_t b = 0; b < n; ++b)
        for (std::uint8_t k = 0; k < 4; ++k) f(H4Element{a, b, k});
  }

  H4Element make(const typename G::element_type& x, const typename G::element_type& y,
                 int k) const {
    return {static_cast<std::uint16_t>(h_.index_of(x)), static_cast<std::uint16_t>(h_.index_of(y)),
            static_cast<std::uint8_t>(((k % 4) + 4) % 4)};
  }

private:
  std::uint16_t id() const { return static_cast<std::uint16_t>(h_.identity()); }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return static_cast<std::uint16_t>(h_.multiply(a, b));
  }
  std::uint16_t inv(std::uint16_t a) const { return static_cast<std::uint16_t>(h_.inverse(a)); }

  base_group h_;
};

}  // namespace belyi

#endif  // BELYI_GROUPS_H4_HPP
