#ifndef BELYI_GROUPS_PERM_GROUP_HPP
#define BELYI_GROUPS_PERM_GROUP_HPP

// A small permutation group given by generators, with its elements and
// conjugacy classes computed eagerly. Intended for groups of a few thousand
// elements (dihedral groups, small products).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "belyi/groups/group.hpp"
#include "belyi/perm.hpp"

namespace belyi {

class PermGroup {
public:
  using element_type = Permutation;

  PermGroup(std::string name, std::size_t degree, std::vector<Permutation> gens,
            std::uint64_t cap = 200'000)
      : name_(std::move(name)), degree_(degree), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("generator of wrong degree");
    auto c = closure(std::span<const Permutation>(gens_), cap, degree_);
    if (c.overflow) throw std::invalid_argument("permutation group too large");
    auto data = std::make_shared<Data>();
    data->elements = std::move(c.elements);
    for (std::size_t i = 0; i < data->elements.size(); ++i)
      data->index.emplace(data->elements[i], static_cast<std::uint32_t>(i));
    data->class_id.assign(data->elements.size(), -1);
    std::int64_t next = 0;
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
      if (data->class_id[i] >= 0) continue;
      std::deque<std::size_t> queue{i};
      data->class_id[i] = next;
      while (!queue.empty()) {
        const auto& x = data->elements[queue.front()];
        queue.pop_front();
        for (const auto& g : gens_) {
          auto j = data->index.at(conjugate(x, g));
          if (data->class_id[j] < 0) {
            data->class_id[j] = next;
            queue.push_back(j);
          }
        }
      }
      ++next;
    }
    data_ = std::move(data);
  }

  /// Dihedral group of order 2n acting on the n-gon.
  static PermGroup dihedral(std::size_t n) {
    if (n < 3) throw std::invalid_argument("dihedral: n must be at least 3");
    std::vector<Permutation::point_type> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Permutation::point_type>((n - i) % n);
    return PermGroup("dihedral:" + std::to_string(n), n,
                     {standard_cycle(n), Permutation::from_images(std::move(refl))});
  }

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  Permutation identity() const { return Permutation(degree_); }
  Permutation multiply(const Permutation& x, const Permutation& y) const { return compose(x, y); }
  Permutation inverse(const Permutation& x) const { return x.inverse(); }
  std::uint64_t order() const { return data_->elements.size(); }
  bool contains(const Permutation& x) const { return data_->index.contains(x); }
  ClassKey class_key(const Permutation& x) const { return {data_->class_id.at(data_->index.at(x))}; }
  std::uint64_t dense_index(const Permutation& x) const { return data_->index.at(x); }
  std::uint64_t element_order(const Permutation& x) const { return x.order(); }
  std::vector<Permutation> generators() const { return gens_; }

  template <class F>
  void for_each_element(F&& f) const {
    for (const auto& x : data_->elements) f(x);
  }

private:
  struct Data {
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::uint32_t> index;
    std::vector<std::int64_t> class_id;
  };

  std::string name_;
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const Data> data_;
};

}  // namespace belyi

#endif  // BELYI_GROUPS_PERM_GROUP_HPP
