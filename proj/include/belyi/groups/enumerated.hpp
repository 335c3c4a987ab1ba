#ifndef BELYI_GROUPS_ENUMERATED_HPP
#define BELYI_GROUPS_ENUMERATED_HPP

// A small group with its multiplication table: elements are indices into the
// enumeration order of the underlying group.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "belyi/groups/group.hpp"

namespace belyi {

template <FiniteGroup G>
class EnumeratedGroup {
public:
  using element_type = std::uint32_t;
  using base_element = typename G::element_type;
  static constexpr std::uint64_t max_order = 3000;

  explicit EnumeratedGroup(G base) : base_(std::move(base)) {
    if (base_.order() > max_order)
      throw std::invalid_argument(base_.name() + " is too large to tabulate");
    auto d = std::make_shared<Data>();
    base_.for_each_element([&](const base_element& x) {
      d->index.emplace(x, static_cast<std::uint32_t>(d->elements.size()));
      d->elements.push_back(x);
    });
    const std::size_t n = d->elements.size();
    d->mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d->mul[i * n + j] =
            static_cast<std::uint16_t>(d->index.at(base_.multiply(d->elements[i], d->elements[j])));
    d->inv.resize(n);
    d->cls.resize(n);
    std::unordered_map<ClassKey, std::int64_t, ClassKeyHash> ids;
    for (std::size_t i = 0; i < n; ++i) {
      d->inv[i] = static_cast<std::uint16_t>(d->index.at(base_.inverse(d->elements[i])));
      auto key = base_.class_key(d->elements[i]);
      auto it = ids.emplace(std::move(key), static_cast<std::int64_t>(ids.size())).first;
      d->cls[i] = it->second;
    }
    d->identity = d->index.at(base_.identity());
    data_ = std::move(d);
  }

  const G& base() const { return base_; }
  std::string name() const { return base_.name(); }
  std::uint32_t identity() const { return data_->identity; }
  std::uint32_t multiply(std::uint32_t x, std::uint32_t y) const {
    return data_->mul[std::size_t{x} * data_->elements.size() + y];
  }
  std::uint32_t inverse(std::uint32_t x) const { return data_->inv[x]; }
  std::uint64_t order() const { return data_->elements.size(); }
  bool contains(std::uint32_t x) const { return x < data_->elements.size(); }
  std::int64_t class_id(std::uint32_t x) const { return data_->cls[x]; }
  ClassKey class_key(std::uint32_t x) const { return {class_id(x)}; }
  std::uint64_t dense_index(std::uint32_t x) const { return x; }
  std::vector<std::uint32_t> generators() const {
    std::vector<std::uint32_t> out;
    for (const auto& g : base_.generators()) out.push_back(index_of(g));
    return out;
  }

  template <class F>
  void for_each_element(F&& f) const {
    for (std::uint32_t i = 0; i < data_->elements.size(); ++i) f(i);
  }

  const base_element& element(std::uint32_t i) const { return data_->elements.at(i); }
  std::uint32_t index_of(const base_element& x) const {
    auto it = data_->index.find(x);
    if (it == data_->index.end()) throw std::invalid_argument("element not in " + name());
    return it->second;
  }

private:
  struct Data {
    std::vector<base_element> elements;
    std::unordered_map<base_element, std::uint32_t> index;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> inv;
    std::vector<std::int64_t> cls;
    std::uint32_t identity = 0;
  };

  G base_;
  std::shared_ptr<const Data> data_;
};

}  // namespace belyi

#endif  // BELYI_GROUPS_ENUMERATED_HPP
