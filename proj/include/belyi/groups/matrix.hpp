#ifndef BELYI_GROUPS_MATRIX_HPP
#define BELYI_GROUPS_MATRIX_HPP

// SL(2,p), PSL(2,p) and GL(3,2). Conjugacy classes are computed once by orbit
// search under conjugation by the generators and cached in a table indexed by
// the matrix entries.

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/groups/group.hpp"

namespace belyi {

struct Mat2 {
  std::uint16_t a = 1, b = 0, c = 0, d = 1;  // [[a, b], [c, d]]
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

struct Mat3F2 {
  std::uint16_t bits = 0b100010001;  // row r, column c at bit 3r + c
  int at(int r, int c) const { return (bits >> (3 * r + c)) & 1; }
  friend bool operator==(const Mat3F2&, const Mat3F2&) = default;
  friend auto operator<=>(const Mat3F2&, const Mat3F2&) = default;
};

}  // namespace belyi

template <>
struct std::hash<belyi::Mat2> {
  std::size_t operator()(const belyi::Mat2& m) const noexcept {
    return (static_cast<std::size_t>(m.a) << 48) ^ (static_cast<std::size_t>(m.b) << 32) ^
           (static_cast<std::size_t>(m.c) << 16) ^ m.d;
  }
};

template <>
struct std::hash<belyi::Mat3F2> {
  std::size_t operator()(const belyi::Mat3F2& m) const noexcept { return m.bits; }
};

namespace belyi {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

/// Class ids for every element, found by BFS under conjugation by generators.
/// `index` maps an element to a slot of a table of size `slots`.
template <class E, class Mul, class Inv, class Index>
std::vector<std::int32_t> class_table(const std::vector<E>& elements, const std::vector<E>& gens,
                                      std::size_t slots, Mul mul, Inv inv, Index index,
                                      std::int32_t& class_count) {
  std::vector<std::int32_t> table(slots, -1);
  std::vector<E> ginv;
  for (const auto& g : gens) ginv.push_back(inv(g));
  class_count = 0;
  for (const auto& x : elements) {
    if (table[index(x)] >= 0) continue;
    const std::int32_t id = class_count++;
    std::deque<E> queue{x};
    table[index(x)] = id;
    while (!queue.empty()) {
      E y = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        E z = mul(mul(gens[k], y), ginv[k]);
        if (table[index(z)] < 0) {
          table[index(z)] = id;
          queue.push_back(z);
        }
      }
    }
  }
  return table;
}

}  // namespace detail

/// SL(2, F_p).
class SL2 {
public:
  using element_type = Mat2;

  explicit SL2(unsigned p) : p_(p) {
    if (!is_prime(p) || p > 31) throw std::invalid_argument("sl2: p must be a prime <= 31");
    build();
  }

  unsigned prime() const { return p_; }
  std::string name() const { return "sl2:" + std::to_string(p_); }
  Mat2 identity() const { return {}; }
  Mat2 multiply(const Mat2& x, const Mat2& y) const {
    const unsigned p = p_;
    return {static_cast<std::uint16_t>((x.a * y.a + x.b * y.c) % p),
            static_cast<std::uint16_t>((x.a * y.b + x.b * y.d) % p),
            static_cast<std::uint16_t>((x.c * y.a + x.d * y.c) % p),
            static_cast<std::uint16_t>((x.c * y.b + x.d * y.d) % p)};
  }
  Mat2 inverse(const Mat2& x) const {
    return {x.d, static_cast<std::uint16_t>((p_ - x.b) % p_),
            static_cast<std::uint16_t>((p_ - x.c) % p_), x.a};
  }
  std::uint64_t order() const { return std::uint64_t{p_} * (std::uint64_t{p_} * p_ - 1); }
  bool contains(const Mat2& x) const {
    return x.a < p_ && x.b < p_ && x.c < p_ && x.d < p_ &&
           (x.a * x.d + p_ * p_ - (x.b * x.c) % p_) % p_ == 1;
  }
  ClassKey class_key(const Mat2& x) const { return {classes_->at(slot(x))}; }
  std::uint64_t dense_index(const Mat2& x) const {
    return static_cast<std::uint64_t>(dense_->at(slot(x)));
  }
  std::vector<Mat2> generators() const { return {{1, 1, 0, 1}, {1, 0, 1, 1}}; }

  template <class F>
  void for_each_element(F&& f) const {
    for (const auto& x : *elements_) f(x);
  }

  Mat2 make(long long a, long long b, long long c, long long d) const {
    auto r = [this](long long v) {
      return static_cast<std::uint16_t>(((v % p_) + p_) % p_);
    };
    Mat2 m{r(a), r(b), r(c), r(d)};
    if (!contains(m)) throw std::invalid_argument("matrix does not have determinant 1");
    return m;
  }

private:
  std::size_t slot(const Mat2& x) const {
    return ((static_cast<std::size_t>(x.a) * p_ + x.b) * p_ + x.c) * p_ + x.d;
  }
  void build() {
    auto els = std::make_shared<std::vector<Mat2>>();
    for (unsigned a = 0; a < p_; ++a)
      for (unsigned b = 0; b < p_; ++b)
        for (unsigned c = 0; c < p_; ++c)
          for (unsigned d = 0; d < p_; ++d)
            if ((a * d + p_ * p_ - (b * c) % p_) % p_ == 1)
              els->push_back({static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                              static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)});
    const std::size_t slots = static_cast<std::size_t>(p_) * p_ * p_ * p_;
    auto dense = std::make_shared<std::vector<std::int32_t>>(slots, -1);
    for (std::size_t i = 0; i < els->size(); ++i) (*dense)[slot((*els)[i])] = static_cast<std::int32_t>(i);
    std::int32_t count = 0;
    classes_ = std::make_shared<const std::vector<std::int32_t>>(detail::class_table(
        *els, generators(), slots, [this](const auto& x, const auto& y) { return multiply(x, y); },
        [this](const auto& x) { return inverse(x); }, [this](const auto& x) { return slot(x); }, count));
    elements_ = els;
    dense_ = dense;
  }

  unsigned p_;
  std::shared_ptr<const std::vector<Mat2>> elements_;
  std::shared_ptr<const std::vector<std::int32_t>> classes_;
  std::shared_ptr<const std::vector<std::int32_t>> dense_;
};

/// PSL(2, F_p) = SL(2, F_p) / {+-I}. Each coset is stored by the member whose
/// first nonzero entry (in a, b, c, d order) lies in 1..(p-1)/2.
class PSL2 {
public:
  using element_type = Mat2;

  explicit PSL2(unsigned p) : sl_(p) {
    if (p == 2) throw std::invalid_argument("psl2: p must be odd");
    build();
  }

  unsigned prime() const { return sl_.prime(); }
  std::string name() const { return "psl2:" + std::to_string(prime()); }
  Mat2 identity() const { return {}; }
  Mat2 multiply(const Mat2& x, const Mat2& y) const { return canonical(sl_.multiply(x, y)); }
  Mat2 inverse(const Mat2& x) const { return canonical(sl_.inverse(x)); }
  std::uint64_t order() const { return sl_.order() / 2; }
  bool contains(const Mat2& x) const { return sl_.contains(x) && canonical(x) == x; }
  ClassKey class_key(const Mat2& x) const { return {classes_->at(sl_index(x))}; }
  std::uint64_t dense_index(const Mat2& x) const {
    return static_cast<std::uint64_t>(dense_->at(sl_index(x)));
  }
  std::vector<Mat2> generators() const { return {{1, 1, 0, 1}, {1, 0, 1, 1}}; }

  template <class F>
  void for_each_element(F&& f) const {
    for (const auto& x : *elements_) f(x);
  }

  Mat2 canonical(const Mat2& x) const {
    const unsigned p = prime();
    const std::uint16_t first = x.a ? x.a : x.b ? x.b : x.c ? x.c : x.d;
    if (first <= (p - 1) / 2) return x;
    auto neg = [p](std::uint16_t v) { return static_cast<std::uint16_t>((p - v) % p); };
    return {neg(x.a), neg(x.b), neg(x.c), neg(x.d)};
  }

  Mat2 make(long long a, long long b, long long c, long long d) const {
    return canonical(sl_.make(a, b, c, d));
  }

private:
  std::size_t sl_index(const Mat2& x) const { return sl_.dense_index(x); }
  void build() {
    auto els = std::make_shared<std::vector<Mat2>>();
    sl_.for_each_element([&](const Mat2& x) {
      if (canonical(x) == x) els->push_back(x);
    });
    auto dense = std::make_shared<std::vector<std::int32_t>>(sl_.order(), -1);
    for (std::size_t i = 0; i < els->size(); ++i)
      (*dense)[sl_index((*els)[i])] = static_cast<std::int32_t>(i);
    std::int32_t count = 0;
    classes_ = std::make_shared<const std::vector<std::int32_t>>(detail::class_table(
        *els, generators(), sl_.order(), [this](const auto& x, const auto& y) { return multiply(x, y); },
        [this](const auto& x) { return inverse(x); }, [this](const auto& x) { return sl_index(x); }, count));
    elements_ = els;
    dense_ = dense;
  }

  SL2 sl_;
  std::shared_ptr<const std::vector<Mat2>> elements_;
  std::shared_ptr<const std::vector<std::int32_t>> classes_;
  std::shared_ptr<const std::vector<std::int32_t>> dense_;
};

/// GL(3, F_2), order 168, acting on column vectors with bit c = coordinate c.
class GL3F2 {
public:
  using element_type = Mat3F2;

  GL3F2() { build(); }

  std::string name() const { return "gl3f2"; }
  Mat3F2 identity() const { return {}; }
  Mat3F2 multiply(const Mat3F2& x, const Mat3F2& y) const {
    std::uint16_t bits = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        int v = 0;
        for (int k = 0; k < 3; ++k) v ^= x.at(r, k) & y.at(k, c);
        bits |= static_cast<std::uint16_t>(v << (3 * r + c));
      }
    return {bits};
  }
  Mat3F2 inverse(const Mat3F2& x) const {
    auto y = x;
    for (;;) {  // x^168 = 1
      auto z = multiply(y, x);
      if (z == identity()) return y;
      y = z;
    }
  }
  std::uint64_t order() const { return 168; }
  bool contains(const Mat3F2& x) const { return x.bits < 512 && (*index_)[x.bits] >= 0; }
  ClassKey class_key(const Mat3F2& x) const { return {(*classes_)[x.bits]}; }
  std::uint64_t dense_index(const Mat3F2& x) const {
    return static_cast<std::uint64_t>((*index_)[x.bits]);
  }
  std::vector<Mat3F2> generators() const {
    // elementary e_{01} and the cyclic coordinate shift
    return {{0b100010011}, {0b001100010}};
  }

  template <class F>
  void for_each_element(F&& f) const {
    for (const auto& x : *elements_) f(x);
  }

  /// Image of the nonzero vector v (bit c = coordinate c).
  static int apply(const Mat3F2& m, int v) {
    int out = 0;
    for (int r = 0; r < 3; ++r) {
      int bit = 0;
      for (int c = 0; c < 3; ++c) bit ^= m.at(r, c) & ((v >> c) & 1);
      out |= bit << r;
    }
    return out;
  }

private:
  void build() {
    auto els = std::make_shared<std::vector<Mat3F2>>();
    auto idx = std::make_shared<std::vector<std::int32_t>>(512, -1);
    for (std::uint16_t bits = 0; bits < 512; ++bits) {
      Mat3F2 m{bits};
      bool bijective = true;
      int seen = 0;
      for (int v = 1; v < 8; ++v) {
        int w = apply(m, v);
        if (w == 0 || (seen >> w) & 1) bijective = false;
        seen |= 1 << w;
      }
      if (bijective) {
        (*idx)[bits] = static_cast<std::int32_t>(els->size());
        els->push_back(m);
      }
    }
    elements_ = els;
    index_ = idx;
    std::int32_t count = 0;
    classes_ = std::make_shared<const std::vector<std::int32_t>>(detail::class_table(
        *els, generators(), 512, [this](const auto& x, const auto& y) { return multiply(x, y); },
        [this](const auto& x) { return inverse(x); }, [](const auto& x) { return std::size_t{x.bits}; },
        count));
  }

  std::shared_ptr<const std::vector<Mat3F2>> elements_;
  std::shared_ptr<const std::vector<std::int32_t>> index_;
  std::shared_ptr<const std::vector<std::int32_t>> classes_;
};

}  // namespace belyi

#endif  // BELYI_GROUPS_MATRIX_HPP
