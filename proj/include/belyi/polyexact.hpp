#ifndef BELYI_POLYEXACT_HPP
#define BELYI_POLYEXACT_HPP

// Exact polynomials over Q and the explicit two-critical-value polynomials:
// Chebyshev T_n, Belyi P_{m,r} and the sporadic quintic.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace belyi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.str(); }

class RatPoly {
public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static RatPoly constant(const Rational& a) { return RatPoly(std::vector<Rational>{a}); }
  static RatPoly monomial(const Rational& a, std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return RatPoly(std::move(c));
  }
  static RatPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& z) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  double evaluate(double z) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->convert_to<double>();
    return acc;
  }

  RatPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long long>(k));
    return RatPoly(std::move(d));
  }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  RatPoly& operator*=(const Rational& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(RatPoly a) { return a *= Rational(-1); }
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
  }

  RatPoly pow(unsigned k) const {
    RatPoly r = constant(1), b = *this;
    for (; k; k >>= 1, b = b * b)
      if (k & 1) r = r * b;
    return r;
  }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    std::vector<Rational> q(a.degree() >= db ? a.degree() - db + 1 : 0);
    for (int k = a.degree(); k >= db; --k) {
      if (rem[k] == 0) continue;
      const Rational f = rem[k] / b.leading();
      q[k - db] = f;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(rem))};
  }

  RatPoly monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
  }

  /// P(a z + b).
  RatPoly compose_affine(const Rational& a, const Rational& b) const {
    const RatPoly lin{b, a};
    RatPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const auto& a = c_[k];
      if (a == 0) continue;
      std::string coef = a.str();
      if (!s.empty()) {
        if (a < 0) {
          s += " - ";
          coef = Rational(-a).str();
        } else {
          s += " + ";
        }
      }
      if (k == 0) {
        s += coef;
        continue;
      }
      if (coef == "1") coef.clear();
      else if (coef == "-1") coef = "-";
      else coef += "*";
      s += coef + "z" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
  }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // ascending degree
};

/// Monic gcd; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline bool divides(const RatPoly& d, const RatPoly& p) { return divmod(p, d).second.is_zero(); }

/// Product of the distinct irreducible factors of P (monic).
inline RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? RatPoly{} : RatPoly::constant(1);
  return divmod(p.monic(), gcd(p, p.derivative())).first;
}

/// T_n and U_{n-1} from the three-term recurrences.
inline std::pair<RatPoly, RatPoly> chebyshev_pair(unsigned n) {
  if (n == 0) throw std::invalid_argument("chebyshev_pair: n must be positive");
  const RatPoly z = RatPoly::x();
  RatPoly t_prev = RatPoly::constant(1), t = z;          // T_0, T_1
  RatPoly u_prev = RatPoly::constant(1), u = 2 * z;      // U_0, U_1
  if (n == 1) return {t, u_prev};
  for (unsigned k = 1; k < n; ++k) {
    auto t_next = Rational(2) * z * t - t_prev;
    t_prev = std::move(t);
    t = std::move(t_next);
  }
  for (unsigned k = 1; k + 1 < n; ++k) {
    auto u_next = Rational(2) * z * u - u_prev;
    u_prev = std::move(u);
    u = std::move(u_next);
  }
  return {t, u};
}

/// T_n^2 - 1 == (z^2 - 1) U_{n-1}^2 exactly.
inline bool verify_pell_identity(unsigned n) {
  auto [t, u] = chebyshev_pair(n);
  const RatPoly z2m1{-1, 0, 1};
  return t * t - RatPoly::constant(1) == z2m1 * u * u;
}

/// z^m (1-z)^r (m+r)^(m+r) / (m^m r^r); maps m/(m+r) to 1.
inline RatPoly belyi_poly(unsigned m, unsigned r) {
  if (m == 0 || r == 0) throw std::invalid_argument("belyi_poly: m and r must be positive");
  Integer num = boost::multiprecision::pow(Integer(m + r), m + r);
  Integer den = boost::multiprecision::pow(Integer(m), m) * boost::multiprecision::pow(Integer(r), r);
  RatPoly p = RatPoly::monomial(Rational(num, den), m) * RatPoly{1, -1}.pow(r);
  const Rational q(m, m + r);
  if (p(0) != 0 || p(1) != 0 || p(q) != 1)
    throw std::logic_error("belyi_poly: normalization check failed");
  return p;
}

/// (3/16)(z^5 - (10/3) z^3 + 5 z + 8/3), critical values {0, 1}.
inline RatPoly special_degree5() {
  RatPoly p = Rational(3, 16) * RatPoly{Rational(8, 3), 5, 0, Rational(-10, 3), 0, 1};
  const RatPoly expect_deriv = Rational(15, 16) * RatPoly{-1, 0, 1}.pow(2);
  if (p.derivative() != expect_deriv || p(-1) != 0 || p(1) != 1)
    throw std::logic_error("special_degree5: self-check failed");
  return p;
}

/// Every critical point of P maps into `values`. Decided by divisibility of
/// prod (P - c) by the squarefree part of P'; no roots are computed.
inline bool critical_values_within(const RatPoly& p, const std::vector<Rational>& values) {
  const auto d = p.derivative();
  if (d.is_zero()) throw std::domain_error("critical_values_within: constant polynomial");
  RatPoly prod = RatPoly::constant(1);
  for (const auto& c : values) prod = prod * (p - RatPoly::constant(c));
  return divides(squarefree_part(d), prod);
}

inline RatPoly apply_affine(const RatPoly& p, const Rational& a, const Rational& b) {
  if (a == 0) throw std::domain_error("apply_affine: a must be nonzero");
  return p.compose_affine(a, b);
}

/// Monic with vanishing z^(n-1) coefficient.
inline bool is_normalized(const RatPoly& p) {
  if (p.degree() < 1 || p.leading() != 1) return false;
  return p.degree() == 1 || p.coeff(static_cast<std::size_t>(p.degree() - 1)) == 0;
}

namespace detail {

/// Exact k-th root of a nonnegative integer, if any.
inline std::optional<Integer> exact_root(const Integer& x, unsigned k) {
  if (x < 0) return std::nullopt;
  if (x < 2) return x;
  Integer lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, k) <= x) hi *= 2;
  while (lo + 1 < hi) {
    Integer mid = (lo + hi) / 2;
    (boost::multiprecision::pow(mid, k) <= x ? lo : hi) = mid;
  }
  if (boost::multiprecision::pow(lo, k) == x) return lo;
  return std::nullopt;
}

}  // namespace detail

struct Normalization {
  std::optional<RatPoly> normalized;  // P(a z + b)
  Rational scale = 0;                 // a
  Rational shift = 0;                 // b
  std::string reason;                 // set when not Q-normalizable
};

/// Right-affine normal form over Q: a^n lc(P) = 1 and the z^(n-1) term removed.
/// Reports instead of adjoining radicals when a is irrational.
inline Normalization normalize_over_q(const RatPoly& p) {
  Normalization out;
  const int n = p.degree();
  if (n < 1) {
    out.reason = "constant polynomial";
    return out;
  }
  // a^n = 1 / lc
  Rational target = Rational(1) / p.leading();
  bool negative = target < 0;
  if (negative && n % 2 == 0) {
    out.reason = "leading coefficient has no real " + std::to_string(n) + "-th root";
    return out;
  }
  Rational mag = negative ? Rational(-target) : target;
  auto rn = detail::exact_root(numerator(mag), static_cast<unsigned>(n));
  auto rd = detail::exact_root(denominator(mag), static_cast<unsigned>(n));
  if (!rn || !rd) {
    out.reason = "not Q-normalizable: " + mag.str() + " is not a rational " + std::to_string(n) +
                 "-th power";
    return out;
  }
  Rational a(*rn, *rd);
  if (negative) a = -a;
  // P(a z + b): z^(n-1) coefficient is a^(n-1) (n lc b + c_{n-1}).
  const Rational b = -p.coeff(static_cast<std::size_t>(n - 1)) / (p.leading() * n);
  out.scale = a;
  out.shift = b;
  out.normalized = p.compose_affine(a, b);
  return out;
}

}  // namespace belyi

#endif  // BELYI_POLYEXACT_HPP
