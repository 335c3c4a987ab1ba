#ifndef BELYI_BEAUVILLE_SN_HPP
#define BELYI_BEAUVILLE_SN_HPP

// The explicit S_n structures
//   a  = (1, p+2, p+1)(2, p+3),  c  = (1, ..., p)(p+1, ..., n),
//   a' = s^-1,                   c' = (1,2) s^2,  with s = (1, ..., n),
// and the prime bookkeeping they need.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/beauville/core.hpp"
#include "belyi/beauville/reality.hpp"
#include "belyi/groups/matrix.hpp"
#include "belyi/groups/symmetric.hpp"
#include "belyi/perm.hpp"

namespace belyi {

class precondition_error : public std::invalid_argument {
public:
  explicit precondition_error(std::vector<std::string> violations)
      : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
    return out;
  }
  std::vector<std::string> violations_;
};

struct SnExample {
  std::size_t n = 0, p = 0;
  Permutation a, c, a2, c2;
  Tristate generates1 = Tristate::unknown, generates2 = Tristate::unknown;
  std::set<CycleType> types1, types2;  // cycle types of nontrivial powers of a, c, ac (resp. a', c', a'c')
  bool types_disjoint = false;
  bool no_inverting_conjugator = false;
  RealityVerdict reality = RealityVerdict::hypotheses_not_met;
  std::vector<std::string> transcript;

  bool verified() const {
    return generates1 == Tristate::yes && generates2 == Tristate::yes && types_disjoint &&
           no_inverting_conjugator;
  }
  UnmixedStructure<Permutation> structure() const { return {a, c, a2, c2}; }
};

inline std::vector<std::string> sn_example_violations(std::size_t n, std::size_t p) {
  std::vector<std::string> v;
  if (n < 7) v.push_back("n >= 7 fails: n = " + std::to_string(n));
  if (p < 3 || !is_prime(p)) v.push_back("p must be an odd prime: p = " + std::to_string(p));
  if (p + 3 > n) v.push_back("p + 3 <= n fails: " + std::to_string(p + 3) + " > " + std::to_string(n));
  if (p > 0 && (n % p == 0 || n % p == 1))
    v.push_back("n mod p must avoid 0 and 1: " + std::to_string(n) + " = " + std::to_string(n % p) +
                " (mod " + std::to_string(p) + ")");
  return v;
}

namespace detail {

inline std::set<CycleType> power_types(const Permutation& x) {
  std::set<CycleType> out;
  const auto ord = x.order();
  for (std::uint64_t k = 1; k < ord; ++k) out.insert(cycle_type(x.pow(static_cast<long long>(k))));
  return out;
}

inline std::string join_types(const std::set<CycleType>& s) {
  std::string out;
  for (const auto& t : s) out += (out.empty() ? "" : " ") + t.to_string();
  return out;
}

}  // namespace detail

inline SnExample sn_example(std::size_t n, std::size_t p, ClosureBudget budget = {}) {
  if (auto v = sn_example_violations(n, p); !v.empty()) throw precondition_error(std::move(v));
  const int ni = static_cast<int>(n), pi = static_cast<int>(p);
  SnExample ex;
  ex.n = n;
  ex.p = p;
  ex.a = Permutation::from_cycles(n, {{1, pi + 2, pi + 1}, {2, pi + 3}});
  std::vector<int> head, tail, full;
  for (int i = 1; i <= pi; ++i) head.push_back(i);
  for (int i = pi + 1; i <= ni; ++i) tail.push_back(i);
  ex.c = Permutation::from_cycles(n, {head, tail});
  const auto s = standard_cycle(n);
  ex.a2 = s.inverse();
  ex.c2 = compose(Permutation::from_cycles(n, {{1, 2}}), compose(s, s));

  SymmetricGroup sym(n);
  auto& log = ex.transcript;
  log.push_back("a = " + ex.a.to_string() + ", c = " + ex.c.to_string());
  log.push_back("a' = " + ex.a2.to_string() + ", c' = " + ex.c2.to_string());
  const auto t1 = type_of(sym, ex.a, ex.c), t2 = type_of(sym, ex.a2, ex.c2);
  log.push_back("orders (a, c, ac) = " + t1.to_string() + ", (a', c', a'c') = " + t2.to_string());

  ex.generates1 = generates(sym, {ex.a, ex.c}, budget);
  ex.generates2 = generates(sym, {ex.a2, ex.c2}, budget);
  log.push_back("<a, c> = S_" + std::to_string(n) + ": " + to_string(ex.generates1));
  log.push_back("<a', c'> = S_" + std::to_string(n) + ": " + to_string(ex.generates2));

  for (const auto& x : {ex.a, ex.c, compose(ex.a, ex.c)}) ex.types1.merge(detail::power_types(x));
  for (const auto& x : {ex.a2, ex.c2, compose(ex.a2, ex.c2)}) ex.types2.merge(detail::power_types(x));
  ex.types_disjoint = true;
  for (const auto& t : ex.types1)
    if (ex.types2.contains(t)) {
      ex.types_disjoint = false;
      log.push_back("shared cycle type " + t.to_string());
    }
  log.push_back("types in Sigma(a, c): " + detail::join_types(ex.types1));
  log.push_back("types in Sigma(a', c'): " + detail::join_types(ex.types2));
  log.push_back(std::string("cycle types disjoint: ") + (ex.types_disjoint ? "yes" : "no"));

  ex.no_inverting_conjugator = !inverting_conjugator(ex.a, ex.c).has_value();
  log.push_back(std::string("no g with g a g^-1 = a^-1, g c g^-1 = c^-1: ") +
                (ex.no_inverting_conjugator ? "yes" : "no"));
  ex.reality = reality_verdict(sym, ex.structure(), default_aut_supply(sym)).verdict;
  log.push_back("reality verdict: " + to_string(ex.reality));
  return ex;
}

/// Least odd prime p <= bound with n mod p not in {0, 1}.
inline std::optional<std::uint64_t> find_prime(std::uint64_t n,
                                               std::optional<std::uint64_t> bound = std::nullopt) {
  if (n < 5) throw std::invalid_argument("find_prime: n must be at least 5");
  // without a bound, some prime up to n + 3 always works (n = 6 gives 7)
  const std::uint64_t limit = bound.value_or(n + 3);
  for (std::uint64_t p = 3; p <= limit; p += 2)
    if (is_prime(p) && n % p != 0 && n % p != 1) return p;
  return std::nullopt;
}

/// The prime from the existence argument: an odd prime dividing n - 2 for odd
/// n; for even n a prime other than 3 dividing n - 3, else a prime above 3
/// dividing n + 3. Undefined for n = 6.
inline std::optional<std::uint64_t> lemma_prime(std::uint64_t n) {
  if (n < 5) throw std::invalid_argument("lemma_prime: n must be at least 5");
  if (n == 6) return std::nullopt;
  auto least_factor = [](std::uint64_t m, std::uint64_t above) -> std::optional<std::uint64_t> {
    for (std::uint64_t p = above + 1; p <= m; ++p)
      if (m % p == 0 && is_prime(p)) return p;
    return std::nullopt;
  };
  if (n % 2) return least_factor(n - 2, 2);
  std::uint64_t m = n - 3;
  while (m % 3 == 0) m /= 3;
  if (m > 1) return least_factor(m, 3);
  return least_factor(n + 3, 3);
}

struct AltParameters {
  std::uint64_t p = 0, n = 0;
};

/// Least prime p with p = 1 (mod 4), p != 2, 4 (mod 5), p != 5 (mod 13) and
/// p != 4 (mod 11), together with n = 3p + 1.
inline std::optional<AltParameters> nonreal_alt_parameters(std::uint64_t search_limit = 100000) {
  for (std::uint64_t p = 2; p <= search_limit; ++p) {
    if (!is_prime(p) || p % 4 != 1 || p % 5 == 2 || p % 5 == 4 || p % 13 == 5 || p % 11 == 4)
      continue;
    return AltParameters{p, 3 * p + 1};
  }
  return std::nullopt;
}

/// Least prime p = 3 (mod 4), p = 1 (mod 5); SL(2, p) then feeds H4.
inline std::uint64_t h4_prime() {
  for (std::uint64_t p = 2;; ++p)
    if (is_prime(p) && p % 4 == 3 && p % 5 == 1) return p;
}

}  // namespace belyi

#endif  // BELYI_BEAUVILLE_SN_HPP
