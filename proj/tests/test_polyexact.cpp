#include "catch_amalgamated.hpp"

#include <cmath>

#include "belyi/polyexact.hpp"

using namespace belyi;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("polynomial arithmetic") {
  const RatPoly p{1, 1}, q{-1, 1};  // 1 + z, -1 + z
  CHECK(p * q == RatPoly{-1, 0, 1});
  auto [quo, rem] = divmod(RatPoly{-1, 0, 1}, q);
  CHECK(quo == p);
  CHECK(rem.is_zero());
  CHECK(gcd(p * q, q * q).monic() == q);
  CHECK(RatPoly{0, 0, 0}.is_zero());
  CHECK(RatPoly{1, 2, 3}.derivative() == RatPoly{2, 6});
  CHECK(squarefree_part(q.pow(3) * p).monic() == (q * p).monic());
}

TEST_CASE("T_n agrees with cos(n arccos z)") {
  for (unsigned n = 1; n <= 20; ++n) {
    const auto t = chebyshev_pair(n).first;
    CHECK(t.degree() == static_cast<int>(n));
    for (double z = -1.0; z <= 1.0; z += 0.125)
      CHECK(std::abs(t.evaluate(z) - std::cos(n * std::acos(z))) < 1e-9);
  }
}

TEST_CASE("U_(n-1) agrees with sin(n theta) / sin(theta)") {
  for (unsigned n = 2; n <= 15; ++n) {
    const auto u = chebyshev_pair(n).second;
    for (double th = 0.1; th < 3.0; th += 0.37)
      CHECK(std::abs(u.evaluate(std::cos(th)) - std::sin(n * th) / std::sin(th)) < 1e-9);
  }
}

TEST_CASE("Chebyshev identities hold exactly") {
  for (unsigned n = 2; n <= 30; ++n) {
    INFO("n = " << n);
    CHECK(verify_pell_identity(n));
    const auto t = chebyshev_pair(n).first;
    CHECK(critical_values_within(t, {Rational(-1), Rational(1)}));
    CHECK(gcd(t.derivative(), t.derivative().derivative()).degree() == 0);
  }
}

TEST_CASE("critical value test rejects a wrong value set") {
  const auto t = chebyshev_pair(4).first;
  CHECK_FALSE(critical_values_within(t, {Rational(1)}));
  CHECK_FALSE(critical_values_within(RatPoly{0, 0, 0, 1} - RatPoly{0, 3}, {Rational(0), Rational(1)}));
}

TEST_CASE("Belyi polynomials take the values 0, 0 and 1") {
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned r = 1; r <= 8; ++r) {
      const auto p = belyi_poly(m, r);
      CHECK(p.degree() == static_cast<int>(m + r));
      CHECK(p(Rational(0)) == 0);
      CHECK(p(Rational(1)) == 0);
      CHECK(p(Rational(m, m + r)) == 1);
      CHECK(critical_values_within(p, {Rational(0), Rational(1)}));
    }
}

TEST_CASE("the special quintic") {
  const auto p = special_degree5();
  CHECK(p.degree() == 5);
  CHECK(p(Rational(-1)) == 0);
  CHECK(p(Rational(1)) == 1);
  CHECK(p.derivative() == Rational(15, 16) * RatPoly{-1, 0, 1}.pow(2));
  CHECK(critical_values_within(p, {Rational(0), Rational(1)}));
}

TEST_CASE("normalization over Q") {
  // 8 z^3 + 12 z^2 = (2z + 1)^3 - 6z - 1
  const RatPoly p{0, 0, 12, 8};
  const auto nf = normalize_over_q(p);
  REQUIRE(nf.normalized);
  CHECK(is_normalized(*nf.normalized));
  CHECK(apply_affine(p, nf.scale, nf.shift) == *nf.normalized);
  const auto bad = normalize_over_q(RatPoly{0, 0, 2});
  CHECK_FALSE(bad.normalized);
  CHECK_FALSE(bad.reason.empty());
  const auto neg = normalize_over_q(RatPoly{0, 0, -1});
  CHECK_FALSE(neg.normalized);
}

TEST_CASE("normalized T_n has vanishing subleading term") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto nf = normalize_over_q(chebyshev_pair(n).first);
    if (!nf.normalized) continue;  // 2^(n-1) need not be an n-th power
    CHECK(is_normalized(*nf.normalized));
  }
  CHECK(normalize_over_q(chebyshev_pair(1).first).normalized.has_value());
}
