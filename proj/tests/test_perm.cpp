#include "catch_amalgamated.hpp"

#include <random>

#include "belyi/perm.hpp"

using namespace belyi;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Permutation::point_type> v(n);
  std::iota(v.begin(), v.end(), Permutation::point_type{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
  const auto p = parse_cycles("(1,2)", 3), q = parse_cycles("(2,3)", 3);
  // q sends 2 -> 3, then p fixes 3
  CHECK(compose(p, q)(1) == 2);
  CHECK(compose(p, q) == parse_cycles("(1,2,3)", 3));
  CHECK(compose(q, p) == parse_cycles("(1,3,2)", 3));
}

TEST_CASE("known factorizations of the 6-cycle multiply to (1..6)") {
  const auto sigma = standard_cycle(6);
  CHECK(compose(parse_cycles("(1,3,6)(4,5)", 6), parse_cycles("(1,2)(3,5)", 6)) == sigma);
  CHECK(compose(parse_cycles("(5,6)(1,2,3)", 6), parse_cycles("(3,4,6)", 6)) == sigma);
}

TEST_CASE("cycle parsing and printing round trip") {
  const auto p = parse_cycles("(1,3,6)(4,5)", 6);
  CHECK(p.to_string() == "(1,3,6)(4,5)");
  CHECK(parse_cycles(p.to_string(), 6) == p);
  CHECK(parse_cycles("()", 4) == Permutation(4));
  CHECK(parse_cycles(" ( 2 , 1 ) ", 2) == parse_cycles("(1,2)", 2));
}

TEST_CASE("malformed cycle strings are rejected") {
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), parse_error);
  CHECK_THROWS_AS(parse_cycles("(a)", 3), parse_error);
}

TEST_CASE("cycle types are non-increasing and include fixed points") {
  CHECK(cycle_type(parse_cycles("(1,3,6)(4,5)", 6)).parts == std::vector<std::size_t>{3, 2, 1});
  CHECK(cycle_type(Permutation(4)).is_identity());
  CHECK(cycle_type(parse_cycles("(1,2)(3,4)", 4)).deficiency() == 2);
}

TEST_CASE("partition counts") {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (std::size_t n = 0; n < p.size(); ++n) CHECK(partitions(n).size() == p[n]);
}

TEST_CASE("group laws on random permutations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()) == Permutation(n));
    CHECK(a.pow(static_cast<long long>(a.order())) == Permutation(n));
    CHECK(a.pow(-1) == a.inverse());
    CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
  }
}

TEST_CASE("simultaneous conjugator finds a conjugating element when one exists") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const auto x1 = random_perm(n, rng), x2 = random_perm(n, rng), g = random_perm(n, rng);
    auto h = simultaneous_conjugator({{x1, conjugate(x1, g)}, {x2, conjugate(x2, g)}});
    REQUIRE(h.has_value());
    CHECK(conjugate(x1, *h) == conjugate(x1, g));
    CHECK(conjugate(x2, *h) == conjugate(x2, g));
  }
}

TEST_CASE("simultaneous conjugator agrees with brute force in S5") {
  // brute-force oracle: try all 120 elements
  std::vector<Permutation> s5;
  std::vector<Permutation::point_type> v{0, 1, 2, 3, 4};
  do s5.push_back(Permutation::from_images(v));
  while (std::next_permutation(v.begin(), v.end()));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x1 = s5[rng() % 120], x2 = s5[rng() % 120], y1 = s5[rng() % 120], y2 = s5[rng() % 120];
    bool exists = false;
    for (const auto& g : s5) exists = exists || (conjugate(x1, g) == y1 && conjugate(x2, g) == y2);
    CHECK(simultaneous_conjugator({{x1, y1}, {x2, y2}}).has_value() == exists);
  }
}

TEST_CASE("closure and transitivity") {
  const auto s = standard_cycle(5), t = parse_cycles("(1,2)", 5);
  CHECK(closure({s, t}, 1000).count == 120);
  CHECK(closure({s}, 1000).count == 5);
  CHECK(closure({s, t}, 50).overflow);
  std::vector<Permutation> gens{parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)};
  CHECK_FALSE(is_transitive(gens, 4));
  CHECK(orbits(gens, 4).size() == 2);
}
