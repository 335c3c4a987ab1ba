#include "catch_amalgamated.hpp"

#include <random>

#include "belyi/dessin.hpp"
#include "belyi/monodromy.hpp"

using namespace belyi;

namespace {

MonodromyPair random_valid(std::size_t n, std::mt19937_64& rng) {
  const auto sigma = standard_cycle(n);
  std::vector<Permutation::point_type> v(n);
  for (;;) {
    std::iota(v.begin(), v.end(), Permutation::point_type{0});
    std::shuffle(v.begin(), v.end(), rng);
    auto t0 = Permutation::from_images(v);
    MonodromyPair p{t0, compose(t0.inverse(), sigma)};
    if (validate_pair(p).valid()) return p;
  }
}

}  // namespace

TEST_CASE("degree-9 dessin with face type (5,2,2)") {
  MonodromyPair p{parse_cycles("(2,8,9)(4,6,5)", 9), parse_cycles("(1,6,7,4,3,9,2)", 9)};
  // a rational dessin: three poles, so the product is not a 9-cycle
  CHECK_FALSE(validate_pair(p).product_is_full_cycle);
  const auto d = dessin_from_pair(p);
  CHECK(d.black.size() == 5);
  CHECK(d.white.size() == 3);
  CHECK(face_count(d) == 3);
  CHECK(genus_of_dessin(d) == 0);
  const auto faces = compose(p.tau0, p.tau1).inverse();
  CHECK(cycle_type(faces) == CycleType({5, 2, 2}));
  CHECK(pair_from_dessin(d) == p);
}

TEST_CASE("dessin round trip on random valid pairs") {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 1; n <= 9; ++n)
    for (int i = 0; i < 200; ++i) {
      const auto p = random_valid(n, rng);
      const auto d = dessin_from_pair(p);
      CHECK(pair_from_dessin(d) == p);
      CHECK(genus_of_dessin(d) == 0);
      CHECK(d.black.size() + d.white.size() == n + 1);
    }
}

TEST_CASE("Euler formula gives genus one for a torus dessin") {
  const auto t0 = parse_cycles("(1,2,3)", 3), t1 = parse_cycles("(1,2,3)", 3);
  const auto d = dessin_from_pair({t0, t1});
  // V = 2, E = 3, and (t0 t1)^-1 = (1,2,3) is a single face
  CHECK(face_count(d) == 1);
  CHECK(genus_of_dessin(d) == 1);
}

TEST_CASE("intransitive pairs do not give dessins") {
  CHECK_THROWS_AS(dessin_from_pair({parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)}),
                    std::invalid_argument);
}

TEST_CASE("malformed dessins are rejected") {
  Dessin d{3, {{1, 2}, {3}}, {{1, 2, 2}}};
  CHECK_THROWS_AS(pair_from_dessin(d), structure_error);
  Dessin missing{3, {{1, 2, 3}}, {{1, 2}}};
  CHECK_THROWS_AS(pair_from_dessin(missing), structure_error);
}

TEST_CASE("DOT export lists every edge once") {
  MonodromyPair p{parse_cycles("(1,3,6)(4,5)", 6), parse_cycles("(1,2)(3,5)", 6)};
  const auto dot = export_dot(dessin_from_pair(p));
  CHECK(dot.rfind("graph", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 6);
}
