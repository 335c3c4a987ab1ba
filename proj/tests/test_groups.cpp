#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "belyi/groups/abelian.hpp"
#include "belyi/groups/enumerated.hpp"
#include "belyi/groups/h4.hpp"
#include "belyi/groups/matrix.hpp"
#include "belyi/groups/perm_group.hpp"
#include "belyi/groups/spec.hpp"
#include "belyi/groups/symmetric.hpp"

using namespace belyi;

namespace {

// Oracle: conjugacy classes by brute force, then class_key must separate
// exactly these classes. Returns the class count.
template <class G>
std::size_t check_class_keys(const G& g) {
  using E = typename G::element_type;
  const auto all = all_elements(g);
  std::unordered_map<E, std::size_t> cls;
  std::size_t classes = 0;
  for (const auto& x : all) {
    if (cls.contains(x)) continue;
    for (const auto& h : all) cls.emplace(conjugate_by(g, x, h), classes);
    ++classes;
  }
  std::map<ClassKey, std::size_t> key_to_class;
  for (const auto& x : all) {
    auto [it, fresh] = key_to_class.emplace(g.class_key(x), cls.at(x));
    CHECK(it->second == cls.at(x));  // a key never spans two classes
  }
  CHECK(key_to_class.size() == classes);  // nor does a class carry two keys
  return classes;
}

template <class G>
void check_axioms(const G& g, std::uint64_t seed) {
  using E = typename G::element_type;
  const auto all = all_elements(g);
  REQUIRE(all.size() == g.order());
  CHECK(std::unordered_set<E>(all.begin(), all.end()).size() == all.size());
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 200; ++t) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    CHECK(g.contains(g.multiply(a, b)));
    CHECK(power(g, a, static_cast<long long>(element_order(g, a))) == g.identity());
  }
  CHECK(generates(g, g.generators()) == Tristate::yes);
}

}  // namespace

TEST_CASE("class keys are complete invariants") {
  CHECK(check_class_keys(SymmetricGroup(5)) == 7);
  CHECK(check_class_keys(AlternatingGroup(5)) == 5);
  CHECK(check_class_keys(AlternatingGroup(6)) == 7);
  CHECK(check_class_keys(AlternatingGroup(7)) == 9);
  CHECK(check_class_keys(SL2(5)) == 9);
  CHECK(check_class_keys(SL2(7)) == 11);
  CHECK(check_class_keys(PSL2(7)) == 6);
  CHECK(check_class_keys(PSL2(11)) == 8);
  CHECK(check_class_keys(GL3F2()) == 6);
  CHECK(check_class_keys(CyclicSquare(6)) == 36);
  CHECK(check_class_keys(PermGroup::dihedral(6)) == 6);
  CHECK(check_class_keys(H4Group<SymmetricGroup>(SymmetricGroup(3))) > 0);
  CHECK(check_class_keys(H4Group<AlternatingGroup>(AlternatingGroup(4))) > 0);
}

TEST_CASE("group axioms and orders") {
  check_axioms(SymmetricGroup(6), 1);
  check_axioms(AlternatingGroup(6), 2);
  check_axioms(SL2(7), 3);
  CHECK(SL2(7).order() == 336);
  check_axioms(PSL2(7), 4);
  CHECK(PSL2(7).order() == 168);
  check_axioms(GL3F2(), 5);
  check_axioms(CyclicSquare(12), 6);
  check_axioms(PermGroup::dihedral(7), 7);
  CHECK(PermGroup::dihedral(7).order() == 14);
  check_axioms(H4Group<SymmetricGroup>(SymmetricGroup(3)), 8);
  CHECK(H4Group<SymmetricGroup>(SymmetricGroup(3)).order() == 144);
}

TEST_CASE("H4 over SL(2,11) has order 6969600") {
  H4Group<SL2> g(SL2(11));
  CHECK(g.order() == 6969600);
  CHECK(g.h().order() == 1320);
}

TEST_CASE("H4 subgroup key separates classes of the even part") {
  // oracle: conjugacy inside H x H x 2Z/4 computed by brute force
  H4Group<SymmetricGroup> g(SymmetricGroup(3));
  std::vector<H4Element> even;
  g.for_each_element([&](const H4Element& x) {
    if (g.in_index_two(x)) even.push_back(x);
  });
  std::unordered_map<H4Element, std::size_t> cls;
  std::size_t classes = 0;
  for (const auto& x : even) {
    if (cls.contains(x)) continue;
    for (const auto& h : even) cls.emplace(conjugate_by(g, x, h), classes);
    ++classes;
  }
  std::map<ClassKey, std::size_t> seen;
  for (const auto& x : even) {
    auto [it, fresh] = seen.emplace(g.subgroup_class_key(x), cls.at(x));
    CHECK(it->second == cls.at(x));
  }
  CHECK(seen.size() == classes);
}

TEST_CASE("generation certificates agree with closure") {
  std::mt19937_64 rng(3);
  SymmetricGroup s6(6);
  const auto all = all_elements(s6);
  for (int t = 0; t < 200; ++t) {
    const auto a = all[rng() % all.size()], b = all[rng() % all.size()];
    const auto c = subgroup_closure(s6, {a, b});
    CHECK(generates(s6, {a, b}) == (c.size == 720 ? Tristate::yes : Tristate::no));
  }
  CyclicSquare z(10);
  const auto zs = all_elements(z);
  for (int t = 0; t < 200; ++t) {
    const auto a = zs[rng() % zs.size()], b = zs[rng() % zs.size()];
    const auto c = subgroup_closure(z, {a, b});
    CHECK(generates(z, {a, b}) == (c.size == 100 ? Tristate::yes : Tristate::no));
  }
}

TEST_CASE("closure budget overflow yields unknown") {
  SymmetricGroup s8(8);
  ClosureBudget tiny{100, 100};
  CHECK(generates(PermGroup::dihedral(8), {standard_cycle(8)}) == Tristate::no);
  const auto c = subgroup_closure(s8, {standard_cycle(8), parse_cycles("(1,2)", 8)}, tiny);
  CHECK(c.overflow);
}

TEST_CASE("matrix constructors validate") {
  SL2 g(5);
  CHECK_NOTHROW(g.make(1, 1, 0, 1));
  CHECK_THROWS(g.make(1, 1, 1, 1));
  CHECK_THROWS(SL2(6));
  CHECK_THROWS(SL2(97));
  PSL2 p(7);
  CHECK(p.make(-1, 0, 0, -1) == p.identity());
  CHECK(p.contains(p.make(2, 0, 0, 4)));
}

TEST_CASE("group specs") {
  CHECK(std::visit([](const auto& g) { return g.order(); }, make_group("sym:5")) == 120);
  CHECK(std::visit([](const auto& g) { return g.order(); }, make_group("psl2:7")) == 168);
  CHECK(std::visit([](const auto& g) { return g.order(); }, make_group("gl3f2")) == 168);
  CHECK(std::visit([](const auto& g) { return g.order(); }, make_group("znxzn:7")) == 49);
  CHECK(std::visit([](const auto& g) { return g.order(); }, make_group("h4:sym:3")) == 144);
  CHECK_THROWS_AS(make_group("foo:3"), group_spec_error);
  CHECK_THROWS_AS(make_group("sl2:4"), group_spec_error);
  CHECK_THROWS_AS(make_group("sym:x"), group_spec_error);
  CHECK_THROWS_AS(make_group("h4:znxzn:3"), group_spec_error);
}

TEST_CASE("enumerated groups mirror their base") {
  EnumeratedGroup<PSL2> e(PSL2(7));
  CHECK(e.order() == 168);
  const auto x = e.base().make(1, 1, 0, 1), y = e.base().make(0, 1, 6, 0);
  CHECK(e.element(e.multiply(e.index_of(x), e.index_of(y))) == e.base().multiply(x, y));
  CHECK(check_class_keys(e) == 6);
}
