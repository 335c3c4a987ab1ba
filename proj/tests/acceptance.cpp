// One PASS/FAIL line per acceptance criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "belyi/beauville/core.hpp"
#include "belyi/beauville/h4_lemma.hpp"
#include "belyi/beauville/reality.hpp"
#include "belyi/beauville/search.hpp"
#include "belyi/beauville/sn.hpp"
#include "belyi/cli.hpp"
#include "belyi/dessin.hpp"
#include "belyi/diffpoly.hpp"
#include "belyi/monodromy.hpp"
#include "belyi/polyexact.hpp"

using namespace belyi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

CycleType ct(std::vector<std::size_t> p) { return CycleType(std::move(p)); }

std::string unordered(const BranchDatum& d) {
  return std::min(d.type0, d.type1).to_string() + "/" + std::max(d.type0, d.type1).to_string();
}

Outcome small_degrees() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& d : polynomial_branch_data(n))
      if (!enumerate_factorizations(d).pairs.empty())
        o.require(classify(d) != PolynomialClassKind::other, "degree " + std::to_string(n) + " datum " +
                                                                 d.to_string() + " is neither kind");
  std::set<std::string> extra;
  for (const auto& d : polynomial_branch_data(5))
    if (!enumerate_factorizations(d).pairs.empty() && classify(d) == PolynomialClassKind::other)
      extra.insert(unordered(d));
  const std::set<std::string> expected{"(3,1,1)/(3,1,1)"};
  std::string found;
  for (const auto& e : extra) found += (found.empty() ? "" : ", ") + e;
  o.require(extra == expected, "degree 5 kinds beyond Chebyshev/Belyi: {" + found + "}, expected only (3,1,1)/(3,1,1)");
  return o;
}

Outcome degree_six_table() {
  Outcome o;
  struct Row {
    const char* name;
    CycleType t0, t1;
    std::size_t expected;
  };
  const std::vector<Row> rows{{"I", ct({2, 2, 1, 1}), ct({2, 2, 2}), 3},  {"II", ct({2, 2, 1, 1}), ct({3, 2, 1}), 18},
                              {"III", ct({2, 2, 1, 1}), ct({4, 1, 1}), 9}, {"IV", ct({3, 1, 1, 1}), ct({2, 2, 2}), 2},
                              {"V", ct({3, 1, 1, 1}), ct({3, 2, 1}), 12},  {"VI", ct({3, 1, 1, 1}), ct({4, 1, 1}), 6}};
  std::ostringstream counts;
  for (const auto& r : rows) {
    BranchDatum d{6, r.t0, r.t1};
    auto count = enumerate_factorizations(d).pairs.size();
    if (std::string(r.name) == "IV" && count != r.expected) count = enumerate_factorizations(d.swapped()).pairs.size();
    counts << r.name << "=" << count << " ";
    o.require(count == r.expected, std::string("case ") + r.name + " count " + std::to_string(count));
  }
  // case I against fixed-point-free involutions tau1, tau0 = sigma tau1^-1
  const auto sigma = standard_cycle(6);
  std::vector<MonodromyPair> oracle;
  std::vector<Permutation::point_type> v{0, 1, 2, 3, 4, 5};
  do {
    auto t1 = Permutation::from_images(v);
    if (cycle_type(t1) != ct({2, 2, 2})) continue;
    auto t0 = compose(sigma, t1.inverse());
    if (cycle_type(t0) == ct({2, 2, 1, 1})) oracle.push_back({t0, t1});
  } while (std::next_permutation(v.begin(), v.end()));
  std::sort(oracle.begin(), oracle.end());
  o.require(enumerate_factorizations({6, ct({2, 2, 1, 1}), ct({2, 2, 2})}).pairs == oracle, "case I differs from the involution enumeration");
  // case IV against the two antipodal-matching pairs
  std::vector<MonodromyPair> hand{{parse_cycles("(1,3,5)", 6), parse_cycles("(1,2)(3,4)(5,6)", 6)},
                                  {parse_cycles("(2,4,6)", 6), parse_cycles("(1,6)(2,3)(4,5)", 6)}};
  std::sort(hand.begin(), hand.end());
  o.require(enumerate_factorizations({6, ct({3, 1, 1, 1}), ct({2, 2, 2})}).pairs == hand, "case IV differs from the hand pairs");
  if (o.pass) o.detail = counts.str();
  return o;
}

Outcome nonreal_classes() {
  Outcome o;
  const std::vector<MonodromyPair> pairs{{parse_cycles("(1,3,6)(4,5)", 6), parse_cycles("(1,2)(3,5)", 6)},
                                         {parse_cycles("(5,6)(1,2,3)", 6), parse_cycles("(3,4,6)", 6)}};
  for (const auto& p : pairs) {
    o.require(validate_pair(p).valid(), "pair " + p.tau0.to_string() + " invalid");
    o.require(!simultaneous_conjugator({{p.tau0, p.tau0.inverse()}, {p.tau1, p.tau1.inverse()}}),
              "an inverting conjugator exists for " + p.tau0.to_string());
    o.require(!is_real_class(p, true), "class of " + p.tau0.to_string() + " is real");
  }
  std::size_t cheb = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& d : polynomial_branch_data(n))
      if (is_chebyshev_datum(d))
        for (const auto& c : enumerate_classes(d)) {
          ++cheb;
          o.require(is_real_class(c.representative, true), "Chebyshev class " + d.to_string() + " not real");
        }
  if (o.pass) o.detail = std::to_string(cheb) + " Chebyshev classes real";
  return o;
}

Outcome chebyshev() {
  Outcome o;
  for (unsigned n = 2; n <= 30; ++n) {
    const auto t = chebyshev_pair(n).first;
    o.require(verify_pell_identity(n), "Pell identity n=" + std::to_string(n));
    o.require(critical_values_within(t, {Rational(-1), Rational(1)}), "critical values n=" + std::to_string(n));
    o.require(gcd(t.derivative(), t.derivative().derivative()).degree() == 0, "T' not squarefree n=" + std::to_string(n));
  }
  for (std::size_t n = 3; n <= 9; ++n)
    for (const auto& d : polynomial_branch_data(n))
      if (is_chebyshev_datum(d))
        for (const auto& c : enumerate_classes(d))
          o.require(monodromy_group_order(c.representative).order == 2 * n, "monodromy order n=" + std::to_string(n));
  return o;
}

Outcome belyi_polys() {
  Outcome o;
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned r = 1; r <= 8; ++r) {
      const auto p = belyi_poly(m, r);
      o.require(p(Rational(0)) == 0 && p(Rational(1)) == 0 && p(Rational(m, m + r)) == 1,
                "P_" + std::to_string(m) + "," + std::to_string(r));
    }
  const auto s = special_degree5();
  o.require(s(Rational(-1)) == 0 && s(Rational(1)) == 1, "special quintic values");
  o.require(s.derivative() == Rational(15, 16) * RatPoly{-1, 0, 1}.pow(2), "special quintic derivative");
  return o;
}

Outcome difference_polys() {
  Outcome o;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto orbits = component_orbits(cheb_sum(n));
    bool ok = orbits.size() == n;
    for (const auto& x : orbits) ok = ok && x.size == 4 * n;
    o.require(ok, "cheb_sum n=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 20; ++n)
    o.require(schur(n).factor_count == (n % 2 ? (n - 1) / 2 : n / 2), "schur n=" + std::to_string(n));
  auto f = component_orbits(fano());
  std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> got, want{{21, 3, 3}, {28, 4, 4}};
  for (const auto& x : f) got.insert({x.size, x.x_degree, x.y_degree});
  o.require(got == want, "fano orbits");
  return o;
}

Outcome abelian() {
  Outcome o;
  for (std::uint32_t n = 2; n <= 15; ++n) {
    const bool found = search_unmixed(CyclicSquare(n), {}).outcome == SearchOutcome::found;
    o.require(found == abelian_criterion(n), "n=" + std::to_string(n));
  }
  return o;
}

Outcome a5() {
  Outcome o;
  auto res = search_unmixed(AlternatingGroup(5), {});
  o.require(res.outcome == SearchOutcome::exhausted, "outcome " + to_string(res.outcome));
  o.detail = o.pass ? std::to_string(res.pairs_examined) + " pairs examined" : o.detail;
  return o;
}

template <class G>
void positive(Outcome& o, const G& g) {
  auto res = search_unmixed(g, {});
  if (!res.structure) {
    o.require(false, g.name() + " none found");
    return;
  }
  const auto& v = *res.structure;
  o.require(is_unmixed(g, v).valid == Tristate::yes, g.name() + " re-verification");
  for (const auto& [a, c] : {std::pair{v.a1, v.c1}, std::pair{v.a2, v.c2}}) {
    const auto t = type_of(g, a, c);
    o.require(is_hyperbolic(t) && genus_triangle(g.order(), t) >= 2, g.name() + " type " + t.to_string());
  }
}

Outcome positives() {
  Outcome o;
  positive(o, PSL2(7));
  positive(o, SL2(7));
  positive(o, AlternatingGroup(6));
  positive(o, SymmetricGroup(7));
  return o;
}

Outcome sn_nonreal() {
  Outcome o;
  auto ex = sn_example(8, 5);
  o.require(ex.generates1 == Tristate::yes && ex.generates2 == Tristate::yes, "generation");
  o.require(ex.types_disjoint, "cycle types overlap");
  o.require(ex.no_inverting_conjugator, "inverting conjugator exists");
  o.require(ex.reality == RealityVerdict::not_isomorphic_to_conjugate, "verdict " + to_string(ex.reality));
  return o;
}

Outcome h4() {
  Outcome o;
  H4Group<SL2> g(SL2(11));
  o.require(g.order() == 6969600, "order " + std::to_string(g.order()));
  auto q = search_h4_quadruple(g.h());
  if (!q) {
    o.require(false, "no quadruple found");
    return o;
  }
  auto res = h4_lemma_check(g, q->a1, q->c1, q->a2, q->c2, true);
  o.require(res.hypotheses.all(), "hypotheses");
  o.require(res.direct && res.direct->valid == Tristate::yes, "direct check");
  // violations: odd-order a1, a2 = c2, and the first pair reused
  std::uint32_t odd = 0;
  for (std::uint32_t x = 0; x < g.h().order(); ++x)
    if (element_order(g.h(), x) % 2) odd = x;
  auto r1 = h4_lemma_check(g, odd, q->c1, q->a2, q->c2, false);
  o.require(r1.hypotheses.holds[0] == Tristate::no && !r1.hypotheses.witness[0].empty(), "hypothesis 1 violation missed");
  auto r3 = h4_lemma_check(g, q->a1, q->c1, q->a2, q->a2, false);
  o.require(r3.hypotheses.holds[2] == Tristate::no && !r3.hypotheses.witness[2].empty(), "hypothesis 3 violation missed");
  auto r4 = h4_lemma_check(g, q->a1, q->c1, q->a1, q->c1, false);
  o.require(r4.hypotheses.holds[3] == Tristate::no && !r4.hypotheses.witness[3].empty(), "hypothesis 4 violation missed");
  return o;
}

Outcome primes() {
  Outcome o;
  for (std::uint64_t n = 5; n <= 200; ++n) {
    auto p = find_prime(n);
    o.require(p && n % *p > 1, "n=" + std::to_string(n));
  }
  o.require(!find_prime(7, 7 - 3), "n=7 with p <= n-3 unexpectedly succeeds");
  return o;
}

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

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Permutation::point_type> v(n);
  std::iota(v.begin(), v.end(), Permutation::point_type{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation::from_images(v);
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 9; ++n)
    for (int i = 0; i < 1000; ++i) {
      const auto p = random_valid(n, rng);
      if (pair_from_dessin(dessin_from_pair(p)) != p) {
        o.require(false, "dessin round trip at degree " + std::to_string(n));
        break;
      }
    }
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 9, m = 1 + rng() % 9;
    ProductMonodromy pm{n, m, {{"0", random_perm(n, rng), random_perm(m, rng)}, {"1", random_perm(n, rng), random_perm(m, rng)}}};
    std::size_t total = 0;
    for (const auto& x : component_orbits(pm)) total += x.size;
    o.require(total == n * m, "orbit sizes do not sum to n m");
  }
  SymmetricGroup s7(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_perm(7, rng), c = random_perm(7, rng), g = random_perm(7, rng);
    SigmaOracle<SymmetricGroup> s(s7, a, c), sg(s7, conjugate(a, g), conjugate(c, g));
    o.require(s.nontrivial_keys() == sg.nontrivial_keys(), "Sigma not conjugation-invariant");
  }
  PSL2 psl(7);
  const auto all = all_elements(psl);
  for (int i = 0; i < 50; ++i) {
    const auto a = all[rng() % all.size()], c = all[rng() % all.size()], g = all[rng() % all.size()];
    const auto members = sigma_set(psl, a, c);
    SigmaOracle<PSL2> oracle(psl, a, c);
    for (const auto& x : members) o.require(oracle.contains(conjugate_by(psl, x, g)), "sigma_set not closed under conjugation");
  }
  const std::vector<std::vector<std::string>> cmds{{"--json", "table6"},
                                                   {"--json", "enumerate", "--degree", "7"},
                                                   {"--json", "--seed", "3", "dessin", "--random", "--degree", "9"},
                                                   {"--json", "beauville-search", "--group", "psl2:7"},
                                                   {"--json", "snexample", "--n", "8", "--p", "5"}};
  for (const auto& c : cmds) o.require(cli::run(c).out == cli::run(c).out, "CLI output differs for " + c[1]);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "degree <= 5 classification", 1, small_degrees},
      {2, "degree-6 factorization table", 5, degree_six_table},
      {3, "non-real degree-6 classes", 1, nonreal_classes},
      {4, "Chebyshev exact identities", 1, chebyshev},
      {5, "Belyi polynomials", 1, belyi_polys},
      {6, "difference polynomial factors", 2, difference_polys},
      {7, "abelian Beauville criterion", 30, abelian},
      {8, "A5 has no unmixed structure", 10, a5},
      {9, "unmixed structures on PSL(2,7), SL(2,7), A6, S7", 60, positives},
      {10, "S8 structure not isomorphic to its conjugate", 30, sn_nonreal},
      {11, "H4 over SL(2,11)", 60, h4},
      {12, "prime bookkeeping", 1, primes},
      {13, "property suites", 30, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) o.require(false, "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit");
    failures += !o.pass;
    std::printf("%s %2d  %-50s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
