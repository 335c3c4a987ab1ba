#ifndef BELYI_CLI_HPP
#define BELYI_CLI_HPP

// Command-line front end. run() is pure apart from `dessin --dot FILE`: it
// returns the exit code and the text that main() prints, so the same argv
// always yields the same bytes.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "belyi/beauville/core.hpp"
#include "belyi/beauville/h4_lemma.hpp"
#include "belyi/beauville/mixed.hpp"
#include "belyi/beauville/reality.hpp"
#include "belyi/beauville/search.hpp"
#include "belyi/beauville/sn.hpp"
#include "belyi/dessin.hpp"
#include "belyi/diffpoly.hpp"
#include "belyi/groups/spec.hpp"
#include "belyi/monodromy.hpp"
#include "belyi/polyexact.hpp"
#include "belyi/serialize.hpp"

namespace belyi::cli {

enum class Status { ok = 0, verification_failed = 2, invalid_input = 3 };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::verification_failed: return "verification-failed";
    case Status::invalid_input: return "invalid-input";
  }
  return "invalid-input";
}
using belyi::to_string;

struct Result {
  int exit_code = 0;
  std::string out;
};

struct Report {
  Status status = Status::ok;
  json payload = json::object();
};

class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// "2,2,1,1" -> CycleType, checked against the degree.
inline CycleType parse_partition(const std::string& text, std::size_t degree) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      parts.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw invalid_input("bad part '" + item + "' in partition '" + text + "'");
    }
  }
  CycleType t(std::move(parts));
  if (t.degree() != degree)
    throw invalid_input("partition " + text + " does not sum to " + std::to_string(degree));
  return t;
}

inline TypeTriple parse_triple(const std::string& text) {
  std::vector<std::uint64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long x = std::stol(item, &used);
      if (used != item.size() || x < 1) throw std::invalid_argument(item);
      v.push_back(static_cast<std::uint64_t>(x));
    } catch (const std::exception&) {
      throw invalid_input("bad type triple '" + text + "'");
    }
  }
  if (v.size() != 3) throw invalid_input("a type triple needs three orders: '" + text + "'");
  return {v[0], v[1], v[2]};
}

/// Inline JSON text, or @path to read it from a file.
inline json load_json(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw invalid_input("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string dump_value(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline json class_json(const MonodromyClass& c) {
  const auto& p = c.representative;
  const auto d = branch_datum(p);
  return {{"tau0", p.tau0.to_string()},
          {"tau1", p.tau1.to_string()},
          {"orbit_size", c.orbit_size},
          {"kind", to_string(classify(d))},
          {"real", is_real_class(p, false)},
          {"real_extended", is_real_class(p, true)},
          {"group_order", monodromy_group_order(p).order}};
}

inline json datum_json(const BranchDatum& d, const EnumerationOptions& opt) {
  auto fr = enumerate_factorizations(d, opt);
  json classes = json::array();
  for (const auto& c : classes_of(fr.pairs)) classes.push_back(class_json(c));
  return {{"type0", d.type0.to_string()},
          {"type1", d.type1.to_string()},
          {"pairs", fr.pairs.size()},
          {"intransitive", fr.intransitive.size()},
          {"classes", classes}};
}

/// A pair from --pair JSON or from --degree with --tau0/--tau1 cycle strings.
struct PairInput {
  std::string pair_json;
  std::size_t degree = 0;
  std::string tau0, tau1;

  void add(CLI::App* sub) {
    sub->add_option("--pair", pair_json, "pair as JSON {\"degree\",\"tau0\",\"tau1\"} or @file");
    sub->add_option("--degree", degree, "degree n");
    sub->add_option("--tau0", tau0, "permutation over 0 in cycle notation, e.g. \"(1,3,6)(4,5)\"");
    sub->add_option("--tau1", tau1, "permutation over 1 in cycle notation");
  }
  MonodromyPair get() const {
    if (!pair_json.empty()) return pair_from_json(load_json(pair_json));
    if (degree == 0) throw invalid_input("give --pair or --degree with --tau0 and --tau1");
    return {parse_cycles(tau0, degree), parse_cycles(tau1, degree)};
  }
};

/// Uniform over valid pairs of degree n, by rejection: tau0 is uniform and
/// tau1 is forced by tau0 tau1 = (1..n).
inline MonodromyPair random_valid_pair(std::size_t n, std::mt19937_64& rng) {
  const auto sigma = standard_cycle(n);
  std::vector<Permutation::point_type> img(n);
  for (;;) {
    std::iota(img.begin(), img.end(), Permutation::point_type{0});
    std::shuffle(img.begin(), img.end(), rng);
    auto tau0 = Permutation::from_images(img);
    MonodromyPair p{tau0, compose(tau0.inverse(), sigma)};
    if (validate_pair(p).valid()) return p;
  }
}

template <class G>
constexpr bool permutation_group = std::is_same_v<typename G::element_type, Permutation>;

inline constexpr std::uint64_t search_order_limit = 500'000;

template <class G>
json structure_report(const G& grp, const UnmixedStructure<typename G::element_type>& v) {
  json pairs = json::array();
  for (int i = 0; i < 2; ++i) {
    const auto& a = i ? v.a2 : v.a1;
    const auto& c = i ? v.c2 : v.c1;
    auto tm = type_and_mu(grp, a, c);
    json entry{{"type", to_json(tm.type)}, {"mu", to_string(tm.mu)}, {"hyperbolic", tm.hyperbolic}};
    try {
      entry["genus"] = genus_triangle(grp.order(), tm.type);
    } catch (const inconsistent_input& e) {
      entry["genus"] = nullptr;
    }
    pairs.push_back(entry);
  }
  return pairs;
}

}  // namespace detail

inline Report cmd_enumerate(std::size_t degree, const std::string& t0, const std::string& t1,
                            const EnumerationOptions& opt) {
  if (degree < 1) throw invalid_input("--degree must be positive");
  Report r;
  json data = json::array();
  if (!t0.empty() || !t1.empty()) {
    if (t0.empty() || t1.empty()) throw invalid_input("give both --type0 and --type1");
    BranchDatum d{degree, detail::parse_partition(t0, degree), detail::parse_partition(t1, degree)};
    data.push_back(detail::datum_json(d, opt));
  } else {
    for (const auto& d : polynomial_branch_data(degree)) data.push_back(detail::datum_json(d, opt));
  }
  std::size_t total = 0, classes = 0;
  for (const auto& d : data) {
    total += d["pairs"].get<std::size_t>();
    classes += d["classes"].size();
  }
  r.payload = {{"degree", degree}, {"total_pairs", total}, {"total_classes", classes}, {"data", data}};
  return r;
}

inline Report cmd_classify(const MonodromyPair& p) {
  Report r;
  const auto v = validate_pair(p);
  r.payload["pair"] = to_json(p);
  r.payload["valid"] = v.valid();
  r.payload["failures"] = v.failures();
  if (!v.valid()) {
    r.status = Status::verification_failed;
    return r;
  }
  const auto d = branch_datum(p);
  const auto canon = canonical_form(p);
  r.payload["datum"] = d.to_string();
  r.payload["kind"] = to_string(classify(d));
  r.payload["chebyshev_datum"] = is_chebyshev_datum(d);
  r.payload["belyi_datum"] = is_belyi_datum(d);
  r.payload["canonical"] = {{"tau0", canon.tau0.to_string()}, {"tau1", canon.tau1.to_string()}};
  r.payload["real"] = is_real_class(p, false);
  r.payload["real_extended"] = is_real_class(p, true);
  r.payload["group_order"] = monodromy_group_order(p).order;
  return r;
}

inline Report cmd_cheb(unsigned n) {
  if (n < 1) throw invalid_input("--n must be positive");
  Report r;
  auto [t, u] = chebyshev_pair(n);
  const bool pell = verify_pell_identity(n);
  const bool crit = n < 2 || critical_values_within(t, {Rational(-1), Rational(1)});
  const bool sqfree = n < 2 || gcd(t.derivative(), t.derivative().derivative()).degree() == 0;
  r.payload = {{"n", n},        {"T", to_json(t)},        {"U", to_json(u)},
               {"pell", pell},  {"critical_values_pm1", crit}, {"derivative_squarefree", sqfree}};
  if (!(pell && crit && sqfree)) r.status = Status::verification_failed;
  return r;
}

inline Report cmd_belyi(unsigned m, unsigned rr, bool special) {
  Report r;
  if (special) {
    auto p = special_degree5();
    const auto d = p.derivative();
    const auto expected = Rational(15, 16) * RatPoly{-1, 0, 1}.pow(2);
    r.payload = {{"polynomial", to_json(p)},
                 {"value_at_minus_1", to_string(p(Rational(-1)))},
                 {"value_at_1", to_string(p(Rational(1)))},
                 {"derivative_matches", d == expected}};
    if (p(Rational(-1)) != 0 || p(Rational(1)) != 1 || !(d == expected))
      r.status = Status::verification_failed;
    return r;
  }
  if (m < 1 || rr < 1) throw invalid_input("--m and --r must be positive");
  auto p = belyi_poly(m, rr);
  const Rational z(m, m + rr);
  r.payload = {{"m", m},
               {"r", rr},
               {"polynomial", to_json(p)},
               {"value_at_0", to_string(p(Rational(0)))},
               {"value_at_1", to_string(p(Rational(1)))},
               {"critical_point", to_string(z)},
               {"value_at_critical_point", to_string(p(z))},
               {"critical_values_01", critical_values_within(p, {Rational(0), Rational(1)})}};
  if (p(Rational(0)) != 0 || p(Rational(1)) != 0 || p(z) != 1) r.status = Status::verification_failed;
  return r;
}

inline Report cmd_dessin(const MonodromyPair& p, const std::string& dot_file) {
  Report r;
  Dessin d;
  try {
    d = dessin_from_pair(p);
  } catch (const std::invalid_argument& e) {
    throw invalid_input(e.what());
  }
  const auto back = pair_from_dessin(d);
  r.payload = {{"pair", to_json(p)},
               {"dessin", to_json(d)},
               {"faces", face_count(d)},
               {"genus", genus_of_dessin(d)},
               {"round_trip", back == p}};
  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) throw invalid_input("cannot write " + dot_file);
    out << export_dot(d);
    r.payload["dot_file"] = dot_file;
  }
  if (!(back == p)) r.status = Status::verification_failed;
  return r;
}

inline json orbits_json(const std::vector<GridOrbit>& orbits) {
  json out = json::array();
  for (const auto& o : orbits)
    out.push_back({{"size", o.size}, {"x_degree", o.x_degree}, {"y_degree", o.y_degree}});
  return out;
}

inline Report cmd_difffactors(const std::string& family, std::size_t n, std::size_t m,
                              const std::string& input) {
  Report r;
  if (!input.empty()) {
    auto pm = product_from_json(detail::load_json(input));
    auto orbits = component_orbits(pm);
    r.payload = {{"family", "input"}, {"factors", orbits.size()}, {"orbits", orbits_json(orbits)}};
  } else if (family == "cheb-sum") {
    if (n < 1) throw invalid_input("--n must be positive");
    auto orbits = component_orbits(cheb_sum(n));
    bool expected = orbits.size() == n;
    for (const auto& o : orbits) expected = expected && o.size == 4 * n;
    r.payload = {{"family", family}, {"n", n}, {"factors", orbits.size()},
                 {"orbits", orbits_json(orbits)}, {"matches_n_orbits_of_size_4n", expected}};
    if (!expected) r.status = Status::verification_failed;
  } else if (family == "schur") {
    if (n < 2) throw invalid_input("--n must be at least 2");
    auto s = schur(n);
    const std::size_t expected = n % 2 ? (n - 1) / 2 : n / 2;
    r.payload = {{"family", family}, {"n", n}, {"factors", s.factor_count},
                 {"expected", expected}, {"orbits", orbits_json(s.orbits)}};
    if (s.factor_count != expected) r.status = Status::verification_failed;
  } else if (family == "fano") {
    auto orbits = component_orbits(fano());
    r.payload = {{"family", family}, {"factors", orbits.size()}, {"orbits", orbits_json(orbits)}};
  } else if (family == "gcd") {
    if (n < 1 || m < 1) throw invalid_input("--n and --m must be positive");
    auto b = gcd_branches(n, m);
    r.payload = {{"family", family}, {"n", n}, {"m", m}, {"branches_at_infinity", b.branches},
                 {"irreducible_by_gcd", b.irreducible_advisory}};
  } else {
    throw invalid_input("unknown family '" + family + "' (cheb-sum, schur, fano, gcd or --input)");
  }
  return r;
}

inline Report cmd_beauville_search(const std::string& spec, const UnmixedSearchOptions& opt) {
  Report r;
  auto group = make_group(spec);
  std::visit(
      [&](const auto& g) {
        if (g.order() > detail::search_order_limit)
          throw invalid_input(g.name() + " is too large for exhaustive search");
        auto res = search_unmixed(g, opt);
        r.payload = {{"group", g.name()},
                     {"order", g.order()},
                     {"outcome", to_string(res.outcome)},
                     {"pairs_examined", res.pairs_examined},
                     {"signatures", res.signatures}};
        if (res.structure) {
          r.payload["structure"] = structure_json(g, *res.structure);
          r.payload["pairs"] = detail::structure_report(g, *res.structure);
        } else if (res.outcome == SearchOutcome::exhausted) {
          r.payload["message"] = "none exists";
        } else {
          r.payload["message"] = "closure budget exhausted; no conclusion";
        }
      },
      group);
  return r;
}

inline Report cmd_beauville_verify(const json& j) {
  Report r;
  if (!j.contains("group")) throw invalid_input("structure needs a \"group\" field");
  auto group = make_group(j.at("group").get<std::string>());
  std::visit(
      [&](const auto& g) {
        auto v = structure_from_json(g, j);
        auto verdict = is_unmixed(g, v);
        r.payload = {{"group", g.name()},
                     {"valid", to_string(verdict.valid)},
                     {"generates1", to_string(verdict.generates1)},
                     {"generates2", to_string(verdict.generates2)},
                     {"sigma_disjoint", verdict.sigma_disjoint},
                     {"pairs", detail::structure_report(g, v)}};
        if (verdict.common) r.payload["common_element"] = element_json(g, *verdict.common);
        if (!verdict.witness.empty()) r.payload["witness"] = verdict.witness;
        if (verdict.valid != Tristate::yes) r.status = Status::verification_failed;
      },
      group);
  return r;
}

inline AutSupply parse_supply(const std::string& s) {
  if (s == "inner-only") return AutSupply::inner_only;
  if (s == "ambient-symmetric") return AutSupply::ambient_symmetric;
  if (s == "abelian-negation") return AutSupply::abelian_negation;
  if (s == "none") return AutSupply::none;
  throw invalid_input("unknown automorphism supply '" + s + "'");
}

inline Report cmd_beauville_reality(const json& j, const std::string& supply) {
  Report r;
  if (!j.contains("group")) throw invalid_input("structure needs a \"group\" field");
  auto group = make_group(j.at("group").get<std::string>());
  std::visit(
      [&](const auto& g) {
        auto v = structure_from_json(g, j);
        auto check = is_unmixed(g, v);
        if (check.valid != Tristate::yes) {
          r.status = Status::verification_failed;
          r.payload = {{"group", g.name()}, {"valid", to_string(check.valid)}, {"witness", check.witness}};
          return;
        }
        const auto s = supply == "auto" ? default_aut_supply(g) : parse_supply(supply);
        auto rep = reality_verdict(g, v, s);
        r.payload = {{"group", g.name()},
                     {"supply", to_string(s)},
                     {"verdict", to_string(rep.verdict)},
                     {"reason", rep.reason},
                     {"type1", to_json(rep.type1)},
                     {"type2", to_json(rep.type2)},
                     {"increasing1", rep.increasing1},
                     {"increasing2", rep.increasing2},
                     {"order_sets_differ", rep.order_sets_differ}};
        if (rep.inverter1) r.payload["inverter1"] = element_json(g, *rep.inverter1);
        if (rep.inverter2) r.payload["inverter2"] = element_json(g, *rep.inverter2);
      },
      group);
  return r;
}

template <class G>
json mixed_verdict_json(const G& g, const MixedVerdict<typename G::element_type>& v) {
  json out{{"valid", to_string(v.valid)},
           {"generates_g0", to_string(v.cond1)},
           {"g_outside_g0", v.cond2},
           {"squares_avoid_sigma", to_string(v.cond3)},
           {"sigma_disjoint", to_string(v.cond4)}};
  if (v.gamma) out["gamma"] = element_json(g, *v.gamma);
  if (v.common) out["common_element"] = element_json(g, *v.common);
  if (!v.witness.empty()) out["witness"] = v.witness;
  return out;
}

inline Report cmd_mixed_verify(const json& j) {
  Report r;
  if (!j.contains("group")) throw invalid_input("structure needs a \"group\" field");
  auto group = make_group(j.at("group").get<std::string>());
  std::visit(
      [&](const auto& g) {
        if constexpr (requires { index_two_from_descriptor(g, std::string{}); }) {
          try {
            auto sub = index_two_from_descriptor(g, j.at("g0").get<std::string>());
            MixedQuadruple<typename std::decay_t<decltype(g)>::element_type> m{
                sub, element_from_json(g, j.at("a")), element_from_json(g, j.at("c")),
                element_from_json(g, j.at("g"))};
            auto v = is_mixed(g, m);
            r.payload = mixed_verdict_json(g, v);
            r.payload["group"] = g.name();
            if (v.valid != Tristate::yes) r.status = Status::verification_failed;
          } catch (const json::exception& e) {
            throw invalid_input(std::string("malformed quadruple: ") + e.what());
          }
        } else {
          throw invalid_input("no named index-2 subgroup for " + g.name() +
                              " (use sym:n with \"alt\" or h4:... with \"h2\")");
        }
      },
      group);
  return r;
}

inline Report cmd_h4(const std::string& base_spec, const std::string& quad_json, bool verify) {
  Report r;
  auto group = make_group("h4:" + base_spec);
  std::visit(
      [&](const auto& g) {
        if constexpr (requires { g.h(); }) {
          const auto& h = g.h();
          std::optional<H4Quadruple> q;
          if (!quad_json.empty()) {
            auto j = detail::load_json(quad_json);
            try {
              auto idx = [&](const char* k) { return h.index_of(element_from_json(h.base(), j.at(k))); };
              q = H4Quadruple{idx("a1"), idx("c1"), idx("a2"), idx("c2")};
            } catch (const json::exception& e) {
              throw invalid_input(std::string("malformed quadruple: ") + e.what());
            }
          } else {
            q = search_h4_quadruple(h);
          }
          r.payload = {{"group", g.name()}, {"order", g.order()}, {"subgroup_order", g.order() / 2}};
          if (!q) {
            r.payload["outcome"] = "exhausted";
            r.payload["message"] = "no quadruple in " + h.name() + " satisfies the hypotheses";
            return;
          }
          r.payload["outcome"] = quad_json.empty() ? "found" : "given";
          r.payload["quadruple"] = {{"a1", element_json(h.base(), h.element(q->a1))},
                                    {"c1", element_json(h.base(), h.element(q->c1))},
                                    {"a2", element_json(h.base(), h.element(q->a2))},
                                    {"c2", element_json(h.base(), h.element(q->c2))}};
          auto res = h4_lemma_check(g, q->a1, q->c1, q->a2, q->c2, verify);
          json hyp = json::array();
          for (int i = 0; i < 4; ++i) {
            json e{{"hypothesis", i + 1}, {"holds", to_string(res.hypotheses.holds[i])}};
            if (!res.hypotheses.witness[i].empty()) e["witness"] = res.hypotheses.witness[i];
            hyp.push_back(e);
          }
          r.payload["hypotheses"] = hyp;
          r.payload["type1"] = to_json(res.hypotheses.type1);
          r.payload["type2"] = to_json(res.hypotheses.type2);
          if (res.quadruple) r.payload["mixed"] = quadruple_json(g, *res.quadruple);
          if (res.direct) r.payload["direct_check"] = mixed_verdict_json(g, *res.direct);
          if (!res.hypotheses.all() || (res.direct && res.direct->valid != Tristate::yes))
            r.status = Status::verification_failed;
        }
      },
      group);
  return r;
}

inline Report cmd_snexample(std::size_t n, std::size_t p) {
  Report r;
  if (auto v = sn_example_violations(n, p); !v.empty()) {
    r.status = Status::invalid_input;
    r.payload = {{"n", n}, {"p", p}, {"violations", v}};
    return r;
  }
  auto ex = sn_example(n, p);
  SymmetricGroup sym(n);
  auto types = [](const std::set<CycleType>& s) {
    json out = json::array();
    for (const auto& t : s) out.push_back(t.to_string());
    return out;
  };
  r.payload = {{"n", n},
               {"p", p},
               {"structure", structure_json(sym, ex.structure())},
               {"generates1", to_string(ex.generates1)},
               {"generates2", to_string(ex.generates2)},
               {"types1", types(ex.types1)},
               {"types2", types(ex.types2)},
               {"types_disjoint", ex.types_disjoint},
               {"no_inverting_conjugator", ex.no_inverting_conjugator},
               {"reality", to_string(ex.reality)},
               {"transcript", ex.transcript}};
  if (!ex.verified()) r.status = Status::verification_failed;
  return r;
}

inline Report cmd_findprime(std::uint64_t n, std::optional<std::uint64_t> bound) {
  if (n < 5) throw invalid_input("--n must be at least 5");
  Report r;
  auto p = find_prime(n, bound);
  auto lp = lemma_prime(n);
  r.payload = {{"n", n}, {"prime", p ? json(*p) : json(nullptr)}, {"lemma_prime", lp ? json(*lp) : json(nullptr)}};
  if (bound) r.payload["bound"] = *bound;
  if (!p) r.payload["message"] = "no odd prime within the bound";
  return r;
}

struct Table6Case {
  const char* name;
  const char* type0;
  const char* type1;
  std::size_t expected;
};

inline constexpr Table6Case table6_cases[] = {
    {"I", "2,2,1,1", "2,2,2", 3},  {"II", "2,2,1,1", "3,2,1", 18}, {"III", "2,2,1,1", "4,1,1", 9},
    {"IV", "3,1,1,1", "2,2,2", 2}, {"V", "3,1,1,1", "3,2,1", 12},  {"VI", "3,1,1,1", "4,1,1", 6}};

inline Report cmd_table6(const EnumerationOptions& opt) {
  Report r;
  json cases = json::object();
  bool all = true;
  for (const auto& c : table6_cases) {
    BranchDatum d{6, detail::parse_partition(c.type0, 6), detail::parse_partition(c.type1, 6)};
    const auto count = enumerate_factorizations(d, opt).pairs.size();
    const auto swapped = enumerate_factorizations(d.swapped(), opt).pairs.size();
    // case IV is compared up to exchanging the fibres over 0 and 1
    const bool match = count == c.expected || (std::string(c.name) == "IV" && swapped == c.expected);
    all = all && match;
    cases[c.name] = {{"type0", d.type0.to_string()},
                     {"type1", d.type1.to_string()},
                     {"count", count},
                     {"swapped_count", swapped},
                     {"expected", c.expected},
                     {"match", match}};
  }
  r.payload = {{"cases", cases}, {"all_match", all}};
  if (!all) r.status = Status::verification_failed;
  return r;
}

/// Parses argv (without the program name) and runs one subcommand.
inline Result run(const std::vector<std::string>& args) {
  CLI::App app{"Two-critical-value polynomials, dessins, difference polynomials and Beauville structures"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t max_degree = 9;
  app.add_flag("--json", as_json, "emit the report as JSON");
  app.add_option("--seed", seed, "seed for randomized choices")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for enumeration and searches")->capture_default_str();
  app.add_option("--max-degree", max_degree, "refuse enumerations above this degree")->capture_default_str();

  std::function<Report()> action;
  std::string command;

  auto* en = app.add_subcommand(
      "enumerate",
      "Factorizations (tau0, tau1) of the n-cycle (1..n) with prescribed cycle types and their classes; "
      "without types, every two-critical-value branch datum of the degree");
  std::size_t en_degree = 0;
  std::string en_t0, en_t1;
  en->add_option("--degree", en_degree, "degree n")->required();
  en->add_option("--type0", en_t0, "cycle type over 0, e.g. 2,2,1,1");
  en->add_option("--type1", en_t1, "cycle type over 1, e.g. 2,2,2");
  en->callback([&] {
    action = [&] {
      return cmd_enumerate(en_degree, en_t0, en_t1, EnumerationOptions{max_degree, jobs});
    };
  });

  auto* cl = app.add_subcommand(
      "classify",
      "Validity, Chebyshev/Belyi kind, reality (plain and up to exchanging 0 and 1) and monodromy group "
      "order of a monodromy pair");
  detail::PairInput cl_in;
  cl_in.add(cl);
  cl->callback([&] { action = [&] { return cmd_classify(cl_in.get()); }; });

  auto* ch = app.add_subcommand(
      "cheb", "Exact T_n and U_(n-1): the identity T^2 - (z^2-1) U^2 = 1 and critical values in {-1, 1}");
  unsigned ch_n = 0;
  ch->add_option("--n", ch_n, "degree n")->required();
  ch->callback([&] { action = [&] { return cmd_cheb(ch_n); }; });

  auto* be = app.add_subcommand(
      "belyi", "The polynomial P_(m,r) proportional to z^m (1-z)^r with P(m/(m+r)) = 1, or --special for "
               "the degree-5 polynomial with derivative (15/16)(z^2-1)^2");
  unsigned be_m = 0, be_r = 0;
  bool be_special = false;
  be->add_option("--m", be_m, "multiplicity at 0");
  be->add_option("--r", be_r, "multiplicity at 1");
  be->add_flag("--special", be_special, "the degree-5 example instead");
  be->callback([&] { action = [&] { return cmd_belyi(be_m, be_r, be_special); }; });

  auto* de = app.add_subcommand(
      "dessin", "Bipartite ribbon graph of a pair: black vertices are cycles of tau0, white vertices cycles "
                "of tau1, faces cycles of (tau0 tau1)^-1; genus by Euler's formula");
  detail::PairInput de_in;
  de_in.add(de);
  std::string de_dot;
  bool de_random = false;
  de->add_option("--dot", de_dot, "write the drawing in DOT format to this file");
  de->add_flag("--random", de_random, "use a random valid pair of the given --degree (see --seed)");
  de->callback([&] {
    action = [&] {
      if (de_random) {
        if (de_in.degree < 1) throw invalid_input("--random needs --degree");
        std::mt19937_64 rng(seed);
        return cmd_dessin(detail::random_valid_pair(de_in.degree, rng), de_dot);
      }
      return cmd_dessin(de_in.get(), de_dot);
    };
  });

  auto* df = app.add_subcommand(
      "difffactors", "Irreducible factors of f(x) - g(y) as orbits of the product monodromy on the n x m "
                     "grid: T_2n(x) + T_2n(y), Schur quotients of T_n, the degree-7 Fano pair, or --input");
  std::string df_family, df_input;
  std::size_t df_n = 0, df_m = 0;
  df->add_option("--family", df_family, "cheb-sum, schur, fano or gcd");
  df->add_option("--n", df_n, "n");
  df->add_option("--m", df_m, "m (gcd family)");
  df->add_option("--input", df_input, "product monodromy JSON or @file");
  df->callback([&] { action = [&] { return cmd_difffactors(df_family, df_n, df_m, df_input); }; });

  auto* bs = app.add_subcommand(
      "beauville-search",
      "Exhaustive search for an unmixed Beauville structure (a1,c1; a2,c2): both pairs generate and their "
      "Sigma sets meet only in 1");
  std::string bs_group, bs_t1, bs_t2;
  bs->add_option("--group", bs_group, "group spec: sym:n, alt:n, sl2:p, psl2:p, znxzn:n, gl3f2")->required();
  bs->add_option("--type1", bs_t1, "restrict the first pair to this type, e.g. 3,3,4");
  bs->add_option("--type2", bs_t2, "restrict the second pair");
  bs->callback([&] {
    action = [&] {
      UnmixedSearchOptions opt;
      opt.jobs = jobs;
      if (!bs_t1.empty()) opt.type1 = detail::parse_triple(bs_t1);
      if (!bs_t2.empty()) opt.type2 = detail::parse_triple(bs_t2);
      return cmd_beauville_search(bs_group, opt);
    };
  });

  auto* bv = app.add_subcommand("beauville-verify",
                                "Check an unmixed structure {group,a1,c1,a2,c2}, with witnesses on failure");
  std::string bv_structure;
  bv->add_option("--structure", bv_structure, "structure JSON or @file")->required();
  bv->callback([&] { action = [&] { return cmd_beauville_verify(detail::load_json(bv_structure)); }; });

  auto* br = app.add_subcommand(
      "beauville-reality",
      "Whether the surface of an unmixed structure is isomorphic to its conjugate, via automorphisms "
      "inverting both pairs");
  std::string br_structure, br_supply = "auto";
  br->add_option("--structure", br_structure, "structure JSON or @file")->required();
  br->add_option("--supply", br_supply,
                 "automorphisms: auto, inner-only, ambient-symmetric, abelian-negation, none")
      ->capture_default_str();
  br->callback([&] {
    action = [&] { return cmd_beauville_reality(detail::load_json(br_structure), br_supply); };
  });

  auto* mv = app.add_subcommand(
      "mixed-verify", "Check a mixed quadruple {group,g0,a,c,g}: a, c generate G0, g lies outside, "
                      "(g gamma)^2 avoids Sigma(a,c) and Sigma(a,c) meets Sigma(gag^-1,gcg^-1) only in 1");
  std::string mv_structure;
  mv->add_option("--structure", mv_structure, "quadruple JSON or @file")->required();
  mv->callback([&] { action = [&] { return cmd_mixed_verify(detail::load_json(mv_structure)); }; });

  auto* h4 = app.add_subcommand(
      "h4", "Mixed structures on (H x H) x| Z/4 from a1, c1, a2, c2 in H: even orders, generation by "
            "a1^2, a1c1, c1^2 and by a2, c2, and coprime order products");
  std::string h4_base = "sl2:11", h4_quad;
  bool h4_no_verify = false;
  h4->add_option("--base", h4_base, "the group H")->capture_default_str();
  h4->add_option("--quadruple", h4_quad, "{a1,c1,a2,c2} in H as JSON or @file; searched when absent");
  h4->add_flag("--no-verify", h4_no_verify, "skip the direct check on the whole group");
  h4->callback([&] { action = [&] { return cmd_h4(h4_base, h4_quad, !h4_no_verify); }; });

  auto* sn = app.add_subcommand(
      "snexample", "The S_n structure a = (1,p+2,p+1)(2,p+3), c = (1..p)(p+1..n) against a' = s^-1, "
                   "c' = (1,2)s^2, whose surface is not isomorphic to its conjugate");
  std::size_t sn_n = 0, sn_p = 0;
  sn->add_option("--n", sn_n, "degree n >= 7")->required();
  sn->add_option("--p", sn_p, "odd prime p with p + 3 <= n and n mod p not 0 or 1")->required();
  sn->callback([&] { action = [&] { return cmd_snexample(sn_n, sn_p); }; });

  auto* fp = app.add_subcommand("findprime",
                                "Least odd prime p with n not congruent to 0 or 1 mod p, optionally p <= bound");
  std::uint64_t fp_n = 0, fp_bound = 0;
  fp->add_option("--n", fp_n, "n >= 5")->required();
  auto* fp_bound_opt = fp->add_option("--bound", fp_bound, "largest admissible p");
  fp->callback([&] {
    action = [&] {
      return cmd_findprime(fp_n, fp_bound_opt->count() ? std::optional(fp_bound) : std::nullopt);
    };
  });

  auto* t6 = app.add_subcommand(
      "table6", "Factorization counts for the six degree-6 data (2,2,1,1) or (3,1,1,1) over 0 against "
                "(2,2,2), (3,2,1) or (4,1,1) over 1, compared with the expected point counts");
  t6->callback([&] { action = [&] { return cmd_table6(EnumerationOptions{max_degree, jobs}); }; });

  Result result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    result.out = target->help();
    return result;
  } catch (const CLI::ParseError& e) {
    Report rep{Status::invalid_input, {{"error", e.what()}}};
    result.exit_code = static_cast<int>(rep.status);
    result.out = as_json ? json{{"command", args}, {"status", to_string(rep.status)}, {"payload", rep.payload}}.dump(2) + "\n"
                         : std::string("invalid-input: ") + e.what() + "\n";
    return result;
  }
  command = app.get_subcommands().front()->get_name();

  Report rep;
  try {
    rep = action();
  } catch (const refused_error& e) {
    rep = {Status::invalid_input, {{"error", e.what()}}};
  } catch (const std::invalid_argument& e) {  // includes parse, decode and spec errors
    rep = {Status::invalid_input, {{"error", e.what()}}};
  } catch (const std::length_error& e) {
    rep = {Status::invalid_input, {{"error", e.what()}}};
  } catch (const std::domain_error& e) {
    rep = {Status::verification_failed, {{"error", e.what()}}};
  } catch (const std::logic_error& e) {
    rep = {Status::verification_failed, {{"error", e.what()}}};
  }
  result.exit_code = static_cast<int>(rep.status);
  if (as_json) {
    json doc{{"command", args}, {"status", to_string(rep.status)}, {"payload", rep.payload}};
    result.out = doc.dump(2) + "\n";
  } else {
    std::string text = command + ": " + to_string(rep.status) + "\n";
    for (const auto& [key, value] : rep.payload.items()) text += key + ": " + detail::dump_value(value) + "\n";
    result.out = text;
  }
  return result;
}

}  // namespace belyi::cli

#endif  // BELYI_CLI_HPP
