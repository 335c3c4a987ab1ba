#ifndef BELYI_SERIALIZE_HPP
#define BELYI_SERIALIZE_HPP

// JSON encodings.
//   permutation      {"degree": n, "cycles": [[1,2],[3,4,5]]}  (or a cycle string "(1,2)(3,4,5)")
//   monodromy pair   {"degree": n, "tau0": cycles, "tau1": cycles}
//   polynomial       {"coeffs": ["p/q", ...]}                  (ascending degree)
//   product action   {"n", "m", "labels": [{"name", "tau", "rho"}]}
//   group elements   cycles / [[a,b],[c,d]] / [x,y] / 3x3 0-1 rows / {"h1","h2","k"}

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/beauville/core.hpp"
#include "belyi/beauville/mixed.hpp"
#include "belyi/dessin.hpp"
#include "belyi/diffpoly.hpp"
#include "belyi/groups/spec.hpp"
#include "belyi/monodromy.hpp"
#include "belyi/polyexact.hpp"

namespace belyi {

using json = nlohmann::ordered_json;

class decode_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline json cycles_json(const Permutation& p) {
  json out = json::array();
  for (const auto& c : p.one_based_cycles(false)) out.push_back(c);
  return out;
}

inline json to_json(const Permutation& p) {
  return {{"degree", p.degree()}, {"cycles", cycles_json(p)}};
}

/// Accepts {"degree","cycles"}, a bare list of cycles or a cycle string;
/// `degree` is used when the value does not carry its own.
inline Permutation permutation_from_json(const json& j, std::size_t degree) {
  try {
    if (j.is_string()) return parse_cycles(j.get<std::string>(), degree);
    if (j.is_object()) {
      const auto n = j.contains("degree") ? j.at("degree").get<std::size_t>() : degree;
      if (degree != 0 && n != degree)
        throw decode_error("permutation degree " + std::to_string(n) + " differs from " +
                           std::to_string(degree));
      return permutation_from_json(j.at("cycles"), n);
    }
    if (j.is_array()) return Permutation::from_cycles(degree, j.get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed permutation: ") + e.what());
  }
  throw decode_error("malformed permutation: " + j.dump());
}

inline json to_json(const MonodromyPair& p) {
  return {{"degree", p.degree()}, {"tau0", cycles_json(p.tau0)}, {"tau1", cycles_json(p.tau1)}};
}

inline MonodromyPair pair_from_json(const json& j) {
  try {
    const auto n = j.at("degree").get<std::size_t>();
    return {permutation_from_json(j.at("tau0"), n), permutation_from_json(j.at("tau1"), n)};
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed pair: ") + e.what());
  }
}

inline json to_json(const RatPoly& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(to_string(a));
  return {{"coeffs", c}};
}

inline RatPoly poly_from_json(const json& j) {
  try {
    std::vector<Rational> c;
    for (const auto& v : j.at("coeffs")) c.push_back(parse_rational(v.get<std::string>()));
    return RatPoly(std::move(c));
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed polynomial: ") + e.what());
  }
}

inline json to_json(const Dessin& d) {
  return {{"edges", d.edge_count}, {"black", d.black}, {"white", d.white}};
}

inline json to_json(const ProductMonodromy& pm) {
  json labels = json::array();
  for (const auto& l : pm.labels)
    labels.push_back({{"name", l.name}, {"tau", cycles_json(l.tau)}, {"rho", cycles_json(l.rho)}});
  return {{"n", pm.n}, {"m", pm.m}, {"labels", labels}};
}

inline ProductMonodromy product_from_json(const json& j) {
  try {
    ProductMonodromy pm{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(), {}};
    for (const auto& l : j.at("labels"))
      pm.labels.push_back({l.at("name").get<std::string>(), permutation_from_json(l.at("tau"), pm.n),
                           permutation_from_json(l.at("rho"), pm.m)});
    pm.validate();
    return pm;
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed product monodromy: ") + e.what());
  }
}

inline json to_json(const TypeTriple& t) { return json::array({t.r, t.s, t.t}); }

// Group elements, per family.

inline json element_json(const SymmetricGroup&, const Permutation& x) { return cycles_json(x); }
inline json element_json(const AlternatingGroup&, const Permutation& x) { return cycles_json(x); }
inline json element_json(const SL2&, const Mat2& m) { return {{m.a, m.b}, {m.c, m.d}}; }
inline json element_json(const PSL2&, const Mat2& m) { return {{m.a, m.b}, {m.c, m.d}}; }
inline json element_json(const CyclicSquare&, const Residue2& r) { return {r.x, r.y}; }
inline json element_json(const GL3F2&, const Mat3F2& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({m.at(r, 0), m.at(r, 1), m.at(r, 2)});
  return rows;
}
template <class B>
json element_json(const H4Group<B>& g, const H4Element& x) {
  const auto& h = g.h();
  return {{"h1", element_json(h.base(), h.element(x.h1))},
          {"h2", element_json(h.base(), h.element(x.h2))},
          {"k", x.k}};
}

namespace detail {

template <class G>
auto checked(const G& grp, typename G::element_type x) {
  if (!grp.contains(x)) throw decode_error("element does not belong to " + grp.name());
  return x;
}

}  // namespace detail

inline Permutation element_from_json(const SymmetricGroup& g, const json& j) {
  return detail::checked(g, permutation_from_json(j, g.degree()));
}
inline Permutation element_from_json(const AlternatingGroup& g, const json& j) {
  return detail::checked(g, permutation_from_json(j, g.degree()));
}
namespace detail {

template <class G>
Mat2 matrix_from_json(const G& g, const json& j) {
  try {
    auto m = j.get<std::vector<std::vector<long long>>>();
    if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) throw decode_error("expected a 2x2 matrix");
    return g.make(m[0][0], m[0][1], m[1][0], m[1][1]);
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed matrix: ") + e.what());
  } catch (const decode_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw decode_error(e.what());
  }
}

}  // namespace detail

inline Mat2 element_from_json(const SL2& g, const json& j) { return detail::matrix_from_json(g, j); }
inline Mat2 element_from_json(const PSL2& g, const json& j) { return detail::matrix_from_json(g, j); }
inline Residue2 element_from_json(const CyclicSquare& g, const json& j) {
  try {
    auto v = j.get<std::vector<long long>>();
    if (v.size() != 2) throw decode_error("expected a residue pair");
    return g.make(v[0], v[1]);
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed residue pair: ") + e.what());
  }
}
inline Mat3F2 element_from_json(const GL3F2& g, const json& j) {
  try {
    auto rows = j.get<std::vector<std::vector<int>>>();
    if (rows.size() != 3) throw decode_error("expected a 3x3 matrix");
    std::uint16_t bits = 0;
    for (int r = 0; r < 3; ++r) {
      if (rows[r].size() != 3) throw decode_error("expected a 3x3 matrix");
      for (int c = 0; c < 3; ++c) bits |= static_cast<std::uint16_t>((rows[r][c] & 1) << (3 * r + c));
    }
    return detail::checked(g, Mat3F2{bits});
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed matrix: ") + e.what());
  }
}
template <class B>
H4Element element_from_json(const H4Group<B>& g, const json& j) {
  try {
    const auto& base = g.h().base();
    return g.make(element_from_json(base, j.at("h1")), element_from_json(base, j.at("h2")),
                  j.at("k").get<int>());
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed H4 element: ") + e.what());
  } catch (const decode_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw decode_error(e.what());
  }
}

template <FiniteGroup G>
json structure_json(const G& g, const UnmixedStructure<typename G::element_type>& v) {
  return {{"group", g.name()},
          {"a1", element_json(g, v.a1)},
          {"c1", element_json(g, v.c1)},
          {"a2", element_json(g, v.a2)},
          {"c2", element_json(g, v.c2)}};
}

template <FiniteGroup G>
UnmixedStructure<typename G::element_type> structure_from_json(const G& g, const json& j) {
  try {
    return {element_from_json(g, j.at("a1")), element_from_json(g, j.at("c1")),
            element_from_json(g, j.at("a2")), element_from_json(g, j.at("c2"))};
  } catch (const json::exception& e) {
    throw decode_error(std::string("malformed structure: ") + e.what());
  }
}

/// Index-2 subgroups addressable by name: "alt" inside S_n, "h2" inside H4.
inline IndexTwoSubgroup<Permutation> index_two_from_descriptor(const SymmetricGroup& g,
                                                               const std::string& d) {
  if (d != "alt") throw decode_error("unknown index-2 subgroup '" + d + "' of " + g.name());
  AlternatingGroup alt(g.degree());
  return {"alt", [](const Permutation& x) { return x.is_even(); },
          [alt](const Permutation& x) { return alt.class_key(x); }};
}
template <class B>
IndexTwoSubgroup<H4Element> index_two_from_descriptor(const H4Group<B>& g, const std::string& d) {
  if (d != "h2") throw decode_error("unknown index-2 subgroup '" + d + "' of " + g.name());
  return h4_even_part(g);
}

template <FiniteGroup G>
json quadruple_json(const G& g, const MixedQuadruple<typename G::element_type>& m) {
  return {{"group", g.name()},
          {"g0", m.g0.descriptor},
          {"a", element_json(g, m.a)},
          {"c", element_json(g, m.c)},
          {"g", element_json(g, m.g)}};
}

}  // namespace belyi

#endif  // BELYI_SERIALIZE_HPP
