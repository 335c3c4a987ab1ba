#ifndef BELYI_DESSIN_HPP
#define BELYI_DESSIN_HPP

// Dessins d'enfants as bipartite ribbon graphs. Edges are labelled 1..n (the
// sheets over 1/2); each black vertex lists its edges in counterclockwise
// order, which is the cycle order of tau0 on those labels, and likewise for
// white vertices and tau1. Valence-1 vertices are kept so that the
// correspondence with monodromy pairs is a bijection.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "belyi/monodromy.hpp"
#include "belyi/perm.hpp"

namespace belyi {

struct Dessin {
  std::size_t edge_count = 0;
  std::vector<std::vector<int>> black;  // 1-based edge labels, cyclic order
  std::vector<std::vector<int>> white;

  friend bool operator==(const Dessin&, const Dessin&) = default;
};

class structure_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline Dessin dessin_from_pair(const MonodromyPair& p) {
  if (p.tau0.degree() != p.tau1.degree())
    throw std::invalid_argument("dessin_from_pair: degree mismatch");
  if (!is_transitive(std::vector<Permutation>{p.tau0, p.tau1}, p.degree()))
    throw std::invalid_argument("dessin_from_pair: pair does not give a connected dessin");
  return {p.degree(), p.tau0.one_based_cycles(true), p.tau1.one_based_cycles(true)};
}

/// Reads the pair off the cyclic orders. The result need not be a
/// two-critical-value pair (e.g. a star gives tau1 = identity).
inline MonodromyPair pair_from_dessin(const Dessin& d) {
  auto rotation = [&](const std::vector<std::vector<int>>& verts, const char* colour) {
    std::vector<bool> seen(d.edge_count, false);
    for (const auto& v : verts) {
      if (v.empty()) throw structure_error(std::string(colour) + " vertex without edges");
      for (int e : v) {
        if (e < 1 || static_cast<std::size_t>(e) > d.edge_count)
          throw structure_error("edge label " + std::to_string(e) + " out of range");
        if (seen[e - 1])
          throw structure_error("edge " + std::to_string(e) + " meets two " + colour + " vertices");
        seen[e - 1] = true;
      }
    }
    for (std::size_t e = 0; e < d.edge_count; ++e)
      if (!seen[e])
        throw structure_error("edge " + std::to_string(e + 1) + " has no " + colour + " vertex");
    return Permutation::from_cycles(d.edge_count, verts);
  };
  return {rotation(d.black, "black"), rotation(d.white, "white")};
}

/// Number of faces: cycles of (tau0 * tau1)^-1.
inline std::size_t face_count(const Dessin& d) {
  const auto p = pair_from_dessin(d);
  return p.product().inverse().cycle_count();
}

inline long long genus_of_dessin(const Dessin& d) {
  const long long euler = static_cast<long long>(d.black.size() + d.white.size()) -
                          static_cast<long long>(d.edge_count) +
                          static_cast<long long>(face_count(d));
  if (euler % 2 != 0 || euler > 2) throw structure_error("Euler characteristic is not 2 - 2g");
  return (2 - euler) / 2;
}

/// Graphviz text. Black vertices are filled, white hollow; every edge carries
/// its position in the rotation at its black and its white end as `ord`.
inline std::string export_dot(const Dessin& d) {
  std::vector<std::size_t> bv(d.edge_count), bpos(d.edge_count), wv(d.edge_count),
      wpos(d.edge_count);
  for (std::size_t v = 0; v < d.black.size(); ++v)
    for (std::size_t k = 0; k < d.black[v].size(); ++k) {
      bv[d.black[v][k] - 1] = v;
      bpos[d.black[v][k] - 1] = k;
    }
  for (std::size_t v = 0; v < d.white.size(); ++v)
    for (std::size_t k = 0; k < d.white[v].size(); ++k) {
      wv[d.white[v][k] - 1] = v;
      wpos[d.white[v][k] - 1] = k;
    }
  auto rot = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  std::ostringstream out;
  out << "graph dessin {\n";
  out << "  node [shape=circle, width=0.2, label=\"\"];\n";
  for (std::size_t v = 0; v < d.black.size(); ++v)
    out << "  b" << v + 1 << " [style=filled, fillcolor=black, rotation=\"" << rot(d.black[v])
        << "\"];\n";
  for (std::size_t v = 0; v < d.white.size(); ++v)
    out << "  w" << v + 1 << " [style=solid, fillcolor=white, rotation=\"" << rot(d.white[v])
        << "\"];\n";
  for (std::size_t e = 0; e < d.edge_count; ++e)
    out << "  b" << bv[e] + 1 << " -- w" << wv[e] + 1 << " [label=\"" << e + 1 << "\", ord=\""
        << bpos[e] + 1 << "," << wpos[e] + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace belyi

#endif  // BELYI_DESSIN_HPP
