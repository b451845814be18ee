#include "pg/powergraph.hpp"

#include <numeric>
#include <stdexcept>
#include <variant>

namespace pg::powergraph {

namespace {

using graphcore::GraphBuilder;
using groups::AbelianP;
using groups::Cyclic;
using groups::Dicyclic;
using groups::Dihedral;

// Walks <x> for every x and marks x ~ y for each y in <x>. Looping over all
// x covers both directions of the power relation. The walks run on vertex
// indices with per-family stepping so that building stays cheap even when a
// sweep touches thousands of groups.

void add_cycle_edges(GraphBuilder& b, i64 m, i64 base) {
  // Vertices base..base+m-1 carry Z_m; <a> = the multiples of a.
  for (i64 a = 0; a < m; ++a) {
    i64 y = a;
    do {
      if (y != a) b.add_edge(static_cast<int>(base + a), static_cast<int>(base + y));
      y += a;
      if (y >= m) y -= m;
    } while (y != a);
  }
}

void build_cyclic(GraphBuilder& b, const Cyclic& c) { add_cycle_edges(b, c.n, 0); }

void build_abelian_p(GraphBuilder& b, const AbelianP& spec, i64 n) {
  const std::size_t r = spec.exponents.size();
  std::vector<i64> mod(r);
  for (std::size_t i = 0; i < r; ++i) mod[i] = arith::checked_pow(spec.p, spec.exponents[i]);

  std::vector<i64> xc(r), yc(r);
  for (i64 xi = 0; xi < n; ++xi) {
    i64 rest = xi;
    for (std::size_t i = r; i-- > 0;) {
      xc[i] = rest % mod[i];
      rest /= mod[i];
    }
    yc = xc;
    i64 yi = xi;
    do {
      if (yi != xi) b.add_edge(static_cast<int>(xi), static_cast<int>(yi));
      yi = 0;
      for (std::size_t i = 0; i < r; ++i) {
        yc[i] += xc[i];
        if (yc[i] >= mod[i]) yc[i] -= mod[i];
        yi = yi * mod[i] + yc[i];
      }
    } while (yi != xi);
  }
}

void build_dihedral(GraphBuilder& b, const Dihedral& d) {
  add_cycle_edges(b, d.n, 0);  // rotations form Z_n
  // <a^i b> = {e, a^i b}
  for (i64 i = 0; i < d.n; ++i) b.add_edge(static_cast<int>(d.n + i), 0);
}

void build_dicyclic(GraphBuilder& b, const Dicyclic& q) {
  const i64 m = 2 * q.n;
  add_cycle_edges(b, m, 0);  // rotations form Z_2n
  // <a^i b> = {e, a^i b, a^n, a^(n+i) b}
  for (i64 i = 0; i < m; ++i) {
    const int v = static_cast<int>(m + i);
    b.add_edge(v, 0);
    b.add_edge(v, static_cast<int>(q.n));
    b.add_edge(v, static_cast<int>(m + (i + q.n) % m));
  }
}

}  // namespace

PowerGraphBundle build_power_graph(const groups::GroupSpec& spec, i64 vertex_cap) {
  groups::validate(spec);
  if (vertex_cap < 1) throw std::invalid_argument("build_power_graph: vertex cap must be >= 1");
  const i64 n = groups::order(spec);
  if (n > vertex_cap)
    throw std::invalid_argument("build_power_graph: group order " + std::to_string(n) +
                                " exceeds vertex cap " + std::to_string(vertex_cap));

  GraphBuilder b(static_cast<int>(n));
  for (i64 i = 0; i < n; ++i)
    b.set_label(static_cast<int>(i), groups::label(spec, groups::element_at(spec, i)));

  if (const auto* c = std::get_if<Cyclic>(&spec)) {
    build_cyclic(b, *c);
  } else if (const auto* a = std::get_if<AbelianP>(&spec)) {
    build_abelian_p(b, *a, n);
  } else if (const auto* d = std::get_if<Dihedral>(&spec)) {
    build_dihedral(b, *d);
  } else {
    build_dicyclic(b, std::get<Dicyclic>(spec));
  }

  PowerGraphBundle bundle{spec, b.build(), 0, {}};
  if (const auto* c = std::get_if<Cyclic>(&spec)) {
    for (i64 a = 0; a < c->n; ++a)
      if (a == 0 || std::gcd(a, c->n) == 1) bundle.s_set.push_back(static_cast<int>(a));
  }
  return bundle;
}

graphcore::InducedSubgraph proper_power_graph(const PowerGraphBundle& bundle) {
  graphcore::VertexSet keep;
  for (int v = 0; v < bundle.graph.vertex_count(); ++v)
    if (v != bundle.identity_vertex) keep.push_back(v);
  return graphcore::induced_subgraph(bundle.graph, keep);
}

graphcore::InducedSubgraph tilde_graph(const PowerGraphBundle& bundle) {
  const auto* c = std::get_if<Cyclic>(&bundle.spec);
  if (!c) throw std::invalid_argument("tilde_graph: spec must be cyclic");
  if (c->n < 4 || arith::is_prime(c->n))
    throw std::invalid_argument("tilde_graph: n must be composite");

  graphcore::VertexSet keep;
  for (i64 a = 1; a < c->n; ++a)
    if (std::gcd(a, c->n) != 1) keep.push_back(static_cast<int>(a));
  return graphcore::induced_subgraph(bundle.graph, keep);
}

}  // namespace pg::powergraph
