#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "pg/powergraph.hpp"

using namespace pg;
using arith::i64;
using groups::AbelianP;
using groups::Cyclic;
using groups::Dicyclic;
using groups::Dihedral;
using groups::GroupSpec;
using powergraph::build_power_graph;

namespace {

std::vector<GroupSpec> small_specs(i64 max_order) {
  std::vector<GroupSpec> out;
  for (i64 n = 1; n <= max_order; ++n) out.push_back(Cyclic{n});
  for (const auto& a : groups::abelian_p_specs_up_to(max_order)) out.push_back(a);
  for (i64 n = 3; 2 * n <= max_order; ++n) out.push_back(Dihedral{n});
  for (i64 n = 2; 4 * n <= max_order; ++n) out.push_back(Dicyclic{n});
  return out;
}

bool in_cyclic_subgroup(const GroupSpec& spec, const groups::Element& member,
                        const groups::Element& generator) {
  const auto sub = groups::cyclic_subgroup(spec, generator);
  return std::binary_search(sub.begin(), sub.end(), member);
}

// Maps a component of an induced subgraph back to original vertex ids.
graphcore::VertexSet original_ids(const graphcore::InducedSubgraph& sub,
                                  const graphcore::VertexSet& comp) {
  graphcore::VertexSet out;
  for (int v : comp) out.push_back(sub.source_vertex[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("power graph of Z_5 is complete") {
  const auto bundle = build_power_graph(Cyclic{5});
  CHECK(bundle.graph.vertex_count() == 5);
  CHECK(graphcore::is_complete(bundle.graph));
  CHECK(bundle.identity_vertex == 0);
  CHECK(bundle.graph.label(3) == "3");
}

TEST_CASE("power graph of Z_12 degrees") {
  const auto bundle = build_power_graph(Cyclic{12});
  const auto& g = bundle.graph;
  CHECK(g.degree(2) == 9);
  CHECK(g.degree(6) == 9);  // same degree as 2 though <2> != <6>
  CHECK(g.degree(4) == 8);
  CHECK(g.degree(3) == 7);
  CHECK_FALSE(g.has_edge(2, 9));
  CHECK(g.has_edge(2, 6));   // 6 is a power of 2
  CHECK(g.has_edge(3, 9));
  CHECK_FALSE(g.has_edge(4, 6));
  const auto md = graphcore::min_degree(g);
  CHECK(md.degree == 7);
  CHECK(md.vertex == 3);
  CHECK(bundle.s_set == graphcore::VertexSet{0, 1, 5, 7, 11});
  for (int v : bundle.s_set) CHECK(g.degree(v) == 11);
}

TEST_CASE("adjacency matches the power relation on every family") {
  for (const auto& spec : small_specs(64)) {
    CAPTURE(groups::format_spec(spec));
    const auto bundle = build_power_graph(spec);
    const auto elements = groups::all_elements(spec);
    const int n = static_cast<int>(elements.size());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const bool expect = in_cyclic_subgroup(spec, elements[u], elements[v]) ||
                            in_cyclic_subgroup(spec, elements[v], elements[u]);
        CHECK(bundle.graph.has_edge(u, v) == expect);
      }
    }
  }
}

TEST_CASE("identity vertex is adjacent to everything") {
  for (const auto& spec : small_specs(48)) {
    const auto bundle = build_power_graph(spec);
    const i64 n = bundle.graph.vertex_count();
    CHECK(bundle.identity_vertex == 0);
    CHECK(bundle.graph.degree(0) == n - 1);
  }
}

TEST_CASE("dihedral power graph: pendant reflections") {
  const auto bundle = build_power_graph(Dihedral{4});
  const auto& g = bundle.graph;
  CHECK(g.vertex_count() == 8);
  // reflections sit at indices n..2n-1 and hang off the identity
  for (int i = 4; i < 8; ++i) {
    CHECK(g.degree(i) == 1);
    CHECK(g.has_edge(i, 0));
  }
  const auto md = graphcore::min_degree(g);
  CHECK(md.degree == 1);
  CHECK(md.vertex == 4);
  CHECK(g.label(4) == "b");

  const auto proper = powergraph::proper_power_graph(bundle);
  CHECK(proper.graph.vertex_count() == 7);
  CHECK(graphcore::components(proper.graph).size() == 5);
}

TEST_CASE("dicyclic power graph: each flip element sees e, a^n and its partner") {
  const auto bundle = build_power_graph(Dicyclic{2});
  const auto& g = bundle.graph;
  CHECK(g.vertex_count() == 8);
  CHECK(g.neighbors(4) == std::vector<int>{0, 2, 6});
  CHECK(g.neighbors(5) == std::vector<int>{0, 2, 7});
  CHECK(g.degree(2) == 7);  // a^n is adjacent to everything
  const auto md = graphcore::min_degree(g);
  CHECK(md.degree == 3);
  CHECK(md.vertex == 1);

  // without the identity the graph stays connected through a^n
  const auto proper = powergraph::proper_power_graph(bundle);
  CHECK(graphcore::is_connected(proper.graph));

  const auto q5 = build_power_graph(Dicyclic{5});
  for (i64 i = 0; i < 10; ++i) {
    const int v = static_cast<int>(10 + i);
    CHECK(q5.graph.neighbors(v) ==
          std::vector<int>{0, 5, static_cast<int>(10 + (i + 5) % 10)});
  }
}

TEST_CASE("proper power graph of Z_2 is a single vertex") {
  const auto proper = powergraph::proper_power_graph(build_power_graph(Cyclic{2}));
  CHECK(proper.graph.vertex_count() == 1);
  CHECK(graphcore::is_connected(proper.graph));
}

TEST_CASE("tilde graph of Z_15 splits by prime") {
  const auto sub = powergraph::tilde_graph(build_power_graph(Cyclic{15}));
  CHECK(sub.source_vertex == graphcore::VertexSet{3, 5, 6, 9, 10, 12});
  const auto comps = graphcore::components(sub.graph);
  REQUIRE(comps.size() == 2);
  CHECK(original_ids(sub, comps[0]) == graphcore::VertexSet{3, 6, 9, 12});
  CHECK(original_ids(sub, comps[1]) == graphcore::VertexSet{5, 10});
}

TEST_CASE("tilde graph of Z_12 is connected") {
  const auto sub = powergraph::tilde_graph(build_power_graph(Cyclic{12}));
  CHECK(sub.graph.vertex_count() == 7);
  CHECK(graphcore::is_connected(sub.graph));
}

TEST_CASE("tilde graph of Z_10 isolates the residue 5") {
  const auto sub = powergraph::tilde_graph(build_power_graph(Cyclic{10}));
  const auto comps = graphcore::components(sub.graph);
  REQUIRE(comps.size() == 2);
  CHECK(original_ids(sub, comps[0]) == graphcore::VertexSet{2, 4, 6, 8});
  CHECK(original_ids(sub, comps[1]) == graphcore::VertexSet{5});
}

TEST_CASE("tilde graph rejects primes and tiny n") {
  CHECK_THROWS_AS(powergraph::tilde_graph(build_power_graph(Cyclic{7})),
                  std::invalid_argument);
  CHECK_THROWS_AS(powergraph::tilde_graph(build_power_graph(Cyclic{3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(powergraph::tilde_graph(build_power_graph(Dihedral{4})),
                  std::invalid_argument);
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(build_power_graph(Cyclic{12}, 10), std::invalid_argument);
  CHECK_THROWS_AS(build_power_graph(Cyclic{12}, 0), std::invalid_argument);
  CHECK_NOTHROW(build_power_graph(Cyclic{12}, 12));
  CHECK_THROWS_AS(build_power_graph(Dicyclic{2000}), std::invalid_argument);
}

TEST_CASE("abelian p-group power graph matches its cyclic factor structure") {
  // Z_2 x Z_4: elements of order 4 are joined to their squares
  const auto bundle = build_power_graph(AbelianP{2, {1, 2}});
  const auto& g = bundle.graph;
  CHECK(g.vertex_count() == 8);
  CHECK(g.label(5) == "(1,1)");
  // (1,1) has order 4 and <(1,1)> = {(0,0),(1,1),(0,2),(1,3)}
  CHECK(g.has_edge(5, 2));
  CHECK(g.has_edge(5, 7));
  CHECK_FALSE(g.has_edge(5, 4));  // (1,0) is not a power of (1,1)
  // the involution (1,0) is adjacent only to e among these
  CHECK(g.degree(4) == 1);
}
