#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pg::graphcore {

using i64 = std::int64_t;
using Edge = std::pair<int, int>;  // unordered pair of distinct vertices
using EdgeSet = std::vector<Edge>;
using VertexSet = std::vector<int>;

// Below this vertex count adjacency is a bit matrix (O(1) edge tests);
// above it, sorted neighbor lists.
inline constexpr int kDenseVertexLimit = 4096;

// Immutable simple undirected graph. Build one with GraphBuilder.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  i64 edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;
  i64 degree(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    check_vertex(v);
    if (dense_) {
      const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * row_words_;
      for (int w = 0; w < row_words_; ++w) {
        std::uint64_t word = row[w];
        while (word) {
          f(w * 64 + std::countr_zero(word));
          word &= word - 1;
        }
      }
    } else {
      for (int u : adj_[v]) f(u);
    }
  }

 private:
  friend class GraphBuilder;
  void check_vertex(int v) const;

  int n_ = 0;
  bool dense_ = false;
  int row_words_ = 0;
  i64 edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
  std::vector<i64> degree_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void set_label(int v, std::string text);
  void add_edge(int u, int v);  // rejects loops and out-of-range vertices
  Graph build();                // call once

 private:
  int n_ = 0;
  bool dense_ = false;
  int row_words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  bool built_ = false;
};

struct MinDegree {
  i64 degree = 0;
  int vertex = -1;  // lowest-index vertex attaining the minimum
};

i64 degree(const Graph& g, int v);
MinDegree min_degree(const Graph& g);

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
std::optional<i64> diameter(const Graph& g);  // nullopt when disconnected

// Exact edge connectivity: 0 for the trivial or a disconnected graph.
// The two functions use independent algorithms (fixed-source max-flow vs.
// Stoer-Wagner global min cut) and must always agree.
i64 edge_connectivity(const Graph& g);
i64 edge_connectivity_stoer_wagner(const Graph& g);

// Exact vertex connectivity via vertex-split max-flow; |V|-1 for a complete
// graph, 0 for the trivial or a disconnected graph.
i64 vertex_connectivity(const Graph& g);

struct VertexCut {
  i64 kappa = 0;
  VertexSet cut;  // empty for complete, trivial, or disconnected graphs
};
VertexCut vertex_connectivity_witness(const Graph& g);

// True iff removing exactly these edges increases the component count.
// Every pair must be an actual edge.
bool is_disconnecting(const Graph& g, const EdgeSet& cut);

// True iff deleting these vertices leaves a nonempty graph with more
// components than before.
bool is_separating(const Graph& g, const VertexSet& sep);

// The edges between v and its neighbors, as (v, u) pairs with u ascending.
EdgeSet incident_edges(const Graph& g, int v);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> source_vertex;  // new index -> index in the original graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Graphviz text; vertices and edges in deterministic order.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace pg::graphcore
