#include "pg/graphcore.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pg::graphcore {

namespace {

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

// Dinic with residual arcs stored pairwise (arc 2k reversed by arc 2k+1).
// reset() restores the original capacities so one network can serve many
// source/sink pairs. max_flow stops early once `limit` is reached, which is
// all a caller minimizing over pairs needs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : out_(n), level_(n), it_(n) {}

  void add_arc(int u, int v, i64 cap) {
    out_[u].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({v, cap});
    out_[v].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({u, 0});
    cap0_.push_back(cap);
    cap0_.push_back(0);
  }

  void reset() {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = cap0_[i];
  }

  i64 max_flow(int s, int t, i64 limit) {
    i64 flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (flow < limit) {
        const i64 pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  // Vertices reachable from s through positive residual capacity.
  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(out_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int id : out_[v]) {
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = 1;
          stack.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    i64 cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : out_[v]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  i64 dfs(int v, int t, i64 pushed) {
    if (v == t) return pushed;
    for (int& i = it_[v]; i < static_cast<int>(out_[v].size()); ++i) {
      const int id = out_[v][i];
      Arc& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
      const i64 got = dfs(a.to, t, std::min(pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> out_;
  std::vector<Arc> arcs_;
  std::vector<i64> cap0_;
  std::vector<int> level_;
  std::vector<int> it_;
};

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  int count = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
  }
  return count;
}

// One representative per class of vertices sharing a closed neighborhood
// (true twins). Swapping two true twins is a graph automorphism, so for
// every minimum separating set some representative pair realizes kappa;
// restricting the max-flow pairs to representatives is therefore exact.
std::vector<int> twin_representatives(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> reps;
  std::vector<std::vector<int>> rep_keys;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  for (int v = 0; v < n; ++v) {
    std::vector<int> key = g.neighbors(v);
    key.insert(std::lower_bound(key.begin(), key.end(), v), v);
    std::uint64_t h = 1469598103934665603ull;
    for (int x : key) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    auto& bucket = buckets[h];
    bool found = false;
    for (int pos : bucket) {
      if (rep_keys[pos] == key) {
        found = true;
        break;
      }
    }
    if (!found) {
      bucket.push_back(static_cast<int>(reps.size()));
      reps.push_back(v);
      rep_keys.push_back(std::move(key));
    }
  }
  return reps;
}

VertexCut vertex_connectivity_impl(const Graph& g, bool want_cut) {
  const int n = g.vertex_count();
  if (n <= 1) return {0, {}};
  if (!is_connected(g)) return {0, {}};
  if (is_complete(g)) return {n - 1, {}};

  const auto reps = twin_representatives(g);

  // Split each vertex into in=v, out=n+v joined by a unit arc; graph edges
  // become infinite arcs between out and in sides. A max flow from out(s)
  // to in(t) counts internally disjoint s-t paths.
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(v, n + v, 1);
  for (int v = 0; v < n; ++v) {
    g.for_each_neighbor(v, [&](int u) {
      if (u > v) {
        net.add_arc(n + v, u, kInf);
        net.add_arc(n + u, v, kInf);
      }
    });
  }

  i64 best = min_degree(g).degree;  // kappa never exceeds delta
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size() && best > 0; ++j) {
      if (g.has_edge(reps[i], reps[j])) continue;
      net.reset();
      const i64 f = net.max_flow(n + reps[i], reps[j], best);
      best = std::min(best, f);
    }
  }
  if (!want_cut) return {best, {}};

  // Re-run a pair that attains the minimum and read the cut off the
  // residual graph: exactly the saturated split arcs on the boundary.
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (g.has_edge(reps[i], reps[j])) continue;
      net.reset();
      if (net.max_flow(n + reps[i], reps[j], best + 1) != best) continue;
      const auto reach = net.residual_reachable(n + reps[i]);
      VertexSet cut;
      for (int v = 0; v < n; ++v)
        if (reach[v] && !reach[n + v]) cut.push_back(v);
      return {best, cut};
    }
  }
  throw std::logic_error("vertex_connectivity: no pair attained the computed minimum");
}

i64 edge_key(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<i64>(u) * n + v;
}

}  // namespace

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (dense_)
    return (bits_[static_cast<std::size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

i64 Graph::degree(int v) const {
  check_vertex(v);
  return degree_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  if (!dense_) return adj_[v];
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree_[v]));
  for_each_neighbor(v, [&](int u) { out.push_back(u); });
  return out;
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  dense_ = n <= kDenseVertexLimit;
  if (dense_) {
    row_words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * row_words_, 0);
  } else {
    adj_.resize(n);
  }
  labels_.resize(n);
}

void GraphBuilder::set_label(int v, std::string text) {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
  labels_[v] = std::move(text);
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("graph: vertex out of range");
  if (u == v) throw std::invalid_argument("graph: loops are not allowed");
  if (dense_) {
    bits_[static_cast<std::size_t>(u) * row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  } else {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

Graph GraphBuilder::build() {
  if (built_) throw std::logic_error("graph builder: build() called twice");
  built_ = true;
  Graph g;
  g.n_ = n_;
  g.dense_ = dense_;
  g.row_words_ = row_words_;
  g.degree_.assign(n_, 0);
  for (int v = 0; v < n_; ++v)
    if (labels_[v].empty()) labels_[v] = std::to_string(v);
  g.labels_ = std::move(labels_);
  if (dense_) {
    for (int v = 0; v < n_; ++v) {
      i64 d = 0;
      for (int w = 0; w < row_words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * row_words_ + w]);
      g.degree_[v] = d;
      g.edge_count_ += d;
    }
    g.bits_ = std::move(bits_);
  } else {
    for (int v = 0; v < n_; ++v) {
      auto& list = adj_[v];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      g.degree_[v] = static_cast<i64>(list.size());
      g.edge_count_ += g.degree_[v];
    }
    g.adj_ = std::move(adj_);
  }
  g.edge_count_ /= 2;
  return g;
}

i64 degree(const Graph& g, int v) { return g.degree(v); }

MinDegree min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("min_degree: empty graph");
  MinDegree best{g.degree(0), 0};
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) < best.degree) {
      best.degree = g.degree(v);
      best.vertex = v;
    }
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.vertex_count() == 0 || component_count(g) == 1; }

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

std::optional<i64> diameter(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  i64 diam = 0;
  std::vector<i64> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      g.for_each_neighbor(v, [&](int u) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      });
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) return std::nullopt;
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

i64 edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;

  FlowNetwork net(n);
  for (int v = 0; v < n; ++v) {
    g.for_each_neighbor(v, [&](int u) {
      if (u > v) {
        net.add_arc(v, u, 1);
        net.add_arc(u, v, 1);
      }
    });
  }

  // A global minimum cut separates the fixed source from at least one t.
  const int s = min_degree(g).vertex;
  i64 best = g.degree(s);
  for (int t = 0; t < n && best > 0; ++t) {
    if (t == s) continue;
    net.reset();
    best = std::min(best, net.max_flow(s, t, best));
  }
  return best;
}

i64 edge_connectivity_stoer_wagner(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;

  std::vector<std::vector<i64>> w(n, std::vector<i64>(n, 0));
  for (int v = 0; v < n; ++v)
    g.for_each_neighbor(v, [&](int u) { w[v][u] = 1; });

  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;

  i64 best = kInf;
  while (active.size() > 1) {
    const std::size_t m = active.size();
    std::vector<i64> weight(m, 0);
    std::vector<char> added(m, 0);
    int prev = -1, last = -1;
    for (std::size_t step = 0; step < m; ++step) {
      int sel = -1;
      for (std::size_t i = 0; i < m; ++i)
        if (!added[i] && (sel < 0 || weight[i] > weight[sel])) sel = static_cast<int>(i);
      added[sel] = 1;
      if (step + 1 == m) {
        best = std::min(best, weight[sel]);
        prev = last;
        last = sel;
        break;
      }
      prev = last;
      last = sel;
      for (std::size_t i = 0; i < m; ++i)
        if (!added[i]) weight[i] += w[active[sel]][active[i]];
    }
    // Merge the last vertex of the phase into the one before it.
    const int a = active[prev], b = active[last];
    for (int x : active) {
      if (x == a || x == b) continue;
      w[a][x] += w[b][x];
      w[x][a] = w[a][x];
    }
    active.erase(active.begin() + last);
  }
  return best == kInf ? 0 : best;
}

i64 vertex_connectivity(const Graph& g) { return vertex_connectivity_impl(g, false).kappa; }

VertexCut vertex_connectivity_witness(const Graph& g) { return vertex_connectivity_impl(g, true); }

bool is_disconnecting(const Graph& g, const EdgeSet& cut) {
  const int n = g.vertex_count();
  std::unordered_set<i64> removed;
  for (const auto& [u, v] : cut) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("is_disconnecting: pair is not an edge");
    removed.insert(edge_key(n, u, v));
  }
  const int before = component_count(g);
  std::vector<char> seen(n, 0);
  int after = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++after;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[u] && !removed.count(edge_key(n, v, u))) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
  }
  return after > before;
}

bool is_separating(const Graph& g, const VertexSet& sep) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (int v : sep) {
    if (v < 0 || v >= n) throw std::invalid_argument("is_separating: vertex out of range");
    gone[v] = 1;
  }
  int remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) ++remaining;
  if (remaining == 0) return false;

  const int before = component_count(g);
  std::vector<char> seen(n, 0);
  int after = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || gone[start]) continue;
    ++after;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      g.for_each_neighbor(v, [&](int u) {
        if (!seen[u] && !gone[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      });
    }
  }
  return after > before;
}

EdgeSet incident_edges(const Graph& g, int v) {
  EdgeSet out;
  for (int u : g.neighbors(v)) out.push_back({v, u});
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  VertexSet verts = keep;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const int n = g.vertex_count();
  std::vector<int> to_new(n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= n)
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    to_new[verts[i]] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    b.set_label(static_cast<int>(i), g.label(verts[i]));
    g.for_each_neighbor(verts[i], [&](int u) {
      if (to_new[u] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), to_new[u]);
    });
  }
  return {b.build(), std::move(verts)};
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::string escaped;
    for (char c : g.label(v)) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out += "  v" + std::to_string(v) + " [label=\"" + escaped + "\"];\n";
  }
  for (int v = 0; v < n; ++v) {
    g.for_each_neighbor(v, [&](int u) {
      if (u > v) out += "  v" + std::to_string(v) + " -- v" + std::to_string(u) + ";\n";
    });
  }
  out += "}\n";
  return out;
}

}  // namespace pg::graphcore
