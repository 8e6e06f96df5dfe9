// SPDX-License-Identifier: Apache-2.0
#include "drvqa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace drvqa {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges)
    : n_vertices_(n_vertices) {
  if (n_vertices < 1) throw domain_error("Graph: need at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw domain_error("Graph: self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) {
      throw domain_error("Graph: vertex index out of range");
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw domain_error("Graph: duplicate edges are not allowed");
  }
}

Graph Graph::from_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("Graph: cannot open " + path);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      std::string tag;
      ss >> tag >> n;
      if (tag != "n" || !ss || n < 1) {
        throw io_error("Graph: malformed header in " + path);
      }
      continue;
    }
    int u, v;
    if (!(ss >> u >> v)) throw io_error("Graph: malformed edge line in " + path);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw io_error("Graph: missing vertex-count header in " + path);
  return Graph(n, std::move(edges));
}

void Graph::write_edge_list_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw io_error("Graph: cannot write " + path);
  out << "n " << n_vertices_ << "\n";
  for (auto [u, v] : edges_) out << u << " " << v << "\n";
  if (!out) throw io_error("Graph: write failed for " + path);
}

Graph Graph::random_regular(int n_vertices, int degree, std::uint64_t seed) {
  if (degree < 1 || degree >= n_vertices) {
    throw domain_error("Graph::random_regular: invalid degree");
  }
  if ((n_vertices * degree) % 2 != 0) {
    throw domain_error("Graph::random_regular: n * degree must be even");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n_vertices) * degree);
    for (int v = 0; v < n_vertices; ++v) {
      for (int k = 0; k < degree; ++k) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) { ok = false; break; }
      auto e = std::minmax(u, v);
      if (!seen.emplace(e.first, e.second).second) { ok = false; break; }
    }
    if (!ok) continue;
    return Graph(n_vertices, {seen.begin(), seen.end()});
  }
  throw numerical_error("Graph::random_regular: pairing rejection did not terminate");
}

namespace {

// Backtracking isomorphism search over degree-compatible assignments.
bool extend_mapping(const std::vector<std::vector<bool>>& a,
                    const std::vector<std::vector<bool>>& b,
                    std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = static_cast<int>(a.size());
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next; ++prev) {
      if (a[next][prev] != b[cand][map[prev]]) { ok = false; break; }
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_mapping(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.n_vertices(), std::vector<bool>(g.n_vertices(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

} // namespace

bool Graph::is_isomorphic_to(const Graph& other) const {
  if (n_vertices_ != other.n_vertices_ || edges_.size() != other.edges_.size()) return false;
  if (n_vertices_ > 14) {
    throw resource_error("Graph::is_isomorphic_to: capped at 14 vertices");
  }
  auto degree_profile = [](const Graph& g) {
    std::vector<int> deg(g.n_vertices(), 0);
    for (auto [u, v] : g.edges()) { ++deg[u]; ++deg[v]; }
    std::sort(deg.begin(), deg.end());
    return deg;
  };
  if (degree_profile(*this) != degree_profile(other)) return false;
  auto a = adjacency(*this);
  auto b = adjacency(other);
  std::vector<int> map(n_vertices_, -1);
  std::vector<bool> used(n_vertices_, false);
  return extend_mapping(a, b, map, used, 0);
}

std::vector<Graph> Graph::random_regular_set(int n_vertices, int degree, int count,
                                             std::uint64_t seed) {
  std::vector<Graph> out;
  std::uint64_t sub_seed = seed;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * count) {
      throw numerical_error("Graph::random_regular_set: not enough distinct graphs found");
    }
    Graph g = random_regular(n_vertices, degree, sub_seed++);
    bool duplicate = false;
    for (const Graph& h : out) {
      if (g.is_isomorphic_to(h)) { duplicate = true; break; }
    }
    if (!duplicate) out.push_back(std::move(g));
  }
  return out;
}

} // namespace drvqa
