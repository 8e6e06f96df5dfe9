// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drvqa/errors.hpp"

namespace drvqa {

// Simple undirected graph; edges stored normalized (u < v) and sorted.
class Graph {
public:
  Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

  int n_vertices() const { return n_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }

  // Text format: first line "n <vertex count>", then one "u v" pair per line.
  static Graph from_edge_list_file(const std::string& path);
  void write_edge_list_file(const std::string& path) const;

  // Uniform random d-regular graph via the configuration model, rejecting
  // pairings with self-loops or multi-edges. Requires n*degree even.
  static Graph random_regular(int n_vertices, int degree, std::uint64_t seed);

  // A set of pairwise non-isomorphic random d-regular graphs (n <= 14).
  static std::vector<Graph> random_regular_set(int n_vertices, int degree, int count,
                                               std::uint64_t seed);

  // Exact isomorphism test by backtracking over vertex assignments.
  bool is_isomorphic_to(const Graph& other) const;

private:
  int n_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

} // namespace drvqa
