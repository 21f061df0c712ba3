#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psb/encoding.hpp"

namespace psb {

/// 1-skeleton of the polytope at size n: vertices are all encodings in
/// lexicographic order, an edge joins two vertices iff the adjacency test
/// reports them adjacent. Immutable after construction.
struct SkeletonGraph {
  int n = 0;
  std::vector<TourEncoding> vertices;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted

  std::vector<std::vector<int>> adjacency() const;
};

struct SkeletonOptions {
  int cap = 9;           // refuse larger n (vertex count grows ~2.73^n)
  bool parallel = false; // pairwise tests across a thread pool
  int threads = 0;       // 0 = hardware concurrency
};

/// Complete pairwise adjacency evaluation over enumerate order; the result
/// is identical for serial and parallel runs. Throws InvalidN / CapExceeded.
SkeletonGraph build_skeleton(int n, const SkeletonOptions& opts = {});

struct GraphStats {
  int vertex_count = 0;
  int edge_count = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool connected = false;
  int diameter = -1;  // -1 marks a disconnected graph
  int clique_number = 0;
};

/// Diameter via all-pairs BFS, clique number via exact branch and bound.
GraphStats graph_stats(const SkeletonGraph& g);

enum class GraphFormat { Dot, Csv, Json };

/// Accepts "dot", "csv", "json". Throws UnknownFormat otherwise.
GraphFormat graph_format_from_name(std::string_view name);

/// DOT with vertices labelled by encoding token strings; CSV as one "u,v"
/// line per edge (zero-based indices); JSON as
/// {"n":…, "vertices":[token strings], "edges":[[u,v],…]}. Stable ordering.
std::string export_graph(const SkeletonGraph& g, GraphFormat format);

SkeletonGraph skeleton_from_json(const std::string& json_text);

}  // namespace psb
