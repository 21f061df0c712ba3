#include "psb/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <thread>

#include "json.hpp"
#include "psb/adjacency.hpp"
#include "psb/errors.hpp"

namespace psb {

namespace {

// Adjacent vertex indices for row u, u < v only.
std::vector<int> adjacency_row(const std::vector<TourEncoding>& vertices, int u) {
  std::vector<int> row;
  for (int v = u + 1; v < static_cast<int>(vertices.size()); ++v) {
    if (test_nonadjacent_exhaustive(vertices[u], vertices[v]).adjacent) row.push_back(v);
  }
  return row;
}

// Carraghan-Pardalos style exact maximum clique with degree ordering.
struct CliqueSearch {
  const std::vector<std::vector<int>>& adj;
  std::vector<char> mat;  // dense adjacency for O(1) probes
  int n;
  int best = 0;

  explicit CliqueSearch(const std::vector<std::vector<int>>& a)
      : adj(a), n(static_cast<int>(a.size())) {
    mat.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v : adj[u]) mat[static_cast<std::size_t>(u) * n + v] = 1;
  }

  bool linked(int u, int v) const { return mat[static_cast<std::size_t>(u) * n + v] != 0; }

  void expand(std::vector<int>& cand, int size) {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    while (!cand.empty()) {
      if (size + static_cast<int>(cand.size()) <= best) return;
      const int v = cand.back();
      cand.pop_back();
      std::vector<int> next;
      next.reserve(cand.size());
      for (int u : cand)
        if (linked(u, v)) next.push_back(u);
      expand(next, size + 1);
    }
  }

  int run() {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return adj[a].size() < adj[b].size(); });
    expand(order, 0);
    return best;
  }
};

}  // namespace

std::vector<std::vector<int>> SkeletonGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

SkeletonGraph build_skeleton(int n, const SkeletonOptions& opts) {
  if (n < 3) throw InvalidN("skeleton needs n >= 3, got " + std::to_string(n));
  if (n > opts.cap)
    throw CapExceeded("skeleton at n=" + std::to_string(n) + " exceeds the cap " +
                      std::to_string(opts.cap));

  SkeletonGraph g;
  g.n = n;
  g.vertices = all_encodings(n);
  const int count = static_cast<int>(g.vertices.size());

  std::vector<std::vector<int>> rows(count);
  if (!opts.parallel) {
    for (int u = 0; u < count; ++u) rows[u] = adjacency_row(g.vertices, u);
  } else {
    const int workers = opts.threads > 0
                            ? opts.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next_row{0};
    auto work = [&]() {
      for (;;) {
        const int u = next_row.fetch_add(1);
        if (u >= count) return;
        rows[u] = adjacency_row(g.vertices, u);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  // Deterministic merge in row order regardless of worker scheduling.
  for (int u = 0; u < count; ++u)
    for (int v : rows[u]) g.edges.emplace_back(u, v);
  return g;
}

GraphStats graph_stats(const SkeletonGraph& g) {
  GraphStats s;
  s.vertex_count = static_cast<int>(g.vertices.size());
  s.edge_count = static_cast<int>(g.edges.size());
  const auto adj = g.adjacency();

  if (s.vertex_count == 0) return s;
  s.min_degree = s.vertex_count;
  for (const auto& row : adj) {
    s.min_degree = std::min(s.min_degree, static_cast<int>(row.size()));
    s.max_degree = std::max(s.max_degree, static_cast<int>(row.size()));
  }

  // All-pairs BFS; bails to the disconnected marker when a sweep misses
  // some vertex.
  s.connected = true;
  int diameter = 0;
  std::vector<int> dist(s.vertex_count);
  for (int src = 0; src < s.vertex_count && s.connected; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    int reached = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      diameter = std::max(diameter, dist[u]);
      for (int v : adj[u]) {
        if (dist[v] != -1) continue;
        dist[v] = dist[u] + 1;
        ++reached;
        q.push(v);
      }
    }
    if (reached != s.vertex_count) s.connected = false;
  }
  s.diameter = s.connected ? diameter : -1;

  CliqueSearch clique(adj);
  s.clique_number = clique.run();
  return s;
}

GraphFormat graph_format_from_name(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "csv") return GraphFormat::Csv;
  if (name == "json") return GraphFormat::Json;
  throw UnknownFormat("unknown graph format '" + std::string(name) + "'");
}

std::string export_graph(const SkeletonGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Dot: {
      std::string out = "graph skeleton {\n";
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out += "  v" + std::to_string(i) + " [label=\"" + format_encoding(g.vertices[i]) + "\"];\n";
      for (const auto& [u, v] : g.edges)
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
      out += "}\n";
      return out;
    }
    case GraphFormat::Csv: {
      std::string out;
      for (const auto& [u, v] : g.edges)
        out += std::to_string(u) + "," + std::to_string(v) + "\n";
      return out;
    }
    case GraphFormat::Json: {
      nlohmann::json j;
      j["n"] = g.n;
      auto& vs = j["vertices"] = nlohmann::json::array();
      for (const auto& e : g.vertices) vs.push_back(format_encoding(e));
      auto& es = j["edges"] = nlohmann::json::array();
      for (const auto& [u, v] : g.edges) es.push_back({u, v});
      return j.dump();
    }
  }
  throw UnknownFormat("unhandled graph format");
}

SkeletonGraph skeleton_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad skeleton JSON: ") + ex.what());
  }
  SkeletonGraph g;
  g.n = j.at("n").get<int>();
  for (const auto& tok : j.at("vertices")) g.vertices.push_back(parse_encoding(tok.get<std::string>(), g.n));
  for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

}  // namespace psb
