#include "psb/oracle.hpp"

#include <algorithm>
#include <array>

#include "psb/errors.hpp"

namespace psb {

namespace {

// Depth-first search over Hamiltonian cycles inside the union multigraph.
// Every vertex of the union has exactly two outgoing edge slots (one per
// tour), so the complement of a found cycle is again a successor map.
struct PairSearch {
  int n;
  const Tour& x;
  const Tour& y;
  bool stop_at_first;
  std::vector<std::pair<Tour, Tour>> found;
  std::vector<char> visited;
  std::vector<int> path;

  PairSearch(const Tour& xt, const Tour& yt, bool first_only)
      : n(xt.n), x(xt), y(yt), stop_at_first(first_only), visited(n + 1, 0) {
    path.reserve(n);
  }

  bool run() {
    visited[1] = 1;
    path.push_back(1);
    return dfs(1);
  }

  // Returns true when the search should stop early.
  bool dfs(int city) {
    std::array<int, 2> targets = {x.succ[city], y.succ[city]};
    if (targets[0] > targets[1]) std::swap(targets[0], targets[1]);
    const int limit = targets[0] == targets[1] ? 1 : 2;
    for (int i = 0; i < limit; ++i) {
      const int to = targets[i];
      if (to == 1) {
        if (static_cast<int>(path.size()) == n && record()) return true;
        continue;
      }
      if (visited[to]) continue;
      visited[to] = 1;
      path.push_back(to);
      if (dfs(to)) return true;
      path.pop_back();
      visited[to] = 0;
    }
    return false;
  }

  bool record() {
    Tour z;
    z.n = n;
    z.succ.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) z.succ[path[i]] = path[(i + 1) % n];

    // Complement: the other outgoing edge slot at every city.
    Tour t;
    t.n = n;
    t.succ.assign(n + 1, 0);
    for (int c = 1; c <= n; ++c) {
      if (z.succ[c] == x.succ[c] && z.succ[c] == y.succ[c]) {
        t.succ[c] = x.succ[c];  // shared edge, one copy left for t
      } else if (z.succ[c] == x.succ[c]) {
        t.succ[c] = y.succ[c];
      } else {
        t.succ[c] = x.succ[c];
      }
    }
    if (!is_valid_tour(t)) return false;
    if (!is_psb(z) || !is_psb(t)) return false;
    if ((z == x && t == y) || (z == y && t == x)) return false;
    if (!stop_at_first && z > t) return false;  // the mirrored traversal reports this pair
    found.emplace_back(std::move(z), std::move(t));
    return stop_at_first;
  }
};

void check_inputs(const Tour& x, const Tour& y, int max_n) {
  validate_tour(x);
  validate_tour(y);
  if (x.n != y.n)
    throw SizeMismatch("pair search over tours with n=" + std::to_string(x.n) + " and n=" +
                       std::to_string(y.n));
  if (x.n > max_n)
    throw TooLarge("pair search is exponential; n=" + std::to_string(x.n) + " exceeds the guard " +
                   std::to_string(max_n));
}

}  // namespace

std::vector<std::pair<Tour, Tour>> complementary_pairs(const Tour& x, const Tour& y, int max_n) {
  check_inputs(x, y, max_n);
  PairSearch search(x, y, /*first_only=*/false);
  search.run();
  return std::move(search.found);
}

bool oracle_nonadjacent(const Tour& x, const Tour& y, int max_n) {
  check_inputs(x, y, max_n);
  PairSearch search(x, y, /*first_only=*/true);
  return search.run();
}

}  // namespace psb
