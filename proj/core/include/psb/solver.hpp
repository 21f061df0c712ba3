#pragma once

#include <string>
#include <vector>

#include "psb/encoding.hpp"
#include "psb/tour.hpp"

namespace psb {

/// Dense asymmetric cost matrix over cities 1..n; the diagonal is unused.
struct CostMatrix {
  int n = 0;
  std::vector<double> c;  // row-major, (u-1)*n + (v-1)

  double cost(int u, int v) const { return c[static_cast<std::size_t>(u - 1) * n + (v - 1)]; }
  double& at(int u, int v) { return c[static_cast<std::size_t>(u - 1) * n + (v - 1)]; }

  static CostMatrix uniform(int n, double value);

  /// Text format: first line n, then n lines of n whitespace-separated
  /// numbers. JSON alternative: {"n": int, "costs": [[...], ...]}.
  static CostMatrix from_text(const std::string& text);
  static CostMatrix from_json(const std::string& json_text);

  /// Throws InvalidN for n < 3, NonFiniteCost on NaN or infinite entries.
  void validate() const;
};

struct SolveResult {
  Tour tour;
  TourEncoding encoding;
  double cost = 0.0;
};

/// Tour cost accumulated over sources in ascending city order.
double tour_cost(const CostMatrix& m, const Tour& t);

/// Minimum-cost pyramidal tour with step-backs by dynamic programming over
/// the two chain frontiers; O(n^2) states and transitions. Ties broken by
/// the lexicographically least encoding.
SolveResult solve_dp(const CostMatrix& m);

/// Enumeration oracle: minimum over all encodings, same tie-break.
/// Throws TooLarge above max_n.
SolveResult solve_bruteforce(const CostMatrix& m, int max_n = 11);

}  // namespace psb
