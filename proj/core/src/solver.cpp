#include "psb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "psb/errors.hpp"

namespace psb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Frontier states while placing cities 2..n-1 in index order. The chains
// grow from city 1; the descending chain is built bottom-up (reversed).
// A state is (v, g, s, m): v = next city to place, the most recently
// finished chain end is P = v - g on side s (0 ascending, 1 descending),
// m is the other chain's end, m < P.
struct StateTable {
  int n = 0;
  std::vector<std::size_t> base;
  std::vector<double> val;

  explicit StateTable(int n_cities) : n(n_cities) {
    base.assign(static_cast<std::size_t>(n - 2) * 2 + 2, 0);
    std::size_t offset = 0;
    for (int v = 3; v <= n; ++v) {
      for (int g = 1; g <= 2; ++g) {
        base[(v - 3) * 2 + (g - 1)] = offset;
        const int span = v - g - 1;
        if (v >= g + 2 && span >= 1) offset += 2 * static_cast<std::size_t>(span);
      }
    }
    val.assign(offset, kInf);
  }

  double& at(int v, int g, int s, int m) {
    const int span = v - g - 1;
    return val[base[(v - 3) * 2 + (g - 1)] + static_cast<std::size_t>(s) * span + (m - 1)];
  }
  double get(int v, int g, int s, int m) const {
    const int span = v - g - 1;
    return val[base[(v - 3) * 2 + (g - 1)] + static_cast<std::size_t>(s) * span + (m - 1)];
  }
};

struct Move {
  OrderMark mark;      // mark written at city v (pair moves also fix v+1)
  bool pair;
  bool to_desc;        // chain receiving the new cities
};

// Candidate order matches the lexicographic order of the marks they write.
constexpr Move kMoves[] = {
    {OrderMark::Asc, false, false},
    {OrderMark::AscSbEnd, true, false},
    {OrderMark::Desc, false, true},
    {OrderMark::DescSbBegin, true, true},
};

// Cost of applying a move at city v from chain ends (asc_end, desc_end),
// plus the value of the successor state.
double move_value(const CostMatrix& mtx, const StateTable& table, int v, int asc_end, int desc_end,
                  const Move& mv) {
  const int n = table.n;
  if (mv.pair && v + 1 > n - 1) return kInf;
  if (!mv.pair) {
    if (!mv.to_desc) return mtx.cost(asc_end, v) + table.get(v + 1, 1, 0, desc_end);
    return mtx.cost(v, desc_end) + table.get(v + 1, 1, 1, asc_end);
  }
  if (!mv.to_desc) {
    const double step = mtx.cost(asc_end, v + 1) + mtx.cost(v + 1, v);
    return step + table.get(v + 2, 2, 0, desc_end);
  }
  const double step = mtx.cost(v, v + 1) + mtx.cost(v + 1, desc_end);
  return step + table.get(v + 2, 2, 1, asc_end);
}

}  // namespace

CostMatrix CostMatrix::uniform(int n, double value) {
  CostMatrix m;
  m.n = n;
  m.c.assign(static_cast<std::size_t>(n) * n, value);
  return m;
}

CostMatrix CostMatrix::from_text(const std::string& text) {
  std::istringstream in(text);
  CostMatrix m;
  if (!(in >> m.n)) throw ParseError("cost matrix: missing city count");
  if (m.n < 3) throw InvalidN("cost matrix needs n >= 3, got " + std::to_string(m.n));
  m.c.assign(static_cast<std::size_t>(m.n) * m.n, 0.0);
  for (std::size_t i = 0; i < m.c.size(); ++i) {
    if (!(in >> m.c[i]))
      throw ParseError("cost matrix: expected " + std::to_string(m.c.size()) + " entries");
  }
  m.validate();
  return m;
}

CostMatrix CostMatrix::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad cost matrix JSON: ") + ex.what());
  }
  CostMatrix m;
  m.n = j.at("n").get<int>();
  if (m.n < 3) throw InvalidN("cost matrix needs n >= 3, got " + std::to_string(m.n));
  const auto& rows = j.at("costs");
  if (static_cast<int>(rows.size()) != m.n) throw ParseError("cost matrix: wrong row count");
  m.c.reserve(static_cast<std::size_t>(m.n) * m.n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.n) throw ParseError("cost matrix: wrong column count");
    for (const auto& entry : row) m.c.push_back(entry.get<double>());
  }
  m.validate();
  return m;
}

void CostMatrix::validate() const {
  if (n < 3) throw InvalidN("cost matrix needs n >= 3, got " + std::to_string(n));
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;  // diagonal unused
      if (!std::isfinite(cost(u, v)))
        throw NonFiniteCost("cost(" + std::to_string(u) + "," + std::to_string(v) + ") is not finite");
    }
}

double tour_cost(const CostMatrix& m, const Tour& t) {
  double sum = 0.0;
  for (int u = 1; u <= t.n; ++u) sum += m.cost(u, t.succ[u]);
  return sum;
}

SolveResult solve_dp(const CostMatrix& mtx) {
  mtx.validate();
  const int n = mtx.n;

  StateTable table(n);
  for (int v = n; v >= 3; --v) {
    for (int g = 1; g <= 2; ++g) {
      if (v < g + 2) continue;
      const int p = v - g;
      for (int s = 0; s <= 1; ++s) {
        for (int m = 1; m <= p - 1; ++m) {
          const int asc_end = s == 0 ? p : m;
          const int desc_end = s == 0 ? m : p;
          double best;
          if (v == n) {
            best = mtx.cost(asc_end, n) + mtx.cost(n, desc_end);
          } else {
            best = kInf;
            for (const Move& mv : kMoves) best = std::min(best, move_value(mtx, table, v, asc_end, desc_end, mv));
          }
          table.at(v, g, s, m) = best;
        }
      }
    }
  }

  // Forward walk re-derives the optimal decisions; among cost ties the
  // earliest move in kMoves order yields the lexicographically least
  // encoding.
  TourEncoding enc;
  enc.n = n;
  enc.marks.resize(n - 2);
  int v = 2, asc_end = 1, desc_end = 1;
  while (v <= n - 1) {
    double best = kInf;
    const Move* chosen = nullptr;
    for (const Move& mv : kMoves) {
      const double value = move_value(mtx, table, v, asc_end, desc_end, mv);
      if (value < best) {
        best = value;
        chosen = &mv;
      }
    }
    enc.marks[v - 2] = chosen->mark;
    if (chosen->pair) {
      enc.marks[v - 1] = chosen->mark == OrderMark::AscSbEnd ? OrderMark::AscSbBegin : OrderMark::DescSbEnd;
      if (chosen->to_desc)
        desc_end = v;
      else
        asc_end = v;
      v += 2;
    } else {
      if (chosen->to_desc)
        desc_end = v;
      else
        asc_end = v;
      v += 1;
    }
  }

  SolveResult out;
  out.encoding = enc;
  out.tour = decode(enc);
  out.cost = tour_cost(mtx, out.tour);
  return out;
}

SolveResult solve_bruteforce(const CostMatrix& mtx, int max_n) {
  mtx.validate();
  if (mtx.n > max_n)
    throw TooLarge("brute-force solve at n=" + std::to_string(mtx.n) + " exceeds the guard " +
                   std::to_string(max_n));

  SolveResult best;
  best.cost = kInf;
  for_each_encoding(mtx.n, [&](const TourEncoding& e) {
    const Tour t = decode(e);
    const double cost = tour_cost(mtx, t);
    if (cost < best.cost) {
      best.cost = cost;
      best.tour = t;
      best.encoding = e;
    }
  });
  return best;
}

}  // namespace psb
