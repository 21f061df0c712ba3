#include "psb/adjacency.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "psb/errors.hpp"

namespace psb {

namespace {

bool is_left_kind(BlockKind k) {
  switch (k) {
    case BlockKind::U11:
    case BlockKind::U00:
    case BlockKind::U1111:
    case BlockKind::U0000:
    case BlockKind::L1110:
    case BlockKind::L1011:
    case BlockKind::L0001:
    case BlockKind::L0100:
    case BlockKind::Boundary1:
      return true;
    default:
      return false;
  }
}

bool is_right_kind(BlockKind k) {
  switch (k) {
    case BlockKind::U11:
    case BlockKind::U00:
    case BlockKind::U1111:
    case BlockKind::U0000:
    case BlockKind::R1101:
    case BlockKind::R0111:
    case BlockKind::R0010:
    case BlockKind::R1000:
    case BlockKind::BoundaryN:
      return true;
    default:
      return false;
  }
}

// Order labels at the block cities per case.
constexpr int kCaseSelA[5] = {0, 1, 0, 1, 0};
constexpr int kCaseSelB[5] = {0, 1, 0, 0, 1};

struct PartDiffs {
  bool coincide = false;   // central 0/1 orders match
  bool diff_left = false;  // marks differ somewhere before i_a
  bool diff_right = false; // marks differ somewhere after j_b
  bool diff_asc = false;   // ascending marks differ inside the central part
  bool diff_desc = false;  // descending marks differ inside the central part
};

// Single full pass over the encodings for a given central span [i_a, j_b];
// deliberately free of early exits so each block-pair check costs O(n).
PartDiffs evaluate_parts(const TourEncoding& x, const TourEncoding& y, int i_a, int j_b) {
  const int n = x.n;
  PartDiffs d;
  d.coincide = true;
  for (int c = 2; c <= n - 1; ++c) {
    const OrderMark mx = x.mark(c);
    const OrderMark my = y.mark(c);
    const bool mark_diff = mx != my;
    const bool order_same = mark_order(mx) == mark_order(my);
    if (c < i_a) {
      d.diff_left |= mark_diff;
    } else if (c <= j_b) {
      d.coincide &= order_same;
      if (order_same && mark_diff) {
        if (mark_order(mx) == 1)
          d.diff_asc = true;
        else
          d.diff_desc = true;
      }
    } else {
      d.diff_right |= mark_diff;
    }
  }
  return d;
}

bool case_formula(CaseId c, const PartDiffs& d) {
  switch (c) {
    case CaseId::Case1:
      return d.diff_asc && (d.diff_left || d.diff_desc || d.diff_right);
    case CaseId::Case2:
      return d.diff_desc && (d.diff_left || d.diff_asc || d.diff_right);
    case CaseId::Case3:
      return (d.diff_asc || d.diff_right) && (d.diff_desc || d.diff_left);
    case CaseId::Case4:
      return (d.diff_desc || d.diff_right) && (d.diff_asc || d.diff_left);
  }
  return false;
}

void check_block_pair(const TourEncoding& x, const Block& left, const Block& right) {
  if (!is_left_kind(left.kind))
    throw InvalidBlockPair(block_kind_name(left.kind) + " cannot serve as a left block");
  if (!is_right_kind(right.kind))
    throw InvalidBlockPair(block_kind_name(right.kind) + " cannot serve as a right block");
  const int left_end = left.kind == BlockKind::Boundary1 ? 1 : left.end();
  const int right_start = right.kind == BlockKind::BoundaryN ? x.n : right.pos;
  if (right_start <= left_end)
    throw InvalidBlockPair("right block at " + std::to_string(right_start) +
                           " does not lie strictly right of left block ending at " +
                           std::to_string(left_end));
}

std::optional<CaseId> passing_case_unchecked(const TourEncoding& x, const TourEncoding& y,
                                             const Block& left, const Block& right) {
  const int i_a = (left.kind == BlockKind::Boundary1 ? 1 : left.end()) + 1;
  const int j_b = (right.kind == BlockKind::BoundaryN ? x.n : right.pos) - 1;
  const PartDiffs d = evaluate_parts(x, y, i_a, j_b);
  if (!d.coincide) return std::nullopt;
  const int sel_a = left.selector();
  const int sel_b = right.selector();
  for (int c = 1; c <= 4; ++c) {
    if (sel_a != -1 && sel_a != kCaseSelA[c]) continue;
    if (sel_b != -1 && sel_b != kCaseSelB[c]) continue;
    if (case_formula(static_cast<CaseId>(c), d)) return static_cast<CaseId>(c);
  }
  return std::nullopt;
}

void check_test_inputs(const TourEncoding& x, const TourEncoding& y) {
  validate_encoding(x);
  validate_encoding(y);
  if (x.n != y.n)
    throw SizeMismatch("adjacency test over encodings with n=" + std::to_string(x.n) + " and n=" +
                       std::to_string(y.n));
  if (x == y) throw IdenticalTours("adjacency test needs two distinct tours");
}

AdjacencyVerdict make_nonadjacent(const TourEncoding& x, const TourEncoding& y, const Block& left,
                                  const Block& right, CaseId c) {
  AdjacencyVerdict v;
  v.adjacent = false;
  v.left = left;
  v.right = right;
  v.case_id = c;
  std::tie(v.witness_z, v.witness_t) = construct_witness(x, y, left, right, c);
  return v;
}

}  // namespace

std::optional<CaseId> passing_case(const TourEncoding& x, const TourEncoding& y, const Block& left,
                                   const Block& right) {
  validate_encoding(x);
  validate_encoding(y);
  if (x.n != y.n) throw SizeMismatch("block-pair check over encodings of different sizes");
  check_block_pair(x, left, right);
  return passing_case_unchecked(x, y, left, right);
}

bool check_case_conditions(const TourEncoding& x, const TourEncoding& y, const Block& left,
                           const Block& right) {
  return passing_case(x, y, left, right).has_value();
}

std::pair<Tour, Tour> construct_witness(const TourEncoding& x, const TourEncoding& y,
                                        const Block& left, const Block& right, CaseId case_id) {
  const int n = x.n;
  const int i_a = (left.kind == BlockKind::Boundary1 ? 1 : left.end()) + 1;
  const int j_b = (right.kind == BlockKind::BoundaryN ? n : right.pos) - 1;
  const int c = static_cast<int>(case_id);
  const bool asc_from_y = (c == 1 || c == 3);   // central ascending source
  const bool tail_from_x = (c == 1 || c == 2);  // right-part source

  TourEncoding ze;
  ze.n = n;
  ze.marks.resize(n - 2);
  for (int city = 2; city <= n - 1; ++city) {
    OrderMark m;
    if (city < i_a) {
      m = x.mark(city);
    } else if (city <= j_b) {
      if (mark_order(x.mark(city)) == 1)
        m = asc_from_y ? y.mark(city) : x.mark(city);
      else
        m = asc_from_y ? x.mark(city) : y.mark(city);
    } else {
      m = tail_from_x ? x.mark(city) : y.mark(city);
    }
    ze.marks[city - 2] = m;
  }

  Tour z;
  try {
    z = decode(ze);
  } catch (const MalformedEncoding& ex) {
    throw WitnessAssemblyFailure(std::string("spliced witness encoding is malformed: ") + ex.what());
  }

  const Tour xt = decode(x);
  const Tour yt = decode(y);
  Tour t;
  t.n = n;
  t.succ.assign(n + 1, 0);
  for (int city = 1; city <= n; ++city) {
    const int zs = z.succ[city];
    if (zs == xt.succ[city])
      t.succ[city] = yt.succ[city];
    else if (zs == yt.succ[city])
      t.succ[city] = xt.succ[city];
    else
      throw WitnessAssemblyFailure("witness z uses edge (" + std::to_string(city) + "," +
                                   std::to_string(zs) + ") outside the union multigraph");
  }
  if (!is_valid_tour(t))
    throw WitnessAssemblyFailure("union minus witness z is not a single Hamiltonian cycle");
  if (!is_psb(z) || !is_psb(t))
    throw WitnessAssemblyFailure("witness pair fails the step-back pyramidality check");
  if ((z == xt && t == yt) || (z == yt && t == xt))
    throw WitnessAssemblyFailure("witness pair collapsed onto the input tours");
  return {z, t};
}

AdjacencyVerdict test_nonadjacent_exhaustive(const TourEncoding& x, const TourEncoding& y) {
  check_test_inputs(x, y);
  const BlockLists blocks = find_blocks(x, y);
  for (const Block& left : blocks.left) {
    const int left_end = left.kind == BlockKind::Boundary1 ? 1 : left.end();
    for (const Block& right : blocks.right) {
      const int right_start = right.kind == BlockKind::BoundaryN ? x.n : right.pos;
      if (right_start <= left_end) continue;
      if (auto c = passing_case_unchecked(x, y, left, right))
        return make_nonadjacent(x, y, left, right, *c);
    }
  }
  AdjacencyVerdict v;
  v.adjacent = true;
  return v;
}

AdjacencyVerdict test_nonadjacent_linear(const TourEncoding& x, const TourEncoding& y) {
  check_test_inputs(x, y);
  const int n = x.n;
  const BlockLists blocks = find_blocks(x, y);

  // Difference geography, one pass. Sentinels: n means "none at or after".
  int first_m = n, last_m = 0;
  std::vector<int> next_d(n + 2, n), next_asc_diff(n + 2, n), next_desc_diff(n + 2, n);
  for (int c = n - 1; c >= 2; --c) {
    next_d[c] = next_d[c + 1];
    next_asc_diff[c] = next_asc_diff[c + 1];
    next_desc_diff[c] = next_desc_diff[c + 1];
    const OrderMark mx = x.mark(c);
    const OrderMark my = y.mark(c);
    if (mx == my) continue;
    first_m = c;
    last_m = std::max(last_m, c);
    if (mark_order(mx) != mark_order(my))
      next_d[c] = c;
    else if (mark_order(mx) == 1)
      next_asc_diff[c] = c;
    else
      next_desc_diff[c] = c;
  }

  // Right blocks by start position, indexed for O(1) "first start >= c with
  // selector b" queries. BoundaryN is handled separately.
  std::vector<int> next_right[2];
  next_right[0].assign(n + 2, -1);
  next_right[1].assign(n + 2, -1);
  std::vector<const Block*> right_at(n + 1, nullptr);
  for (const Block& r : blocks.right) {
    if (r.kind != BlockKind::BoundaryN) right_at[r.pos] = &r;
  }
  for (int c = n; c >= 2; --c) {
    next_right[0][c] = next_right[0][c + 1];
    next_right[1][c] = next_right[1][c + 1];
    if (right_at[c]) next_right[right_at[c]->selector()][c] = c;
  }
  auto first_right_in = [&](int b, int lo, int hi) -> int {
    if (lo > hi) return -1;
    const int p = next_right[b][lo];
    return (p != -1 && p <= hi) ? p : -1;
  };

  const Block boundary_n{BlockKind::BoundaryN, n, 1};

  for (const Block& left : blocks.left) {
    const int left_end = left.kind == BlockKind::Boundary1 ? 1 : left.end();
    const int i_a = left_end + 1;
    if (i_a > n) continue;
    const bool diff_left = first_m < i_a;
    const int r_max = next_d[std::min(i_a, n)];  // central must stay order-coincident
    const int t_asc = next_asc_diff[std::min(i_a, n)];
    const int t_desc = next_desc_diff[std::min(i_a, n)];
    const int sel_a = left.selector();

    // Truth of each case formula is piecewise constant in the right block
    // start; only these breakpoints matter.
    std::array<int, 4> breaks = {i_a, t_asc + 1, t_desc + 1, last_m + 1};
    std::sort(breaks.begin(), breaks.end());

    int best_start = -1;
    CaseId best_case = CaseId::Case1;
    auto offer = [&](int start, CaseId c) {
      if (start < 0) return;
      if (best_start == -1 || start < best_start ||
          (start == best_start && static_cast<int>(c) < static_cast<int>(best_case))) {
        best_start = start;
        best_case = c;
      }
    };

    for (int c = 1; c <= 4; ++c) {
      if (sel_a != -1 && sel_a != kCaseSelA[c]) continue;
      const int sel_b = kCaseSelB[c];
      auto formula_at = [&](int s) {
        const bool diff_r = last_m >= s;
        const bool diff_a = t_asc <= s - 1;
        const bool diff_d = t_desc <= s - 1;
        PartDiffs d;
        d.diff_left = diff_left;
        d.diff_right = diff_r;
        d.diff_asc = diff_a;
        d.diff_desc = diff_d;
        return case_formula(static_cast<CaseId>(c), d);
      };
      const int hi = std::min(r_max, n);
      for (std::size_t k = 0; k < breaks.size(); ++k) {
        int lo = std::max(breaks[k], i_a);
        int up = (k + 1 < breaks.size()) ? std::min(breaks[k + 1] - 1, hi) : hi;
        if (lo > up || lo > hi) continue;
        if (!formula_at(lo)) continue;
        const int p = first_right_in(sel_b, lo, std::min(up, n - 1));
        if (p != -1) {
          offer(p, static_cast<CaseId>(c));
          break;  // intervals ascend; no earlier start exists for this case
        }
        if (lo <= n && n <= up) {
          offer(n, static_cast<CaseId>(c));
          break;
        }
      }
    }

    if (best_start != -1) {
      const Block& right = best_start == n && right_at[n] == nullptr
                               ? boundary_n
                               : *right_at[best_start];
      return make_nonadjacent(x, y, left, right, best_case);
    }
  }

  AdjacencyVerdict v;
  v.adjacent = true;
  return v;
}

std::string verdict_to_json(const AdjacencyVerdict& v) {
  nlohmann::json j;
  j["adjacent"] = v.adjacent;
  if (!v.adjacent) {
    j["case"] = static_cast<int>(v.case_id);
    j["left"] = {{"kind", block_kind_name(v.left.kind)}, {"pos", v.left.pos}};
    j["right"] = {{"kind", block_kind_name(v.right.kind)}, {"pos", v.right.pos}};
    j["z"] = tour_sequence(v.witness_z);
    j["t"] = tour_sequence(v.witness_t);
  }
  return j.dump();
}

}  // namespace psb
