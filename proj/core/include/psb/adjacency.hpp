#pragma once

#include <optional>
#include <string>
#include <utility>

#include "psb/blocks.hpp"
#include "psb/encoding.hpp"
#include "psb/tour.hpp"

namespace psb {

/// Case split by the order values at the block cities:
/// 1 = (asc, asc), 2 = (desc, desc), 3 = (asc, desc), 4 = (desc, asc).
enum class CaseId : int { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

/// Result of a vertex-adjacency test. When adjacent is false, the blocks,
/// case and complementary witness pair are filled in; z^v + t^v equals the
/// union of the two input tours and both witnesses pass is_psb.
struct AdjacencyVerdict {
  bool adjacent = true;
  Block left{};
  Block right{};
  CaseId case_id = CaseId::Case1;
  Tour witness_z;
  Tour witness_t;
};

/// First case (in order 1..4) whose difference conditions hold for this
/// block pair, or nullopt. Boundary blocks may take either order label.
/// Throws InvalidBlockPair unless right lies strictly right of left.
std::optional<CaseId> passing_case(const TourEncoding& x, const TourEncoding& y,
                                   const Block& left, const Block& right);

/// True iff some case passes for the block pair.
bool check_case_conditions(const TourEncoding& x, const TourEncoding& y, const Block& left,
                           const Block& right);

/// Complementary witness pair (z, t) for a passing block pair: z is spliced
/// from the two encodings according to the case, t is the union complement.
/// Throws WitnessAssemblyFailure if the result is not a valid complementary
/// pair (an internal bug, not a reachable input state).
std::pair<Tour, Tour> construct_witness(const TourEncoding& x, const TourEncoding& y,
                                        const Block& left, const Block& right, CaseId case_id);

/// Scans every (left, right) block pair, left blocks by ascending position
/// (Boundary1 last), right blocks by ascending position, cases in order
/// 1..4, and returns the first passing combination. Cubic in n.
AdjacencyVerdict test_nonadjacent_exhaustive(const TourEncoding& x, const TourEncoding& y);

/// Single-pass variant; returns the identical verdict in O(n) time.
AdjacencyVerdict test_nonadjacent_linear(const TourEncoding& x, const TourEncoding& y);

/// {"adjacent": bool, "case": 1-4, "left": {...}, "right": {...},
///  "z": [cities], "t": [cities]}; block fields absent when adjacent.
std::string verdict_to_json(const AdjacencyVerdict& v);

}  // namespace psb
