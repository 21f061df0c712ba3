#pragma once

#include <utility>
#include <vector>

#include "psb/tour.hpp"

namespace psb {

inline constexpr int kDefaultOracleMaxN = 9;

/// All unordered pairs {z, t} of pyramidal tours with step-backs, different
/// from {x, y}, whose characteristic vectors sum to those of x and y:
/// z^v + t^v = x^v + y^v. Each pair is reported once with z < t (successor
/// map order); pairs appear in deterministic search order.
///
/// Exponential in n; throws TooLarge above max_n.
std::vector<std::pair<Tour, Tour>> complementary_pairs(const Tour& x, const Tour& y,
                                                       int max_n = kDefaultOracleMaxN);

/// Ground-truth nonadjacency of the vertices x^v and y^v: true iff the
/// union multigraph contains a complementary pair other than {x, y}.
bool oracle_nonadjacent(const Tour& x, const Tour& y, int max_n = kDefaultOracleMaxN);

}  // namespace psb
