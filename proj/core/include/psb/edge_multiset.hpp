#pragma once

#include <map>
#include <string>
#include <utility>

#include "psb/tour.hpp"

namespace psb {

/// Multiset of directed edges over cities 1..n with multiplicities in
/// {0,1,2}. Represents characteristic vectors and unions of two tours.
struct EdgeMultiset {
  int n = 0;
  std::map<std::pair<int, int>, int> counts;

  int count(int u, int v) const {
    auto it = counts.find({u, v});
    return it == counts.end() ? 0 : it->second;
  }
  void add(int u, int v, int k = 1) {
    int& c = counts[{u, v}];
    c += k;
    if (c == 0) counts.erase({u, v});
  }
  int total() const;

  friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;
};

/// Characteristic multiset of a tour: multiplicity 1 exactly on the n edges
/// (i, succ(i)).
EdgeMultiset char_vector(const Tour& t);

/// Multigraph with all edges of both tours (pointwise sum). Throws
/// SizeMismatch when the city counts differ.
EdgeMultiset union_of(const Tour& x, const Tour& y);

/// Pointwise difference a - b. Throws WitnessAssemblyFailure if any
/// multiplicity would go negative.
EdgeMultiset subtract(const EdgeMultiset& a, const EdgeMultiset& b);

/// {"n": int, "edges": [[u, v, mult], ...]} sorted lexicographically.
std::string edge_multiset_to_json(const EdgeMultiset& m);
EdgeMultiset edge_multiset_from_json(const std::string& json_text);

}  // namespace psb
