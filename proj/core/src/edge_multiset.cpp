#include "psb/edge_multiset.hpp"

#include "json.hpp"
#include "psb/errors.hpp"

namespace psb {

int EdgeMultiset::total() const {
  int sum = 0;
  for (const auto& [edge, mult] : counts) sum += mult;
  return sum;
}

EdgeMultiset char_vector(const Tour& t) {
  EdgeMultiset m;
  m.n = t.n;
  for (int c = 1; c <= t.n; ++c) m.add(c, t.succ[c]);
  return m;
}

EdgeMultiset union_of(const Tour& x, const Tour& y) {
  if (x.n != y.n)
    throw SizeMismatch("union of tours with n=" + std::to_string(x.n) + " and n=" + std::to_string(y.n));
  EdgeMultiset m = char_vector(x);
  for (int c = 1; c <= y.n; ++c) m.add(c, y.succ[c]);
  return m;
}

EdgeMultiset subtract(const EdgeMultiset& a, const EdgeMultiset& b) {
  if (a.n != b.n) throw SizeMismatch("subtracting edge multisets of different sizes");
  EdgeMultiset out = a;
  for (const auto& [edge, mult] : b.counts) {
    if (out.count(edge.first, edge.second) < mult)
      throw WitnessAssemblyFailure("edge multiset subtraction went negative on (" +
                                   std::to_string(edge.first) + "," + std::to_string(edge.second) + ")");
    out.add(edge.first, edge.second, -mult);
  }
  return out;
}

std::string edge_multiset_to_json(const EdgeMultiset& m) {
  nlohmann::json j;
  j["n"] = m.n;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& [edge, mult] : m.counts) edges.push_back({edge.first, edge.second, mult});
  return j.dump();
}

EdgeMultiset edge_multiset_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad edge multiset JSON: ") + ex.what());
  }
  EdgeMultiset m;
  m.n = j.at("n").get<int>();
  for (const auto& e : j.at("edges")) m.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
  return m;
}

}  // namespace psb
