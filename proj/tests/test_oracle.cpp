#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "psb/edge_multiset.hpp"
#include "psb/encoding.hpp"
#include "psb/errors.hpp"
#include "psb/oracle.hpp"

using namespace psb;

namespace {

Tour dec(const std::string& tokens, int n) { return decode(parse_encoding(tokens, n)); }

bool contains_pair(const std::vector<std::pair<Tour, Tour>>& pairs, const Tour& a, const Tour& b) {
  for (const auto& [z, t] : pairs)
    if ((z == a && t == b) || (z == b && t == a)) return true;
  return false;
}

}  // namespace

TEST_CASE("characteristic multiset of a triangle") {
  const EdgeMultiset m = char_vector(parse_tour("1,2,3"));
  CHECK(m.total() == 3);
  CHECK(m.count(1, 2) == 1);
  CHECK(m.count(2, 3) == 1);
  CHECK(m.count(3, 1) == 1);
  CHECK(m.count(2, 1) == 0);
}

TEST_CASE("characteristic multiset of a seven-city tour") {
  const EdgeMultiset m = char_vector(parse_tour("1,2,4,3,5,6,7"));
  CHECK(m.total() == 7);
  CHECK(m.count(2, 4) == 1);
  CHECK(m.count(4, 3) == 1);
  CHECK(m.count(3, 5) == 1);
}

TEST_CASE("every tour has multiplicity sum n") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng() % 30);
    CHECK(char_vector(decode(random_encoding(n, rng))).total() == n);
  }
}

TEST_CASE("union of a tour with itself doubles every edge") {
  const Tour t = parse_tour("1,2,5,4,7,8,6,3");
  const EdgeMultiset u = union_of(t, t);
  CHECK(u.total() == 2 * t.n);
  for (const auto& [edge, mult] : u.counts) {
    (void)edge;
    CHECK(mult == 2);
  }
}

TEST_CASE("union of the two seven-city tours has 14 slots and one shared edge") {
  const Tour x = dec("1 1e 1b 1 1", 7);
  const Tour y = dec("1 1 1 1 0", 7);
  const EdgeMultiset u = union_of(x, y);
  CHECK(u.total() == 14);
  CHECK(u.count(1, 2) == 2);
  int singles = 0;
  for (const auto& [edge, mult] : u.counts) {
    (void)edge;
    if (mult == 1) ++singles;
  }
  CHECK(singles == 12);
}

TEST_CASE("union is commutative") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const Tour x = decode(random_encoding(n, rng));
    const Tour y = decode(random_encoding(n, rng));
    CHECK(union_of(x, y) == union_of(y, x));
  }
}

TEST_CASE("union rejects different sizes") {
  CHECK_THROWS_AS(union_of(parse_tour("1,2,3"), parse_tour("1,2,3,4")), SizeMismatch);
}

TEST_CASE("edge multiset JSON round-trip with sorted edges") {
  const EdgeMultiset m = union_of(dec("1 1", 4), dec("0 0", 4));
  CHECK(edge_multiset_from_json(edge_multiset_to_json(m)) == m);
  const std::string j = edge_multiset_to_json(char_vector(parse_tour("1,3,2")));
  CHECK(j == R"({"edges":[[1,3,1],[2,1,1],[3,2,1]],"n":3})");
}

TEST_CASE("complementary pair of the first seven-city example") {
  const Tour x = dec("1 1e 1b 1 1", 7);
  const Tour y = dec("1 1 1 1 0", 7);
  const auto pairs = complementary_pairs(x, y);
  CHECK(contains_pair(pairs, parse_tour("1,2,3,4,5,6,7"), parse_tour("1,2,4,3,5,7,6")));
}

TEST_CASE("complementary pair of the second seven-city example") {
  const Tour x = dec("1 0 0 1 0", 7);
  const Tour y = dec("1 0b 0e 0b 0e", 7);
  const auto pairs = complementary_pairs(x, y);
  CHECK(contains_pair(pairs, parse_tour("1,2,7,5,6,4,3"), parse_tour("1,2,5,7,6,3,4")));
}

TEST_CASE("opposite four-city tours admit no other decomposition") {
  CHECK(complementary_pairs(dec("1 1", 4), dec("0 0", 4)).empty());
  CHECK_FALSE(oracle_nonadjacent(dec("1 1", 4), dec("0 0", 4)));
}

TEST_CASE("nonadjacency holds for both worked examples") {
  CHECK(oracle_nonadjacent(dec("1 1e 1b 1 1", 7), dec("1 1 1 1 0", 7)));
  CHECK(oracle_nonadjacent(dec("1 0 0 1 0", 7), dec("1 0b 0e 0b 0e", 7)));
}

TEST_CASE("reported pairs satisfy the sum identity and pyramidality") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 60; ++round) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Tour x = decode(random_encoding(n, rng));
    const Tour y = decode(random_encoding(n, rng));
    if (x == y) continue;
    const EdgeMultiset expected = union_of(x, y);
    for (const auto& [z, t] : complementary_pairs(x, y)) {
      CHECK(is_psb(z));
      CHECK(is_psb(t));
      CHECK(union_of(z, t) == expected);
      CHECK_FALSE((z == x && t == y));
      CHECK_FALSE((z == y && t == x));
      // subgraph property: every witness edge lies inside the union
      for (int c = 1; c <= n; ++c) {
        CHECK(expected.count(c, z.succ[c]) >= 1);
        CHECK(expected.count(c, t.succ[c]) >= 1);
      }
    }
  }
}

TEST_CASE("oracle is symmetric") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 60; ++round) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Tour x = decode(random_encoding(n, rng));
    const Tour y = decode(random_encoding(n, rng));
    if (x == y) continue;
    CHECK(oracle_nonadjacent(x, y) == oracle_nonadjacent(y, x));
  }
}

TEST_CASE("oracle refuses oversized instances") {
  std::mt19937_64 rng(1);
  const Tour x = decode(random_encoding(12, rng));
  const Tour y = decode(random_encoding(12, rng));
  CHECK_THROWS_AS(oracle_nonadjacent(x, y), TooLarge);
  CHECK_NOTHROW(oracle_nonadjacent(x, y, 12));  // guard is adjustable
  CHECK_THROWS_AS(complementary_pairs(parse_tour("1,2,3"), parse_tour("1,2,3,4")), SizeMismatch);
}
