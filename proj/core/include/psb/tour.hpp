#pragma once

#include <string>
#include <vector>

namespace psb {

/// A directed Hamiltonian cycle on cities 1..n, stored as a successor map.
/// Tours are rooted: two tours are equal iff their successor maps are equal.
struct Tour {
  int n = 0;
  std::vector<int> succ;  // 1-indexed; succ[0] unused

  int next(int city) const { return succ[city]; }

  friend bool operator==(const Tour& a, const Tour& b) = default;
  friend auto operator<=>(const Tour& a, const Tour& b) = default;
};

enum class PeakKind { Proper, AscStepBack, DescStepBack };

/// A city whose predecessor and successor both have smaller numbers.
struct Peak {
  int city = 0;
  PeakKind kind = PeakKind::Proper;

  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Builds a tour from its visit sequence. Throws InvalidN for fewer than
/// three cities, ParseError if the sequence is not a permutation of 1..n.
Tour tour_from_sequence(const std::vector<int>& cities);

/// Visit sequence starting at city 1.
std::vector<int> tour_sequence(const Tour& t);

/// True iff succ is a permutation of 1..n forming a single n-cycle.
bool is_valid_tour(const Tour& t);

/// Throws (InvalidN, ParseError) unless is_valid_tour holds.
void validate_tour(const Tour& t);

/// Parses the comma-separated city sequence format, e.g. "1,2,5,4,7,8,6,3".
/// The sequence must begin with city 1.
Tour parse_tour(const std::string& text);

/// Formats a tour as a comma-separated visit sequence starting at 1.
std::string format_tour(const Tour& t);

/// All peaks of a valid tour, classified, sorted by city.
std::vector<Peak> classify_peaks(const Tour& t);

/// True iff every peak other than n is a step-back peak. City n itself is
/// always a proper peak.
bool is_psb(const Tour& t);

std::string peak_kind_name(PeakKind k);

}  // namespace psb
