#include "psb/tour.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "psb/errors.hpp"

namespace psb {

Tour tour_from_sequence(const std::vector<int>& cities) {
  const int n = static_cast<int>(cities.size());
  if (n < 3) throw InvalidN("a tour needs at least 3 cities, got " + std::to_string(n));
  std::vector<char> seen(n + 1, 0);
  for (int c : cities) {
    if (c < 1 || c > n) throw ParseError("city " + std::to_string(c) + " out of range 1.." + std::to_string(n));
    if (seen[c]) throw ParseError("city " + std::to_string(c) + " repeated");
    seen[c] = 1;
  }
  Tour t;
  t.n = n;
  t.succ.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) t.succ[cities[i]] = cities[(i + 1) % n];
  return t;
}

std::vector<int> tour_sequence(const Tour& t) {
  std::vector<int> seq;
  seq.reserve(t.n);
  int c = 1;
  do {
    seq.push_back(c);
    c = t.succ[c];
  } while (c != 1 && static_cast<int>(seq.size()) <= t.n);
  return seq;
}

bool is_valid_tour(const Tour& t) {
  if (t.n < 3 || static_cast<int>(t.succ.size()) != t.n + 1) return false;
  std::vector<char> hit(t.n + 1, 0);
  int c = 1;
  for (int step = 0; step < t.n; ++step) {
    if (c < 1 || c > t.n || hit[c]) return false;
    hit[c] = 1;
    c = t.succ[c];
  }
  return c == 1;  // closed after visiting all n cities exactly once
}

void validate_tour(const Tour& t) {
  if (t.n < 3) throw InvalidN("a tour needs at least 3 cities, got " + std::to_string(t.n));
  if (!is_valid_tour(t)) throw ParseError("successor map is not a single Hamiltonian cycle");
}

Tour parse_tour(const std::string& text) {
  std::vector<int> cities;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    while (first != last && *first == ' ') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError("bad city token '" + item + "'");
    cities.push_back(value);
  }
  if (cities.empty() || cities.front() != 1) throw ParseError("tour sequence must begin with city 1");
  return tour_from_sequence(cities);
}

std::string format_tour(const Tour& t) {
  std::string out;
  for (int c : tour_sequence(t)) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

std::vector<Peak> classify_peaks(const Tour& t) {
  std::vector<int> pred(t.n + 1, 0);
  for (int c = 1; c <= t.n; ++c) pred[t.succ[c]] = c;

  std::vector<Peak> peaks;
  for (int i = 2; i <= t.n; ++i) {
    if (pred[i] >= i || t.succ[i] >= i) continue;
    PeakKind kind = PeakKind::Proper;
    if (t.succ[i] == i - 1 && t.succ[i - 1] > i) {
      kind = PeakKind::AscStepBack;
    } else if (pred[i] == i - 1 && pred[i - 1] > i) {
      kind = PeakKind::DescStepBack;
    }
    peaks.push_back({i, kind});
  }
  return peaks;
}

bool is_psb(const Tour& t) {
  for (const Peak& p : classify_peaks(t)) {
    if (p.city == t.n) {
      if (p.kind != PeakKind::Proper) return false;
    } else if (p.kind == PeakKind::Proper) {
      return false;
    }
  }
  return true;
}

std::string peak_kind_name(PeakKind k) {
  switch (k) {
    case PeakKind::Proper: return "proper";
    case PeakKind::AscStepBack: return "asc_step_back";
    case PeakKind::DescStepBack: return "desc_step_back";
  }
  return "?";
}

}  // namespace psb
