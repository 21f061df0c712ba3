#include "psb/encoding.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "psb/errors.hpp"

namespace psb {

namespace {

using Mark = OrderMark;

constexpr bool is_pair_start(Mark m) { return m == Mark::AscSbEnd || m == Mark::DescSbBegin; }

// Free-position options in lexicographic order of the full mark sequence.
// Pair options consume two coordinates.
struct Option {
  Mark mark;
  int width;
};
constexpr Option kOptions[] = {
    {Mark::Asc, 1},
    {Mark::AscSbEnd, 2},
    {Mark::Desc, 1},
    {Mark::DescSbBegin, 2},
};
constexpr int kOptionCount = 4;

Mark pair_partner(Mark m) { return m == Mark::AscSbEnd ? Mark::AscSbBegin : Mark::DescSbEnd; }

}  // namespace

std::string_view mark_token(Mark m) {
  switch (m) {
    case Mark::Asc: return "1";
    case Mark::AscSbEnd: return "1e";
    case Mark::AscSbBegin: return "1b";
    case Mark::Desc: return "0";
    case Mark::DescSbBegin: return "0b";
    case Mark::DescSbEnd: return "0e";
  }
  return "?";
}

Mark mark_from_token(std::string_view token) {
  if (token == "1") return Mark::Asc;
  if (token == "1e") return Mark::AscSbEnd;
  if (token == "1b") return Mark::AscSbBegin;
  if (token == "0") return Mark::Desc;
  if (token == "0b") return Mark::DescSbBegin;
  if (token == "0e") return Mark::DescSbEnd;
  throw ParseError("unknown order mark token '" + std::string(token) + "'");
}

void validate_encoding(const TourEncoding& e) {
  if (e.n < 3) throw InvalidN("encoding needs n >= 3, got " + std::to_string(e.n));
  const int len = static_cast<int>(e.marks.size());
  if (len != e.n - 2)
    throw MalformedEncoding("encoding for n=" + std::to_string(e.n) + " must have " +
                            std::to_string(e.n - 2) + " marks, got " + std::to_string(len));
  for (int k = 0; k < len; ++k) {
    const Mark m = e.marks[k];
    const bool starts = is_pair_start(m);
    if (starts) {
      if (k + 1 >= len || e.marks[k + 1] != pair_partner(m))
        throw MalformedEncoding("step-back pair opened at city " + std::to_string(k + 2) +
                                " is not closed at the next coordinate");
      ++k;  // partner consumed
    } else if (m == Mark::AscSbBegin || m == Mark::DescSbEnd) {
      throw MalformedEncoding("dangling step-back pair ending at city " + std::to_string(k + 2));
    }
  }
}

TourEncoding encode(const Tour& t) {
  validate_tour(t);
  if (!is_psb(t)) throw NotPsb("tour " + format_tour(t) + " has a proper peak below n");

  TourEncoding e;
  e.n = t.n;
  e.marks.assign(t.n - 2, Mark::Asc);

  const std::vector<int> seq = tour_sequence(t);
  bool descending = false;
  for (int idx = 1; idx < t.n; ++idx) {
    const int city = seq[idx];
    if (city == t.n) {
      descending = true;
      continue;
    }
    e.marks[city - 2] = descending ? Mark::Desc : Mark::Asc;
  }
  for (const Peak& p : classify_peaks(t)) {
    if (p.kind == PeakKind::AscStepBack) {
      e.marks[p.city - 3] = Mark::AscSbEnd;
      e.marks[p.city - 2] = Mark::AscSbBegin;
    } else if (p.kind == PeakKind::DescStepBack) {
      e.marks[p.city - 3] = Mark::DescSbBegin;
      e.marks[p.city - 2] = Mark::DescSbEnd;
    }
  }
  return e;
}

Tour decode(const TourEncoding& e) {
  validate_encoding(e);

  std::vector<int> seq;
  seq.reserve(e.n);
  seq.push_back(1);
  // Ascending chain: increasing cities, each step-back pair (i-1, i)
  // visited as (i, i-1).
  for (int city = 2; city <= e.n - 1; ++city) {
    const Mark m = e.mark(city);
    if (m == Mark::Asc) {
      seq.push_back(city);
    } else if (m == Mark::AscSbEnd) {
      seq.push_back(city + 1);
      seq.push_back(city);
      ++city;
    }
  }
  seq.push_back(e.n);
  // Descending chain: decreasing cities, each step-back pair (i-1, i)
  // visited as (i-1, i).
  for (int city = e.n - 1; city >= 2; --city) {
    const Mark m = e.mark(city);
    if (m == Mark::Desc) {
      seq.push_back(city);
    } else if (m == Mark::DescSbEnd) {
      seq.push_back(city - 1);
      seq.push_back(city);
      --city;
    }
  }
  return tour_from_sequence(seq);
}

std::string format_encoding(const TourEncoding& e) {
  std::string out;
  for (Mark m : e.marks) {
    if (!out.empty()) out += ' ';
    out += mark_token(m);
  }
  return out;
}

TourEncoding parse_encoding(const std::string& tokens, int n) {
  if (n < 3) throw InvalidN("encoding needs n >= 3, got " + std::to_string(n));
  TourEncoding e;
  e.n = n;
  std::stringstream ss(tokens);
  std::string tok;
  while (ss >> tok) e.marks.push_back(mark_from_token(tok));
  validate_encoding(e);
  return e;
}

std::string encoding_to_json(const TourEncoding& e) {
  nlohmann::json j;
  j["n"] = e.n;
  auto& marks = j["marks"] = nlohmann::json::array();
  for (Mark m : e.marks) marks.push_back(std::string(mark_token(m)));
  return j.dump();
}

TourEncoding encoding_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad encoding JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("marks"))
    throw ParseError("encoding JSON needs fields 'n' and 'marks'");
  TourEncoding e;
  e.n = j["n"].get<int>();
  for (const auto& tok : j["marks"]) e.marks.push_back(mark_from_token(tok.get<std::string>()));
  validate_encoding(e);
  return e;
}

EncodingEnumerator::EncodingEnumerator(int n) : n_(n), len_(n - 2) {
  if (n < 3) throw InvalidN("enumeration needs n >= 3, got " + std::to_string(n));
  marks_.assign(len_, Mark::Asc);
}

bool EncodingEnumerator::extend() {
  int pos = stack_.empty() ? 0 : stack_.back().pos + kOptions[stack_.back().choice].width;
  while (pos < len_) {
    stack_.push_back({pos, 0});  // Asc, the lexicographically least option
    marks_[pos] = Mark::Asc;
    pos += 1;
  }
  return true;
}

bool EncodingEnumerator::advance() {
  while (!stack_.empty()) {
    Slot& slot = stack_.back();
    for (int c = slot.choice + 1; c < kOptionCount; ++c) {
      if (slot.pos + kOptions[c].width > len_) continue;
      slot.choice = c;
      marks_[slot.pos] = kOptions[c].mark;
      if (kOptions[c].width == 2) marks_[slot.pos + 1] = pair_partner(kOptions[c].mark);
      return extend();
    }
    stack_.pop_back();
  }
  return false;
}

std::optional<TourEncoding> EncodingEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    extend();
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return TourEncoding{n_, marks_};
}

void for_each_encoding(int n, const std::function<void(const TourEncoding&)>& fn) {
  EncodingEnumerator it(n);
  while (auto e = it.next()) fn(*e);
}

std::vector<TourEncoding> all_encodings(int n) {
  std::vector<TourEncoding> out;
  for_each_encoding(n, [&](const TourEncoding& e) { out.push_back(e); });
  return out;
}

std::uint64_t count_encodings(int n) {
  if (n < 3) throw InvalidN("enumeration needs n >= 3, got " + std::to_string(n));
  // a(L) = 2 a(L-1) + 2 a(L-2): free coordinate or a step-back pair, two
  // kinds each.
  std::uint64_t prev2 = 1, prev1 = 2;
  for (int len = 2; len <= n - 2; ++len) {
    if (prev1 > (UINT64_MAX - 2 * prev2) / 2)
      throw TooLarge("encoding count overflows 64 bits at n=" + std::to_string(n));
    const std::uint64_t cur = 2 * prev1 + 2 * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return n == 3 ? 2 : prev1;
}

TourEncoding random_encoding(int n, std::mt19937_64& rng) {
  if (n < 3) throw InvalidN("random encoding needs n >= 3, got " + std::to_string(n));
  TourEncoding e;
  e.n = n;
  e.marks.reserve(n - 2);
  const int len = n - 2;
  int pos = 0;
  while (pos < len) {
    const int limit = (pos + 2 <= len) ? kOptionCount : 2;
    // With no room for a pair, the viable options are Asc and Desc.
    int pick = static_cast<int>(rng() % limit);
    if (limit == 2 && pick == 1) pick = 2;  // map to Desc
    const Option& opt = kOptions[pick];
    e.marks.push_back(opt.mark);
    if (opt.width == 2) e.marks.push_back(pair_partner(opt.mark));
    pos += opt.width;
  }
  return e;
}

}  // namespace psb
