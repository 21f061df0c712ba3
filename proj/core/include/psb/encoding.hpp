#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "psb/tour.hpp"

namespace psb {

/// Per-city order mark. The enumeration order doubles as the total order
/// used for lexicographic comparison of encodings:
/// Asc < AscSbEnd < AscSbBegin < Desc < DescSbBegin < DescSbEnd.
enum class OrderMark : std::uint8_t {
  Asc = 0,          // visited in ascending order, token "1"
  AscSbEnd = 1,     // ending of an ascending step-back, token "1e"
  AscSbBegin = 2,   // beginning of an ascending step-back, token "1b"
  Desc = 3,         // visited in descending order, token "0"
  DescSbBegin = 4,  // beginning of a descending step-back, token "0b"
  DescSbEnd = 5,    // ending of a descending step-back, token "0e"
};

/// 1 for ascending marks, 0 for descending marks.
inline int mark_order(OrderMark m) { return m <= OrderMark::AscSbBegin ? 1 : 0; }

std::string_view mark_token(OrderMark m);
OrderMark mark_from_token(std::string_view token);

/// Order-mark vector for cities 2..n-1 (length n-2). An ascending step-back
/// pair occupies adjacent coordinates (AscSbEnd, AscSbBegin); a descending
/// pair occupies (DescSbBegin, DescSbEnd). Pairs never overlap.
struct TourEncoding {
  int n = 0;
  std::vector<OrderMark> marks;  // marks[k] belongs to city k+2

  OrderMark mark(int city) const { return marks[city - 2]; }
  int order(int city) const { return mark_order(marks[city - 2]); }

  friend bool operator==(const TourEncoding&, const TourEncoding&) = default;
  friend auto operator<=>(const TourEncoding&, const TourEncoding&) = default;
};

/// Throws InvalidN/MalformedEncoding unless the step-back pair invariants
/// hold over the whole mark sequence.
void validate_encoding(const TourEncoding& e);

/// Encoding of a pyramidal tour with step-backs. Throws NotPsb otherwise.
TourEncoding encode(const Tour& t);

/// Inverse of encode. Throws MalformedEncoding on broken pair invariants.
Tour decode(const TourEncoding& e);

/// Space-separated tokens over {1, 0, 1e, 1b, 0b, 0e}, e.g. "1 0 1e 1b 0 1".
std::string format_encoding(const TourEncoding& e);
TourEncoding parse_encoding(const std::string& tokens, int n);

/// JSON object form: {"n": int, "marks": ["1", "0", ...]}.
std::string encoding_to_json(const TourEncoding& e);
TourEncoding encoding_from_json(const std::string& json_text);

/// Streams every valid encoding of size n exactly once, in lexicographic
/// order of the mark sequence. Independent per consumer.
class EncodingEnumerator {
 public:
  explicit EncodingEnumerator(int n);

  /// Next encoding, or nullopt when exhausted.
  std::optional<TourEncoding> next();

 private:
  struct Slot {
    int pos;
    int choice;  // index into the option list at this position
  };
  bool advance();
  bool extend();

  int n_;
  int len_;
  std::vector<OrderMark> marks_;
  std::vector<Slot> stack_;
  bool fresh_ = true;
  bool done_ = false;
};

void for_each_encoding(int n, const std::function<void(const TourEncoding&)>& fn);
std::vector<TourEncoding> all_encodings(int n);

/// Number of valid encodings of size n, without enumerating.
/// Throws TooLarge if the count overflows 64 bits.
std::uint64_t count_encodings(int n);

/// Uniformly random local choices (not uniform over encodings); valid by
/// construction. Handy for large-n stress inputs.
TourEncoding random_encoding(int n, std::mt19937_64& rng);

}  // namespace psb
