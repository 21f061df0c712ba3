#include "psb/blocks.hpp"

#include "psb/errors.hpp"

namespace psb {

namespace {

using Mark = OrderMark;

bool asc_pair_at(const TourEncoding& e, int city) {
  return e.mark(city) == Mark::AscSbEnd && e.mark(city + 1) == Mark::AscSbBegin;
}

bool desc_pair_at(const TourEncoding& e, int city) {
  return e.mark(city) == Mark::DescSbBegin && e.mark(city + 1) == Mark::DescSbEnd;
}

// A bare digit in a pattern means exactly the plain mark; a tilde
// coordinate admits any mark of that order, step-back halves included.
bool plain_asc(Mark m) { return m == Mark::Asc; }
bool plain_desc(Mark m) { return m == Mark::Desc; }
bool tilde_asc(Mark m) { return mark_order(m) == 1; }
bool tilde_desc(Mark m) { return mark_order(m) == 0; }

}  // namespace

std::string block_kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::U11: return "U11";
    case BlockKind::U00: return "U00";
    case BlockKind::U1111: return "U1111";
    case BlockKind::U0000: return "U0000";
    case BlockKind::L1110: return "L1110";
    case BlockKind::L1011: return "L1011";
    case BlockKind::L0001: return "L0001";
    case BlockKind::L0100: return "L0100";
    case BlockKind::R1101: return "R1101";
    case BlockKind::R0111: return "R0111";
    case BlockKind::R0010: return "R0010";
    case BlockKind::R1000: return "R1000";
    case BlockKind::Boundary1: return "Boundary1";
    case BlockKind::BoundaryN: return "BoundaryN";
  }
  return "?";
}

int Block::selector() const {
  switch (kind) {
    case BlockKind::U11:
    case BlockKind::U1111:
    case BlockKind::L1110:
    case BlockKind::L1011:
    case BlockKind::R1101:
    case BlockKind::R0111:
      return 1;
    case BlockKind::U00:
    case BlockKind::U0000:
    case BlockKind::L0001:
    case BlockKind::L0100:
    case BlockKind::R0010:
    case BlockKind::R1000:
      return 0;
    case BlockKind::Boundary1:
    case BlockKind::BoundaryN:
      return -1;
  }
  return -1;
}

BlockLists find_blocks(const TourEncoding& x, const TourEncoding& y) {
  validate_encoding(x);
  validate_encoding(y);
  if (x.n != y.n)
    throw SizeMismatch("block scan over encodings with n=" + std::to_string(x.n) + " and n=" +
                       std::to_string(y.n));
  const int n = x.n;

  BlockLists out;
  for (int c = 2; c <= n - 1; ++c) {
    // Single-coordinate universal blocks.
    if (plain_asc(x.mark(c)) && plain_asc(y.mark(c))) {
      out.left.push_back({BlockKind::U11, c, 1});
      out.right.push_back({BlockKind::U11, c, 1});
      continue;
    }
    if (plain_desc(x.mark(c)) && plain_desc(y.mark(c))) {
      out.left.push_back({BlockKind::U00, c, 1});
      out.right.push_back({BlockKind::U00, c, 1});
      continue;
    }
    if (c > n - 2) continue;

    const bool x_asc_pair = asc_pair_at(x, c);
    const bool y_asc_pair = asc_pair_at(y, c);
    const bool x_desc_pair = desc_pair_at(x, c);
    const bool y_desc_pair = desc_pair_at(y, c);

    if (x_asc_pair && y_asc_pair) {
      out.left.push_back({BlockKind::U1111, c, 2});
      out.right.push_back({BlockKind::U1111, c, 2});
    } else if (x_desc_pair && y_desc_pair) {
      out.left.push_back({BlockKind::U0000, c, 2});
      out.right.push_back({BlockKind::U0000, c, 2});
    } else if (x_asc_pair && plain_asc(y.mark(c)) && tilde_desc(y.mark(c + 1))) {
      out.left.push_back({BlockKind::L1110, c, 2});
    } else if (y_asc_pair && plain_asc(x.mark(c)) && tilde_desc(x.mark(c + 1))) {
      out.left.push_back({BlockKind::L1011, c, 2});
    } else if (x_desc_pair && plain_desc(y.mark(c)) && tilde_asc(y.mark(c + 1))) {
      out.left.push_back({BlockKind::L0001, c, 2});
    } else if (y_desc_pair && plain_desc(x.mark(c)) && tilde_asc(x.mark(c + 1))) {
      out.left.push_back({BlockKind::L0100, c, 2});
    } else if (x_asc_pair && tilde_desc(y.mark(c)) && plain_asc(y.mark(c + 1))) {
      out.right.push_back({BlockKind::R1101, c, 2});
    } else if (y_asc_pair && tilde_desc(x.mark(c)) && plain_asc(x.mark(c + 1))) {
      out.right.push_back({BlockKind::R0111, c, 2});
    } else if (x_desc_pair && tilde_asc(y.mark(c)) && plain_desc(y.mark(c + 1))) {
      out.right.push_back({BlockKind::R0010, c, 2});
    } else if (y_desc_pair && tilde_asc(x.mark(c)) && plain_desc(x.mark(c + 1))) {
      out.right.push_back({BlockKind::R1000, c, 2});
    }
  }
  out.left.push_back({BlockKind::Boundary1, 1, 1});
  out.right.push_back({BlockKind::BoundaryN, n, 1});
  return out;
}

}  // namespace psb
