#pragma once

#include <string>
#include <vector>

#include "psb/encoding.hpp"

namespace psb {

/// The twelve two-row mark patterns at which a tour inside the union
/// multigraph may switch between edges of x and edges of y, plus the two
/// universal boundary positions (cities 1 and n). U patterns serve as left
/// or right blocks, L only as left, R only as right. Subscripts read the
/// x row first, then the y row.
enum class BlockKind {
  U11,
  U00,
  U1111,
  U0000,
  L1110,
  L1011,
  L0001,
  L0100,
  R1101,
  R0111,
  R0010,
  R1000,
  Boundary1,
  BoundaryN,
};

std::string block_kind_name(BlockKind k);

struct Block {
  BlockKind kind = BlockKind::Boundary1;
  int pos = 0;    // leftmost coordinate (city index); 1 / n for boundaries
  int width = 1;  // 1 for U11/U00/boundaries, 2 for the rest

  /// Last coordinate covered by the block.
  int end() const { return pos + width - 1; }

  /// Case-selector order at the block city: 1 ascending, 0 descending,
  /// -1 free (boundaries may take either label).
  int selector() const;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockLists {
  std::vector<Block> left;   // U and L patterns ascending by position, then Boundary1
  std::vector<Block> right;  // U and R patterns ascending by position, then BoundaryN
};

/// All left-block and right-block matches of the two encodings. Accepts
/// x == y (every plain-equal coordinate is then a U block). Throws
/// SizeMismatch when the sizes differ.
BlockLists find_blocks(const TourEncoding& x, const TourEncoding& y);

}  // namespace psb
