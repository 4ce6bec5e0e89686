#pragma once

#include <string>
#include <vector>

#include "fence/composition.hpp"
#include "fence/report.hpp"
#include "fence/rowmotion.hpp"

namespace fence {

enum class Cell : char { Yellow = '.', Black = 'B', RedStart = 'R', RedCont = 'r' };

struct BlackTile {
  int row;     // 1-based
  int column;  // first cell, 0-based
  int length;
};

struct RedTile {
  int row;  // start row, 1-based; the tile also covers row % rows + 1
  int column;
  bool wraps;  // start row is the last row
};

/// Periodic grid with one row per segment and one column per ideal.
struct Tiling {
  int rows = 0;
  int period = 0;
  std::vector<std::vector<Cell>> cells;  // cells[row-1][column]

  Cell at(int row, int column) const;  // both indices taken cyclically
  std::string render() const;
  static Tiling parse(const std::string& text);

  std::vector<BlackTile> black_tiles() const;
  std::vector<RedTile> red_tiles() const;
  Tiling shifted(int k) const;  // column k becomes column 0
  bool equal_up_to_shift(const Tiling& other) const;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

/// Column of one ideal. Throws InternalError when two states land in one cell.
std::vector<Cell> encode_column(const ZigzagPoset& p, IdealSet ideal);

/// Throws InternalError if the result breaks an axiom.
Tiling encode_tiling(const Orbit& o, const Composition& alpha);

/// Dimensions, red pairing, black lengths and axioms (a) to (c).
bool validate_tiling(const Tiling& t, const Composition& alpha);
/// Same as validate_tiling, with the first problem in `why`.
bool validate_tiling(const Tiling& t, const Composition& alpha, std::string& why);

/// The orbit whose encoding is t up to shift. Throws InvalidTiling.
Orbit decode_tiling(const Tiling& t, const Composition& alpha);

/// Statistics read off the tile counts.
OrbitStats stats_from_tiling(const Tiling& t, const Composition& alpha);

/// Round trip, statistics and the per-row identity on every orbit.
Report verify_tilings(const Composition& alpha);

}  // namespace fence
