#pragma once

#include <vector>

namespace qrep {

enum class Parity { Odd, Even };

/// Color set of the level-p theory.
///
/// Odd p uses the even colors 0, 2, ..., p-3; even p uses every integer
/// 0, 1, ..., (p-4)/2. The admissibility bound on a+b+c is 2p-4 and p-4
/// respectively.
struct LevelData {
  int p;
  Parity parity;
  std::vector<int> colors;

  int max_color() const { return colors.back(); }
  int sum_bound() const { return parity == Parity::Odd ? 2 * p - 4 : p - 4; }
  bool contains(int color) const;
};

LevelData level_data(int p);

}  // namespace qrep
