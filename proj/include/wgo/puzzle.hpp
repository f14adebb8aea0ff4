#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgo/gkm.hpp"

namespace wgo {

// An equivariant piece spanning up-triangle (row, col) and the down-triangle below it.
// Its two projections to the south edge land in columns a > c.
struct EquivariantPiece {
  int row, col;
  int a, c;
};

// How boundary words sit on the triangle. Sides: left (/), right (\), bottom.
struct PuzzleConvention {
  bool left_bottom_up = true;      // else read from the top corner down
  bool right_bottom_up = false;    // else read from the top corner down
  bool bottom_right_left = false;  // else read left to right
  bool complement = true;          // swap 0 and 1 on every boundary edge
  bool mirror_columns = false;     // weight columns reflected i -> n + 1 - i
};

struct Puzzle {
  int n = 0;
  std::string left, right, bottom;
  // Per unit triangle, in row-major order U(r,1), D(r,1), U(r,2), ..., U(r,r):
  // '0'/'1' monochrome, 'a'/'b' halves of the two tilted rhombi, 't' ordinary vertical rhombus,
  // 'e' equivariant vertical rhombus.
  std::string cells;
  std::vector<EquivariantPiece> equivariant;

  std::string render() const;
};

// Weight factor y_a - y_c (a > c) of every equivariant piece.
std::vector<std::pair<int, int>> weight_pairs(const Puzzle& puzzle, const PuzzleConvention& conv = {});
std::vector<Polynomial> weight_factors(const Puzzle& puzzle, const PuzzleConvention& conv = {});
Polynomial weight(const Puzzle& puzzle, const PuzzleConvention& conv = {});
// The same factors after y_i -> y_{n+1-i}, as pairs (u, v) with u < v meaning y_u - y_v.
std::vector<std::pair<int, int>> reflected_weight_pairs(const Puzzle& puzzle, const PuzzleConvention& conv = {});

// All puzzles with the given boundary: lambda on the left, mu on the right, nu on the bottom.
std::vector<Puzzle> enumerate_puzzles(std::string_view lambda, std::string_view mu, std::string_view nu,
                                      const PuzzleConvention& conv = {});

// Entry (i, j, l) = sum over puzzles with boundary (lambda^i, lambda^j; lambda^l) of wt(P).
StructureTable kt_constants(const SymbolLattice& lattice, int jobs = 1, const PuzzleConvention& conv = {});
// Entry (i, j, l) = sum over puzzles with boundary (rev lambda^i, rev lambda^j; rev lambda^l) of the
// reflected weights; these are the structure constants of the basis from kt_restrictions.
StructureTable conjugated_constants(const SymbolLattice& lattice, int jobs = 1, const PuzzleConvention& conv = {});

inline constexpr std::size_t kPuzzleTableLimit = 15;

}  // namespace wgo
