#pragma once

#include <cstdint>
#include <vector>

#include "fi1/element.hpp"
#include "fi1/numerical.hpp"
#include "fi1/subsemigroup.hpp"

namespace fi1 {

// N_{x,y} = {(-x, p, p + (y - 1)) : p >= 1}, a copy of the positive integers
// inside the positive elements of FI_1.
struct PieceKey {
  std::int64_t x;
  std::int64_t y;
  auto operator<=>(PieceKey const&) const = default;
};

PieceKey piece_key(Element const& positive);
Element piece_element(PieceKey key, std::int64_t p);

// One nonempty intersection S n N_{x,y}, described through its displacement
// coordinates.
struct Piece {
  PieceKey key;
  // {p : (-x, p, p + y - 1) in S}, a subsemigroup of the positive integers.
  numerical::NumericalSgp values;
  // The part with p > Q.
  numerical::NumericalSgp upper;
};

// Decomposition of a finitely generated subsemigroup S of FI_1 with finitely
// many idempotents. Generating sets with negative elements are first mapped
// by reflect(), so keys and `pieces` refer to the reflected semigroup while
// every listed Element is in the original coordinates.
struct Decomposition {
  bool mirrored = false;
  // Least n such that every generator has left and right - shift in [0, n];
  // for positive generators, the least n with A inside T_n.
  std::int64_t chain_bound = 0;
  // max over pieces of max(x, y - 1).
  std::int64_t q = 0;
  std::vector<Piece> pieces;  // sorted by key
  // Minimal generators of each upper part, in piece order.
  std::vector<Element> u_generators;
  // S \ U: the idempotents of S together with every positive element with
  // p <= Q. Sorted.
  std::vector<Element> complement;
  // Displacement sets were resolved exactly: per-key membership became
  // periodic with this period from `preperiod` on.
  std::int64_t preperiod = 0;
  std::int64_t period = 0;
};

// For generating sets of positive elements only; throws DomainError
// otherwise.
Decomposition decompose_positive(GeneratorSet const& a);

// For any generating set without elements of both signs; throws DomainError
// for mixed signs.
Decomposition decompose(GeneratorSet const& a);

// a_i >= a_j - p_i and b_i <= b_j + p_i for all ordered pairs of generators
// (a = left reach, b = right reach). Throws DomainError for non-positive
// generators.
bool check_nice_condition(GeneratorSet const& a);

// Index of the piece whose upper part contains s (original coordinates), or
// pieces.size() when s lies in the complement or outside every piece.
std::size_t find_upper_piece(Decomposition const& d, Element const& s);

}  // namespace fi1
