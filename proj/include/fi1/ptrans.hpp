#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fi1/element.hpp"
#include "fi1/word.hpp"

namespace fi1 {

// A partial transformation of {0, ..., n}. Maps act on the right and compose
// left to right: (t)(f g) = ((t)f)g.
class PartialMap {
 public:
  static constexpr std::int32_t undefined = -1;

  // The nowhere-defined map on {0, ..., n}.
  explicit PartialMap(std::int32_t n);
  // images.size() == n + 1; each entry in [0, n] or `undefined`.
  PartialMap(std::int32_t n, std::vector<std::int32_t> images);

  static PartialMap identity(std::int32_t n);

  std::int32_t degree() const noexcept { return n_; }
  std::vector<std::int32_t> const& images() const noexcept { return images_; }

  std::optional<std::int32_t> operator()(std::int32_t t) const;

  bool is_empty() const noexcept;
  bool is_total() const noexcept;

  bool operator==(PartialMap const&) const = default;

 private:
  std::int32_t n_;
  std::vector<std::int32_t> images_;
};

// Throws DomainError on mismatched degrees.
PartialMap compose(PartialMap const& f, PartialMap const& g);

// k-fold composite, k >= 1, by repeated squaring.
PartialMap map_power(PartialMap const& f, std::int64_t k);

// Shift up: i -> i + 1 for i < n, undefined at n.
PartialMap alpha(std::int32_t n);
// Capped shift down: 0 -> 0, i -> i - 1.
PartialMap beta(std::int32_t n);

// The image of w under x -> alpha(n), x^-1 -> beta(n).
PartialMap eval_word_ptrans(Word const& w, std::int32_t n);

// The image of e under the word-evaluation map on C_m, using canonical_word(e)
// as the representing word. Throws DomainError if dclass_index(e) > m.
PartialMap sigma(Element const& e, std::int32_t m);

// "[1, 2, -]"
std::string to_string(PartialMap const& f);

enum class ScheinFamily { AlphaBetaAlpha, BetaAlphaBeta, Commute, NonCommute };

char const* to_string(ScheinFamily family) noexcept;

struct ScheinFailure {
  ScheinFamily family;
  std::int64_t i;  // 0 for the two families without exponents
  std::int64_t j;
  PartialMap lhs;
  PartialMap rhs;
};

// The commutation pair beta^i alpha^i alpha^j beta^j and
// alpha^j beta^j beta^i alpha^i at degree n.
struct CommutationPair {
  std::int64_t i;
  std::int64_t j;
  PartialMap lhs;
  PartialMap rhs;
};

CommutationPair commutation_pair(std::int32_t n, std::int64_t i,
                                 std::int64_t j);

struct ScheinReport {
  std::int32_t n;
  std::int64_t max_ij;
  bool passed;
  std::size_t checks;
  // Lexicographically first failure by (family, i, j).
  std::optional<ScheinFailure> first_failure;
  // Lexicographically first (i, j) where the pair differs, if any exists
  // in range.
  std::optional<CommutationPair> inequality_witness;
};

// Checks alpha beta alpha = alpha, beta alpha beta = beta, and for every
// 0 < i, j <= max_ij that the commutation pair agrees exactly when i > n or
// j > n or i + j <= n.
ScheinReport schein_check(std::int32_t n, std::int64_t max_ij);

}  // namespace fi1
