#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fi1/element.hpp"

namespace fi1 {

enum class Letter : std::uint8_t { X, XInv };

// A nonempty word over {x, x^-1}.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);

  // x^k for k > 0, (x^-1)^|k| for k < 0.
  static Word power_of_x(std::int64_t k);

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  Word operator+(Word const& other) const;

  bool operator==(Word const&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Accepts `x`, `X` and `x^-1` tokens; whitespace is ignored.
Word parse_word(std::string_view text);

// Letters written as `x` and `X`, no separators.
std::string to_string(Word const& w);

// The image of w in FI_1 under x -> (0,1,1), x^-1 -> (-1,-1,0), computed as
// the walk (min prefix sum, final sum, max prefix sum).
Element eval_word(Word const& w);

// x^-a x^a x^b x^-b x^p with empty blocks omitted.
Word canonical_word(Element const& e);

}  // namespace fi1
