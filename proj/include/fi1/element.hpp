#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fi1 {

// An element of the monogenic free inverse semigroup, stored as the triple
// (-a, p, b): a rank-1 Munn tree reaching `left` edges to the left of the
// initial vertex and `right` edges to its right, with the terminal vertex
// `shift` edges from the initial one.
//
// Invariants: left >= 0, right >= 0, left + right > 0, -left <= shift <= right.
class Element {
 public:
  // Throws DomainError if the invariants do not hold.
  Element(std::int64_t left, std::int64_t shift, std::int64_t right);

  // Builds from the written form [-a, p, b]; `neg_left` must be <= 0.
  static Element from_triple(std::int64_t neg_left, std::int64_t shift,
                             std::int64_t right);

  std::int64_t left() const noexcept { return left_; }
  std::int64_t shift() const noexcept { return shift_; }
  std::int64_t right() const noexcept { return right_; }

  auto operator<=>(Element const&) const = default;

 private:
  std::int64_t left_;
  std::int64_t shift_;
  std::int64_t right_;
};

Element multiply(Element const& x, Element const& y);
Element invert(Element const& x);

// n-fold product via the closed form; n >= 1.
Element power(Element const& x, std::int64_t n);

inline Element operator*(Element const& x, Element const& y) {
  return multiply(x, y);
}

inline bool is_idempotent(Element const& x) noexcept {
  return x.shift() == 0;
}

// -1, 0 or +1 according to the sign of the displacement.
inline int sign(Element const& x) noexcept {
  return (x.shift() > 0) - (x.shift() < 0);
}

// Index n of the D-class D_n containing x, namely left + right.
inline std::int64_t dclass_index(Element const& x) noexcept {
  return x.left() + x.right();
}

// Natural partial order on idempotents; throws DomainError otherwise.
bool idempotent_leq(Element const& e, Element const& f);
bool incomparable(Element const& e, Element const& f);

// The automorphism induced by swapping x and x^-1: (a, p, b) -> (b, -p, a).
Element reflect(Element const& x);

// All elements of D_n, in increasing order.
std::vector<Element> dclass(std::int64_t n);

// All elements of C_n = D_1 u ... u D_n, in increasing order.
std::vector<Element> elements_up_to(std::int64_t n);

// "[-a, p, b]"
std::string to_string(Element const& x);
std::ostream& operator<<(std::ostream& os, Element const& x);

}  // namespace fi1

template <>
struct std::hash<fi1::Element> {
  std::size_t operator()(fi1::Element const& x) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(x.left());
    h = h * 1000003u ^ std::hash<std::int64_t>{}(x.shift());
    h = h * 1000003u ^ std::hash<std::int64_t>{}(x.right());
    return h;
  }
};
