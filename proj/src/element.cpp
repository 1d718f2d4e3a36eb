#include "fi1/element.hpp"

#include <algorithm>
#include <ostream>

#include "fi1/errors.hpp"

namespace fi1 {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_sub;

Element::Element(std::int64_t left, std::int64_t shift, std::int64_t right)
    : left_(left), shift_(shift), right_(right) {
  if (left < 0 || right < 0) {
    throw DomainError("element reaches must be non-negative");
  }
  if (left == 0 && right == 0) {
    throw DomainError("element must have a + b > 0");
  }
  if (shift < -left || shift > right) {
    throw DomainError("element displacement must lie in [-a, b]");
  }
}

Element Element::from_triple(std::int64_t neg_left, std::int64_t shift,
                             std::int64_t right) {
  if (neg_left > 0) {
    throw DomainError("first component of [-a, p, b] must be <= 0");
  }
  if (neg_left == INT64_MIN) {
    throw RangeError("first component out of range");
  }
  return Element(-neg_left, shift, right);
}

Element multiply(Element const& x, Element const& y) {
  std::int64_t const left = std::max(x.left(), checked_sub(y.left(), x.shift()));
  std::int64_t const shift = checked_add(x.shift(), y.shift());
  std::int64_t const right
      = std::max(x.right(), checked_add(y.right(), x.shift()));
  return Element(left, shift, right);
}

Element invert(Element const& x) {
  return Element(checked_add(x.left(), x.shift()),
                 -x.shift(),
                 checked_sub(x.right(), x.shift()));
}

Element power(Element const& x, std::int64_t n) {
  if (n < 1) {
    throw DomainError("power exponent must be positive");
  }
  std::int64_t const extra = checked_mul(n - 1, x.shift());
  if (x.shift() > 0) {
    return Element(x.left(), checked_mul(n, x.shift()),
                   checked_add(x.right(), extra));
  }
  if (x.shift() < 0) {
    return Element(checked_sub(x.left(), extra), checked_mul(n, x.shift()),
                   x.right());
  }
  return x;
}

namespace {
void require_idempotent(Element const& e) {
  if (!is_idempotent(e)) {
    throw DomainError("natural order is only defined on idempotents here, got "
                      + to_string(e));
  }
}
}  // namespace

bool idempotent_leq(Element const& e, Element const& f) {
  require_idempotent(e);
  require_idempotent(f);
  return e.left() >= f.left() && e.right() >= f.right();
}

bool incomparable(Element const& e, Element const& f) {
  require_idempotent(e);
  require_idempotent(f);
  return checked_mul(e.left() - f.left(), e.right() - f.right()) < 0;
}

Element reflect(Element const& x) {
  return Element(x.right(), -x.shift(), x.left());
}

std::vector<Element> dclass(std::int64_t n) {
  if (n < 1) {
    throw DomainError("D-class index must be positive");
  }
  std::vector<Element> out;
  for (std::int64_t a = 0; a <= n; ++a) {
    std::int64_t const b = n - a;
    for (std::int64_t p = -a; p <= b; ++p) {
      out.emplace_back(a, p, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> elements_up_to(std::int64_t n) {
  std::vector<Element> out;
  for (std::int64_t i = 1; i <= n; ++i) {
    auto d = dclass(i);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Element const& x) {
  return "[" + std::to_string(-x.left()) + ", " + std::to_string(x.shift())
         + ", " + std::to_string(x.right()) + "]";
}

std::ostream& operator<<(std::ostream& os, Element const& x) {
  return os << to_string(x);
}

}  // namespace fi1
