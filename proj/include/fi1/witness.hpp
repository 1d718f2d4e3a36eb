#pragma once

#include <cstdint>

#include "fi1/element.hpp"
#include "fi1/ptrans.hpp"
#include "fi1/subsemigroup.hpp"

namespace fi1 {

// Exponents n1, n2 with n1 * p(u1) = n2 * |p(u2)| = lcm of the two.
struct BalancingExponents {
  std::int64_t n1;
  std::int64_t n2;
};

// Throws DomainError unless u1 is positive and u2 negative.
BalancingExponents balancing_exponents(Element const& u1, Element const& u2);

// The idempotent u1^(n1 x) u2^(n2 x) u2^(n2 y) u1^(n1 y), with the balancing
// exponents computed from u1 and u2 and empty factors omitted.
// Throws DomainError if x + y == 0, x or y is negative, or the signs are
// wrong.
Element idempotent_family(Element const& u1, Element const& u2, std::int64_t x,
                          std::int64_t y);

// An explicit certificate that <A> is not finitely presented: two
// idempotents e in C_n and f in D_m of <u1, u2> that commute in FI_1 but
// whose images under sigma_m do not, with m >= 3n and C_n containing every
// generator.
struct Witness {
  Element u1;
  Element u2;
  std::int64_t n1;
  std::int64_t n2;
  // e = idempotent_family(u1, u2, e_x, e_y)
  Element e;
  std::int64_t e_x;
  std::int64_t e_y;
  // f = u1^(n1 f_z) u2^(n2 f_z) u2^(n2 f_t) u1^(n1 f_t)
  Element f;
  std::int64_t f_z;
  std::int64_t f_t;
  std::int64_t n;
  std::int64_t m;
  PartialMap ef;  // sigma_m(e) sigma_m(f)
  PartialMap fe;  // sigma_m(f) sigma_m(e)
};

// Throws DomainError if <A> is finitely presented.
Witness non_fp_witness(GeneratorSet const& a);

// Re-derives every witness invariant from scratch.
bool verify_witness(Witness const& w);

}  // namespace fi1
