#include "fi1/witness.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "fi1/errors.hpp"

namespace fi1 {

BalancingExponents balancing_exponents(Element const& u1, Element const& u2) {
  if (sign(u1) != 1 || sign(u2) != -1) {
    throw DomainError("need a positive u1 and a negative u2");
  }
  std::int64_t const p1 = u1.shift(), p2 = -u2.shift();
  std::int64_t const l = std::lcm(p1, p2);
  return {l / p1, l / p2};
}

namespace {

// u^k, treating k == 0 as the empty product.
std::optional<Element> power0(Element const& u, std::int64_t k) {
  if (k == 0) {
    return std::nullopt;
  }
  return power(u, k);
}

Element product(std::initializer_list<std::optional<Element>> factors) {
  std::optional<Element> acc;
  for (auto const& f : factors) {
    if (f) {
      acc = acc ? *acc * *f : *f;
    }
  }
  return *acc;
}

}  // namespace

Element idempotent_family(Element const& u1, Element const& u2, std::int64_t x,
                          std::int64_t y) {
  if (x < 0 || y < 0 || x + y == 0) {
    throw DomainError("idempotent family needs x, y >= 0 with x + y > 0");
  }
  auto const [n1, n2] = balancing_exponents(u1, u2);
  using detail::checked_mul;
  return product({power0(u1, checked_mul(n1, x)), power0(u2, checked_mul(n2, x)),
                  power0(u2, checked_mul(n2, y)), power0(u1, checked_mul(n1, y))});
}

namespace {

constexpr std::int64_t max_search = 1'000'000;

Witness witness_for(GeneratorSet const& a, Element const& u1,
                    Element const& u2) {
  auto const [n1, n2] = balancing_exponents(u1, u2);

  // The family is monotone in x and y, so its smallest D-classes are
  // reached at (1, 0) or (0, 1).
  Element const e10 = idempotent_family(u1, u2, 1, 0);
  Element const e01 = idempotent_family(u1, u2, 0, 1);
  bool const use10 = dclass_index(e10) <= dclass_index(e01);
  Element const e = use10 ? e10 : e01;
  std::int64_t const ex = use10 ? 1 : 0, ey = use10 ? 0 : 1;

  std::int64_t const n = std::max(dclass_index(e), a.max_dclass_index());

  // For e = u2^(n2 y) u1^(n1 y) take f = u1^(n1 z) u2^(n2 z) with z > y;
  // otherwise take z = x - 1 and grow t from y + 2.
  std::optional<Element> f;
  std::int64_t fz = 0, ft = 0;
  for (std::int64_t step = 0; step < max_search; ++step) {
    if (ex == 0) {
      fz = ey + 1 + step;
      ft = 0;
    } else {
      fz = ex - 1;
      ft = ey + 2 + step;
    }
    Element const cand = idempotent_family(u1, u2, fz, ft);
    if (dclass_index(cand) >= 3 * n && incomparable(e, cand)) {
      f = cand;
      break;
    }
  }
  if (!f) {
    throw std::logic_error("no incomparable idempotent found for witness");
  }
  std::int64_t const m = dclass_index(*f);
  if (m > INT32_MAX) {
    throw RangeError("witness degree too large for partial maps");
  }
  auto const deg = static_cast<std::int32_t>(m);
  PartialMap const se = sigma(e, deg), sf = sigma(*f, deg);
  Witness w{u1, u2, n1, n2, e, ex, ey, *f, fz, ft, n, m,
            compose(se, sf), compose(sf, se)};
  if (w.ef == w.fe) {
    throw std::logic_error("witness maps unexpectedly commute");
  }
  return w;
}

}  // namespace

Witness non_fp_witness(GeneratorSet const& a) {
  if (!(a.has_positive() && a.has_negative())) {
    throw DomainError(
        "generating set has finitely many idempotents; <A> is finitely "
        "presented");
  }
  std::optional<Witness> best;
  for (auto const& u1 : a.gens()) {
    if (sign(u1) != 1) {
      continue;
    }
    for (auto const& u2 : a.gens()) {
      if (sign(u2) != -1) {
        continue;
      }
      Witness w = witness_for(a, u1, u2);
      if (!best || std::tie(w.n, w.m) < std::tie(best->n, best->m)) {
        best = std::move(w);
      }
    }
  }
  return *best;
}

bool verify_witness(Witness const& w) {
  if (sign(w.u1) != 1 || sign(w.u2) != -1) {
    return false;
  }
  if (w.n1 * w.u1.shift() != w.n2 * -w.u2.shift()) {
    return false;
  }
  if (w.e != idempotent_family(w.u1, w.u2, w.e_x, w.e_y)
      || w.f != idempotent_family(w.u1, w.u2, w.f_z, w.f_t)) {
    return false;
  }
  if (!is_idempotent(w.e) || !is_idempotent(w.f) || !incomparable(w.e, w.f)) {
    return false;
  }
  if (dclass_index(w.e) > w.n || dclass_index(w.f) != w.m || w.m < 3 * w.n) {
    return false;
  }
  auto const deg = static_cast<std::int32_t>(w.m);
  PartialMap const se = sigma(w.e, deg), sf = sigma(w.f, deg);
  return w.ef == compose(se, sf) && w.fe == compose(sf, se) && w.ef != w.fe;
}

}  // namespace fi1
