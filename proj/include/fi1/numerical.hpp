#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fi1::numerical {

using Factorization = std::vector<std::int64_t>;

// A finitely generated subsemigroup of the positive integers. All structural
// invariants (Frobenius number, gaps, Apery sets) are taken in normalized
// units, i.e. after dividing by the gcd of the generators.
class NumericalSgp {
 public:
  // Throws DomainError if `gens` is empty or has a non-positive entry.
  explicit NumericalSgp(std::vector<std::int64_t> gens);

  // Sorted, duplicates removed, raw units.
  std::vector<std::int64_t> const& gens() const noexcept { return gens_; }
  std::int64_t gcd() const noexcept { return gcd_; }
  std::vector<std::int64_t> const& normalized_gens() const noexcept {
    return normalized_;
  }

 private:
  std::vector<std::int64_t> gens_;
  std::int64_t gcd_;
  std::vector<std::int64_t> normalized_;
};

// Whether k (raw units) is a sum of one or more generators.
bool member(NumericalSgp const& s, std::int64_t k);

// The unique minimal generating set, raw units, increasing.
std::vector<std::int64_t> minimal_generators(NumericalSgp const& s);

// Apery set of the normalized semigroup with respect to its smallest
// generator m: entry r is the least element of S u {0} congruent to r mod m.
std::vector<std::int64_t> apery_set(NumericalSgp const& s);

// Largest integer outside the normalized semigroup; nullopt when the
// normalized semigroup is all of the positive integers.
std::optional<std::int64_t> frobenius(NumericalSgp const& s);

// Positive integers outside the normalized semigroup, increasing.
std::vector<std::int64_t> gaps(NumericalSgp const& s);

// Every way of writing k (raw units) as a non-negative combination of the
// minimal generators, as exponent vectors in decreasing lexicographic order.
std::vector<Factorization> factorizations(NumericalSgp const& s,
                                          std::int64_t k);

// The factorization of k using as many copies of the largest possible
// generator as possible at each step; nullopt if k is not a member.
std::optional<Factorization> canonical_factorization(NumericalSgp const& s,
                                                     std::int64_t k);

// A commutative presentation on the minimal generators: each relation is a
// pair of exponent vectors with equal value.
struct CommutativePresentation {
  std::vector<std::int64_t> generators;  // raw units
  std::vector<std::pair<Factorization, Factorization>> relations;
  std::vector<std::int64_t> betti_elements;  // raw units
};

// Minimal presentation from the Betti elements: for each element whose
// factorization graph (factorizations adjacent when their supports meet) is
// disconnected, one relation joining the first component to each other one.
CommutativePresentation minimal_presentation(NumericalSgp const& s);

// The semigroup whose members in [1, bound] are flagged in `is_member`
// (index 0 unused). The flags must describe a set closed under addition and
// `bound` must be at least the conductor plus the smallest member, so that
// every minimal generator lies in range. Returns nullopt when no member is
// flagged.
std::optional<NumericalSgp> from_membership(std::vector<bool> const& is_member);

}  // namespace fi1::numerical
