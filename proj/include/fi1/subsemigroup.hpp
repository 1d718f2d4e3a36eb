#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fi1/element.hpp"

namespace fi1 {

// A finite, nonempty generating set A of a subsemigroup <A> of FI_1.
class GeneratorSet {
 public:
  // Sorts and removes duplicates; throws DomainError when empty.
  explicit GeneratorSet(std::vector<Element> gens);

  std::vector<Element> const& gens() const noexcept { return gens_; }

  bool has_positive() const noexcept;
  bool has_negative() const noexcept;
  std::int64_t max_dclass_index() const noexcept;

 private:
  std::vector<Element> gens_;
};

// <A> n C_n, sorted. Breadth-first search over right multiplication by the
// generators, discarding products outside C_n (the complement of C_n is an
// ideal, so nothing outside C_n can lead back in).
std::vector<Element> enumerate_closure(GeneratorSet const& a, std::int64_t n);

// Number of idempotents of <A>; nullopt means infinitely many.
std::optional<std::size_t> count_idempotents(GeneratorSet const& a);

// The idempotents of <A>, for generating sets without elements of both
// signs. Throws DomainError otherwise.
std::vector<Element> finite_idempotents(GeneratorSet const& a);

enum class Verdict { FinitelyPresented, NotFinitelyPresented };

char const* to_string(Verdict v) noexcept;

struct SignSummary {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

SignSummary sign_summary(GeneratorSet const& a);

struct ClassificationReport {
  Verdict verdict;
  std::optional<std::size_t> idempotent_count;  // nullopt: infinite
  SignSummary evidence;
  // Every generator idempotent, so <A> is a finite semilattice.
  bool finite_semilattice;
};

// <A> is finitely presented iff it has finitely many idempotents, iff A does
// not contain elements of both signs.
ClassificationReport classify(GeneratorSet const& a);

}  // namespace fi1
