#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fi1/element.hpp"
#include "fi1/errors.hpp"
#include "fi1/subsemigroup.hpp"
#include "fi1/word.hpp"

namespace fi1 {

// A word over a presentation's alphabet; each character is a symbol index.
using SymbolWord = std::u32string;

struct Relation {
  SymbolWord lhs;
  SymbolWord rhs;
};

// A semigroup presentation <alphabet | relations>.
class Presentation {
 public:
  explicit Presentation(std::vector<std::string> alphabet);

  // Throws DomainError on an empty side or an unknown symbol.
  void add_relation(SymbolWord lhs, SymbolWord rhs);

  std::vector<std::string> const& alphabet() const noexcept {
    return alphabet_;
  }
  std::vector<Relation> const& relations() const noexcept { return relations_; }

  // Throws DomainError for unknown names.
  std::uint32_t symbol(std::string const& name) const;

  std::string to_string(SymbolWord const& w) const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<Relation> relations_;
};

// Alphabet of fi1_relations(): symbol 0 is x, symbol 1 is x^-1.
SymbolWord to_symbol_word(Word const& w);
Word to_word(SymbolWord const& w);

// (x x^-1 x, x), (x^-1 x x^-1, x^-1) and, for i, j >= 0 with
// 0 < i + j <= bound, (x^-i x^i x^j x^-j, x^j x^-j x^-i x^i). Ordered by
// i + j, then by i.
Presentation fi1_relations(std::int64_t bound);

// The relations of fi1_relations() whose sides evaluate into C_n.
Presentation restricted_relations(std::int64_t n);

// Index of the first relation whose sides differ under `interpretation`
// (one value per symbol), or nullopt if every relation holds.
template <typename T, typename Mul>
std::optional<std::size_t> first_unsatisfied(Presentation const& p,
                                             std::vector<T> const& interpretation,
                                             Mul mul) {
  if (interpretation.size() != p.alphabet().size()) {
    throw DomainError("every symbol of the presentation must be interpreted");
  }
  auto eval = [&](SymbolWord const& w) {
    T acc = interpretation[w[0]];
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = mul(acc, interpretation[w[i]]);
    }
    return acc;
  };
  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    if (!(eval(p.relations()[r].lhs) == eval(p.relations()[r].rhs))) {
      return r;
    }
  }
  return std::nullopt;
}

template <typename T, typename Mul>
bool satisfies(Presentation const& p, std::vector<T> const& interpretation,
               Mul mul) {
  return !first_unsatisfied(p, interpretation, mul).has_value();
}

Element evaluate(SymbolWord const& w, std::vector<Element> const& values);

// One application of a relation at `position`; forward means lhs -> rhs.
struct RewriteStep {
  std::size_t relation;
  bool forward;
  std::size_t position;
};

// Throws DomainError if the step does not match.
SymbolWord apply_step(SymbolWord const& w, RewriteStep const& step,
                      Presentation const& p);

struct Derivation {
  std::vector<SymbolWord> words;  // words.front() == u, words.back() == v
  std::vector<RewriteStep> steps;
};

struct DerivationSearch {
  enum class Status { Derived, NotFoundWithinBudget };
  Status status;
  Derivation derivation;  // valid when Derived
  std::size_t expansions = 0;
  // Every word of length <= max_length reachable from u or v was visited.
  bool space_exhausted = false;
};

// Bidirectional breadth-first search over single relation applications,
// keeping words of length <= max_length and expanding at most max_steps
// words. A returned derivation is a shortest one within those bounds.
DerivationSearch derivable(SymbolWord const& u, SymbolWord const& v,
                           Presentation const& p, std::size_t max_length,
                           std::size_t max_steps);

// Replays d and checks that it is an elementary sequence from u to v.
bool replay(SymbolWord const& u, SymbolWord const& v, Derivation const& d,
            Presentation const& p);

// A presentation of <A> together with the element each symbol stands for.
struct BuiltPresentation {
  Presentation presentation;
  std::vector<Element> values;
};

// Finite presentation of a finitely presented <A>. Symbols are the minimal
// generators of each upper piece followed by the complement elements of
// decompose(A). Relations rewrite every product of two symbols to its normal
// form and add each upper piece's minimal commutative presentation. Throws
// DomainError if <A> is not finitely presented.
BuiltPresentation build_presentation(GeneratorSet const& a);

struct VerifyOptions {
  std::size_t max_word_length = 8;
  // Budget for the fallback searches between classes that the rewrite graph
  // on short words leaves disconnected.
  std::size_t search_max_length = 10;
  std::size_t search_max_steps = 20'000;
  // Only words whose value lies in C_n take part.
  std::optional<std::int64_t> dclass_limit;
  std::size_t max_words = 4'000'000;
};

struct VerificationReport {
  bool sound = true;
  std::vector<std::size_t> unsound_relations;
  std::size_t max_word_length = 0;
  std::size_t words = 0;
  std::size_t value_classes = 0;
  std::size_t searches = 0;
  struct Unresolved {
    SymbolWord u;
    SymbolWord v;
    // true: no derivation exists among words of length <= search_max_length
    // (a counterexample at that length); false: the step budget ran out.
    bool space_exhausted;
  };
  std::vector<Unresolved> counterexamples;
  std::vector<Unresolved> budget_exhausted;

  bool complete() const noexcept {
    return counterexamples.empty() && budget_exhausted.empty();
  }
};

// Soundness: every relation holds in FI_1. Bounded completeness: any two
// symbol words of length <= max_word_length with the same value are
// connected by an elementary sequence. Throws DomainError if some symbol
// value is not in <A>.
VerificationReport verify_presentation(GeneratorSet const& a,
                                       Presentation const& p,
                                       std::vector<Element> const& values,
                                       VerifyOptions const& options = {});

}  // namespace fi1
