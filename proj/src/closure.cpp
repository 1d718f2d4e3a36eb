#include "fi1/subsemigroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "fi1/errors.hpp"

namespace fi1 {

GeneratorSet::GeneratorSet(std::vector<Element> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) {
    throw DomainError("generator set must be nonempty");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool GeneratorSet::has_positive() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](Element const& e) { return sign(e) > 0; });
}

bool GeneratorSet::has_negative() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](Element const& e) { return sign(e) < 0; });
}

std::int64_t GeneratorSet::max_dclass_index() const noexcept {
  std::int64_t m = 0;
  for (auto const& g : gens_) {
    m = std::max(m, dclass_index(g));
  }
  return m;
}

std::vector<Element> enumerate_closure(GeneratorSet const& a, std::int64_t n) {
  if (n < 1) {
    throw DomainError("closure bound must be positive");
  }
  std::unordered_set<Element> seen;
  std::deque<Element> frontier;
  for (auto const& g : a.gens()) {
    if (dclass_index(g) <= n && seen.insert(g).second) {
      frontier.push_back(g);
    }
  }
  while (!frontier.empty()) {
    Element const s = frontier.front();
    frontier.pop_front();
    for (auto const& g : a.gens()) {
      Element const t = s * g;
      if (dclass_index(t) <= n && seen.insert(t).second) {
        frontier.push_back(t);
      }
    }
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> finite_idempotents(GeneratorSet const& a) {
  if (a.has_positive() && a.has_negative()) {
    throw DomainError("generating set has infinitely many idempotents");
  }
  // A product of non-negative (or non-positive) factors is idempotent only
  // if every factor is.
  std::vector<Element> idem;
  for (auto const& g : a.gens()) {
    if (is_idempotent(g)) {
      idem.push_back(g);
    }
  }
  if (idem.empty()) {
    return idem;
  }
  // Products of idempotents take the largest left and right reach.
  std::int64_t left = 0, right = 0;
  for (auto const& g : idem) {
    left = std::max(left, g.left());
    right = std::max(right, g.right());
  }
  return enumerate_closure(GeneratorSet(idem), left + right);
}

std::optional<std::size_t> count_idempotents(GeneratorSet const& a) {
  if (a.has_positive() && a.has_negative()) {
    return std::nullopt;
  }
  return finite_idempotents(a).size();
}

char const* to_string(Verdict v) noexcept {
  return v == Verdict::FinitelyPresented ? "FinitelyPresented"
                                         : "NotFinitelyPresented";
}

SignSummary sign_summary(GeneratorSet const& a) {
  SignSummary s;
  for (auto const& g : a.gens()) {
    switch (sign(g)) {
      case 1:
        ++s.positive;
        break;
      case -1:
        ++s.negative;
        break;
      default:
        ++s.zero;
    }
  }
  return s;
}

ClassificationReport classify(GeneratorSet const& a) {
  ClassificationReport r;
  r.evidence = sign_summary(a);
  r.idempotent_count = count_idempotents(a);
  r.verdict = r.idempotent_count ? Verdict::FinitelyPresented
                                 : Verdict::NotFinitelyPresented;
  r.finite_semilattice = r.evidence.positive == 0 && r.evidence.negative == 0;
  return r;
}

}  // namespace fi1
