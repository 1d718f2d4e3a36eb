#include "fi1/presentation.hpp"

#include <algorithm>
#include <unordered_map>

namespace fi1 {

Presentation::Presentation(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) {
    throw DomainError("presentation alphabet must be nonempty");
  }
}

void Presentation::add_relation(SymbolWord lhs, SymbolWord rhs) {
  if (lhs.empty() || rhs.empty()) {
    throw DomainError("relation sides must be nonempty");
  }
  for (SymbolWord const* side : {&lhs, &rhs}) {
    for (char32_t c : *side) {
      if (c >= alphabet_.size()) {
        throw DomainError("relation uses an unknown symbol");
      }
    }
  }
  relations_.push_back({std::move(lhs), std::move(rhs)});
}

std::uint32_t Presentation::symbol(std::string const& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) {
    throw DomainError("unknown symbol '" + name + "'");
  }
  return static_cast<std::uint32_t>(it - alphabet_.begin());
}

std::string Presentation::to_string(SymbolWord const& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += alphabet_.at(w[i]);
  }
  return out;
}

SymbolWord to_symbol_word(Word const& w) {
  SymbolWord out;
  for (Letter l : w.letters()) {
    out.push_back(l == Letter::X ? 0 : 1);
  }
  return out;
}

Word to_word(SymbolWord const& w) {
  std::vector<Letter> letters;
  for (char32_t c : w) {
    if (c > 1) {
      throw DomainError("symbol is not x or x^-1");
    }
    letters.push_back(c == 0 ? Letter::X : Letter::XInv);
  }
  return Word(std::move(letters));
}

namespace {

constexpr char32_t sym_x = 0, sym_xinv = 1;

SymbolWord repeat(char32_t c, std::int64_t k) {
  return SymbolWord(static_cast<std::size_t>(k), c);
}

}  // namespace

Presentation fi1_relations(std::int64_t bound) {
  if (bound < 1) {
    throw DomainError("relation bound must be positive");
  }
  Presentation p({"x", "x^-1"});
  p.add_relation({sym_x, sym_xinv, sym_x}, {sym_x});
  p.add_relation({sym_xinv, sym_x, sym_xinv}, {sym_xinv});
  for (std::int64_t k = 1; k <= bound; ++k) {
    for (std::int64_t i = 0; i <= k; ++i) {
      std::int64_t const j = k - i;
      SymbolWord const left = repeat(sym_xinv, i) + repeat(sym_x, i);
      SymbolWord const right = repeat(sym_x, j) + repeat(sym_xinv, j);
      p.add_relation(left + right, right + left);
    }
  }
  return p;
}

Presentation restricted_relations(std::int64_t n) {
  if (n < 1) {
    throw DomainError("restriction index must be positive");
  }
  Presentation const all = fi1_relations(2 * n);
  Presentation out(all.alphabet());
  for (auto const& r : all.relations()) {
    Element const lhs = eval_word(to_word(r.lhs));
    Element const rhs = eval_word(to_word(r.rhs));
    if (lhs == rhs && dclass_index(lhs) <= n) {
      out.add_relation(r.lhs, r.rhs);
    }
  }
  return out;
}

Element evaluate(SymbolWord const& w, std::vector<Element> const& values) {
  if (w.empty()) {
    throw DomainError("cannot evaluate the empty word");
  }
  Element acc = values.at(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = acc * values.at(w[i]);
  }
  return acc;
}

SymbolWord apply_step(SymbolWord const& w, RewriteStep const& step,
                      Presentation const& p) {
  auto const& rel = p.relations().at(step.relation);
  SymbolWord const& from = step.forward ? rel.lhs : rel.rhs;
  SymbolWord const& to = step.forward ? rel.rhs : rel.lhs;
  if (step.position + from.size() > w.size()
      || w.compare(step.position, from.size(), from) != 0) {
    throw DomainError("rewrite step does not match the word");
  }
  SymbolWord out = w;
  out.replace(step.position, from.size(), to);
  return out;
}

namespace {

struct Visit {
  SymbolWord parent;
  RewriteStep step;  // parent --step--> this word
  std::size_t depth;
};

using VisitMap = std::unordered_map<SymbolWord, Visit>;

// Calls emit(next, step) for each single rewrite of w within max_length, in
// order of relation, direction, then position.
template <typename Emit>
void for_each_rewrite(SymbolWord const& w, Presentation const& p,
                      std::size_t max_length, Emit&& emit) {
  auto const& rels = p.relations();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (bool forward : {true, false}) {
      SymbolWord const& from = forward ? rels[r].lhs : rels[r].rhs;
      SymbolWord const& to = forward ? rels[r].rhs : rels[r].lhs;
      if (from == to || from.size() > w.size()
          || w.size() - from.size() + to.size() > max_length) {
        continue;
      }
      for (std::size_t pos = w.find(from); pos != SymbolWord::npos;
           pos = w.find(from, pos + 1)) {
        SymbolWord next = w;
        next.replace(pos, from.size(), to);
        emit(std::move(next), RewriteStep{r, forward, pos});
      }
    }
  }
}

// Walks parents back to the root, returning the words root..w and steps.
std::pair<std::vector<SymbolWord>, std::vector<RewriteStep>> trace(
    VisitMap const& visits, SymbolWord w) {
  std::vector<SymbolWord> words{w};
  std::vector<RewriteStep> steps;
  while (true) {
    auto const& v = visits.at(w);
    if (v.depth == 0) {
      break;
    }
    steps.push_back(v.step);
    w = v.parent;
    words.push_back(w);
  }
  std::reverse(words.begin(), words.end());
  std::reverse(steps.begin(), steps.end());
  return {words, steps};
}

}  // namespace

DerivationSearch derivable(SymbolWord const& u, SymbolWord const& v,
                           Presentation const& p, std::size_t max_length,
                           std::size_t max_steps) {
  DerivationSearch result{DerivationSearch::Status::NotFoundWithinBudget, {}, 0,
                          false};
  if (u == v) {
    result.status = DerivationSearch::Status::Derived;
    result.derivation.words = {u};
    return result;
  }
  if (u.size() > max_length || v.size() > max_length) {
    return result;
  }

  VisitMap fwd, bwd;
  fwd.emplace(u, Visit{{}, {}, 0});
  bwd.emplace(v, Visit{{}, {}, 0});
  std::vector<SymbolWord> fwd_layer{u}, bwd_layer{v};

  while (!fwd_layer.empty() && !bwd_layer.empty()) {
    bool const forward_side = fwd_layer.size() <= bwd_layer.size();
    VisitMap& mine = forward_side ? fwd : bwd;
    VisitMap const& theirs = forward_side ? bwd : fwd;
    std::vector<SymbolWord>& layer = forward_side ? fwd_layer : bwd_layer;

    std::vector<SymbolWord> next_layer;
    std::optional<SymbolWord> best_meet;
    std::size_t best_total = 0;
    for (auto const& w : layer) {
      if (result.expansions == max_steps) {
        return result;
      }
      ++result.expansions;
      std::size_t const depth = mine.at(w).depth;
      for_each_rewrite(w, p, max_length, [&](SymbolWord next, RewriteStep step) {
        if (mine.count(next) != 0) {
          return;
        }
        auto const it = theirs.find(next);
        if (it != theirs.end()) {
          std::size_t const total = depth + 1 + it->second.depth;
          if (!best_meet || total < best_total) {
            best_meet = next;
            best_total = total;
          }
        }
        mine.emplace(next, Visit{w, step, depth + 1});
        next_layer.push_back(std::move(next));
      });
    }
    if (best_meet) {
      auto [front_words, front_steps] = trace(fwd, *best_meet);
      auto [back_words, back_steps] = trace(bwd, *best_meet);
      // back_words runs v .. meet; walk it in reverse, inverting each step.
      Derivation& d = result.derivation;
      d.words = std::move(front_words);
      d.steps = std::move(front_steps);
      for (std::size_t k = back_steps.size(); k-- > 0;) {
        RewriteStep s = back_steps[k];
        s.forward = !s.forward;
        d.steps.push_back(s);
        d.words.push_back(back_words[k]);
      }
      result.status = DerivationSearch::Status::Derived;
      return result;
    }
    layer = std::move(next_layer);
  }
  result.space_exhausted = true;
  return result;
}

bool replay(SymbolWord const& u, SymbolWord const& v, Derivation const& d,
            Presentation const& p) {
  if (d.words.empty() || d.words.front() != u || d.words.back() != v
      || d.steps.size() + 1 != d.words.size()) {
    return false;
  }
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    try {
      if (apply_step(d.words[k], d.steps[k], p) != d.words[k + 1]) {
        return false;
      }
    } catch (DomainError const&) {
      return false;
    }
  }
  return true;
}

}  // namespace fi1
