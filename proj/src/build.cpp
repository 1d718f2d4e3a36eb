#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "fi1/decomposition.hpp"
#include "fi1/numerical.hpp"
#include "fi1/presentation.hpp"

namespace fi1 {

namespace {

// Normal forms for elements of a decomposed semigroup: a complement element
// is its own symbol; an element of an upper piece is the canonical
// factorization of its displacement over that piece's generators, written in
// increasing generator order.
class NormalForms {
 public:
  explicit NormalForms(Decomposition const& d) : d_(d) {
    std::uint32_t next = 0;
    for (auto const& piece : d_.pieces) {
      first_symbol_.push_back(next);
      next += static_cast<std::uint32_t>(piece.upper.gens().size());
    }
    for (auto const& c : d_.complement) {
      complement_symbol_.emplace(c, next++);
    }
    symbols_ = next;
  }

  std::uint32_t symbol_count() const noexcept { return symbols_; }

  std::vector<Element> values() const {
    std::vector<Element> out;
    for (auto const& g : d_.u_generators) {
      out.push_back(g);
    }
    out.insert(out.end(), d_.complement.begin(), d_.complement.end());
    return out;
  }

  SymbolWord of(Element const& s) const {
    if (auto it = complement_symbol_.find(s); it != complement_symbol_.end()) {
      return SymbolWord(1, it->second);
    }
    std::size_t const idx = find_upper_piece(d_, s);
    if (idx == d_.pieces.size()) {
      throw std::logic_error("element " + to_string(s)
                             + " is outside the decomposition");
    }
    auto const& upper = d_.pieces[idx].upper;
    std::int64_t const p = d_.mirrored ? -s.shift() : s.shift();
    auto const fact = numerical::canonical_factorization(upper, p);
    if (!fact) {
      throw std::logic_error("displacement missing from its piece");
    }
    return word_of(idx, *fact);
  }

  SymbolWord word_of(std::size_t piece, numerical::Factorization const& f) const {
    SymbolWord out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      out.append(static_cast<std::size_t>(f[i]),
                 static_cast<char32_t>(first_symbol_[piece] + i));
    }
    return out;
  }

 private:
  Decomposition const& d_;
  std::vector<std::uint32_t> first_symbol_;
  std::map<Element, std::uint32_t> complement_symbol_;
  std::uint32_t symbols_ = 0;
};

}  // namespace

BuiltPresentation build_presentation(GeneratorSet const& a) {
  if (a.has_positive() && a.has_negative()) {
    throw DomainError("<A> has infinitely many idempotents and is not "
                      "finitely presented");
  }
  Decomposition const d = decompose(a);
  NormalForms const nf(d);
  std::vector<std::string> alphabet;
  for (std::uint32_t s = 0; s < nf.symbol_count(); ++s) {
    alphabet.push_back("g" + std::to_string(s + 1));
  }
  BuiltPresentation out{Presentation(std::move(alphabet)), nf.values()};
  auto const& values = out.values;

  auto emit = [&](SymbolWord lhs, SymbolWord rhs) {
    if (lhs == rhs) {
      return;
    }
    if (evaluate(lhs, values) != evaluate(rhs, values)) {
      throw std::logic_error("synthesized relation does not hold in FI_1");
    }
    out.presentation.add_relation(std::move(lhs), std::move(rhs));
  };

  for (std::uint32_t s = 0; s < nf.symbol_count(); ++s) {
    for (std::uint32_t t = 0; t < nf.symbol_count(); ++t) {
      emit(SymbolWord{s, t}, nf.of(values[s] * values[t]));
    }
  }
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    auto const mp = numerical::minimal_presentation(d.pieces[i].upper);
    for (auto const& [lhs, rhs] : mp.relations) {
      emit(nf.word_of(i, lhs), nf.word_of(i, rhs));
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

// Dense numbering of all words of length 1..L over k symbols: words of each
// length follow those of shorter lengths, in lexicographic order.
class WordIndex {
 public:
  WordIndex(std::size_t k, std::size_t max_length) : k_(k) {
    offset_.push_back(0);
    std::uint64_t count = 1;
    for (std::size_t len = 1; len <= max_length; ++len) {
      count *= k;
      offset_.push_back(offset_.back() + count);
    }
  }

  std::uint64_t size() const noexcept { return offset_.back(); }

  std::uint64_t id(SymbolWord const& w) const {
    std::uint64_t v = 0;
    for (char32_t c : w) {
      v = v * k_ + c;
    }
    return offset_[w.size() - 1] + v;
  }

  SymbolWord word(std::uint64_t id) const {
    std::size_t len = 1;
    while (id >= offset_[len]) {
      ++len;
    }
    std::uint64_t v = id - offset_[len - 1];
    SymbolWord w(len, 0);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<char32_t>(v % k_);
      v /= k_;
    }
    return w;
  }

 private:
  std::uint64_t k_;
  std::vector<std::uint64_t> offset_;
};

}  // namespace

VerificationReport verify_presentation(GeneratorSet const& a,
                                       Presentation const& p,
                                       std::vector<Element> const& values,
                                       VerifyOptions const& options) {
  if (values.size() != p.alphabet().size()) {
    throw DomainError("need exactly one value per symbol");
  }
  for (auto const& v : values) {
    auto const closure = enumerate_closure(a, dclass_index(v));
    if (!std::binary_search(closure.begin(), closure.end(), v)) {
      throw DomainError("symbol value " + to_string(v) + " is not in <A>");
    }
  }
  VerificationReport report;
  report.max_word_length = options.max_word_length;

  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    auto const& rel = p.relations()[r];
    if (evaluate(rel.lhs, values) != evaluate(rel.rhs, values)) {
      report.sound = false;
      report.unsound_relations.push_back(r);
    }
  }

  std::size_t const k = values.size();
  WordIndex const index(k, options.max_word_length);
  if (index.size() > options.max_words) {
    throw DomainError("too many words to check completeness at this length");
  }
  auto const total = static_cast<std::size_t>(index.size());

  // Values of every word, built from the value of its prefix. Words outside
  // the D-class limit stay excluded, as do all their extensions.
  std::vector<std::optional<Element>> value(total);
  for (std::uint64_t id = 0; id < total; ++id) {
    SymbolWord const w = index.word(id);
    std::optional<Element> v;
    if (w.size() == 1) {
      v = values[w[0]];
    } else if (auto const& prefix = value[index.id(w.substr(0, w.size() - 1))];
               prefix) {
      v = *prefix * values[w.back()];
    }
    if (v && options.dclass_limit && dclass_index(*v) > *options.dclass_limit) {
      v.reset();
    }
    value[id] = v;
  }

  // Connect words related by one rewrite that stays within length L.
  UnionFind uf(total);
  for (std::uint64_t id = 0; id < total; ++id) {
    if (!value[id]) {
      continue;
    }
    SymbolWord const w = index.word(id);
    auto const& rels = p.relations();
    for (auto const& rel : rels) {
      for (bool forward : {true, false}) {
        SymbolWord const& from = forward ? rel.lhs : rel.rhs;
        SymbolWord const& to = forward ? rel.rhs : rel.lhs;
        if (from.size() > w.size()
            || w.size() - from.size() + to.size() > options.max_word_length) {
          continue;
        }
        for (std::size_t pos = w.find(from); pos != SymbolWord::npos;
             pos = w.find(from, pos + 1)) {
          SymbolWord next = w;
          next.replace(pos, from.size(), to);
          uf.unite(static_cast<std::uint32_t>(id),
                   static_cast<std::uint32_t>(index.id(next)));
        }
      }
    }
  }

  // Group component roots by value; each value class should be one
  // component.
  std::map<Element, std::vector<std::uint32_t>> classes;
  for (std::uint64_t id = 0; id < total; ++id) {
    if (!value[id]) {
      continue;
    }
    ++report.words;
    auto& roots = classes[*value[id]];
    std::uint32_t const root = uf.find(static_cast<std::uint32_t>(id));
    if (std::find(roots.begin(), roots.end(), root) == roots.end()) {
      roots.push_back(root);
    }
  }
  report.value_classes = classes.size();

  for (auto& [v, roots] : classes) {
    std::sort(roots.begin(), roots.end());
    SymbolWord const base = index.word(roots[0]);
    for (std::size_t r = 1; r < roots.size(); ++r) {
      if (uf.find(roots[r]) == uf.find(roots[0])) {
        continue;
      }
      SymbolWord const other = index.word(roots[r]);
      ++report.searches;
      auto const search = derivable(base, other, p, options.search_max_length,
                                    options.search_max_steps);
      if (search.status == DerivationSearch::Status::Derived) {
        uf.unite(roots[0], roots[r]);
      } else if (search.space_exhausted) {
        report.counterexamples.push_back({base, other, true});
      } else {
        report.budget_exhausted.push_back({base, other, false});
      }
    }
  }
  return report;
}

}  // namespace fi1
