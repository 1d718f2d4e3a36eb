#include "fi1/decomposition.hpp"

#include <algorithm>
#include <cstring>
#include <optional>
#include <string>
#include <unordered_map>

#include "fi1/errors.hpp"

namespace fi1 {

PieceKey piece_key(Element const& positive) {
  if (sign(positive) != 1) {
    throw DomainError("only positive elements lie in some N_{x,y}, got "
                      + to_string(positive));
  }
  return {positive.left(), positive.right() - positive.shift() + 1};
}

Element piece_element(PieceKey key, std::int64_t p) {
  return Element(key.x, p, detail::checked_add(p, key.y - 1));
}

namespace {

// Reachable piece keys for each exact displacement P.
//
// A positive element s = (-x, P, P + r) of S is summarised by the state
// (x, r) and its displacement P. Right multiplication by a generator
// (-c, q, d) sends the state to (max(x, c - P), max(r, d) - q) at
// displacement P + q. All states lie in [0, n]^2 where n is the chain
// bound, and once P >= n the transition no longer depends on P. Hence the
// sets of states reached at consecutive displacements evolve by a fixed
// recurrence of depth max q, and become periodic; the first repeated window
// pins the period exactly.
class DisplacementAutomaton {
 public:
  DisplacementAutomaton(std::vector<Element> const& positives,
                        std::vector<Element> const& idempotent_gens,
                        std::vector<Element> const& idempotents,
                        std::int64_t n)
      : n_(n),
        side_(n + 1),
        states_(side_ * side_),
        words_((states_ + 63) / 64),
        positives_(positives),
        idempotent_gens_(idempotent_gens) {
    for (auto const& g : positives_) {
      pmax_ = std::max(pmax_, g.shift());
    }
    rows_.emplace_back(words_, 0);  // displacement 0 is never used
    for (auto const& g : positives_) {
      seed(g);
      for (auto const& e : idempotents) {
        seed(e * g);
      }
    }
    run();
  }

  std::int64_t side() const noexcept { return side_; }
  std::int64_t preperiod() const noexcept { return start_; }
  std::int64_t period() const noexcept { return period_; }
  std::int64_t horizon() const noexcept { return last_; }

  bool reached(std::int64_t state, std::int64_t p) const {
    if (p < 1) {
      return false;
    }
    if (p > last_) {
      p = start_ + 1 + (p - start_ - 1) % period_;
    }
    auto const& row = rows_[p];
    return (row[state / 64] >> (state % 64)) & 1u;
  }

  std::vector<std::int64_t> realized_states() const {
    std::vector<std::int64_t> out;
    for (std::int64_t s = 0; s < states_; ++s) {
      for (std::int64_t p = 1; p <= last_; ++p) {
        if (reached(s, p)) {
          out.push_back(s);
          break;
        }
      }
    }
    return out;
  }

 private:
  using Row = std::vector<std::uint64_t>;

  static constexpr std::int64_t max_displacement = 4'000'000;

  std::int64_t state_of(std::int64_t x, std::int64_t r) const {
    return x * side_ + r;
  }

  static void set(Row& row, std::int64_t s) {
    row[s / 64] |= std::uint64_t{1} << (s % 64);
  }
  static bool test(Row const& row, std::int64_t s) {
    return (row[s / 64] >> (s % 64)) & 1u;
  }

  Row& row(std::int64_t p) {
    while (static_cast<std::int64_t>(rows_.size()) <= p) {
      rows_.emplace_back(words_, 0);
    }
    return rows_[p];
  }

  void seed(Element const& s) {
    seeds_.emplace_back(s.shift(), state_of(s.left(), s.right() - s.shift()));
  }

  // Right multiplication of state s at displacement p by g.
  std::int64_t step(std::int64_t s, std::int64_t p, Element const& g) const {
    std::int64_t const x = s / side_, r = s % side_;
    return state_of(std::max(x, g.left() - p),
                    std::max(r, g.right()) - g.shift());
  }

  void close_under_idempotents(Row& row, std::int64_t p) const {
    bool changed = !idempotent_gens_.empty();
    while (changed) {
      changed = false;
      for (std::int64_t s = 0; s < states_; ++s) {
        if (!test(row, s)) {
          continue;
        }
        for (auto const& e : idempotent_gens_) {
          std::int64_t const t = step(s, p, e);
          if (!test(row, t)) {
            set(row, t);
            changed = true;
          }
        }
      }
    }
  }

  std::string window_key(std::int64_t p) const {
    std::string key;
    key.reserve(static_cast<std::size_t>(pmax_ * words_ * 8));
    for (std::int64_t k = p - pmax_ + 1; k <= p; ++k) {
      key.append(reinterpret_cast<char const*>(rows_[k].data()),
                 rows_[k].size() * sizeof(std::uint64_t));
    }
    return key;
  }

  void run() {
    // From p0 on, no seeds remain and every transition is uniform.
    std::int64_t const p0 = n_ + pmax_;
    std::unordered_map<std::string, std::int64_t> windows;
    for (std::int64_t p = 1; p <= max_displacement; ++p) {
      Row current(words_, 0);
      for (auto const& [sp, s] : seeds_) {
        if (sp == p) {
          set(current, s);
        }
      }
      for (auto const& g : positives_) {
        std::int64_t const from = p - g.shift();
        if (from < 1) {
          continue;
        }
        Row const& src = rows_[from];
        for (std::int64_t s = 0; s < states_; ++s) {
          if (test(src, s)) {
            set(current, step(s, from, g));
          }
        }
      }
      close_under_idempotents(current, p);
      row(p) = std::move(current);
      if (p >= p0) {
        auto [it, inserted] = windows.emplace(window_key(p), p);
        if (!inserted) {
          start_ = it->second;
          last_ = p;
          period_ = p - it->second;
          return;
        }
      }
    }
    throw RangeError("displacement sets did not become periodic within bound");
  }

  std::int64_t n_;
  std::int64_t side_;
  std::int64_t states_;
  std::int64_t words_;
  std::int64_t pmax_ = 1;
  std::vector<Element> positives_;
  std::vector<Element> idempotent_gens_;
  std::vector<std::pair<std::int64_t, std::int64_t>> seeds_;
  std::vector<Row> rows_;
  std::int64_t start_ = 0;
  std::int64_t last_ = 0;
  std::int64_t period_ = 0;
};

}  // namespace

Decomposition decompose(GeneratorSet const& a) {
  if (a.has_positive() && a.has_negative()) {
    throw DomainError(
        "generating set has elements of both signs; <A> has infinitely many "
        "idempotents");
  }
  Decomposition d;
  d.mirrored = a.has_negative();
  std::vector<Element> work;
  for (auto const& g : a.gens()) {
    work.push_back(d.mirrored ? reflect(g) : g);
  }
  GeneratorSet const w(work);
  auto restore = [&d](Element const& s) { return d.mirrored ? reflect(s) : s; };

  std::vector<Element> positives, idempotent_gens;
  for (auto const& g : w.gens()) {
    d.chain_bound = std::max({d.chain_bound, g.left(), g.right() - g.shift()});
    (sign(g) > 0 ? positives : idempotent_gens).push_back(g);
  }
  auto const idempotents = finite_idempotents(w);
  for (auto const& e : idempotents) {
    d.complement.push_back(restore(e));
  }
  if (positives.empty()) {
    std::sort(d.complement.begin(), d.complement.end());
    return d;
  }

  DisplacementAutomaton const automaton(positives, idempotent_gens, idempotents,
                                        d.chain_bound);
  d.preperiod = automaton.preperiod();
  d.period = automaton.period();
  auto const states = automaton.realized_states();
  for (auto s : states) {
    d.q = std::max({d.q, s / automaton.side(), s % automaton.side()});
  }

  std::int64_t pmax = 0;
  for (auto const& g : positives) {
    pmax = std::max(pmax, g.shift());
  }
  // Beyond the periodic start every multiple of the gcd is reached, so this
  // bound exceeds conductor plus smallest member for both sets below.
  std::int64_t const bound = 2 * (automaton.horizon() + d.q) + pmax + 2;
  for (auto s : states) {
    PieceKey const key{s / automaton.side(), s % automaton.side() + 1};
    std::vector<bool> all(static_cast<std::size_t>(bound) + 1, false);
    std::vector<bool> upper(all.size(), false);
    for (std::int64_t p = 1; p <= bound; ++p) {
      if (automaton.reached(s, p)) {
        all[p] = true;
        if (p > d.q) {
          upper[p] = true;
        } else {
          d.complement.push_back(restore(piece_element(key, p)));
        }
      }
    }
    auto values = numerical::from_membership(all);
    auto upper_values = numerical::from_membership(upper);
    for (auto h : upper_values->gens()) {
      d.u_generators.push_back(restore(piece_element(key, h)));
    }
    d.pieces.push_back({key, std::move(*values), std::move(*upper_values)});
  }
  std::sort(d.complement.begin(), d.complement.end());
  return d;
}

Decomposition decompose_positive(GeneratorSet const& a) {
  for (auto const& g : a.gens()) {
    if (sign(g) != 1) {
      throw DomainError("decompose_positive needs positive generators, got "
                        + to_string(g));
    }
  }
  return decompose(a);
}

bool check_nice_condition(GeneratorSet const& a) {
  for (auto const& g : a.gens()) {
    if (sign(g) != 1) {
      throw DomainError("condition only applies to positive generators, got "
                        + to_string(g));
    }
  }
  for (auto const& gi : a.gens()) {
    for (auto const& gj : a.gens()) {
      if (gi.left() < gj.left() - gi.shift()
          || gi.right() > gj.right() + gi.shift()) {
        return false;
      }
    }
  }
  return true;
}

std::size_t find_upper_piece(Decomposition const& d, Element const& s) {
  Element const t = d.mirrored ? reflect(s) : s;
  if (sign(t) != 1 || t.shift() <= d.q) {
    return d.pieces.size();
  }
  PieceKey const key = piece_key(t);
  auto it = std::lower_bound(
      d.pieces.begin(), d.pieces.end(), key,
      [](Piece const& p, PieceKey const& k) { return p.key < k; });
  if (it == d.pieces.end() || it->key != key) {
    return d.pieces.size();
  }
  return static_cast<std::size_t>(it - d.pieces.begin());
}

}  // namespace fi1
