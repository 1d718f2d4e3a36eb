#pragma once

// Reference implementations used only by the tests. Each one computes its
// answer by a different route from the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "fi1/element.hpp"
#include "fi1/word.hpp"

namespace oracle {

// An element as an explicit Munn path: the set of visited vertices and the
// terminal vertex, with the initial vertex at 0.
struct Path {
  std::set<std::int64_t> visited;
  std::int64_t end;
};

inline Path path_of(fi1::Element const& e) {
  Path p{{}, e.shift()};
  for (std::int64_t v = -e.left(); v <= e.right(); ++v) {
    p.visited.insert(v);
  }
  return p;
}

inline fi1::Element element_of(Path const& p) {
  return fi1::Element(-*p.visited.begin(), p.end, *p.visited.rbegin());
}

// Product as the union of the first path and the second path translated to
// start at the first one's terminal vertex.
inline fi1::Element multiply(fi1::Element const& x, fi1::Element const& y) {
  Path px = path_of(x);
  Path const py = path_of(y);
  for (auto v : py.visited) {
    px.visited.insert(v + px.end);
  }
  px.end += py.end;
  return element_of(px);
}

inline fi1::Element repeat_multiply(fi1::Element const& e, std::int64_t n) {
  fi1::Element acc = e;
  for (std::int64_t i = 1; i < n; ++i) {
    acc = oracle::multiply(acc, e);
  }
  return acc;
}

// Walk a word letter by letter, recording the vertices.
inline fi1::Element eval_word(std::vector<int> const& steps) {
  Path p{{0}, 0};
  for (int s : steps) {
    p.end += s;
    p.visited.insert(p.end);
  }
  return element_of(p);
}

inline std::vector<int> steps_of(fi1::Word const& w) {
  std::vector<int> out;
  for (auto l : w.letters()) {
    out.push_back(l == fi1::Letter::X ? 1 : -1);
  }
  return out;
}

inline fi1::Word word_of(std::vector<int> const& steps) {
  std::vector<fi1::Letter> ls;
  for (int s : steps) {
    ls.push_back(s > 0 ? fi1::Letter::X : fi1::Letter::XInv);
  }
  return fi1::Word(ls);
}

// All triples with a + b = n, straight from the definition.
inline std::vector<fi1::Element> dclass(std::int64_t n) {
  std::vector<fi1::Element> out;
  for (std::int64_t a = 0; a <= n; ++a) {
    std::int64_t const b = n - a;
    for (std::int64_t p = -a; p <= b; ++p) {
      out.emplace_back(a, p, b);
    }
  }
  return out;
}

inline std::vector<fi1::Element> up_to(std::int64_t n) {
  std::vector<fi1::Element> out;
  for (std::int64_t i = 1; i <= n; ++i) {
    auto const d = dclass(i);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

inline fi1::Element random_element(std::mt19937_64& rng, std::int64_t max_index) {
  std::uniform_int_distribution<std::int64_t> idx(1, max_index);
  std::int64_t const n = idx(rng);
  std::int64_t const a = std::uniform_int_distribution<std::int64_t>(0, n)(rng);
  std::int64_t const b = n - a;
  std::int64_t const p = std::uniform_int_distribution<std::int64_t>(-a, b)(rng);
  return fi1::Element(a, p, b);
}

inline std::vector<int> random_steps(std::mt19937_64& rng, std::size_t len) {
  std::vector<int> s(len);
  for (auto& x : s) {
    x = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  }
  return s;
}

// Every product of at most `length` generators, filtered to D-index <= n.
inline std::set<fi1::Element> products_up_to(std::vector<fi1::Element> const& gens,
                                             std::size_t length, std::int64_t n) {
  std::set<fi1::Element> out;
  std::vector<fi1::Element> layer = gens;
  for (std::size_t len = 1; len <= length; ++len) {
    std::vector<fi1::Element> next;
    for (auto const& w : layer) {
      if (w.left() + w.right() <= n) {
        out.insert(w);
      }
      if (len < length) {
        for (auto const& g : gens) {
          next.push_back(oracle::multiply(w, g));
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return out;
}

// Partial maps as std::map tables; composition left to right.
using Table = std::map<int, int>;

inline Table compose(Table const& f, Table const& g) {
  Table out;
  for (auto [t, u] : f) {
    if (auto it = g.find(u); it != g.end()) {
      out[t] = it->second;
    }
  }
  return out;
}

inline Table alpha(int n) {
  Table t;
  for (int i = 0; i < n; ++i) {
    t[i] = i + 1;
  }
  return t;
}

inline Table beta(int n) {
  Table t{{0, 0}};
  for (int i = 1; i <= n; ++i) {
    t[i] = i - 1;
  }
  return t;
}

inline Table identity(int n) {
  Table t;
  for (int i = 0; i <= n; ++i) {
    t[i] = i;
  }
  return t;
}

inline Table power(Table const& f, int k, int n) {
  Table acc = identity(n);
  for (int i = 0; i < k; ++i) {
    acc = compose(acc, f);
  }
  return acc;
}

inline Table psi(std::vector<int> const& steps, int n) {
  Table acc = identity(n);
  for (int s : steps) {
    acc = compose(acc, s > 0 ? alpha(n) : beta(n));
  }
  return acc;
}

// Numerical semigroup membership by sieve up to `limit`.
inline std::vector<bool> sieve(std::vector<std::int64_t> const& gens,
                               std::int64_t limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t k = 1; k <= limit; ++k) {
    for (auto g : gens) {
      if (g == k || (g < k && in[k - g])) {
        in[k] = true;
        break;
      }
    }
  }
  return in;
}

}  // namespace oracle
