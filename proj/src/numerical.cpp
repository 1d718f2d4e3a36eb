#include "fi1/numerical.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "fi1/errors.hpp"

namespace fi1::numerical {

NumericalSgp::NumericalSgp(std::vector<std::int64_t> gens)
    : gens_(std::move(gens)), gcd_(0) {
  if (gens_.empty()) {
    throw DomainError("a numerical semigroup needs at least one generator");
  }
  for (auto g : gens_) {
    if (g <= 0) {
      throw DomainError("numerical semigroup generators must be positive");
    }
    gcd_ = std::gcd(gcd_, g);
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  normalized_.reserve(gens_.size());
  for (auto g : gens_) {
    normalized_.push_back(g / gcd_);
  }
}

std::vector<std::int64_t> apery_set(NumericalSgp const& s) {
  auto const& gens = s.normalized_gens();
  std::int64_t const m = gens.front();
  constexpr auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), inf);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) {
      continue;
    }
    for (auto g : gens) {
      std::int64_t const nd = detail::checked_add(d, g);
      std::int64_t const nr = (r + g) % m;
      if (nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

namespace {

bool normalized_member(std::vector<std::int64_t> const& apery, std::int64_t k) {
  std::int64_t const m = static_cast<std::int64_t>(apery.size());
  return k > 0 && k >= apery[k % m];
}

}  // namespace

bool member(NumericalSgp const& s, std::int64_t k) {
  if (k < 1 || k % s.gcd() != 0) {
    return false;
  }
  return normalized_member(apery_set(s), k / s.gcd());
}

std::vector<std::int64_t> minimal_generators(NumericalSgp const& s) {
  auto const& gens = s.normalized_gens();
  std::int64_t const top = gens.back();
  std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
  reach[0] = true;
  std::vector<std::int64_t> kept;
  for (auto g : gens) {
    if (reach[g]) {
      continue;
    }
    kept.push_back(g * s.gcd());
    for (std::int64_t v = g; v <= top; ++v) {
      if (reach[v - g]) {
        reach[v] = true;
      }
    }
  }
  return kept;
}

std::optional<std::int64_t> frobenius(NumericalSgp const& s) {
  if (s.normalized_gens().front() == 1) {
    return std::nullopt;
  }
  auto const ap = apery_set(s);
  return *std::max_element(ap.begin(), ap.end()) - s.normalized_gens().front();
}

std::vector<std::int64_t> gaps(NumericalSgp const& s) {
  std::vector<std::int64_t> out;
  auto const f = frobenius(s);
  if (!f) {
    return out;
  }
  auto const ap = apery_set(s);
  for (std::int64_t k = 1; k <= *f; ++k) {
    if (!normalized_member(ap, k)) {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<Factorization> factorizations(NumericalSgp const& s,
                                          std::int64_t k) {
  std::vector<Factorization> out;
  if (k < 1 || k % s.gcd() != 0) {
    return out;
  }
  auto const gens = minimal_generators(s);
  Factorization current(gens.size(), 0);
  // Fill exponents from the largest generator down; the smallest generator
  // absorbs whatever remains if it divides it.
  std::function<void(std::size_t, std::int64_t)> fill
      = [&](std::size_t idx, std::int64_t rest) {
          if (idx == 0) {
            if (rest % gens[0] == 0) {
              current[0] = rest / gens[0];
              out.push_back(current);
              current[0] = 0;
            }
            return;
          }
          for (std::int64_t c = rest / gens[idx]; c >= 0; --c) {
            current[idx] = c;
            fill(idx - 1, rest - c * gens[idx]);
          }
          current[idx] = 0;
        };
  fill(gens.size() - 1, k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<Factorization> canonical_factorization(NumericalSgp const& s,
                                                     std::int64_t k) {
  if (!member(s, k)) {
    return std::nullopt;
  }
  auto const gens = minimal_generators(s);
  std::size_t const n = gens.size();
  // reachable[i][v]: v is a combination of the first i generators.
  std::vector<std::vector<bool>> reachable(
      n + 1, std::vector<bool>(static_cast<std::size_t>(k) + 1, false));
  reachable[0][0] = true;
  for (std::size_t i = 1; i <= n; ++i) {
    auto const g = gens[i - 1];
    for (std::int64_t v = 0; v <= k; ++v) {
      reachable[i][v]
          = reachable[i - 1][v] || (v >= g && reachable[i][v - g]);
    }
  }
  Factorization out(n, 0);
  std::int64_t rest = k;
  for (std::size_t i = n; i-- > 0;) {
    std::int64_t c = rest / gens[i];
    while (!reachable[i][rest - c * gens[i]]) {
      --c;
    }
    out[i] = c;
    rest -= c * gens[i];
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[std::max(x, y)] = std::min(x, y);
    }
  }
};

}  // namespace

CommutativePresentation minimal_presentation(NumericalSgp const& s) {
  CommutativePresentation out;
  out.generators = minimal_generators(s);
  std::size_t const k = out.generators.size();
  if (k == 1) {
    return out;
  }
  NumericalSgp const normal([&] {
    std::vector<std::int64_t> g;
    for (auto x : out.generators) {
      g.push_back(x / s.gcd());
    }
    return g;
  }());
  auto const& gens = normal.normalized_gens();
  auto const ap = apery_set(normal);
  // Betti elements are of the form w + g with w in the Apery set.
  std::int64_t const bound
      = *std::max_element(ap.begin(), ap.end()) + gens.back();
  for (std::int64_t v = 1; v <= bound; ++v) {
    if (!normalized_member(ap, v)) {
      continue;
    }
    int predecessors = 0;
    for (auto g : gens) {
      if (v == g || (v > g && normalized_member(ap, v - g))) {
        ++predecessors;
      }
    }
    // With a single generator dividing v, every factorization uses it.
    if (predecessors < 2) {
      continue;
    }
    auto const facts = factorizations(normal, v);
    UnionFind uf(facts.size());
    for (std::size_t g = 0; g < k; ++g) {
      std::optional<std::size_t> first;
      for (std::size_t f = 0; f < facts.size(); ++f) {
        if (facts[f][g] > 0) {
          if (first) {
            uf.unite(*first, f);
          } else {
            first = f;
          }
        }
      }
    }
    // facts is sorted decreasingly, so each root is its component's largest
    // factorization and roots appear in decreasing order.
    std::vector<std::size_t> roots;
    for (std::size_t f = 0; f < facts.size(); ++f) {
      if (uf.find(f) == f) {
        roots.push_back(f);
      }
    }
    if (roots.size() < 2) {
      continue;
    }
    out.betti_elements.push_back(v * s.gcd());
    for (std::size_t r = 1; r < roots.size(); ++r) {
      out.relations.emplace_back(facts[roots[0]], facts[roots[r]]);
    }
  }
  return out;
}

std::optional<NumericalSgp> from_membership(std::vector<bool> const& is_member) {
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> members;
  for (std::size_t k = 1; k < is_member.size(); ++k) {
    if (!is_member[k]) {
      continue;
    }
    bool decomposable = false;
    for (auto j : members) {
      if (2 * j > static_cast<std::int64_t>(k)) {
        break;
      }
      if (is_member[k - j]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      gens.push_back(static_cast<std::int64_t>(k));
    }
    members.push_back(static_cast<std::int64_t>(k));
  }
  if (gens.empty()) {
    return std::nullopt;
  }
  return NumericalSgp(std::move(gens));
}

}  // namespace fi1::numerical
