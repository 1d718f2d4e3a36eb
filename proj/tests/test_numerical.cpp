#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "fi1/errors.hpp"
#include "fi1/numerical.hpp"
#include "oracles.hpp"

using namespace fi1;
using namespace fi1::numerical;

namespace {

std::int64_t value(NumericalSgp const& s, Factorization const& f) {
  auto const g = minimal_generators(s);
  std::int64_t v = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    v += f[i] * g[i];
  }
  return v;
}

std::vector<std::int64_t> random_gens(std::mt19937_64& rng) {
  std::size_t const k = 1 + rng() % 4;
  std::vector<std::int64_t> g(k);
  for (auto& x : g) {
    x = std::uniform_int_distribution<std::int64_t>(1, 25)(rng);
  }
  return g;
}

// Minimal generators by brute force: members not a sum of two members.
std::vector<std::int64_t> brute_minimal(std::vector<bool> const& in) {
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < in.size(); ++k) {
    if (!in[k]) {
      continue;
    }
    bool split = false;
    for (std::size_t i = 1; i < k && !split; ++i) {
      split = in[i] && in[k - i];
    }
    if (!split) {
      out.push_back(static_cast<std::int64_t>(k));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(NumericalSgp({}), DomainError);
  CHECK_THROWS_AS(NumericalSgp({3, 0}), DomainError);
  CHECK_THROWS_AS(NumericalSgp({-2}), DomainError);
  NumericalSgp const s({6, 4, 6});
  CHECK(s.gens() == std::vector<std::int64_t>{4, 6});
  CHECK(s.gcd() == 2);
  CHECK(s.normalized_gens() == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("membership") {
  NumericalSgp const s({3, 5});
  CHECK_FALSE(member(s, 7));
  CHECK(member(s, 8));
  CHECK_FALSE(member(s, 0));
  for (std::int64_t d = 1; d <= 6; ++d) {
    for (std::int64_t k = 1; k <= 40; ++k) {
      REQUIRE(member(NumericalSgp({d}), k) == (k % d == 0));
    }
  }
}

TEST_CASE("minimal generators") {
  CHECK(minimal_generators(NumericalSgp({3, 5, 8})) == std::vector<std::int64_t>{3, 5});
  CHECK(minimal_generators(NumericalSgp({4, 6})) == std::vector<std::int64_t>{4, 6});
  CHECK(minimal_generators(NumericalSgp({7})) == std::vector<std::int64_t>{7});
}

TEST_CASE("Frobenius number and gaps") {
  NumericalSgp const s({3, 5});
  CHECK(frobenius(s) == 7);
  CHECK(gaps(s) == std::vector<std::int64_t>{1, 2, 4, 7});
  CHECK(frobenius(NumericalSgp({2, 3})) == 1);
  CHECK_FALSE(frobenius(NumericalSgp({1})).has_value());
  CHECK(gaps(NumericalSgp({1, 4})).empty());
  CHECK(frobenius(NumericalSgp({6, 10})) == 7);
  CHECK(apery_set(s) == std::vector<std::int64_t>{0, 10, 5});
}

TEST_CASE("minimal presentations") {
  auto const p = minimal_presentation(NumericalSgp({3, 5}));
  CHECK(p.generators == std::vector<std::int64_t>{3, 5});
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].first == Factorization{5, 0});
  CHECK(p.relations[0].second == Factorization{0, 3});
  CHECK(p.betti_elements == std::vector<std::int64_t>{15});
  auto const q = minimal_presentation(NumericalSgp({2, 3}));
  REQUIRE(q.relations.size() == 1);
  CHECK(q.relations[0].first == Factorization{3, 0});
  CHECK(q.relations[0].second == Factorization{0, 2});
  CHECK(minimal_presentation(NumericalSgp({4})).relations.empty());
  // Embedding dimension 3, not a complete intersection: three relations.
  CHECK(minimal_presentation(NumericalSgp({3, 4, 5})).relations.size() == 3);
}

TEST_CASE("factorizations") {
  NumericalSgp const s({3, 5});
  CHECK(factorizations(s, 15) == std::vector<Factorization>{{5, 0}, {0, 3}});
  CHECK(factorizations(s, 7).empty());
  CHECK(canonical_factorization(s, 13) == Factorization{1, 2});
  CHECK_FALSE(canonical_factorization(s, 7).has_value());
}

TEST_CASE("from_membership") {
  auto const oracle_in = oracle::sieve({4, 6, 9}, 60);
  auto const s = from_membership(oracle_in);
  REQUIRE(s.has_value());
  CHECK(minimal_generators(*s) == std::vector<std::int64_t>{4, 6, 9});
  CHECK_FALSE(from_membership(std::vector<bool>(10, false)).has_value());
}

TEST_CASE("random semigroups against sieve oracles") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 150; ++round) {
    auto const gens = random_gens(rng);
    NumericalSgp const s(gens);
    std::int64_t const gmax = *std::max_element(gens.begin(), gens.end());
    std::int64_t const limit = 3 * gmax * gmax + 30;
    auto const in = oracle::sieve(gens, limit);
    for (std::int64_t k = 1; k <= limit; ++k) {
      REQUIRE(member(s, k) == in[k]);
    }

    auto const mg = minimal_generators(s);
    CHECK(mg == brute_minimal(in));
    // Removing any minimal generator loses it.
    for (std::size_t i = 0; i < mg.size() && mg.size() > 1; ++i) {
      auto fewer = mg;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(oracle::sieve(fewer, mg[i])[mg[i]]);
    }

    std::int64_t const d = s.gcd();
    std::vector<std::int64_t> norm;
    for (auto g : gens) {
      norm.push_back(g / d);
    }
    auto const nin = oracle::sieve(norm, limit);
    std::vector<std::int64_t> expected_gaps;
    for (std::int64_t k = 1; k <= limit; ++k) {
      if (!nin[k]) {
        expected_gaps.push_back(k);
      }
    }
    CHECK(gaps(s) == expected_gaps);
    auto const f = frobenius(s);
    if (expected_gaps.empty()) {
      CHECK_FALSE(f.has_value());
    } else {
      REQUIRE(f.has_value());
      CHECK(*f == expected_gaps.back());
      CHECK_FALSE(nin[*f]);
    }

    auto const p = minimal_presentation(s);
    std::int64_t betti_max = 0;
    for (auto const& [l, r] : p.relations) {
      CHECK(value(s, l) == value(s, r));
      CHECK(l != r);
      betti_max = std::max(betti_max, value(s, l));
    }
    // Completeness: factorizations of small members are connected under the
    // relations, applied as translations l + c <-> r + c.
    std::int64_t const bound = std::min<std::int64_t>(2 * betti_max, 200);
    for (std::int64_t k = d; k <= bound; k += d) {
      auto const fs = factorizations(s, k);
      if (fs.size() < 2) {
        continue;
      }
      std::vector<int> seen(fs.size(), 0);
      std::vector<std::size_t> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        auto const cur = fs[stack.back()];
        stack.pop_back();
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (seen[j]) {
            continue;
          }
          for (auto const& [l, r] : p.relations) {
            bool linked = false;
            for (auto const& [from, to] : {std::pair{l, r}, std::pair{r, l}}) {
              bool ok = true;
              for (std::size_t t = 0; t < cur.size(); ++t) {
                std::int64_t const c = cur[t] - from[t];
                ok = ok && c >= 0 && c + to[t] == fs[j][t];
              }
              linked = linked || ok;
            }
            if (linked) {
              seen[j] = 1;
              stack.push_back(j);
              break;
            }
          }
        }
      }
      for (auto s2 : seen) {
        REQUIRE(s2 == 1);
      }
    }
  }
}
