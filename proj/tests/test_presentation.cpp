#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fi1/errors.hpp"
#include "fi1/presentation.hpp"
#include "fi1/ptrans.hpp"
#include "oracles.hpp"

using namespace fi1;

namespace {

Element T(std::int64_t neg_a, std::int64_t p, std::int64_t b) {
  return Element::from_triple(neg_a, p, b);
}

GeneratorSet gs(std::vector<Element> v) { return GeneratorSet(std::move(v)); }

SymbolWord sw(std::string const& s) {
  return to_symbol_word(parse_word(s));
}

Element eval(SymbolWord const& w) { return eval_word(to_word(w)); }

VerifyOptions at_length(std::size_t length) {
  VerifyOptions o;
  o.max_word_length = length;
  return o;
}

std::vector<PartialMap> schein_maps(std::int32_t n) { return {alpha(n), beta(n)}; }

}  // namespace

TEST_CASE("presentation model") {
  CHECK_THROWS_AS(Presentation({}), DomainError);
  Presentation p({"a", "b"});
  p.add_relation({0, 1}, {1, 0});
  CHECK_THROWS_AS(p.add_relation({}, {0}), DomainError);
  CHECK_THROWS_AS(p.add_relation({2}, {0}), DomainError);
  CHECK(p.symbol("b") == 1);
  CHECK_THROWS_AS(p.symbol("c"), DomainError);
  CHECK(p.to_string({0, 1, 1}) == "a b b");
  CHECK(to_word(to_symbol_word(parse_word("xXx"))) == parse_word("xXx"));
  CHECK_THROWS_AS(to_word({2}), DomainError);
}

TEST_CASE("relations of FI_1") {
  CHECK(fi1_relations(1).relations().size() == 4);
  for (std::int64_t n = 1; n <= 8; ++n) {
    auto const p = fi1_relations(n);
    std::size_t expected = 2;
    for (std::int64_t k = 1; k <= n; ++k) {
      expected += static_cast<std::size_t>(k + 1);
    }
    CHECK(p.relations().size() == expected);
    for (auto const& r : p.relations()) {
      REQUIRE(eval(r.lhs) == eval(r.rhs));
    }
    auto const triples = std::vector<Element>{T(0, 1, 1), T(-1, -1, 0)};
    CHECK(satisfies(p, triples, [](Element const& x, Element const& y) { return x * y; }));
  }
  CHECK_THROWS_AS(fi1_relations(0), DomainError);
}

TEST_CASE("restricted relations") {
  for (std::int64_t n = 1; n <= 5; ++n) {
    auto const r = restricted_relations(n);
    auto const f = fi1_relations(n);
    REQUIRE(r.relations().size() == f.relations().size());
    for (std::size_t i = 0; i < r.relations().size(); ++i) {
      CHECK(r.relations()[i].lhs == f.relations()[i].lhs);
      CHECK(r.relations()[i].rhs == f.relations()[i].rhs);
      CHECK(dclass_index(eval(r.relations()[i].lhs)) <= n);
    }
    CHECK(satisfies(r, schein_maps(static_cast<std::int32_t>(n)), compose));
  }
  CHECK_THROWS_AS(restricted_relations(0), DomainError);
}

TEST_CASE("satisfaction under partial maps") {
  CHECK(satisfies(restricted_relations(2), schein_maps(2), compose));
  auto const bad = first_unsatisfied(fi1_relations(3), schein_maps(2), compose);
  REQUIRE(bad.has_value());
  CHECK(*bad >= 2);
  CHECK(dclass_index(eval(fi1_relations(3).relations()[*bad].lhs)) == 3);
  CHECK_THROWS_AS(satisfies(fi1_relations(1), std::vector<PartialMap>{alpha(1)}, compose),
                  DomainError);
}

TEST_CASE("derivations") {
  auto const p1 = fi1_relations(1);
  auto const r = derivable(sw("x X x"), sw("x"), p1, 6, 1000);
  REQUIRE(r.status == DerivationSearch::Status::Derived);
  CHECK(r.derivation.words.size() == 2);
  CHECK(replay(sw("x X x"), sw("x"), r.derivation, p1));

  auto const same = derivable(sw("xx"), sw("xx"), p1, 4, 10);
  CHECK(same.status == DerivationSearch::Status::Derived);
  CHECK(same.derivation.steps.empty());

  auto const p2 = fi1_relations(2);
  auto const c = derivable(sw("X x x X"), sw("x X X x"), p2, 6, 1000);
  REQUIRE(c.status == DerivationSearch::Status::Derived);
  CHECK(replay(sw("X x x X"), sw("x X X x"), c.derivation, p2));

  // Different values: the reachable space is exhausted without a meeting.
  auto const no = derivable(sw("x"), sw("X"), p1, 5, 100000);
  CHECK(no.status == DerivationSearch::Status::NotFoundWithinBudget);
  CHECK(no.space_exhausted);

  auto const tight = derivable(sw("XxxX"), sw("xXXx"), p2, 6, 0);
  CHECK(tight.status == DerivationSearch::Status::NotFoundWithinBudget);
  CHECK_FALSE(tight.space_exhausted);

  Derivation broken = c.derivation;
  broken.steps[0].position += 1;
  CHECK_FALSE(replay(sw("X x x X"), sw("x X X x"), broken, p2));
  CHECK_THROWS_AS(apply_step(sw("x"), RewriteStep{0, true, 0}, p1), DomainError);
}

TEST_CASE("derivations inside C_n stay within the restricted relations") {
  auto const full = fi1_relations(8);
  std::mt19937_64 rng(6);
  int checked = 0;
  while (checked < 150) {
    auto const u = oracle::random_steps(rng, 1 + rng() % 8);
    auto const v = oracle::random_steps(rng, 1 + rng() % 8);
    Element const e = oracle::eval_word(u);
    std::int64_t const n = dclass_index(e);
    if (n > 3 || e != oracle::eval_word(v)) {
      continue;
    }
    ++checked;
    SymbolWord const su = to_symbol_word(oracle::word_of(u));
    SymbolWord const sv = to_symbol_word(oracle::word_of(v));
    auto const r = derivable(su, sv, full, 10, 200000);
    REQUIRE(r.status == DerivationSearch::Status::Derived);
    REQUIRE(replay(su, sv, r.derivation, full));
    for (auto const& step : r.derivation.steps) {
      auto const& rel = full.relations()[step.relation];
      REQUIRE(dclass_index(eval(rel.lhs)) <= n);
    }
  }
}

TEST_CASE("built presentations: documented cases") {
  auto const idem = build_presentation(gs({T(-1, 0, 2)}));
  CHECK(idem.presentation.alphabet() == std::vector<std::string>{"g1"});
  REQUIRE(idem.presentation.relations().size() == 1);
  CHECK(idem.presentation.relations()[0].lhs == SymbolWord{0, 0});
  CHECK(idem.presentation.relations()[0].rhs == SymbolWord{0});
  auto const vr = verify_presentation(gs({T(-1, 0, 2)}), idem.presentation, idem.values,
                                      at_length(6));
  CHECK(vr.sound);
  CHECK(vr.complete());
  CHECK(vr.value_classes == 1);

  auto const free = build_presentation(gs({T(0, 1, 1)}));
  CHECK(free.presentation.alphabet().size() == 1);
  CHECK(free.presentation.relations().empty());
  auto const fr = verify_presentation(gs({T(0, 1, 1)}), free.presentation, free.values);
  CHECK(fr.complete());
  CHECK(fr.words == 8);
  CHECK(fr.value_classes == fr.words);

  GeneratorSet const two = gs({T(-1, 2, 3), T(-1, 3, 4)});
  auto const b = build_presentation(two);
  CHECK(b.values == std::vector<Element>{T(-1, 2, 3), T(-1, 3, 4)});
  auto const r = verify_presentation(two, b.presentation, b.values);
  CHECK(r.sound);
  CHECK(r.complete());
  CHECK(r.max_word_length == 8);

  CHECK_THROWS_AS(build_presentation(gs({T(0, 1, 1), T(-1, -1, 0)})), DomainError);
}

TEST_CASE("verification detects unsound and incomplete presentations") {
  GeneratorSet const two = gs({T(-1, 2, 3), T(-1, 3, 4)});
  std::vector<Element> const values{T(-1, 2, 3), T(-1, 3, 4)};

  Presentation wrong({"g1", "g2"});
  wrong.add_relation({0, 0}, {1});
  auto const w = verify_presentation(two, wrong, values, at_length(3));
  CHECK_FALSE(w.sound);
  CHECK(w.unsound_relations == std::vector<std::size_t>{0});

  Presentation empty({"g1", "g2"});
  auto const e = verify_presentation(two, empty, values, at_length(4));
  CHECK(e.sound);
  CHECK_FALSE(e.complete());
  CHECK_FALSE(e.counterexamples.empty());
  CHECK(e.counterexamples[0].space_exhausted);

  Presentation betti_only({"g1", "g2"});
  betti_only.add_relation({0, 0, 0}, {1, 1});
  VerifyOptions starved;
  starved.max_word_length = 3;
  starved.search_max_steps = 0;
  auto const s = verify_presentation(two, betti_only, values, starved);
  CHECK_FALSE(s.budget_exhausted.empty());
  CHECK_FALSE(s.complete());

  CHECK_THROWS_AS(verify_presentation(two, empty, {T(0, 1, 1), T(-1, 3, 4)}),
                  DomainError);
  CHECK_THROWS_AS(verify_presentation(two, empty, {T(-1, 2, 3)}), DomainError);
  VerifyOptions huge;
  huge.max_word_length = 40;
  CHECK_THROWS_AS(verify_presentation(two, empty, values, huge), DomainError);
}

TEST_CASE("the truncated FI_1 presentation is complete on short words in C_2") {
  GeneratorSet const fi1 = gs({T(0, 1, 1), T(-1, -1, 0)});
  VerifyOptions o;
  o.max_word_length = 4;
  o.search_max_length = 6;
  o.dclass_limit = 2;
  auto const r = verify_presentation(fi1, restricted_relations(2),
                                     {T(0, 1, 1), T(-1, -1, 0)}, o);
  CHECK(r.sound);
  CHECK(r.complete());
  CHECK(r.value_classes == 13);
}

TEST_CASE("built presentations for random finitely presented sets") {
  std::mt19937_64 rng(404);
  for (int round = 0; round < 12; ++round) {
    std::vector<Element> gens;
    int const s = round % 3 == 0 ? -1 : 1;
    while (gens.size() < 2) {
      Element const e = oracle::random_element(rng, 3);
      if (sign(e) == s || (round % 4 == 1 && sign(e) == 0)) {
        gens.push_back(e);
      }
    }
    GeneratorSet const a = gs(gens);
    auto const b = build_presentation(a);
    if (b.values.size() > 5) {
      continue;
    }
    VerifyOptions o;
    o.max_word_length = b.values.size() <= 3 ? 6 : 5;
    auto const r = verify_presentation(a, b.presentation, b.values, o);
    CHECK(r.sound);
    CHECK(r.complete());
  }
}
