#include "fi1/ptrans.hpp"

#include <algorithm>

#include "fi1/errors.hpp"

namespace fi1 {

PartialMap::PartialMap(std::int32_t n)
    : n_(n), images_(static_cast<std::size_t>(n) + 1, undefined) {
  if (n < 0) {
    throw DomainError("partial map degree must be non-negative");
  }
}

PartialMap::PartialMap(std::int32_t n, std::vector<std::int32_t> images)
    : n_(n), images_(std::move(images)) {
  if (n < 0 || images_.size() != static_cast<std::size_t>(n) + 1) {
    throw DomainError("partial map needs exactly n + 1 images");
  }
  for (auto v : images_) {
    if (v != undefined && (v < 0 || v > n)) {
      throw DomainError("partial map image out of range");
    }
  }
}

PartialMap PartialMap::identity(std::int32_t n) {
  std::vector<std::int32_t> images(static_cast<std::size_t>(n) + 1);
  for (std::int32_t t = 0; t <= n; ++t) {
    images[t] = t;
  }
  return PartialMap(n, std::move(images));
}

std::optional<std::int32_t> PartialMap::operator()(std::int32_t t) const {
  if (t < 0 || t > n_ || images_[t] == undefined) {
    return std::nullopt;
  }
  return images_[t];
}

bool PartialMap::is_empty() const noexcept {
  return std::all_of(images_.begin(), images_.end(),
                     [](auto v) { return v == undefined; });
}

bool PartialMap::is_total() const noexcept {
  return std::none_of(images_.begin(), images_.end(),
                      [](auto v) { return v == undefined; });
}

PartialMap compose(PartialMap const& f, PartialMap const& g) {
  if (f.degree() != g.degree()) {
    throw DomainError("cannot compose partial maps of different degrees");
  }
  std::vector<std::int32_t> images(f.images().size(), PartialMap::undefined);
  auto const& fi = f.images();
  auto const& gi = g.images();
  for (std::size_t t = 0; t < fi.size(); ++t) {
    if (fi[t] != PartialMap::undefined) {
      images[t] = gi[fi[t]];
    }
  }
  return PartialMap(f.degree(), std::move(images));
}

PartialMap map_power(PartialMap const& f, std::int64_t k) {
  if (k < 1) {
    throw DomainError("map exponent must be positive");
  }
  PartialMap result = f;
  PartialMap base = f;
  --k;
  while (k > 0) {
    if (k & 1) {
      result = compose(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = compose(base, base);
    }
  }
  return result;
}

PartialMap alpha(std::int32_t n) {
  if (n < 1) {
    throw DomainError("alpha_n needs n >= 1");
  }
  std::vector<std::int32_t> images(static_cast<std::size_t>(n) + 1);
  for (std::int32_t t = 0; t < n; ++t) {
    images[t] = t + 1;
  }
  images[n] = PartialMap::undefined;
  return PartialMap(n, std::move(images));
}

PartialMap beta(std::int32_t n) {
  if (n < 1) {
    throw DomainError("beta_n needs n >= 1");
  }
  std::vector<std::int32_t> images(static_cast<std::size_t>(n) + 1);
  images[0] = 0;
  for (std::int32_t t = 1; t <= n; ++t) {
    images[t] = t - 1;
  }
  return PartialMap(n, std::move(images));
}

PartialMap eval_word_ptrans(Word const& w, std::int32_t n) {
  PartialMap const a = alpha(n);
  PartialMap const b = beta(n);
  PartialMap result = PartialMap::identity(n);
  for (Letter l : w.letters()) {
    result = compose(result, l == Letter::X ? a : b);
  }
  return result;
}

PartialMap sigma(Element const& e, std::int32_t m) {
  if (dclass_index(e) > m) {
    throw DomainError("sigma_" + std::to_string(m) + " is only defined on C_"
                      + std::to_string(m) + ", got " + to_string(e));
  }
  return eval_word_ptrans(canonical_word(e), m);
}

std::string to_string(PartialMap const& f) {
  std::string out = "[";
  for (std::size_t t = 0; t < f.images().size(); ++t) {
    if (t > 0) {
      out += ", ";
    }
    auto const v = f.images()[t];
    out += v == PartialMap::undefined ? std::string("-") : std::to_string(v);
  }
  return out + "]";
}

char const* to_string(ScheinFamily family) noexcept {
  switch (family) {
    case ScheinFamily::AlphaBetaAlpha:
      return "alpha beta alpha = alpha";
    case ScheinFamily::BetaAlphaBeta:
      return "beta alpha beta = beta";
    case ScheinFamily::Commute:
      return "commutation holds";
    case ScheinFamily::NonCommute:
      return "commutation fails";
  }
  return "?";
}

namespace {

// Powers alpha^k and beta^k for k in [1, max_k], built incrementally.
struct PowerTable {
  std::vector<PartialMap> alpha_pow;
  std::vector<PartialMap> beta_pow;

  PowerTable(std::int32_t n, std::int64_t max_k) {
    PartialMap const a = alpha(n), b = beta(n);
    alpha_pow.reserve(max_k + 1);
    beta_pow.reserve(max_k + 1);
    alpha_pow.push_back(PartialMap::identity(n));
    beta_pow.push_back(PartialMap::identity(n));
    for (std::int64_t k = 1; k <= max_k; ++k) {
      alpha_pow.push_back(compose(alpha_pow.back(), a));
      beta_pow.push_back(compose(beta_pow.back(), b));
    }
  }

  CommutationPair pair(std::int64_t i, std::int64_t j) const {
    PartialMap const bi_ai = compose(beta_pow[i], alpha_pow[i]);
    PartialMap const aj_bj = compose(alpha_pow[j], beta_pow[j]);
    return {i, j, compose(bi_ai, aj_bj), compose(aj_bj, bi_ai)};
  }
};

}  // namespace

CommutationPair commutation_pair(std::int32_t n, std::int64_t i,
                                 std::int64_t j) {
  if (i < 0 || j < 0 || i + j == 0) {
    throw DomainError("commutation pair needs i, j >= 0 with i + j > 0");
  }
  auto pow0 = [n](PartialMap const& f, std::int64_t k) {
    return k == 0 ? PartialMap::identity(n) : map_power(f, k);
  };
  PartialMap const a = alpha(n), b = beta(n);
  PartialMap const bi_ai = compose(pow0(b, i), pow0(a, i));
  PartialMap const aj_bj = compose(pow0(a, j), pow0(b, j));
  return {i, j, compose(bi_ai, aj_bj), compose(aj_bj, bi_ai)};
}

ScheinReport schein_check(std::int32_t n, std::int64_t max_ij) {
  if (n < 1 || max_ij < 1) {
    throw DomainError("schein_check needs n >= 1 and max_ij >= 1");
  }
  ScheinReport report{n, max_ij, true, 0, std::nullopt, std::nullopt};
  auto fail = [&report](ScheinFailure failure) {
    if (report.passed) {
      report.passed = false;
      report.first_failure = std::move(failure);
    }
  };

  PartialMap const a = alpha(n), b = beta(n);
  PartialMap const aba = compose(compose(a, b), a);
  ++report.checks;
  if (aba != a) {
    fail({ScheinFamily::AlphaBetaAlpha, 0, 0, aba, a});
  }
  PartialMap const bab = compose(compose(b, a), b);
  ++report.checks;
  if (bab != b) {
    fail({ScheinFamily::BetaAlphaBeta, 0, 0, bab, b});
  }

  PowerTable const powers(n, max_ij);
  // Failures of the "commute" family sort before "non-commute" failures.
  std::optional<ScheinFailure> commute_fail, noncommute_fail;
  for (std::int64_t i = 1; i <= max_ij; ++i) {
    for (std::int64_t j = 1; j <= max_ij; ++j) {
      CommutationPair pair = powers.pair(i, j);
      ++report.checks;
      bool const equal = pair.lhs == pair.rhs;
      bool const should_commute = i > n || j > n || i + j <= n;
      if (!equal && !report.inequality_witness) {
        report.inequality_witness = pair;
      }
      if (should_commute && !equal && !commute_fail) {
        commute_fail = ScheinFailure{ScheinFamily::Commute, i, j,
                                     std::move(pair.lhs), std::move(pair.rhs)};
      } else if (!should_commute && equal && !noncommute_fail) {
        noncommute_fail
            = ScheinFailure{ScheinFamily::NonCommute, i, j,
                            std::move(pair.lhs), std::move(pair.rhs)};
      }
    }
  }
  if (commute_fail) {
    fail(std::move(*commute_fail));
  }
  if (noncommute_fail) {
    fail(std::move(*noncommute_fail));
  }
  return report;
}

}  // namespace fi1
