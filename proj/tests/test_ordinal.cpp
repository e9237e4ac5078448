#include <array>
#include <random>

#include <gtest/gtest.h>

#include "twords/ordinal.hpp"
#include "twords/syntax.hpp"

using namespace twords;

namespace {

// Ordinals below w^3 as coefficient triples (w^2, w, 1). Arithmetic here is
// written from the textbook definitions and shares no code with Ordinal.
struct Small {
  std::array<std::uint64_t, 3> c{};

  Ordinal to_ordinal() const {
    std::vector<CnfTerm> ts;
    for (int k = 0; k < 3; ++k)
      if (c[k] != 0) ts.push_back({Ordinal::finite(2 - k), c[k]});
    return Ordinal::from_terms(std::move(ts));
  }
  friend auto operator<=>(const Small&, const Small&) = default;
};

Small small_add(Small a, const Small& b) {
  int lead = 0;
  while (lead < 3 && b.c[lead] == 0) ++lead;
  if (lead == 3) return a;
  Small r;
  for (int k = 0; k < lead; ++k) r.c[k] = a.c[k];
  r.c[lead] = a.c[lead] + b.c[lead];
  for (int k = lead + 1; k < 3; ++k) r.c[k] = b.c[k];
  return r;
}

Small small_nat(const Small& a, const Small& b) {
  Small r;
  for (int k = 0; k < 3; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

Small random_small(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 3);
  return Small{{static_cast<std::uint64_t>(d(rng)), static_cast<std::uint64_t>(d(rng)),
                static_cast<std::uint64_t>(d(rng))}};
}

// Hereditary ordinals with exponents drawn recursively, depth-bounded.
Ordinal random_ordinal(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> terms(0, depth > 0 ? 3 : 1);
  std::uniform_int_distribution<int> coef(1, 3);
  std::vector<Ordinal> exps;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) exps.push_back(depth > 0 ? random_ordinal(rng, depth - 1) : Ordinal{});
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<CnfTerm> ts;
  for (auto& e : exps) ts.push_back({e, static_cast<std::uint64_t>(coef(rng))});
  return Ordinal::from_terms(std::move(ts));
}

Ordinal o(const char* text) { return parse_ordinal(text); }

}  // namespace

TEST(Ordinal, CompareExamples) {
  EXPECT_EQ(Ordinal{} <=> Ordinal{}, std::strong_ordering::equal);
  EXPECT_LT(o("w"), o("w+1"));
  EXPECT_GT(o("w^2+w"), o("w^2+3"));
}

TEST(Ordinal, AddExamples) {
  EXPECT_EQ(o("1") + o("w"), o("w"));
  EXPECT_EQ(o("w") + o("1"), o("w+1"));
  EXPECT_EQ(o("w^2+w") + o("w*2"), o("w^2+w*3"));
}

TEST(Ordinal, NaturalSumExamples) {
  EXPECT_EQ(natural_sum(o("w"), o("1")), o("w+1"));
  EXPECT_EQ(natural_sum(o("w+1"), o("w")), o("w*2+1"));
  EXPECT_EQ(natural_sum(o("w^2+1"), o("w")), o("w^2+w+1"));
}

TEST(Ordinal, Indecomposable) {
  EXPECT_TRUE(is_indecomposable(o("w^2")));
  EXPECT_TRUE(is_indecomposable(o("1")));
  EXPECT_FALSE(is_indecomposable(o("w+1")));
  EXPECT_FALSE(is_indecomposable(o("w*2")));
  EXPECT_FALSE(is_indecomposable(Ordinal{}));
}

TEST(Ordinal, Summands) {
  EXPECT_TRUE(cnf_summands(Ordinal{}).empty());
  EXPECT_EQ(cnf_summands(o("w*2+1")), (std::vector<Ordinal>{o("w"), o("w"), o("1")}));
  EXPECT_EQ(cnf_summands(o("w^2+w+1")), (std::vector<Ordinal>{o("w^2"), o("w"), o("1")}));
}

TEST(Ordinal, SkipCritical) {
  EXPECT_EQ(skip_critical(o("3")), o("3"));
  EXPECT_EQ(skip_critical(o("w")), o("w"));
  EXPECT_EQ(skip_critical(o("w^(w)")), o("w^(w)"));
  EXPECT_LT(o("w^(w)"), Ordinal::omega_pow(o("w^(w)")));
  EXPECT_EQ(skip_critical(Ordinal{}), Ordinal{});
}

TEST(Ordinal, BoundRank) {
  EXPECT_EQ(bound_rank(parse_bound("w")), o("0"));
  EXPECT_EQ(bound_rank(parse_bound("w+1")), o("1"));
  EXPECT_EQ(bound_rank(parse_bound("w^2")), o("2"));
  EXPECT_EQ(bound_rank(parse_bound("w^2+1")), o("3"));
  EXPECT_EQ(bound_rank(parse_bound("w^(w)")), o("w"));
  EXPECT_EQ(bound_rank(parse_bound("w^(w+2)+1")), o("w+5"));
  EXPECT_THROW(bound_rank(parse_bound("1")), invalid_argument);
  EXPECT_THROW(bound_rank(parse_bound("2")), invalid_argument);
}

TEST(Ordinal, BoundClassification) {
  const Bound one = parse_bound("1");
  const Bound two = parse_bound("2");
  const Bound w = parse_bound("w");
  EXPECT_TRUE(one.is_trivial());
  EXPECT_FALSE(one.is_proper());
  EXPECT_TRUE(two.is_nontrivial());
  EXPECT_FALSE(two.is_proper());
  EXPECT_TRUE(two.is_decomposable());
  EXPECT_FALSE(w.is_decomposable());
  EXPECT_TRUE(w.is_proper());
  EXPECT_EQ(Ordinal::omega_pow(o("2")), o("w^2"));
  EXPECT_FALSE(Bound::from_ordinal(o("w*2")).has_value());
  EXPECT_FALSE(Bound::from_ordinal(o("3")).has_value());
  EXPECT_FALSE(Bound::from_ordinal(Ordinal{}).has_value());
  EXPECT_LT(two, w);
  EXPECT_LT(w, parse_bound("w+1"));
  EXPECT_LT(parse_bound("w+1"), parse_bound("w^2"));
}

TEST(Ordinal, BoundRankStrictlyMonotone) {
  std::vector<Bound> bounds;
  for (const char* b : {"w", "w+1", "w^2", "w^2+1", "w^3", "w^(w)", "w^(w)+1", "w^(w+1)", "w^(w*2)", "w^(w^2)+1"})
    bounds.push_back(parse_bound(b));
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    ASSERT_LT(bounds[i], bounds[i + 1]);
    EXPECT_LT(bound_rank(bounds[i]), bound_rank(bounds[i + 1])) << to_string(bounds[i]);
  }
}

TEST(Ordinal, AgreesWithSmallEncoder) {
  std::mt19937 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const Small a = random_small(rng), b = random_small(rng);
    const Ordinal oa = a.to_ordinal(), ob = b.to_ordinal();
    ASSERT_EQ(oa <=> ob, a <=> b);
    ASSERT_EQ(oa + ob, small_add(a, b).to_ordinal());
    ASSERT_EQ(natural_sum(oa, ob), small_nat(a, b).to_ordinal());
  }
}

TEST(Ordinal, AlgebraicLaws) {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Ordinal a = random_ordinal(rng, 2), b = random_ordinal(rng, 2), c = random_ordinal(rng, 2);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(natural_sum(natural_sum(a, b), c), natural_sum(a, natural_sum(b, c)));
    ASSERT_EQ(natural_sum(a, b), natural_sum(b, a));
    if (a < b) {
      ASSERT_LT(natural_sum(a, c), natural_sum(b, c));
      ASSERT_LT(natural_sum(c, a), natural_sum(c, b));
      ASSERT_LT(c + a, c + b);
    }
    Ordinal resum;
    for (const auto& s : cnf_summands(a)) {
      ASSERT_TRUE(is_indecomposable(s));
      resum = resum + s;
    }
    ASSERT_EQ(resum, a);
    ASSERT_LT(a, Ordinal::omega_pow(skip_critical(a)));
    ASSERT_EQ(parse_ordinal(to_string(a)), a) << to_string(a);
  }
}

TEST(Ordinal, IndecomposableClosedUnderSum) {
  std::mt19937 rng(3);
  const std::vector<Ordinal> caps = {o("w"), o("w^2"), o("w^3")};
  for (const auto& c : caps) {
    ASSERT_TRUE(is_indecomposable(c));
    const std::size_t degree = c.is_finite() ? 0 : c.terms().front().exponent.finite_value();
    for (int t = 0; t < 200; ++t) {
      Small sa = random_small(rng), sb = random_small(rng);
      for (std::size_t k = 0; k < 3 - degree; ++k) sa.c[k] = sb.c[k] = 0;
      const Ordinal a = sa.to_ordinal(), b = sb.to_ordinal();
      ASSERT_LT(a, c);
      ASSERT_LT(b, c);
      ASSERT_LT(a + b, c);
    }
  }
}

TEST(Ordinal, Printing) {
  EXPECT_EQ(to_string(Ordinal{}), "0");
  EXPECT_EQ(to_string(o("w^1")), "w");
  EXPECT_EQ(to_string(o("w^(w+1)*2+w^2+w*3+4")), "w^(w+1)*2+w^2+w*3+4");
  EXPECT_EQ(to_string(o("w*0+5")), "5");
  EXPECT_EQ(to_string(o("3+w")), "w");
}

TEST(Ordinal, RejectsMalformedCnf) {
  EXPECT_THROW(Ordinal::from_terms({{o("1"), 1}, {o("2"), 1}}), invalid_argument);
  EXPECT_THROW(Ordinal::from_terms({{o("1"), 0}}), invalid_argument);
  EXPECT_THROW(parse_ordinal("w^"), parse_error);
  EXPECT_THROW(parse_ordinal("w+"), parse_error);
  EXPECT_THROW(parse_ordinal("v"), parse_error);
}
