#include <gtest/gtest.h>

#include "tripsys/enumerate.hpp"
#include "tripsys/errors.hpp"
#include "tripsys/turan.hpp"

using namespace tripsys;

namespace {

using F = FamilyName;

const std::vector<Pattern> kM2 = {Pattern::m2()};
const std::vector<Pattern> kM2C3 = {Pattern::m2(), Pattern::c3()};

EnumerationOptions mis() {
  EnumerationOptions o;
  o.engine = Engine::kMis;
  return o;
}

std::vector<std::pair<int, std::int64_t>> values(const Hierarchy& h) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (const auto& l : h.levels) out.push_back({l.s, l.value});
  return out;
}

std::int64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST(Hierarchy, SevenVertices) {
  Catalog c = enumerate_maximal_intersecting(7);
  Hierarchy h = hierarchy(c);
  EXPECT_EQ(values(h), (std::vector<std::pair<int, std::int64_t>>{
                           {1, 15}, {2, 13}, {3, 12}, {4, 11}, {5, 10}, {6, 7}}));
  EXPECT_TRUE(h.terminal);
  std::size_t total = 0;
  for (const auto& l : h.levels) total += l.extremal.size();
  EXPECT_EQ(total, c.entries.size());
  EXPECT_EQ(h.levels[4].extremal.size(), 7u);
}

TEST(Hierarchy, SixVertices) {
  Hierarchy h = hierarchy(enumerate_maximal_intersecting(6));
  ASSERT_EQ(h.levels.size(), 1u);
  EXPECT_EQ(h.levels[0].value, 10);
  EXPECT_EQ(h.levels[0].extremal.size(), 13u);
}

TEST(Hierarchy, TriangleFreeAtTen) {
  EnumerationOptions o = mis();
  o.allow_large = true;
  Catalog c = enumerate(10, kM2C3, o);
  Hierarchy h = hierarchy(c);
  ASSERT_EQ(h.levels.size(), 2u);
  EXPECT_EQ(h.levels[0].value, 36);
  EXPECT_EQ(h.levels[1].value, 10);
  ASSERT_EQ(h.levels[1].extremal.size(), 2u);
  std::vector<F> names;
  for (std::size_t i : h.levels[1].extremal) names.push_back(*c.entries[i].name);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<F>{F::kK5pad, F::kH0}));
}

TEST(Hierarchy, SmallN) {
  for (int n = 3; n <= 5; ++n) {
    Catalog c = enumerate_maximal_intersecting(n);
    Hierarchy h = hierarchy(c);
    ASSERT_EQ(h.levels.size(), 1u);
    EXPECT_EQ(h.levels[0].value, choose(n, 3));
    EXPECT_EQ(c.entries[h.levels[0].extremal[0]].name, F::kKn);
  }
}

TEST(Hierarchy, LabeledContainmentGivesSameLevels) {
  Catalog c = enumerate_maximal_intersecting(8);
  EXPECT_EQ(values(hierarchy(c, Containment::kLabeled)), values(hierarchy(c)));
}

TEST(Hierarchy, RejectsBadCatalogs) {
  Catalog empty;
  empty.n = 7;
  empty.forbidden = kM2;
  EXPECT_THROW(hierarchy(empty), InvalidArgument);

  Catalog c = enumerate_maximal_intersecting(7);
  Catalog unsorted = c;
  std::swap(unsorted.entries[0], unsorted.entries[1]);
  EXPECT_THROW(hierarchy(unsorted), InvariantViolation);

  Catalog duplicated = c;
  duplicated.entries.insert(duplicated.entries.begin() + 1, duplicated.entries[1]);
  EXPECT_THROW(hierarchy(duplicated), InvariantViolation);

  // H0 is intersecting but not maximal
  Catalog bad = c;
  bad.entries.back().canonical = canonical_form(build(F::kH0, 7));
  bad.entries.back().size = 7;
  EXPECT_THROW(hierarchy(bad), InvariantViolation);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form(9, kM2, 2), 19);
  EXPECT_EQ(closed_form(9, kM2, 7), std::nullopt);
  EXPECT_EQ(closed_form(8, kM2C3, 3), 8);
  EXPECT_EQ(closed_form(6, kM2, 2), std::nullopt);
  EXPECT_EQ(closed_form(10, kM2C3, 2), 10);
  EXPECT_EQ(closed_form(10, kM2C3, 3), std::nullopt);
  EXPECT_EQ(closed_form(12, kM2C3, 2), 12);
  EXPECT_EQ(closed_form(12, kM2C3, 3), 10);
  const std::vector<Pattern> c3 = {Pattern::c3()};
  EXPECT_EQ(closed_form(8, c3, 1), std::nullopt);
}

TEST(ClosedForm, MatchesExpectedTables) {
  for (int n = 6; n <= 16; ++n)
    for (const auto& f : {kM2, kM2C3}) {
      auto levels = expected_levels(n, f);
      for (std::size_t i = 0; i < levels.size(); ++i) {
        EXPECT_EQ(closed_form(n, f, static_cast<int>(i) + 1), levels[i].value);
        for (F name : levels[i].families) EXPECT_EQ(size_formula(name, n), levels[i].value);
        if (i > 0) EXPECT_LT(levels[i].value, levels[i - 1].value);
      }
      EXPECT_EQ(closed_form(n, f, static_cast<int>(levels.size()) + 1), std::nullopt);
    }
}

TEST(ClosedForm, ArithmeticIdentities) {
  for (int n = 7; n <= 50; ++n) {
    EXPECT_EQ(choose(n - 1, 2) - choose(n - 4, 2) + 1, 3 * n - 8);
    EXPECT_EQ(choose(n - 1, 2) - choose(n - 4, 2) - (n - 5) + 2, 2 * n - 2);
    EXPECT_EQ(hilton_milner_value(n, 3), 3 * n - 8);
    EXPECT_EQ(han_kohayakawa_value(n, 3), 2 * n - 2);
    EXPECT_EQ(ekr_value(n, 3), choose(n - 1, 2));
  }
}

TEST(Verify, Examples) {
  VerifyReport seven = verify(7, kM2, {});
  EXPECT_TRUE(seven.ok());
  ASSERT_EQ(seven.levels.size(), 6u);
  EXPECT_EQ(seven.levels[1].computed_names, (std::vector<std::string>{"H1", "H2"}));
  EXPECT_EQ(seven.levels[5].computed_names, (std::vector<std::string>{"F7"}));

  VerifyReport six = verify(6, kM2, {});
  EXPECT_TRUE(six.ok());
  EXPECT_EQ(six.levels[0].computed_names.size(), 13u);

  VerifyReport tri = verify(8, kM2C3, mis());
  EXPECT_TRUE(tri.ok());
  ASSERT_EQ(tri.levels.size(), 3u);
  EXPECT_EQ(tri.levels[0].computed, 21);
  EXPECT_EQ(tri.levels[1].computed, 10);
  EXPECT_EQ(tri.levels[2].computed, 8);
  EXPECT_EQ(tri.levels[2].computed_names, (std::vector<std::string>{"H0"}));
}

TEST(Verify, LargestNonStarTriangleFree) {
  for (int n = 6; n <= 9; ++n) {
    Catalog c = enumerate(n, kM2C3, mis());
    std::int64_t best = 0;
    for (const auto& e : c.entries)
      if (e.name != F::kSn) best = std::max<std::int64_t>(best, e.size);
    EXPECT_EQ(best, std::max(10, n));
  }
}

TEST(Verify, EmbeddingChecksReported) {
  VerifyReport r = verify(8, kM2, {});
  int embeds = 0;
  for (const auto& c : r.checks)
    if (c.what.find("embeds into") != std::string::npos) {
      ++embeds;
      EXPECT_TRUE(c.passed) << c.what;
    }
  EXPECT_EQ(embeds, 5);
  EXPECT_FALSE(embeds_into(build(F::kH0, 8), build(F::kH6, 8)));
}

TEST(Verify, DisagreementIsReportContent) {
  Catalog c = enumerate_maximal_intersecting(7);
  c.entries.pop_back();  // drop F7
  VerifyReport r = verify(c);
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.levels.size(), 6u);
  EXPECT_FALSE(r.levels[5].match);
  EXPECT_FALSE(r.levels[5].details.empty());
  const std::vector<Pattern> p2 = {Pattern::p2()};
  Catalog other = c;
  other.forbidden = p2;
  EXPECT_THROW(verify(other), InvalidArgument);
}
