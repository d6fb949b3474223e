#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "coxstat/analysis.hpp"
#include "coxstat/statistics.hpp"
#include "oracles.hpp"

using namespace coxstat;

namespace {

SignedPermutation P(const GroupDescriptor& d, std::initializer_list<int> w) {
  return SignedPermutation(d, std::vector<int>(w));
}

const GroupDescriptor A3{Family::A, 3}, A4{Family::A, 4}, B2{Family::B, 2}, B3{Family::B, 3}, D4{Family::D, 4};

}  // namespace

TEST(Maj, Examples) {
  EXPECT_EQ(maj(SignedPermutation::identity(A3)), 0);
  EXPECT_EQ(maj(P(A3, {3, 1, 2})), 1);
  EXPECT_EQ(maj(P(A3, {3, 2, 1})), 3);
  EXPECT_EQ(maj(P(A3, {1, 3, 2})), 2);
  EXPECT_EQ(maj(P(B3, {-1, 2, -3})), 2);
}

TEST(Nmaj, Examples) {
  EXPECT_EQ(nmaj(SignedPermutation::identity(B2)), 0);
  EXPECT_EQ(nmaj(P(B2, {-1, 2})), 1);
  EXPECT_EQ(nmaj(P(B2, {-1, -2})), 4);
  EXPECT_THROW(nmaj(P(A3, {1, 2, 3})), WrongFamily);
}

TEST(Fmaj, Examples) {
  EXPECT_EQ(fmaj(SignedPermutation::identity(B3)), 0);
  EXPECT_EQ(fmaj(P(B3, {-1, -2, -3})), 9);
  EXPECT_EQ(fmaj(P(B2, {-1, 2})), 1);
}

TEST(Dmaj, Examples) {
  EXPECT_EQ(dmaj(SignedPermutation::identity(D4)), 0);
  EXPECT_EQ(dmaj(P(D4, {-2, -1, 3, 4})), 1);
  EXPECT_EQ(dmaj(SignedPermutation::longest(D4)), 12);
}

TEST(DmajCapital, Examples) {
  EXPECT_EQ(Dmaj(SignedPermutation::identity(D4)), 0);
  // Only the sign of the last entry is dropped: (1,2,-3,-4) is read as (1,2,-3,4).
  EXPECT_EQ(Dmaj(P(D4, {1, 2, -3, -4})), 5);
  EXPECT_EQ(Dmaj(P(D4, {-1, 2, 3, -4})), 1);
  EXPECT_EQ(Dmaj(P(D4, {-1, -2, -3, -4})), 9);
  EXPECT_NE(Dmaj(SignedPermutation::longest(D4)), length(SignedPermutation::longest(D4)));
}

// Every statistic against its definition, element by element.
TEST(Statistics, MatchDefinitions) {
  for (int n = 1; n <= 4; ++n) {
    GroupDescriptor b(Family::B, n);
    for (const auto& w : oracle::elements(Family::B, n)) {
      auto x = SignedPermutation(b, w);
      EXPECT_EQ(length(x), oracle::inv(w) - oracle::neg_sum(w));
      EXPECT_EQ(maj(x), oracle::maj(w));
      EXPECT_EQ(nmaj(x), oracle::maj(w) - oracle::neg_sum(w));
      EXPECT_EQ(fmaj(x), 2 * oracle::maj(w) + oracle::neg_count(w));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    GroupDescriptor d(Family::D, n);
    for (const auto& w : oracle::elements(Family::D, n)) {
      auto x = SignedPermutation(d, w);
      EXPECT_EQ(length(x), oracle::inv(w) - oracle::neg_sum(w) - oracle::neg_count(w));
      EXPECT_EQ(dmaj(x), oracle::maj(w) - oracle::neg_sum(w) - oracle::neg_count(w));
      auto v = w;
      if (v.back() < 0) v.back() = -v.back();
      EXPECT_EQ(Dmaj(x), 2 * oracle::maj(v) + oracle::neg_count(v)) << x;
    }
  }
}

class MahonianDistribution : public ::testing::TestWithParam<std::pair<GroupDescriptor, std::string>> {};

TEST_P(MahonianDistribution, MatchesProductFormula) {
  const auto& [d, name] = GetParam();
  auto expected = oracle::poincare(d.family, d.n);
  EXPECT_EQ(oracle::to_poly(distribution(make_statistic(name, d))), expected) << d << " " << name;
  EXPECT_EQ(oracle::to_poly(distribution(length_statistic(d))), expected) << d;
}

INSTANTIATE_TEST_SUITE_P(
    Classical, MahonianDistribution,
    ::testing::Values(std::pair{GroupDescriptor(Family::A, 3), std::string("maj")},
                      std::pair{GroupDescriptor(Family::A, 5), std::string("maj")},
                      std::pair{GroupDescriptor(Family::A, 7), std::string("maj")},
                      std::pair{GroupDescriptor(Family::A, 6), std::string("majstar")},
                      std::pair{GroupDescriptor(Family::B, 3), std::string("nmaj")},
                      std::pair{GroupDescriptor(Family::B, 4), std::string("fmaj")},
                      std::pair{GroupDescriptor(Family::B, 5), std::string("nmaj")},
                      std::pair{GroupDescriptor(Family::D, 4), std::string("dmaj")},
                      std::pair{GroupDescriptor(Family::D, 5), std::string("dmaj")},
                      std::pair{GroupDescriptor(Family::D, 4), std::string("Dmaj")},
                      std::pair{GroupDescriptor(Family::D, 5), std::string("Dmaj")}));

TEST(Star, Examples) {
  auto m = make_statistic("maj", A3);
  auto ms = star(m);
  EXPECT_EQ(ms(P(A3, {3, 1, 2})), 2);
  auto mss = star(ms);
  auto len = length_statistic(B3);
  auto lens = star(len);
  for (const auto& w : all_elements(A3)) EXPECT_EQ(mss(w), m(w));
  for (const auto& w : all_elements(B3)) EXPECT_EQ(lens(w), len(w));
  EXPECT_EQ(make_statistic("majstar", A3)(P(A3, {3, 1, 2})), 2);
}

TEST(MakeStatistic, RejectsBadNames) {
  EXPECT_THROW(make_statistic("fmaj", A3), WrongFamily);
  EXPECT_THROW(make_statistic("dmaj", B3), WrongFamily);
  EXPECT_THROW(make_statistic("nosuch", A3), InvalidArgument);
  EXPECT_THROW(make_statistic("induced:maj:{s1,s2}", A4), InvalidArgument);
  EXPECT_THROW(make_statistic("induced:maj:{s1,s2}:up", A4), InvalidArgument);
}

TEST(Induce, LengthInducesLength) {
  for (auto [d, J] : {std::pair{A4, GeneratorSet({1, 2})}, std::pair{B3, GeneratorSet({0, 2})},
                      std::pair{D4, GeneratorSet({0, 1, 3})}, std::pair{B3, GeneratorSet{}}}) {
    auto f = induce(length_statistic(d), d, J);
    for (const auto& w : all_elements(d)) EXPECT_EQ(f(w), length(w)) << d << " " << J;
  }
}

// The fifteen values of maj on S_3 induced to S_4 through J = {s1, s2},
// recomputed here as l(w^J) + maj of the window of w_J.
TEST(Induce, WorkedExampleOnS4) {
  auto J = GeneratorSet::range(1, 2);
  auto f = induce(make_statistic("maj", A3), A4, J);
  const std::map<std::vector<int>, std::int64_t> published{
      {{1, 4, 2, 3}, 3}, {{2, 1, 4, 3}, 2}, {{4, 1, 2, 3}, 2}, {{2, 4, 1, 3}, 3}, {{4, 2, 1, 3}, 4},
      {{1, 4, 3, 2}, 4}, {{3, 1, 4, 2}, 3}, {{4, 1, 3, 2}, 3}, {{3, 4, 1, 2}, 4}, {{4, 3, 1, 2}, 5},
      {{2, 4, 3, 1}, 5}, {{3, 2, 4, 1}, 4}, {{4, 2, 3, 1}, 4}, {{3, 4, 2, 1}, 5}, {{4, 3, 2, 1}, 6}};
  for (const auto& [w, v] : published) EXPECT_EQ(f(SignedPermutation(A4, w)), v);
  for (const auto& w : oracle::elements(Family::A, 4)) {
    // w_J permutes the first three positions into increasing-rank order of the quotient.
    std::vector<int> head(w.begin(), w.begin() + 3);
    std::vector<int> sorted = head;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> quotient = sorted;
    quotient.push_back(w[3]);
    std::vector<int> pattern;
    for (int v : head) pattern.push_back(static_cast<int>(std::find(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    EXPECT_EQ(f(SignedPermutation(A4, w)), oracle::inv(quotient) + oracle::maj(pattern));
    if (w[3] == 4) EXPECT_EQ(f(SignedPermutation(A4, w)), oracle::maj(w));
  }
  EXPECT_TRUE(in_same_class(f.statistic, length_statistic(A4)));
  EXPECT_TRUE(is_symmetric_pair(f.statistic, length_statistic(A4)));
}

TEST(Induce, NmajIsInducedByMaj) {
  for (int n = 1; n <= 5; ++n) {
    GroupDescriptor b(Family::B, n), a(Family::A, n);
    auto f = induce(make_statistic("maj", a), b, GeneratorSet::range(1, n - 1));
    for (const auto& w : all_elements(b)) EXPECT_EQ(f(w), nmaj(w));
  }
}

TEST(Induce, DmajIsInducedByMaj) {
  for (int n = 4; n <= 5; ++n) {
    GroupDescriptor d(Family::D, n), a(Family::A, n);
    auto f = induce(make_statistic("maj", a), d, GeneratorSet::range(1, n - 1));
    for (const auto& w : all_elements(d)) EXPECT_EQ(f(w), dmaj(w));
  }
}

TEST(Induce, MajUnchangedByParabolicPart) {
  for (auto d : {GroupDescriptor(Family::B, 4), GroupDescriptor(Family::D, 4)}) {
    auto J = GeneratorSet::range(1, d.n - 1);
    for (const auto& w : all_elements(d)) EXPECT_EQ(maj(w), maj(parabolic_decompose(w, J).w_parabolic));
  }
}

TEST(Induce, IsInLengthClassOnBothSides) {
  struct Case {
    GroupDescriptor d;
    std::string name;
  };
  std::vector<Case> cases{{B3, "induced:maj:{s1,s2}:right"},   {B3, "induced:maj:{s1,s2}:left"},
                          {B3, "induced:fmaj:{s0,s1}:right"},  {B3, "induced:nmaj:{s0,s1}:left"},
                          {D4, "induced:dmaj:{s0,s1,s2}:left"}, {A4, "induced:majstar:{s1,s2}:right"},
                          {GroupDescriptor(Family::A, 5), "induced:len:{s1,s3,s4}:right"}};
  for (const auto& [d, name] : cases) {
    auto f = make_statistic(name, d);
    auto len = length_statistic(d);
    EXPECT_TRUE(in_same_class(f, len)) << name;
    EXPECT_EQ(oracle::to_poly(distribution(f)), oracle::poincare(d.family, d.n)) << name;
  }
}

TEST(Induce, LeftIsStarOfRightOfStar) {
  auto J = GeneratorSet::range(1, 2);
  auto g = make_statistic("maj", A3);
  auto left = induce(g, B3, J, Side::left);
  auto right_of_star = induce(star(g), B3, J, Side::right);
  for (const auto& w : all_elements(B3)) EXPECT_EQ(left(w), right_of_star(inverse(w)));
  // Both sides share the image of l - f.
  auto right = induce(g, B3, J, Side::right);
  auto len = length_statistic(B3);
  EXPECT_EQ(diff_image(len, left.statistic), diff_image(len, star(right.statistic)));
}

TEST(Induce, ValidatesTheBase) {
  auto J = GeneratorSet::range(1, 2);
  auto twice = Statistic("twice", A3, [](const SignedPermutation& w) { return 2 * length(w); });
  EXPECT_THROW(induce(twice, A4, J), NotInLengthClass);
  EXPECT_NO_THROW(induce(twice, A4, J, Side::right, Validation::off));
  EXPECT_THROW(induce(make_statistic("maj", A3), B3, GeneratorSet({0, 1})), DescriptorMismatch);
  EXPECT_THROW(induce(make_statistic("maj", A3), A3, GeneratorSet({0})), InvalidArgument);
  // Dmaj is equidistributed with l_D but differs at the top, so it cannot be a base.
  EXPECT_THROW(induce(make_statistic("Dmaj", D4), D4, GeneratorSet::all(D4)), NotInLengthClass);
}
