#include <gtest/gtest.h>

#include <vector>

#include "coxstat/analysis.hpp"
#include "coxstat/posets.hpp"

using namespace coxstat;

TEST(ChainPoset, Ranks) {
  auto c2 = chain_poset(2);
  EXPECT_EQ(c2.ranks(), (PosetFunction{0, 1}));
  EXPECT_EQ(c2.bottom(), 0U);
  EXPECT_EQ(c2.top(), 1U);
  auto c8 = chain_poset(8);
  EXPECT_EQ(c8.top_rank(), 7);
  EXPECT_THROW(chain_poset(0), InvalidArgument);
}

TEST(FiniteGradedPoset, ValidatesAndRoundTrips) {
  EXPECT_THROW(FiniteGradedPoset({0, 1}, 0, 5), InvalidArgument);
  FiniteGradedPoset p({0, 1, 1, 2}, 0, 3);
  auto q = FiniteGradedPoset::from_json(p.to_json());
  EXPECT_EQ(q.ranks(), p.ranks());
  EXPECT_EQ(q.bottom(), p.bottom());
  EXPECT_EQ(q.top(), p.top());
  EXPECT_EQ(poset_function_from_json(nlohmann::json::array({0, 3, 1})), (PosetFunction{0, 3, 1}));
}

TEST(ChainPoset, CounterexampleFunction) {
  auto c = chain_poset(8);
  PosetFunction f{0, 3, 1, 6, 5, 4, 2, 7};
  EXPECT_TRUE(in_same_class(f, c.ranks(), c));
  EXPECT_FALSE(is_symmetric_pair(f, c.ranks()));
  auto r = ratio_sum_check(f, c.ranks());
  EXPECT_TRUE(r.equal);
  // f(bottom) = 0 and f > 0 elsewhere, as for every member of the class.
  for (std::size_t x = 1; x < f.size(); ++x) EXPECT_GT(f[x], 0);
}

TEST(ProductDecomposition, RankAdditivity) {
  FiniteGradedPoset p({0, 1, 1, 2}, 0, 3);
  auto q = chain_poset(3);
  auto d = product_decomposition(p, q);
  ASSERT_EQ(d.poset().size(), 12U);
  EXPECT_EQ(d.poset().top_rank(), 4);
  for (std::size_t x = 0; x < d.poset().size(); ++x) {
    auto [a, b] = d.to_pair(x);
    EXPECT_EQ(d.from_pair(a, b), x);
    EXPECT_EQ(d.poset().rank(x), p.rank(a) + q.rank(b));
  }
}

TEST(GoodDecomposition, RejectsNonAdditiveRanks) {
  auto a = chain_poset(2), b = chain_poset(2);
  FiniteGradedPoset x({0, 1, 2, 3}, 0, 3);
  std::vector<GoodDecomposition::Pair> pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  EXPECT_THROW(GoodDecomposition(x, a, b, pairs), InvalidArgument);
}

TEST(CoxeterDecomposition, Sizes) {
  GroupDescriptor a4(Family::A, 4);
  auto full = coxeter_good_decomposition(a4, GeneratorSet::all(a4));
  EXPECT_EQ(full.decomposition.factor_a().size(), 1U);
  EXPECT_EQ(full.decomposition.factor_b().size(), 24U);
  auto none = coxeter_good_decomposition(a4, GeneratorSet{});
  EXPECT_EQ(none.decomposition.factor_a().size(), 24U);
  EXPECT_EQ(none.decomposition.factor_b().size(), 1U);
  auto half = coxeter_good_decomposition(a4, GeneratorSet({1, 2}));
  EXPECT_EQ(half.decomposition.factor_a().size(), 4U);
  EXPECT_EQ(half.decomposition.factor_b().size(), 6U);
  EXPECT_THROW(coxeter_good_decomposition(GroupDescriptor(Family::B, 6), GeneratorSet{}, 1000), CapExceeded);
}

TEST(ROperator, Examples) {
  GroupDescriptor a4(Family::A, 4), a3(Family::A, 3);
  auto J = GeneratorSet({1, 2});
  auto cd = coxeter_good_decomposition(a4, J);
  const auto& d = cd.decomposition;
  const auto& rho = d.poset().ranks();
  EXPECT_EQ(r_operator(rho, 0, d), rho);
  auto r1 = r_operator(rho, 1, d);
  for (std::size_t x = 0; x < rho.size(); ++x) EXPECT_EQ(r1[x], d.factor_b().rank(d.pi_b(x)));

  auto f = cd.tabulate(induce(make_statistic("maj", a3), a4, J).statistic);
  auto g = cd.tabulate_b(make_statistic("maj", a3));
  auto rf = r_operator(f, 1, d);
  EXPECT_EQ(rf, d.pull_back_b(g));
  EXPECT_TRUE(is_induced(f, g, d));
  EXPECT_EQ(d.slice_b(f), g);
  EXPECT_EQ(d.slice_a(f), d.factor_a().ranks());
}

TEST(IsInduced, ClassicalExamples) {
  {
    GroupDescriptor b3(Family::B, 3);
    auto cd = coxeter_good_decomposition(b3, GeneratorSet({1, 2}));
    EXPECT_TRUE(is_induced(cd.tabulate(make_statistic("nmaj", b3)),
                           cd.tabulate_b(make_statistic("maj", GroupDescriptor(Family::A, 3))), cd.decomposition));
    EXPECT_TRUE(is_induced(cd.tabulate(length_statistic(b3)), cd.decomposition.factor_b().ranks(), cd.decomposition));
  }
  {
    GroupDescriptor b2(Family::B, 2);
    auto cd = coxeter_good_decomposition(b2, GeneratorSet({1}));
    auto f = cd.tabulate(make_statistic("fmaj", b2));
    auto g = cd.tabulate_b(make_statistic("maj", GroupDescriptor(Family::A, 2)));
    EXPECT_FALSE(is_induced(f, g, cd.decomposition));
    auto r = r_operator(f, 1, cd.decomposition);
    EXPECT_EQ(*std::min_element(r.begin(), r.end()), -1);
  }
  {
    GroupDescriptor d4(Family::D, 4);
    auto cd = coxeter_good_decomposition(d4, GeneratorSet({1, 2, 3}));
    EXPECT_TRUE(is_induced(cd.tabulate(make_statistic("dmaj", d4)),
                           cd.tabulate_b(make_statistic("maj", GroupDescriptor(Family::A, 4))), cd.decomposition));
    EXPECT_FALSE(is_induced(cd.tabulate(make_statistic("Dmaj", d4)),
                            cd.tabulate_b(make_statistic("maj", GroupDescriptor(Family::A, 4))), cd.decomposition));
  }
}

TEST(InSameClass, Examples) {
  auto c = chain_poset(5);
  EXPECT_TRUE(in_same_class(c.ranks(), c.ranks(), c));
  EXPECT_TRUE(in_same_class(make_statistic("fmaj", GroupDescriptor(Family::B, 3)),
                            length_statistic(GroupDescriptor(Family::B, 3))));
  EXPECT_FALSE(in_same_class(make_statistic("Dmaj", GroupDescriptor(Family::D, 4)),
                             length_statistic(GroupDescriptor(Family::D, 4))));
  PosetFunction shifted{1, 1, 2, 3, 4};
  EXPECT_FALSE(in_same_class(shifted, c.ranks(), c));
  EXPECT_THROW(in_same_class(shifted, PosetFunction{0, 1}, 0, 1), DescriptorMismatch);
}
