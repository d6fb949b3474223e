#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <vector>

#include "coxstat/analysis.hpp"
#include "coxstat/bigcox.hpp"
#include "oracles.hpp"

using namespace coxstat;

TEST(ExactScalar, GoldenRatio) {
  auto phi = ExactScalar::phi();
  EXPECT_EQ(phi * phi, phi + 1);
  EXPECT_EQ(phi * (phi - 1), ExactScalar(1));
  EXPECT_EQ(phi.sign(), 1);
  EXPECT_EQ((phi - 2).sign(), -1);
  EXPECT_EQ((ExactScalar(0) - phi * phi + phi + 1).sign(), 0);
  EXPECT_EQ(ExactScalar(2, 4, 4), ExactScalar(1, 2, 2));
  EXPECT_EQ(ExactScalar(-5, -1, 2).to_string(), "(-5-1*sqrt5)/2");
  EXPECT_THROW(ExactScalar(1, 1, 0), InvalidArgument);
}

TEST(ExactScalar, Overflow) {
  ExactScalar big(std::int64_t{1} << 40);
  EXPECT_THROW(big * big, Error);
}

TEST(CoxeterMatrix, Validates) {
  EXPECT_THROW(CoxeterMatrix({{1, 3}, {2, 1}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix({{2, 3}, {3, 1}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix({{1, 1}, {1, 1}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix({{1, 3}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix::preset("G2"), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix::type_e(9), InvalidArgument);
}

TEST(CoxeterMatrix, JsonRoundTripAndFiles) {
  auto f4 = CoxeterMatrix::preset("F4");
  EXPECT_EQ(CoxeterMatrix::from_json(f4.to_json()), f4);
  EXPECT_EQ(f4.to_json()["size"], 4);
  EXPECT_THROW(CoxeterMatrix::from_json(nlohmann::json{{"size", 3}, {"m", {{1, 3}, {3, 1}}}}), InvalidArgument);
  EXPECT_THROW(CoxeterMatrix::from_json(nlohmann::json{{"rows", 1}}), InvalidArgument);

  std::string path = ::testing::TempDir() + "coxstat_h3.json";
  {
    std::ofstream out(path);
    out << CoxeterMatrix::preset("H3").to_json().dump();
  }
  EXPECT_EQ(load_coxeter_matrix(path), CoxeterMatrix::preset("H3"));
  std::remove(path.c_str());
  EXPECT_THROW(load_coxeter_matrix("/nonexistent/matrix.json"), InvalidArgument);
}

TEST(CoxeterMatrix, ClassicalDiagrams) {
  EXPECT_EQ(CoxeterMatrix::classical(GroupDescriptor(Family::B, 3)),
            CoxeterMatrix({{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}));
  EXPECT_EQ(CoxeterMatrix::classical(GroupDescriptor(Family::D, 4)),
            CoxeterMatrix({{1, 2, 3, 2}, {2, 1, 3, 2}, {3, 3, 1, 3}, {2, 2, 3, 1}}));
  EXPECT_EQ(CoxeterMatrix::preset("E6").restricted({0, 2, 3, 4}), CoxeterMatrix::classical(GroupDescriptor(Family::A, 5)));
}

TEST(CoxeterGroup, PresetOrders) {
  struct Case {
    const char* name;
    std::uint64_t order;
    std::int64_t top;
  };
  for (const auto& [name, order, top] : {Case{"I2:5", 10, 5}, Case{"I2:6", 12, 6}, Case{"I2:10", 20, 10},
                                         Case{"H3", 120, 15}, Case{"F4", 1152, 24}, Case{"E6", 51840, 36}}) {
    auto g = CoxeterGroup::enumerate(CoxeterMatrix::preset(name));
    EXPECT_EQ(g.size(), order) << name;
    EXPECT_EQ(g.length(g.longest()), top) << name;
    EXPECT_TRUE(is_reciprocal(g.poincare_polynomial())) << name;
    EXPECT_EQ(static_cast<std::uint64_t>(g.poincare_polynomial().total_mass()), order);
  }
}

TEST(CoxeterGroup, Caps) {
  EXPECT_THROW(CoxeterGroup::enumerate(CoxeterMatrix::preset("E7"), 20000), CapExceeded);
  EXPECT_THROW(CoxeterGroup::enumerate(CoxeterMatrix::preset("H3"), 50), CapExceeded);
  EXPECT_THROW(CoxeterGroup::enumerate(CoxeterMatrix::dihedral(7)), InvalidArgument);
}

TEST(CoxeterGroup, H3DegreeProduct) {
  // Degrees 2, 6, 10.
  auto expected = oracle::multiply(oracle::multiply(oracle::q_integer(2), oracle::q_integer(6)), oracle::q_integer(10));
  EXPECT_EQ(oracle::to_poly(CoxeterGroup::enumerate(CoxeterMatrix::preset("H3")).poincare_polynomial()), expected);
}

// The generic engine on classical diagrams agrees with the window model.
TEST(CoxeterGroup, ClassicalDiagramsMatchWindows) {
  for (auto d : {GroupDescriptor(Family::A, 5), GroupDescriptor(Family::B, 4), GroupDescriptor(Family::D, 5)}) {
    auto g = CoxeterGroup::enumerate(CoxeterMatrix::classical(d));
    EXPECT_EQ(g.size(), group_order_u64(d)) << d;
    EXPECT_EQ(oracle::to_poly(g.poincare_polynomial()), oracle::poincare(d.family, d.n)) << d;
    // Words map to the same lengths in both models.
    const int first = d.first_generator();
    for (std::uint32_t w = 0; w < g.size(); w += 7) {
      auto f = g.parabolic_decompose(w, [&] {
        std::vector<int> all;
        for (int s = 0; s < g.rank(); ++s) all.push_back(s);
        return all;
      }());
      std::vector<int> word;
      for (int s : f.parabolic_word) word.push_back(s + first);
      EXPECT_EQ(length(from_word(d, word)), g.length(w));
    }
  }
}

TEST(CoxeterGroup, TablesAreConsistent) {
  auto g = CoxeterGroup::enumerate(CoxeterMatrix::preset("H3"));
  for (std::uint32_t w = 0; w < g.size(); ++w) {
    EXPECT_EQ(g.inverse(g.inverse(w)), w);
    EXPECT_EQ(g.length(g.inverse(w)), g.length(w));
    for (int s = 0; s < g.rank(); ++s) {
      EXPECT_EQ(g.right(g.right(w, s), s), w);
      EXPECT_EQ(g.left(w, s), g.inverse(g.right(g.inverse(w), s)));
      EXPECT_EQ(std::abs(g.length(g.right(w, s)) - g.length(w)), 1);
      EXPECT_EQ(g.has_right_descent(w, s), g.element(w).has_right_descent(s));
    }
    EXPECT_EQ(g.element(w).length(), g.length(w));
  }
  std::vector<int> twice{1, 1};
  EXPECT_EQ(g.from_word(twice), g.identity());
  EXPECT_TRUE(GenericElement::from_word(g.representation(), twice).is_identity());
}

TEST(CoxeterGroup, ParabolicDecomposition) {
  auto h3 = CoxeterGroup::enumerate(CoxeterMatrix::preset("H3"));
  std::vector<int> J{1, 2};
  std::uint64_t quotients = 0;
  for (std::uint32_t w = 0; w < h3.size(); ++w) {
    auto f = h3.parabolic_decompose(w, J);
    EXPECT_EQ(h3.length(f.w_quotient) + h3.length(f.w_parabolic), h3.length(w));
    EXPECT_EQ(static_cast<std::int64_t>(f.parabolic_word.size()), h3.length(f.w_parabolic));
    std::uint32_t product = f.w_quotient;
    for (int s : f.parabolic_word) product = h3.right(product, s);
    EXPECT_EQ(product, w);
    if (f.w_quotient == w) ++quotients;
    auto e = generic_parabolic_decompose(h3.element(w), J);
    EXPECT_EQ(e.w_quotient, h3.element(f.w_quotient));
  }
  EXPECT_EQ(quotients, 12U);

  auto f4 = CoxeterGroup::enumerate(CoxeterMatrix::preset("F4"));
  std::uint64_t f4_quotients = 0;
  for (std::uint32_t w = 0; w < f4.size(); ++w)
    if (f4.parabolic_decompose(w, {1, 2, 3}).w_quotient == w) ++f4_quotients;
  EXPECT_EQ(f4_quotients, 24U);
  EXPECT_THROW(f4.parabolic_decompose(0, {4}), InvalidArgument);
}

TEST(ParabolicModel, Search) {
  auto f4 = CoxeterMatrix::preset("F4");
  auto b3 = find_parabolic_model(f4, {1, 2, 3});
  ASSERT_TRUE(b3.has_value());
  EXPECT_EQ(b3->model, GroupDescriptor(Family::B, 3));
  auto a3 = find_parabolic_model(f4, {0, 1});
  ASSERT_TRUE(a3.has_value());
  EXPECT_EQ(a3->model, GroupDescriptor(Family::A, 3));
  auto e6 = CoxeterMatrix::preset("E6");
  auto d4 = find_parabolic_model(e6, {1, 2, 3, 4});
  ASSERT_TRUE(d4.has_value());
  EXPECT_EQ(d4->model, GroupDescriptor(Family::D, 4));
  EXPECT_FALSE(find_parabolic_model(CoxeterMatrix::preset("H3"), {1, 2}).has_value());
  // Listed in the wrong order, s3 s4 s2 is not the B3 diagram.
  EXPECT_FALSE(find_parabolic_model(f4, {2, 3, 1}).has_value());
}

TEST(GenericInduce, LengthInducesLength) {
  auto h3 = CoxeterGroup::enumerate(CoxeterMatrix::preset("H3"));
  EXPECT_EQ(make_generic_statistic(h3, "induced:len:{s1,s2}:right"), h3.lengths());
  EXPECT_EQ(make_generic_statistic(h3, "induced:len:{s1}:left"), h3.lengths());
  EXPECT_EQ(make_generic_statistic(h3, "len"), h3.lengths());
  auto i25 = CoxeterGroup::enumerate(CoxeterMatrix::preset("I2:5"));
  EXPECT_EQ(make_generic_statistic(i25, "induced:len:{s1}:right"), i25.lengths());
}

TEST(GenericInduce, EquidistributedWithLength) {
  struct Case {
    const char* group;
    const char* stat;
  };
  for (const auto& [group, stat] :
       {Case{"H3", "induced:maj:{s1,s2}:right"}, Case{"H3", "induced:maj:{s1,s2}:left"},
        Case{"F4", "induced:fmaj:{s2,s3,s4}:right"}, Case{"F4", "induced:nmaj:{s2,s3,s4}:left"},
        Case{"F4", "induced:maj:{s1,s2}:right"}, Case{"F4", "induced:majstar:{s3,s4}:right"}}) {
    auto g = CoxeterGroup::enumerate(CoxeterMatrix::preset(group));
    auto f = make_generic_statistic(g, stat);
    auto len = g.lengths();
    EXPECT_EQ(distribution(f), g.poincare_polynomial()) << group << " " << stat;
    EXPECT_TRUE(in_same_class(f, len, g.identity(), g.longest())) << group << " " << stat;
  }
}

TEST(GenericInduce, LeftAndRightShareTheDifferenceImage) {
  auto f4 = CoxeterGroup::enumerate(CoxeterMatrix::preset("F4"));
  auto right = make_generic_statistic(f4, "induced:fmaj:{s2,s3,s4}:right");
  auto left = make_generic_statistic(f4, "induced:fmaj:{s2,s3,s4}:left");
  auto len = f4.lengths();
  EXPECT_EQ(diff_image(len, left), diff_image(len, right));
  for (std::uint32_t w = 0; w < f4.size(); ++w) {
    EXPECT_GE(right[w], 0);
    EXPECT_LE(right[w], f4.length(f4.longest()));
  }
}

// A classical group fed through the generic engine reproduces the window-model
// induced statistic (nmaj as induced from maj).
TEST(GenericInduce, AgreesWithClassicalInduction) {
  GroupDescriptor b4(Family::B, 4);
  auto g = CoxeterGroup::enumerate(CoxeterMatrix::classical(b4));
  auto generic = make_generic_statistic(g, "induced:maj:{s2,s3,s4}:right");
  auto classical = make_statistic("nmaj", b4);
  EXPECT_EQ(joint_distribution(generic, g.lengths()), joint_distribution(classical, length_statistic(b4)));
}

TEST(GenericInduce, Errors) {
  auto h3 = CoxeterGroup::enumerate(CoxeterMatrix::preset("H3"));
  EXPECT_THROW(make_generic_statistic(h3, "maj"), InvalidArgument);
  EXPECT_THROW(make_generic_statistic(h3, "induced:maj:{s2,s3}:right"), InvalidArgument);
  EXPECT_THROW(make_generic_statistic(h3, "induced:maj:{s4}:right"), InvalidArgument);
  EXPECT_THROW(make_generic_statistic(h3, "induced:fmaj:{s1,s2}:right"), WrongFamily);
  ParabolicModel wrong{{0, 1}, GroupDescriptor(Family::B, 2)};
  EXPECT_FALSE(relabeling_matches(h3.matrix(), wrong));
  EXPECT_THROW(generic_induce(h3, make_statistic("nmaj", GroupDescriptor(Family::B, 2)), wrong), InvalidArgument);
  ParabolicModel right{{0, 1}, GroupDescriptor(Family::A, 3)};
  EXPECT_THROW(generic_induce(h3, make_statistic("nmaj", GroupDescriptor(Family::B, 2)), right), DescriptorMismatch);
  auto twice = Statistic("twice", GroupDescriptor(Family::A, 3), [](const SignedPermutation& w) { return 2 * length(w); });
  EXPECT_THROW(generic_induce(h3, twice, right), NotInLengthClass);
}
