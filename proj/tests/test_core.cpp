#include "support.hpp"

#include <gtest/gtest.h>

using namespace gavkit;
using namespace gavkit::testing;

namespace {

// Class of sum_j x_j D_j.
KElement class_of(const DegreeData& dd, const IntVec& x) { return dd.class_of(x); }

// deg(T_i^{l_i}) as a coefficient vector on the columns.
IntVec monomial_vector(const ArrangementData& d, std::size_t i) {
  IntVec x(d.num_columns(), BigInt(0));
  for (std::size_t j = 0; j < d.n[i]; ++j) x[d.column(i, j)] = d.l[i][j];
  return x;
}

std::vector<ArrangementData> random_valid(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::vector<ArrangementData> out;
  while (out.size() < count) {
    ArrangementData d = random_arrangement(g);
    if (validate(d).empty()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

TEST(Validate, WorkedExampleIsValid) { EXPECT_TRUE(validate(worked_example()).empty()); }

TEST(Validate, DuplicateColumn) {
  ArrangementData d = worked_example();
  d.n = {2, 2, 1};
  d.l = {make_int_vec({2, 1}), make_int_vec({2, 2}), make_int_vec({3})};
  d.D = IntMat::from_rows({make_int_vec({-1, -2, 1, 1, 2})});
  auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("pairwise different"), std::string::npos);
}

TEST(Validate, NonPrimitiveColumn) {
  ArrangementData d = worked_example();
  d.D(0, 2) = 2;  // v11 = (2,0,2)
  auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("primitive"), std::string::npos);
}

TEST(Validate, DependentColumnsOfA) {
  ArrangementData d = worked_example();
  d.A(1, 2) = 0;
  d.A(1, 0) = 0;  // columns 0 and 2 of A become dependent
  auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(v.front().find("linearly independent"), std::string::npos);
}

TEST(Relations, WorkedExample) {
  ArrangementData d = worked_example();
  auto rel = relations(d);
  ASSERT_EQ(rel.size(), 1u);
  EXPECT_EQ(rel[0].blocks, (std::vector<std::size_t>{0, 1, 2}));
  // T01^2 T02 + T11^2 + T21^3 up to an overall sign: all coefficients equal.
  const Rat c = rel[0].coefficients[0];
  EXPECT_FALSE(c.is_zero());
  for (const auto& x : rel[0].coefficients) EXPECT_EQ(x, c);
  EXPECT_EQ(d.l[0], make_int_vec({2, 1}));
  EXPECT_EQ(d.l[1], make_int_vec({2}));
  EXPECT_EQ(d.l[2], make_int_vec({3}));
}

TEST(Relations, NoneWhenREqualsC) {
  ArrangementData d;
  d.r = 1;
  d.c = 1;
  d.n = {1, 1};
  d.l = {make_int_vec({1}), make_int_vec({1})};
  d.A = RatMat::identity(2);
  d.D = IntMat::from_rows({make_int_vec({1, 0})});
  EXPECT_TRUE(relations(d).empty());
}

TEST(Relations, SettingOneTrinomial) {
  ArrangementData d = setting_data(1, {2, 3, -3});
  auto rel = relations(d);
  ASSERT_EQ(rel.size(), 1u);
  // det [a0 a1 a2; T0^l0 T1^l1 T2^l2] for A = [[-1,1,0],[-1,0,1]]: all three minors equal 1.
  for (const auto& x : rel[0].coefficients) EXPECT_EQ(x, Rat(1));
  EXPECT_EQ(d.l[0], make_int_vec({1, 1}));
  EXPECT_EQ(d.l[1], make_int_vec({1, 1}));
  EXPECT_EQ(d.l[2], make_int_vec({2}));
}

TEST(DegreeMap, WorkedExample) {
  DegreeData dd = degree_map(worked_example());
  EXPECT_EQ(dd.free_rank, 1u);
  EXPECT_TRUE(dd.torsion.empty());
  EXPECT_EQ(dd.free_degrees(),
            (std::vector<IntVec>{make_int_vec({5}), make_int_vec({8}), make_int_vec({9}), make_int_vec({6})}));
}

TEST(DegreeMap, TrivialForSurjectiveTranspose) {
  // P = identity-like: r = 1, c = 1, s = 1 with columns e1-ish spanning Z^2 unimodularly.
  ArrangementData d;
  d.r = 1;
  d.c = 1;
  d.n = {1, 1};
  d.l = {make_int_vec({1}), make_int_vec({1})};
  d.A = RatMat::identity(2);
  d.D = IntMat::from_rows({make_int_vec({1, 0})});
  ASSERT_TRUE(validate(d).empty());
  DegreeData dd = degree_map(d);
  EXPECT_EQ(dd.free_rank, 0u);
  EXPECT_TRUE(dd.torsion.empty());
}

TEST(DegreeMap, RandomPresentationProperties) {
  for (const auto& d : random_valid(80, 21)) {
    DegreeData dd = degree_map(d);
    ASSERT_EQ(dd.free_rank, d.num_columns() - d.ambient_dim());
    // Q(row of P) = 0
    IntMat P = d.P();
    for (const auto& row : P.row_list()) {
      KElement e = class_of(dd, row);
      ASSERT_TRUE(is_zero(e.free));
      for (const auto& t : e.tors) ASSERT_EQ(t, 0);
    }
    // deg(T_i^{l_i}) is the same for all blocks
    KElement mu = class_of(dd, monomial_vector(d, 0));
    for (std::size_t i = 1; i <= d.r; ++i) ASSERT_EQ(class_of(dd, monomial_vector(d, i)), mu);
    ASSERT_EQ(dd.relation_degree, mu);
  }
}

TEST(MovingCone, WorkedExampleIsHalfLine) {
  Cone mov = moving_cone(worked_example());
  EXPECT_EQ(mov, Cone::from_generators(1, {make_int_vec({1})}));
}

TEST(MovingCone, RankTwoAgainstPointwiseIntersection) {
  std::mt19937_64 g(22);
  int tested = 0;
  for (const auto& d : random_valid(300, 23)) {
    DegreeData dd = degree_map(d);
    if (dd.free_rank != 2) continue;
    Cone mov;
    try {
      mov = moving_cone(d, dd);
    } catch (const NotQuasiprojectiveSetup&) {
      continue;
    }
    auto w = dd.free_degrees();
    for (int s = 0; s < 60; ++s) {
      RatVec x{Rat(uniform(g, -6, 6)), Rat(uniform(g, -6, 6))};
      bool expect = true;
      for (std::size_t skip = 0; skip < w.size(); ++skip) {
        std::vector<IntVec> rest;
        for (std::size_t j = 0; j < w.size(); ++j)
          if (j != skip) rest.push_back(w[j]);
        if (!Cone::from_generators(2, rest).contains(x)) expect = false;
      }
      ASSERT_EQ(mov.contains(x), expect);
    }
    ++tested;
  }
  EXPECT_GT(tested, 5);
}

TEST(Anticanonical, WorkedExample) {
  KElement k = anticanonical_class(worked_example());
  EXPECT_EQ(k.free, make_int_vec({10}));
}

TEST(Anticanonical, IndependentOfBlock) {
  std::vector<ArrangementData> ds = random_valid(60, 24);
  ds.push_back(setting_data(1, {2, 3, -3}));
  ds.push_back(setting_data(1, {3, 4, -7}));
  for (const auto& d : ds) {
    DegreeData dd = degree_map(d);
    KElement k = anticanonical_class(d, dd);
    const BigInt rc(d.r - d.c);
    for (std::size_t i = 0; i <= d.r; ++i) {
      IntVec x(d.num_columns(), BigInt(1));
      for (std::size_t j = 0; j < d.n[i]; ++j) x[d.column(i, j)] -= rc * d.l[i][j];
      ASSERT_EQ(class_of(dd, x), k) << "block " << i;
    }
  }
}

TEST(FanFromAmple, WorkedExample) {
  ArrangementData d = worked_example();
  Fan f = fan_from_ample(d, rv({10}));
  TropStructure trop(d);
  EXPECT_TRUE(same_fan(prune_to_minimal(trop, f), worked_example_fan()));
  EXPECT_TRUE(same_fan(fan_from_ample(d, rv({1})), f));
  EXPECT_TRUE(same_fan(fan_from_ample(d, rv({30})), f));
  EXPECT_THROW(fan_from_ample(d, rv({0})), NotAmple);
  EXPECT_THROW(fan_from_ample(d, rv({-1})), NotAmple);
}

TEST(Fano, WorkedExample) {
  FanoResult fr = is_fano(worked_example());
  ASSERT_TRUE(fr.fano);
  TropStructure trop(worked_example());
  EXPECT_TRUE(same_fan(prune_to_minimal(trop, *fr.fan), worked_example_fan()));
}

TEST(Fano, ZeroAnticanonicalClass) {
  ArrangementData d;
  d.r = 2;
  d.c = 1;
  d.n = {1, 1, 1};
  d.l = {make_int_vec({1}), make_int_vec({1}), make_int_vec({1})};
  d.A = standard_A();
  d.D = IntMat::from_rows({make_int_vec({0, 0, 1})});
  ASSERT_TRUE(validate(d).empty());
  EXPECT_FALSE(is_fano(d).fano);
}

TEST(Fano, SettingFiveCandidates) {
  SettingRun run = run_setting(5, 1);
  ASSERT_FALSE(run.accepted.empty());
  for (const auto& c : run.accepted) EXPECT_TRUE(is_fano(c.data).fano);
}
