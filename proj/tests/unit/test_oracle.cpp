#include <gtest/gtest.h>

#include <numeric>

#include "paramedial/enum_cyclic.hpp"
#include "paramedial/enum_gl2.hpp"
#include "paramedial/oracle.hpp"

using namespace paramedial;
using namespace paramedial::oracle;

TEST(Orbits, TrivialGroup) {
  ActionSpec<int, int> spec{
      .elements = {0},
      .generators = {},
      .points = {1, 2, 3, 4, 5},
      .act = [](int, int x) { return x; },
      .compose = [](int, int) { return 0; },
      .identity = 0,
  };
  const auto part = orbits(spec);
  EXPECT_EQ(part.size(), 5u);
  for (auto s : part.stabilizer_orders) EXPECT_EQ(s, 1u);
}

TEST(Orbits, ScalingZ5) {
  ActionSpec<int, int> spec{
      .elements = {1, 2, 3, 4},
      .generators = {},
      .points = {0, 1, 2, 3, 4},
      .act = [](int g, int x) { return g * x % 5; },
      .compose = [](int g, int h) { return g * h % 5; },
      .identity = 1,
  };
  const auto part = orbits(spec);
  ASSERT_EQ(part.size(), 2u);
  EXPECT_EQ(part.orbits[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(part.orbits[1], (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(part.stabilizer_orders, (std::vector<std::uint64_t>{4, 1}));
  EXPECT_TRUE(part.burnside_checked);
  EXPECT_EQ(part.fixed_point_total, 8u);
}

TEST(Orbits, BudgetAndBrokenActions) {
  ActionSpec<int, int> spec{
      .elements = {1, 2, 3, 4},
      .generators = {},
      .points = {0, 1, 2, 3, 4},
      .act = [](int g, int x) { return g * x % 5; },
      .compose = [](int g, int h) { return g * h % 5; },
      .identity = 1,
  };
  OrbitOptions tight;
  tight.max_points = 3;
  EXPECT_THROW(orbits(spec, tight), BoundExceeded);

  auto leaking = spec;
  leaking.act = [](int g, int x) { return g * x; };
  EXPECT_THROW(orbits(leaking), PreconditionViolation);

  auto bad_identity = spec;
  bad_identity.identity = 2;
  EXPECT_THROW(orbits(bad_identity), PreconditionViolation);

  auto weak_generators = spec;
  weak_generators.generators = {4};
  EXPECT_THROW(orbits(weak_generators), Error);
}

TEST(ClassifyTriples, SmallGroups) {
  EXPECT_EQ(classify_triples(GroupDescriptor::cyclic(3, 1)).count(), 5u);
  EXPECT_EQ(classify_triples(GroupDescriptor::elem2(2)).count(), 7u);
  EXPECT_EQ(classify_triples(GroupDescriptor::elem2(3)).count(), 34u);
  EXPECT_EQ(classify_triples(GroupDescriptor::cyclic(2, 1)).count(), 1u);
  for (Int p : {3, 5, 7}) {
    EXPECT_EQ(static_cast<Int>(classify_triples(GroupDescriptor::cyclic(p, 1)).count()), 2 * p - 1);
  }
  EXPECT_THROW(classify_triples(GroupDescriptor::cyclic(3, 3)), BoundExceeded);
  EXPECT_THROW(classify_triples(GroupDescriptor::elem2(7)), BoundExceeded);
}

TEST(ClassifyTriples, PartitionInvariants) {
  for (auto g : {GroupDescriptor::cyclic(3, 2), GroupDescriptor::elem2(3), GroupDescriptor::cyclic(2, 3)}) {
    const auto cls = classify_triples(g);
    const auto& part = cls.partition;
    EXPECT_EQ(part.size(), cls.burnside_count);
    EXPECT_TRUE(part.burnside_checked);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      covered += part.orbits[i].size();
      EXPECT_EQ(part.orbits[i].size() * part.stabilizer_orders[i], part.group_order);
      EXPECT_EQ(part.orbits[i].front(), part.representatives[i]);
    }
    EXPECT_EQ(covered, cls.points.size());
    for (std::size_t i = 1; i < cls.representatives.size(); ++i) {
      EXPECT_LT(cls.representatives[i - 1], cls.representatives[i]);
    }
    for (const auto& p : cls.points) {
      const auto t = materialize(p);
      EXPECT_TRUE(is_latin(t));
    }
  }
}

TEST(ClassifyTriples, ClassOfRejectsForeignForms) {
  const auto cls = classify_triples(GroupDescriptor::cyclic(3, 1));
  EXPECT_THROW(cls.class_of(AffineForm::cyclic(5, 1, 1, 1, 0)), PreconditionViolation);
}

TEST(BurnsideTriples, MatchesClosedForms) {
  for (auto [p, k] : std::vector<std::pair<Int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    EXPECT_EQ(static_cast<Int>(burnside_triple_count(GroupDescriptor::cyclic(p, k))), closed_form_count(Modulus(p, k)));
  }
  EXPECT_EQ(burnside_triple_count(GroupDescriptor::elem2(2)), 7u);
  EXPECT_EQ(burnside_triple_count(GroupDescriptor::elem2(3)), 34u);
  EXPECT_EQ(burnside_triple_count(GroupDescriptor::elem2(5)), 98u);
  EXPECT_EQ(burnside_triple_count(GroupDescriptor::elem2(7), 49), 194u);
}

TEST(TableIsomorphic, Examples) {
  const auto add = materialize(AffineForm::cyclic(3, 1, 1, 1, 0));
  const auto neg = materialize(AffineForm::cyclic(3, 1, 2, 2, 0));
  EXPECT_TRUE(table_isomorphic(add, add));
  EXPECT_FALSE(table_isomorphic(add, neg));

  const auto reps = enumerate_cyclic(Modulus(3)).forms;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      EXPECT_EQ(table_isomorphic(materialize(reps[i]), materialize(reps[j])), i == j);
    }
  }
  EXPECT_THROW(table_isomorphic(materialize(AffineForm::cyclic(11, 1, 1, 1, 0)),
                                materialize(AffineForm::cyclic(11, 1, 1, 1, 0))),
               BoundExceeded);
}

TEST(TableIsomorphic, RelabelledTableIsIsomorphic) {
  const auto t = materialize(AffineForm::cyclic(3, 2, 2, 7, 1));
  const std::vector<std::uint32_t> sigma{4, 0, 8, 2, 6, 1, 3, 7, 5};
  std::vector<std::uint32_t> cells(81);
  for (std::size_t x = 0; x < 9; ++x) {
    for (std::size_t y = 0; y < 9; ++y) cells[sigma[x] * 9 + sigma[y]] = sigma[t.at(x, y)];
  }
  EXPECT_TRUE(table_isomorphic(t, QuasigroupTable(9, cells)));
}

TEST(TableIsomorphic, AgreesWithTriplesAtOrderFour) {
  // Z_4 and Z_2^2 together: 4 + 7 = 11 table classes.
  std::vector<QuasigroupTable> tables;
  for (const auto& f : classify_triples(GroupDescriptor::cyclic(2, 2)).points) tables.push_back(materialize(f));
  for (const auto& f : classify_triples(GroupDescriptor::elem2(2)).points) tables.push_back(materialize(f));
  EXPECT_EQ(table_isomorphism_classes(tables).size(), 11u);
}

TEST(Congruence, PrimeOrderHasNone) {
  for (const auto& f : enumerate_cyclic(Modulus(5)).forms) EXPECT_FALSE(has_proper_congruence(materialize(f)));
  for (const auto& f : enumerate_cyclic(Modulus(3, 2)).forms) {
    EXPECT_TRUE(has_proper_congruence(materialize(f)));
    EXPECT_TRUE(has_proper_subgroup_congruence(materialize(f), GroupDescriptor::cyclic(3, 2)));
  }
}

TEST(LatinSquares, Counts) {
  const std::vector<std::size_t> expected{1, 2, 12, 576, 161280};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_latin_square(n, [&](const QuasigroupTable& t) {
      ++count;
      if (n <= 3) EXPECT_TRUE(is_latin(t));
    });
    EXPECT_EQ(count, expected[n - 1]);
  }
}
