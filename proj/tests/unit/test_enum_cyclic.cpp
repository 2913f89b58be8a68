#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "paramedial/enum_cyclic.hpp"
#include "paramedial/errors.hpp"
#include "paramedial/oracle.hpp"

using namespace paramedial;

namespace {

std::vector<std::array<Int, 3>> triples(const CyclicClassification& c) {
  std::vector<std::array<Int, 3>> out;
  for (const auto& f : c.forms) {
    const auto& parts = f.cyclic_parts();
    out.push_back({parts.phi.value(), parts.psi.value(), parts.c.value()});
  }
  return out;
}

}  // namespace

TEST(EnumerateCyclic, Z3ExplicitForms) {
  const auto c = enumerate_cyclic(Modulus(3));
  EXPECT_EQ(c.count, 5);
  const std::vector<std::array<Int, 3>> expected{{1, 1, 0}, {1, 2, 0}, {2, 1, 0}, {2, 2, 0}, {2, 2, 1}};
  EXPECT_EQ(triples(c), expected);
}

TEST(EnumerateCyclic, CountsMatchClosedForm) {
  for (Int p : {3, 5, 7, 11}) {
    for (int k = 1; k <= 3; ++k) {
      const Modulus m(p, k);
      const auto c = enumerate_cyclic(m);
      EXPECT_EQ(c.count, closed_form_count(m)) << m.to_string();
      EXPECT_EQ(static_cast<Int>(c.forms.size()), c.count);
      EXPECT_EQ(c.cases.size(), c.forms.size());
    }
  }
  for (int k = 1; k <= 5; ++k) {
    const Modulus m(2, k);
    EXPECT_EQ(enumerate_cyclic(m).count, closed_form_count(m)) << m.to_string();
  }
}

TEST(EnumerateCyclic, FormsAreSortedValidAndDistinct) {
  for (auto m : {Modulus(5, 2), Modulus(3, 3), Modulus(2, 4), Modulus(7, 1)}) {
    const auto c = enumerate_cyclic(m);
    for (std::size_t i = 1; i < c.forms.size(); ++i) EXPECT_LT(c.forms[i - 1], c.forms[i]);
    for (const auto& f : c.forms) {
      const auto& parts = f.cyclic_parts();
      EXPECT_EQ(parts.phi.pow(2), parts.psi.pow(2));
      EXPECT_NE(parts.phi.value() % m.prime(), 0);
      EXPECT_NE(parts.psi.value() % m.prime(), 0);
    }
  }
}

TEST(EnumerateCyclic, NoPairDegenerateInBothSums) {
  for (Int p : {3, 5, 7}) {
    for (int k = 1; k <= 3; ++k) {
      for (const auto& f : enumerate_cyclic(Modulus(p, k)).forms) {
        const auto& parts = f.cyclic_parts();
        const bool sum = (parts.phi.value() + parts.psi.value()) % p == 0;
        const bool diff = (parts.phi.value() - parts.psi.value()) % p == 0;
        EXPECT_FALSE(sum && diff);
      }
    }
  }
}

TEST(EnumerateCyclic, HalfCosetRepresentatives) {
  // Z_9: phi = 5 = 1/2 exactly, c in {0, 1, 3}; phi = 2 agrees with 1/2 only mod 3.
  const auto c = enumerate_cyclic(Modulus(3, 2));
  std::set<Int> half_c, near_c;
  for (std::size_t i = 0; i < c.forms.size(); ++i) {
    const auto& parts = c.forms[i].cyclic_parts();
    if (parts.phi.value() == 5 && parts.psi.value() == 5) {
      half_c.insert(parts.c.value());
      EXPECT_EQ(c.cases[i], "psi=phi=1/2");
    }
    if (parts.phi.value() == 2 && parts.psi.value() == 2) near_c.insert(parts.c.value());
  }
  EXPECT_EQ(half_c, (std::set<Int>{0, 1, 3}));
  EXPECT_EQ(near_c, (std::set<Int>{0, 1}));
}

TEST(ClosedFormCount, Examples) {
  EXPECT_EQ(closed_form_count(Modulus(3)), 5);
  EXPECT_EQ(closed_form_count(Modulus(3, 2)), 16);
  EXPECT_EQ(closed_form_count(Modulus(5, 3)), 231);
  EXPECT_EQ(closed_form_count(Modulus(5, 2)), 46);
  EXPECT_EQ(closed_form_count(Modulus(2, 1)), 1);
  EXPECT_EQ(closed_form_count(Modulus(2, 2)), 4);
  EXPECT_EQ(closed_form_count(Modulus(2, 3)), 16);
  for (Int p : {3, 5, 7, 11, 13}) EXPECT_EQ(closed_form_count(Modulus(p)), 2 * p - 1);
}

TEST(PqTotal, Examples) {
  EXPECT_EQ(pq_total(1), 1);
  EXPECT_EQ(pq_total(2), 1);
  EXPECT_EQ(pq_total(4), 11);
  EXPECT_EQ(pq_total(9), 50);
  EXPECT_EQ(pq_total(12), 55);
  EXPECT_EQ(pq_total(45), 450);
  EXPECT_EQ(pq_total(15), 5 * 9);
  EXPECT_EQ(pq_total(97), 193);
  EXPECT_THROW(pq_total(0), PreconditionViolation);
}

TEST(PqTotal, CubeFactorIsUnsupported) {
  try {
    pq_total(27);
    FAIL() << "expected UnsupportedOrder";
  } catch (const UnsupportedOrder& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("Z_27"), std::string::npos);
    EXPECT_NE(msg.find("Z_3 x Z_9"), std::string::npos);
    EXPECT_NE(msg.find("Z_3 x Z_3 x Z_3"), std::string::npos);
  }
  EXPECT_THROW(pq_total(8), UnsupportedOrder);
  EXPECT_THROW(pq_total(3 * 125), UnsupportedOrder);
}

TEST(EnumerateCyclic, RepresentativesHitEveryOrbitOnce) {
  for (auto [p, k] : std::vector<std::pair<Int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}) {
    const auto g = GroupDescriptor::cyclic(p, k);
    const auto cls = oracle::classify_triples(g, 27);
    const auto enumerated = enumerate_cyclic(Modulus(p, k));
    ASSERT_EQ(static_cast<Int>(cls.count()), enumerated.count) << g.name();
    auto hits = oracle::class_hits(cls, enumerated.forms);
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i < hits.size(); ++i) EXPECT_EQ(hits[i], i) << g.name();
  }
}
