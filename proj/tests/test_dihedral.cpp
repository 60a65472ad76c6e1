#include <gtest/gtest.h>

#include <set>

#include "sra/dihedral.hpp"
#include "sra/errors.hpp"

using namespace sra;

TEST(Dihedral, ProductRules) {
  EXPECT_EQ(GroupElem::R(5, 3) * GroupElem::R(5, 1), GroupElem::S(5, 2));
  EXPECT_EQ(GroupElem::S(5, 2) * GroupElem::S(5, 4), GroupElem::S(5, 1));
  EXPECT_EQ(GroupElem::R(5, 1) * GroupElem::S(5, 2), GroupElem::R(5, 4));
  EXPECT_EQ(GroupElem::S(5, 2) * GroupElem::R(5, 1), GroupElem::R(5, 3));
  EXPECT_THROW(GroupElem::R(5, 1) * GroupElem::R(3, 1), DimensionMismatch);
  EXPECT_EQ(GroupElem::S(5, -1), GroupElem::S(5, 4));
}

TEST(Dihedral, GroupAxiomsExhaustive) {
  for (int n : {2, 3, 4, 5, 6, 7}) {
    auto els = all_elements(n);
    ASSERT_EQ(els.size(), static_cast<std::size_t>(2 * n));
    GroupElem e = GroupElem::identity(n);
    for (const auto& g : els) {
      EXPECT_EQ(g * e, g);
      EXPECT_EQ(e * g, g);
      EXPECT_EQ(g * g.inverse(), e);
      GroupElem p = e;
      for (int i = 0; i < g.order(); ++i) p = p * g;
      EXPECT_EQ(p, e);
      for (const auto& h : els)
        for (const auto& k : els) EXPECT_EQ((g * h) * k, g * (h * k));
    }
  }
}

TEST(Dihedral, ConjugacyClasses) {
  auto c = conjugacy_class(GroupElem::S(3, 1));
  EXPECT_EQ(std::set<GroupElem>(c.begin(), c.end()), (std::set<GroupElem>{GroupElem::S(3, 1), GroupElem::S(3, 2)}));
  EXPECT_EQ(conjugacy_class(GroupElem::R(3, 0)).size(), 3u);
  auto r4 = conjugacy_class(GroupElem::R(4, 0));
  EXPECT_EQ(std::set<GroupElem>(r4.begin(), r4.end()), (std::set<GroupElem>{GroupElem::R(4, 0), GroupElem::R(4, 2)}));
  for (int n : {3, 4, 5, 6, 7}) {
    std::size_t total = 0;
    std::set<GroupElem> seen;
    for (const auto& cls : conjugacy_classes(n)) {
      total += cls.size();
      seen.insert(cls.begin(), cls.end());
    }
    EXPECT_EQ(total, static_cast<std::size_t>(2 * n));
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(2 * n));
  }
}

TEST(Dihedral, LQTable) {
  for (int n : {3, 4, 5, 6}) {
    GroupAlgElem zero(n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        bool sum0 = (k + l) % n == 0, diff0 = (k - l) % n == 0;
        using G = GroupAlgElem;
        EXPECT_EQ(G::L(n, k) * G::L(n, l), sum0 ? G::Q(n, l) : zero) << n << " " << k << " " << l;
        EXPECT_EQ(G::L(n, k) * G::Q(n, l), diff0 ? G::L(n, l) : zero);
        EXPECT_EQ(G::Q(n, k) * G::L(n, l), sum0 ? G::L(n, l) : zero);
        EXPECT_EQ(G::Q(n, k) * G::Q(n, l), diff0 ? G::Q(n, l) : zero);
      }
    GroupAlgElem sq(n), sl(n);
    for (int p = 0; p < n; ++p) {
      sq += GroupAlgElem::Q(n, p);
      sl += GroupAlgElem::L(n, p);
    }
    EXPECT_EQ(sq, GroupAlgElem(GroupElem::S(n, 0)));
    EXPECT_EQ(sl, GroupAlgElem(GroupElem::R(n, 0)));
  }
}

TEST(Dihedral, GroupAlgebraExamples) {
  GroupAlgElem q0 = GroupAlgElem::Q(3, 0);
  GroupAlgElem expect(3);
  for (int k = 0; k < 3; ++k) expect.add_term(GroupElem::S(3, k), CycloNum(Rational(1, 3)));
  EXPECT_EQ(q0, expect);
  EXPECT_EQ(q0 * q0, q0);
  GroupAlgElem x = GroupAlgElem(GroupElem::S(5, 1)) + GroupAlgElem(GroupElem::S(5, 2));
  EXPECT_EQ(x * GroupAlgElem(GroupElem::S(5, 4)), GroupAlgElem(GroupElem::S(5, 0)) + GroupAlgElem(GroupElem::S(5, 1)));
  EXPECT_EQ(GroupAlgElem::L(3, 1) * GroupAlgElem::L(3, 2), GroupAlgElem::Q(3, 2));
  EXPECT_TRUE((GroupAlgElem::Q(3, 1) * GroupAlgElem::Q(3, 2)).is_zero());
  EXPECT_EQ(GroupAlgElem::L(5, -1), GroupAlgElem::L(5, 4));
}
