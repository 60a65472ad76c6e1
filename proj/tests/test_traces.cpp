#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sra/errors.hpp"
#include "sra/traces.hpp"
#include "support.hpp"

using namespace sra;
using namespace sra::testing;

namespace {

struct Sample {
  AlgebraParams params;
  int kappa;
};

std::vector<CycloNum> sample_free(const AlgebraParams& p, int kappa, int seed) {
  int count = (!p.is_even() && kappa == -1) ? p.m() + 1 : p.m();
  std::vector<CycloNum> out;
  for (int i = 0; i < count; ++i) out.push_back(CycloNum(Rational(seed + 2 * i + 1, 3 + i)));
  return out;
}

TraceSpec sample_spec(const Sample& s, int seed = 1) {
  if (s.params.is_even() && s.kappa == -1) return klein_transport(make_trace_spec(s.params, 1, sample_free(s.params, 1, seed)));
  return make_trace_spec(s.params, s.kappa, sample_free(s.params, s.kappa, seed));
}

std::vector<Sample> samples() {
  return {{AlgebraParams::odd(3, Rational(1, 3)), 1},  {AlgebraParams::odd(3, Rational(2, 7)), -1},
          {AlgebraParams::odd(5, Rational(2, 5)), 1},  {AlgebraParams::odd(5, Rational(1, 2)), -1},
          {AlgebraParams::odd(7, Rational(-1, 4)), 1}, {AlgebraParams::even(4, Rational(1, 3), Rational(1, 5)), 1},
          {AlgebraParams::even(4, Rational(1, 3), Rational(1, 5)), -1},
          {AlgebraParams::even(6, Rational(1, 2), Rational(-2, 3)), 1},
          {AlgebraParams::even(2, Rational(1, 3), Rational(1, 7)), -1}};
}

CycloNum sign(int kappa, int pf, int pg) { return CycloNum(pf == 1 && pg == 1 ? kappa : 1); }

// Rank of a complex matrix by partial-pivot elimination.
int numeric_rank(std::vector<std::vector<std::complex<double>>> a) {
  int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0, rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int best = rank;
    for (int r = rank; r < rows; ++r)
      if (std::abs(a[r][c]) > std::abs(a[best][c])) best = r;
    if (std::abs(a[best][c]) < 1e-9) continue;
    std::swap(a[best], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Traces, GroupValuesMatchClosedFormsOddN3) {
  Rational nu(2, 7);
  auto p = AlgebraParams::odd(3, nu);
  auto tr = make_trace_spec(p, 1, {CycloNum(1)});
  for (int k = 0; k < 3; ++k) EXPECT_EQ(tr.group_value(GroupElem::R(3, k)), CycloNum(Rational(-3) * nu));
  EXPECT_EQ(tr.group_value(GroupElem::S(3, 0)), CycloNum(Rational(9) * nu * nu));
  EXPECT_EQ(tr.L_value(0), CycloNum(Rational(-3) * nu));
  auto str = make_trace_spec(p, -1, {CycloNum(1), CycloNum(1)});
  for (int k = 0; k < 3; ++k) EXPECT_EQ(str.group_value(GroupElem::R(3, k)), CycloNum(Rational(-3) * nu));
}

TEST(Traces, ZeroParametersGiveZeroFunctional) {
  auto p = AlgebraParams::odd(5, Rational(1, 3));
  auto tr = make_trace_spec(p, 1, {CycloNum(), CycloNum()});
  EXPECT_TRUE(tr.is_zero());
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(trace_eval(tr, random_element(rng, tr.algebra(), 4)).is_zero());
  EXPECT_EQ(gram_matrix(tr, 1).rank, 0);
}

TEST(Traces, WrongParameterCountThrows) {
  auto p = AlgebraParams::odd(5, Rational(1, 3));
  EXPECT_THROW(make_trace_spec(p, 1, {CycloNum(1)}), std::invalid_argument);
  EXPECT_THROW(make_trace_spec(p, -1, {CycloNum(1), CycloNum(1)}), std::invalid_argument);
  EXPECT_THROW(make_trace_spec(p, 2, {CycloNum(1), CycloNum(1)}), std::invalid_argument);
}

TEST(Traces, ClosedFormsAgreeWithEngineDerivation) {
  for (int n = 2; n <= 7; ++n)
    for (int kappa : {1, -1}) {
      if (n % 2 == 0 && kappa == -1) continue;
      for (int seed = 0; seed < 2; ++seed) {
        AlgebraParams p = n % 2 ? AlgebraParams::odd(n, Rational(seed + 1, 5))
                                : AlgebraParams::even(n, Rational(seed + 1, 5), Rational(2 - 3 * seed, 7));
        auto free = sample_free(p, kappa, seed);
        auto spec = make_trace_spec(p, kappa, free);
        auto derived = derive_group_values(p, kappa, free);
        for (int g = 0; g < 2 * n; ++g)
          EXPECT_EQ(spec.group_values()[g], derived[g]) << "n=" << n << " kappa=" << kappa << " g=" << g;
      }
    }
}

TEST(Traces, EvenReflectionValuesCoupleNu0ToEvenClass) {
  // s_1 = s_3 = 1, s_2 = 0: X1 = 0, X2 = sin^2(pi/4) + sin^2(3pi/4) = 1.
  // tr(R_even) = -2 nu0 X1 - 2 nu1 X2, tr(R_odd) = -2 nu1 X1 - 2 nu0 X2.
  auto p = AlgebraParams::even(4, Rational(1, 3), Rational(0));
  auto spec = make_trace_spec(p, 1, {CycloNum(1), CycloNum(0)});
  EXPECT_EQ(spec.group_value(GroupElem::R(4, 0)), CycloNum(0));
  EXPECT_EQ(spec.group_value(GroupElem::R(4, 1)), CycloNum(Rational(-2, 3)));
  auto q = AlgebraParams::even(4, Rational(0), Rational(1, 3));
  auto spec2 = make_trace_spec(q, 1, {CycloNum(1), CycloNum(0)});
  EXPECT_EQ(spec2.group_value(GroupElem::R(4, 0)), CycloNum(Rational(-2, 3)));
  EXPECT_EQ(spec2.group_value(GroupElem::R(4, 1)), CycloNum(0));
  for (const auto& params : {p, q}) {
    auto derived = derive_group_values(params, 1, {CycloNum(1), CycloNum(0)});
    auto s2 = make_trace_spec(params, 1, {CycloNum(1), CycloNum(0)});
    for (int g = 0; g < 8; ++g) EXPECT_EQ(derived[g], s2.group_values()[g]);
  }
}

TEST(Traces, LValuesVanishOffCenter) {
  for (int n : {3, 5, 7}) {
    auto p = AlgebraParams::odd(n, Rational(1, 3));
    for (int kappa : {1, -1}) {
      auto spec = make_trace_spec(p, kappa, sample_free(p, kappa, 2));
      for (int q = 1; q < n; ++q) EXPECT_TRUE(spec.L_value(q).is_zero());
    }
  }
  auto p = AlgebraParams::even(6, Rational(1, 2), Rational(1, 5));
  auto spec = make_trace_spec(p, 1, sample_free(p, 1, 1));
  for (int q = 1; q < 6; ++q)
    if (q != 3) EXPECT_TRUE(spec.L_value(q).is_zero());
  EXPECT_FALSE(spec.L_value(3).is_zero());
}

TEST(Traces, GroundLevelIdentities) {
  for (int n : {3, 5, 7}) {
    auto p = AlgebraParams::odd(n, Rational(2, 5));
    auto spec = make_trace_spec(p, 1, sample_free(p, 1, 3));
    auto alg = spec.algebra();
    EXPECT_TRUE(trace_eval(spec, alg->one() + alg->mu_l0()).is_zero());
    auto c = commutator(alg->gen(Letter::a0), alg->gen(Letter::b1));
    EXPECT_TRUE(trace_eval(spec, c).is_zero());
    EXPECT_TRUE(trace_eval(spec, c * alg->group(GroupElem::S(n, 0))).is_zero());
  }
}

TEST(Traces, KappaCyclicityOnRandomPairs) {
  std::mt19937 rng(11);
  for (const auto& s : samples()) {
    auto spec = sample_spec(s);
    auto alg = spec.algebra();
    for (int i = 0; i < 25; ++i) {
      int pf = static_cast<int>(rng() % 2), pg = static_cast<int>(rng() % 2);
      auto f = random_homogeneous(rng, alg, 3, pf);
      auto g = random_homogeneous(rng, alg, 3, pg);
      auto lhs = trace_eval(spec, f * g);
      auto rhs = sign(s.kappa, pf, pg) * trace_eval(spec, g * f);
      EXPECT_EQ(lhs, rhs) << s.params.str() << " kappa=" << s.kappa << "\n f=" << f.str() << "\n g=" << g.str();
    }
  }
}

TEST(Traces, KappaCyclicityOnRandomTriples) {
  std::mt19937 rng(12);
  for (const auto& s : samples()) {
    auto spec = sample_spec(s, 2);
    auto alg = spec.algebra();
    for (int i = 0; i < 10; ++i) {
      int px = static_cast<int>(rng() % 2), py = static_cast<int>(rng() % 2), pz = static_cast<int>(rng() % 2);
      auto x = random_homogeneous(rng, alg, 2, px);
      auto y = random_homogeneous(rng, alg, 2, py);
      auto z = random_homogeneous(rng, alg, 2, pz);
      EXPECT_EQ(trace_eval(spec, x * y * z), sign(s.kappa, px, (py + pz) % 2) * trace_eval(spec, y * z * x));
    }
  }
}

TEST(Traces, VanishesOnOddElements) {
  std::mt19937 rng(13);
  for (const auto& s : samples()) {
    auto spec = sample_spec(s);
    for (int i = 0; i < 10; ++i) {
      auto x = random_homogeneous(rng, spec.algebra(), 5, 1);
      EXPECT_TRUE(trace_eval(spec, x).is_zero());
    }
  }
}

TEST(Traces, Sl2Invariance) {
  std::mt19937 rng(14);
  for (const auto& s : samples()) {
    auto spec = sample_spec(s);
    auto alg = spec.algebra();
    for (int i = 0; i < 6; ++i) {
      auto f = random_element(rng, alg, 4);
      for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b) EXPECT_TRUE(trace_eval(spec, commutator(alg->sl2(a, b), f)).is_zero());
    }
  }
}

TEST(Traces, OddSingletPowersOnQ0Vanish) {
  for (const auto& s : samples()) {
    auto spec = sample_spec(s);
    auto alg = spec.algebra();
    auto sq = alg->singlet() * alg->Q(0);
    EXPECT_TRUE(trace_eval(spec, sq).is_zero());
    EXPECT_TRUE(trace_eval(spec, alg->singlet() * alg->singlet() * sq).is_zero());
  }
}

TEST(Traces, LinearInElement) {
  std::mt19937 rng(15);
  auto spec = sample_spec(samples()[2]);
  auto alg = spec.algebra();
  for (int i = 0; i < 10; ++i) {
    auto x = random_element(rng, alg, 4), y = random_element(rng, alg, 4);
    auto c = random_scalar(rng, 5);
    EXPECT_EQ(trace_eval(spec, c * x + y), c * trace_eval(spec, x) + trace_eval(spec, y));
  }
}

TEST(Traces, KleinTransportGivesSupertrace) {
  std::mt19937 rng(16);
  auto p = AlgebraParams::even(4, Rational(2, 3), Rational(1, 4));
  auto tr = make_trace_spec(p, 1, sample_free(p, 1, 4));
  auto str = klein_transport(tr);
  EXPECT_EQ(str.kappa(), -1);
  auto alg = tr.algebra();
  for (int i = 0; i < 15; ++i) {
    auto x = random_element(rng, alg, 4);
    // str(x) = tr(x K) for even x.
    EXPECT_EQ(trace_eval(str, x), trace_eval(tr, x.parity_part(0) * alg->group(klein_element(4))));
  }
  EXPECT_THROW(klein_transport(make_trace_spec(AlgebraParams::odd(3, Rational(1, 3)), 1, {CycloNum(1)})),
               std::invalid_argument);
}

TEST(Traces, InconsistentGroupValuesAreRejected) {
  auto p = AlgebraParams::odd(3, Rational(1, 3));
  std::vector<CycloNum> values(6, CycloNum(1));
  auto bad = trace_spec_from_group_values(p, 1, values);
  auto alg = bad.algebra();
  EXPECT_THROW(trace_eval(bad, alg->gen(Letter::a0) * alg->gen(Letter::b1)), InconsistentSystem);
}

TEST(Traces, StatsRecordEachDegree) {
  auto spec = sample_spec(samples()[0]);
  auto alg = spec.algebra();
  auto x = alg->gen(Letter::a0) * alg->gen(Letter::a0) * alg->gen(Letter::b1) * alg->gen(Letter::b1);
  trace_eval(spec, x);
  auto st = spec.table().stats();
  ASSERT_EQ(st.size(), 2u);
  EXPECT_EQ(st[0].degree, 2);
  EXPECT_EQ(st[1].degree, 4);
  EXPECT_EQ(st[1].unknowns, 3 * 3 * 6);
}

TEST(Traces, PbwBasisCounts) {
  EXPECT_EQ(pbw_basis(3, 0).size(), 6u);
  EXPECT_EQ(pbw_basis(3, 1).size(), 30u);
  EXPECT_EQ(pbw_basis(3, 2).size(), 6u * 15);
}

TEST(Traces, GramOnGroupAlgebraMatchesDirectAssembly) {
  for (Rational nu : {Rational(0), Rational(1, 3)}) {
    auto p = AlgebraParams::odd(3, nu);
    auto spec = make_trace_spec(p, 1, {CycloNum(1)});
    auto rep = gram_matrix(spec, 0);
    ASSERT_EQ(rep.basis.size(), 6u);
    std::vector<std::vector<std::complex<double>>> direct(6, std::vector<std::complex<double>>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        GroupElem g = GroupElem::from_code(3, rep.basis[i].g), h = GroupElem::from_code(3, rep.basis[j].g);
        CycloNum v = spec.group_value(g * h);
        EXPECT_EQ(rep.matrix.at(i, j), v);
        direct[i][j] = v.to_complex();
      }
    int r = numeric_rank(direct);
    EXPECT_GE(r, 1);
    EXPECT_EQ(rep.rank, r);
    EXPECT_EQ(static_cast<int>(rep.kernel.size()), 6 - r);
  }
}

TEST(Traces, GramIsKappaSymmetricAndKernelIsNull) {
  for (const auto& s : {samples()[0], samples()[1], samples()[6]}) {
    auto spec = sample_spec(s);
    auto rep = gram_matrix(spec, 1);
    int nb = static_cast<int>(rep.basis.size());
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        EXPECT_EQ(rep.matrix.at(i, j),
                  sign(s.kappa, rep.basis[i].parity(), rep.basis[j].parity()) * rep.matrix.at(j, i));
    EXPECT_EQ(rep.rank + static_cast<int>(rep.kernel.size()), nb);
    auto alg = spec.algebra();
    for (const auto& v : rep.kernel)
      for (const auto& m : rep.basis) EXPECT_TRUE(trace_eval(spec, v * alg->monomial(m)).is_zero());
  }
}
