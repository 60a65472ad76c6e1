#include "sra/singular.hpp"

#include <algorithm>
#include <stdexcept>

#include "sra/errors.hpp"

namespace sra {

namespace {

const char* const kFamilyNames[] = {"th2_item1", "th2_item2", "th2_item3", "nondegenerate", "Ak1",
                                    "Ak3",       "Ak4",       "Ak5",       "generic"};

void check_odd(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd n >= 3 required");
}

void check_kappa(int kappa) {
  if (kappa != 1 && kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
}

bool is_half_integer(const Rational& r) { return (r * Rational(2)).is_integer() && !r.is_integer(); }

// mu in Z \ mZ
bool in_z_minus_mz(const Rational& mu, int m) {
  if (!mu.is_integer()) return false;
  return mpz_class(mu.num() % m) != 0;
}

CycloNum sq(const CycloNum& x) { return x * x; }

struct Rows147 {
  CycloMatrix g;      // g_k(t_{k,l})
  CycloMatrix dg;     // d/dt g_k(t_{k,l})
};

Rows147 build_147(int n, int kappa, const Rational& nu) {
  check_odd(n);
  check_kappa(kappa);
  AlgebraParams params = AlgebraParams::odd(n, nu);
  const Rational& mu = params.mu0;
  int m = n / 2;
  int nfree = kappa == 1 ? m : m + 1;
  int theta = kappa == 1 ? 0 : 1;

  // Linear dependence of sp(L_0) and sp(S_k) on the free parameters.
  std::vector<CycloNum> l0(nfree);
  std::vector<std::vector<CycloNum>> sk(n, std::vector<CycloNum>(nfree));
  for (int j = 0; j < nfree; ++j) {
    std::vector<CycloNum> e(nfree);
    e[j] = CycloNum(1);
    TraceSpec s = make_trace_spec(params, kappa, e);
    l0[j] = s.L_value(0);
    for (int k = 0; k < n; ++k) sk[k][j] = s.group_value(GroupElem::S(n, k));
  }

  Rows147 r{CycloMatrix(2 * n, nfree), CycloMatrix(2 * n, nfree)};
  CycloNum kap(kappa);
  CycloNum two(2);
  for (int k = 0; k < n; ++k) {
    CycloNum lam = CycloNum::root_of_unity(n, k);
    CycloNum laminv = CycloNum::root_of_unity(n, -k);
    CycloNum ck = kap * laminv * sq(kap - lam);
    for (int l = 0; l < 2; ++l) {
      int row = 2 * k + l;
      // t/pi
      Rational tp = Rational(2 * k, n) + Rational(2 * l + theta);
      CycloNum eit = exp_i_pi(tp);
      CycloNum cosv = trig_value(TrigKind::Cos, mu * tp);
      CycloNum sinv = trig_value(TrigKind::Sin, mu * tp);
      // (2/mu)(cos(t mu) - 1); identically 0 at mu = 0
      CycloNum a = mu.is_zero() ? CycloNum() : CycloNum(Rational(2) / mu) * (cosv - CycloNum(1));
      CycloNum da = CycloNum(-2) * sinv + two * kap * laminv * eit * sinv +
                    two * CycloNum::i() * CycloNum(mu) * laminv * (lam - kap * eit) * cosv;
      // The sin(t mu) term of g_k carries the factor (lambda^k - kappa e^{it}).
      a += two * CycloNum::i() * laminv * (lam - kap * eit) * sinv;
      for (int j = 0; j < nfree; ++j) {
        r.g.at(row, j) = a * l0[j] + ck * sk[k][j];
        r.dg.at(row, j) = da * l0[j];
      }
    }
  }
  return r;
}

SingularFamily classify_odd(int n, int kappa, const Rational& nu) {
  if (kappa == -1 && is_half_integer(nu)) return SingularFamily::Th2Item3;
  if (in_z_minus_mz(Rational(n) * nu, n)) return kappa == 1 ? SingularFamily::Th2Item1 : SingularFamily::Th2Item2;
  return SingularFamily::Nondegenerate;
}

int span_rank(const std::vector<std::vector<CycloNum>>& vs, int cols) {
  if (vs.empty()) return 0;
  CycloMatrix a(static_cast<int>(vs.size()), cols);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < cols; ++j) a.at(static_cast<int>(i), j) = vs[i][j];
  return rank(a);
}

std::vector<Rational> sorted_freqs(const ExpPolyFn& f) {
  auto q = quasipoly_check(f);
  if (!q.is_quasipoly) throw NondegenerateSpec("spec is nondegenerate");
  std::vector<Rational> v = q.form->freqs;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string family_name(SingularFamily f) { return kFamilyNames[static_cast<int>(f)]; }

SingularFamily family_from_name(const std::string& s) {
  for (int i = 0; i < 9; ++i)
    if (s == kFamilyNames[i]) return static_cast<SingularFamily>(i);
  throw std::invalid_argument("unknown family: " + s);
}

CycloMatrix system_147(int n, int kappa, const Rational& nu) { return build_147(n, kappa, nu).g; }

SingularVerdict solve_147(int n, int kappa, const Rational& nu) {
  Rows147 r = build_147(n, kappa, nu);
  SingularVerdict v;
  v.params = AlgebraParams::odd(n, nu);
  v.kappa = kappa;
  v.basis = kernel(r.g);
  v.solution_dim = static_cast<int>(v.basis.size());
  v.matched_family = classify_odd(n, kappa, nu);
  for (const auto& b : v.basis)
    for (const auto& d : r.dg.apply(b))
      if (!d.is_zero()) throw InconsistentSystem("d/dt g_k(t_{k,l}) does not vanish on a solution");
  return v;
}

std::vector<CycloNum> degenerate_family_values(int n, int kappa, const DegenerateFamily& family, const CycloNum& tau) {
  check_odd(n);
  check_kappa(kappa);
  int m = n / 2;
  std::vector<CycloNum> out;
  if (family.half_integer) {
    if (kappa != -1) throw std::invalid_argument("the half-integer family exists for supertraces only");
    if (!is_half_integer(family.nu)) throw std::invalid_argument("half-integer family needs nu in Z + 1/2");
    for (int k = 0; k <= m; ++k) out.push_back(tau / (CycloNum(n) * sq(trig_value(TrigKind::Cos, Rational(k, n)))));
    return out;
  }
  if (family.z % n == 0) throw std::invalid_argument("ν = z/n with z ∈ nℤ is not singular");
  if (kappa == 1) {
    for (int k = 1; k <= m; ++k) {
      CycloNum c = trig_value(TrigKind::Cos, Rational(2 * k * family.z, n));
      out.push_back(tau / (CycloNum(n) * sq(trig_value(TrigKind::Sin, Rational(k, n)))) * (CycloNum(1) - c));
    }
  } else {
    CycloNum sign(family.z % 2 == 0 ? 1 : -1);
    for (int k = 0; k <= m; ++k) {
      CycloNum c = trig_value(TrigKind::Cos, Rational(2 * k * family.z, n));
      out.push_back(tau / (CycloNum(n) * sq(trig_value(TrigKind::Cos, Rational(k, n)))) * (CycloNum(1) - sign * c));
    }
  }
  return out;
}

TraceSpec degenerate_family(int n, int kappa, const DegenerateFamily& family, const CycloNum& tau) {
  auto values = degenerate_family_values(n, kappa, family, tau);
  Rational nu = family.half_integer ? family.nu : Rational(family.z, n);
  return make_trace_spec(AlgebraParams::odd(n, nu), kappa, std::move(values));
}

CycloNum suum_sum(int n, const Rational& mu) {
  CycloNum s;
  for (int k = 0; k < n; ++k) s += trig_value(TrigKind::Cos, Rational(2 * k, n) * mu);
  return s;
}

bool check_integer_mu_constraints(int n, const Rational& mu) {
  return mu.is_integer() && suum_sum(n, mu).is_zero();
}

CycloNum sol1_product(int n, int kappa, const Rational& mu, int k) {
  check_kappa(kappa);
  int theta = kappa == 1 ? 0 : 1;
  return trig_value(TrigKind::Sin, mu * Rational(1 + theta)) * trig_value(TrigKind::Sin, Rational(2 * k - n, n) * mu);
}

CycloNum half_integer_cosine(int n, long z, int k) {
  Rational r = Rational(2 * k * z, n) + Rational(k, n) + Rational(z) + Rational(1, 2);
  return trig_value(TrigKind::Cos, r);
}

std::pair<CycloNum, CycloNum> even_x_values(int m, const std::vector<CycloNum>& sp) {
  CycloNum x1, x2;
  for (int l = 1; l <= m - 1; ++l) x1 += sp[2 * l - 1];
  for (int l = 0; l <= m - 1; ++l) x2 += sp[2 * l];
  return {x1, x2};
}

SingularFamily classify_even(int m, const Rational& mu0, const Rational& mu1) {
  bool a = in_z_minus_mz(mu0, m), b = in_z_minus_mz(mu1, m);
  if (a && b) return SingularFamily::Ak1;
  if (a) return SingularFamily::Ak3;
  if (b) return SingularFamily::Ak4;
  for (const Rational& d : {mu0 - mu1, mu0 + mu1}) {
    Rational q = d / Rational(m);
    if (q.is_integer() && mpz_class(q.num() % 2) != 0) return SingularFamily::Ak5;
  }
  return SingularFamily::Generic;
}

SingularVerdict solve_even_system(int m, const Rational& mu0, const Rational& mu1) {
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  int u = 2 * m - 1;  // s'_1..s'_{2m-1} at index k-1
  std::vector<int> in_x1(u, 0), in_x2(u, 0);
  for (int l = 1; l <= m - 1; ++l) in_x1[2 * l - 1] = 1;
  for (int l = 0; l <= m - 1; ++l) in_x2[2 * l] = 1;

  CycloMatrix a(u + (m - 1), u);
  for (int k = 1; k <= u; ++k) {
    CycloNum c0 = CycloNum(1) - trig_value(TrigKind::Cos, Rational(k, m) * mu0);
    CycloNum c1 = CycloNum(1) - trig_value(TrigKind::Cos, Rational(k, m) * mu1);
    if (k % 2) c1 = -c1;
    // c0 (X1 + X2) + c1 (X1 - X2) - 2m s'_k
    for (int j = 0; j < u; ++j) {
      CycloNum v;
      if (in_x1[j]) v += c0 + c1;
      if (in_x2[j]) v += c0 - c1;
      if (j == k - 1) v -= CycloNum(2 * m);
      a.at(k - 1, j) = v;
    }
  }
  for (int r = 1; r <= m - 1; ++r) {
    a.at(u + r - 1, 2 * m - r - 1) = CycloNum(1);
    a.at(u + r - 1, r - 1) = CycloNum(-1);
  }

  SingularVerdict v;
  v.params = AlgebraParams::from_mu(2 * m, mu0, mu1);
  v.kappa = 1;
  v.basis = kernel(a);
  v.solution_dim = static_cast<int>(v.basis.size());
  v.matched_family = classify_even(m, mu0, mu1);
  return v;
}

IdealCompareReport ideal_compare(int n, long z, const CycloNum& tau, int max_degree) {
  check_odd(n);
  if (max_degree < 0) throw std::invalid_argument("degree cutoff must be non-negative");
  TraceSpec tr = degenerate_family(n, 1, DegenerateFamily::integer(z), tau);
  TraceSpec str = degenerate_family(n, -1, DegenerateFamily::integer(z), tau);

  IdealCompareReport rep;
  rep.n = n;
  rep.z = z;
  rep.tau = tau;
  rep.max_degree = max_degree;

  auto ft = fp_from_gk(tr);
  auto fs = fp_from_gk(str);
  rep.frequency_sets_equal = true;
  for (int p = 0; p < n; ++p) {
    FrequencyComparison c;
    c.p = p;
    c.trace_freqs = sorted_freqs(ft[p]);
    c.supertrace_freqs = sorted_freqs(fs[p]);
    c.equal = c.trace_freqs == c.supertrace_freqs;
    rep.frequency_sets_equal = rep.frequency_sets_equal && c.equal;
    rep.frequencies.push_back(std::move(c));
  }

  for (int d = 0; d <= max_degree; ++d) {
    GramReport gt = gram_matrix(tr, d);
    GramReport gs = gram_matrix(str, d);
    int nb = static_cast<int>(gt.basis.size());
    auto coords = [&](const std::vector<AlgElem>& ks) {
      std::vector<std::vector<CycloNum>> out;
      for (const auto& k : ks) {
        std::vector<CycloNum> row(nb);
        for (int i = 0; i < nb; ++i) row[i] = k.coeff(gt.basis[i]);
        out.push_back(std::move(row));
      }
      return out;
    };
    auto kt = coords(gt.kernel);
    auto ks = coords(gs.kernel);
    KernelComparison c;
    c.degree = d;
    c.trace_kernel_dim = static_cast<int>(kt.size());
    c.supertrace_kernel_dim = static_cast<int>(ks.size());
    auto joint = kt;
    joint.insert(joint.end(), ks.begin(), ks.end());
    c.joint_rank = span_rank(joint, nb);
    c.spans_equal = c.joint_rank == c.trace_kernel_dim && c.joint_rank == c.supertrace_kernel_dim;
    rep.kernels.push_back(c);
  }
  return rep;
}

}  // namespace sra
