#include "sra/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sra/errors.hpp"

namespace sra {

LaurentPoly::LaurentPoly(const CycloNum& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(long e, const CycloNum& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

long LaurentPoly::low() const { return terms_.begin()->first; }
long LaurentPoly::high() const { return terms_.rbegin()->first; }

CycloNum LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum() : it->second;
}

void LaurentPoly::add_term(long e, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(e, c);
  if (ins) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(long s) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + s, c);
  return p;
}

LaurentPoly LaurentPoly::stretched(long f) const {
  if (f <= 0) throw std::invalid_argument("stretch factor must be positive");
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e * f, c);
  return p;
}

LaurentPoly LaurentPoly::euler() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_)
    if (e != 0) p.terms_.emplace_hint(p.terms_.end(), e, CycloNum(e) * c);
  return p;
}

CycloNum LaurentPoly::at_one() const {
  CycloNum s;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (&o == this) {
    LaurentPoly copy = o;
    return *this += copy;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

LaurentPoly operator*(const CycloNum& c, const LaurentPoly& a) {
  LaurentPoly p;
  if (c.is_zero()) return p;
  for (const auto& [e, x] : a.terms_) p.terms_.emplace_hint(p.terms_.end(), e, c * x);
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (e == 0) {
      os << cs;
      continue;
    }
    if (!c.is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  LaurentPoly r = a.shifted(-a.low());
  LaurentPoly d = b.shifted(-b.low());
  long shift = a.low() - b.low();
  LaurentPoly q;
  CycloNum inv = d.leading().inverse();
  long dh = d.high();
  while (!r.is_zero() && r.high() >= dh) {
    long e = r.high() - dh;
    CycloNum c = r.leading() * inv;
    q.add_term(e, c);
    r -= (c * d).shifted(e);
  }
  // a = q b + r as polynomials in the shifted frame.
  return {q.shifted(shift), r.shifted(a.low())};
}

namespace {

LaurentPoly normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly s = p.shifted(-p.low());
  return s.leading().inverse() * s;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = normalized(a), y = normalized(b);
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = normalized(r);
  }
  return x;
}

ExpPolyFn::ExpPolyFn(long M, LaurentPoly num, LaurentPoly den) : M_(M) {
  if (M <= 0) throw std::invalid_argument("frequency denominator must be positive");
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(CycloNum(1));
    return;
  }
  long shift = -den.low();
  num = num.shifted(shift);
  den = den.shifted(shift);
  if (!den.is_monomial()) {
    auto [q, r] = poly_divmod(num, den);
    if (r.is_zero()) {
      num = std::move(q);
      den = LaurentPoly(CycloNum(1));
    }
  }
  CycloNum inv = den.leading().inverse();
  num_ = inv * num;
  den_ = inv * den;
}

ExpPolyFn ExpPolyFn::reduced() const {
  if (den_.is_monomial()) return *this;
  LaurentPoly g = poly_gcd(num_, den_);
  if (g.high() == 0) return *this;
  return ExpPolyFn(M_, poly_divmod(num_, g).first, poly_divmod(den_, g).first);
}

ExpPolyFn ExpPolyFn::constant(long M, const CycloNum& c) { return ExpPolyFn(M, LaurentPoly(c), LaurentPoly(CycloNum(1))); }

ExpPolyFn ExpPolyFn::exp_i(long M, const Rational& r) {
  Rational e = r * Rational(M);
  if (e.den() != 1) throw std::invalid_argument("frequency is not a multiple of 1/M");
  return ExpPolyFn(M, LaurentPoly::monomial(e.num().get_si()), LaurentPoly(CycloNum(1)));
}

ExpPolyFn ExpPolyFn::cos(long M, const Rational& r) {
  return CycloNum(Rational(1, 2)) * (exp_i(M, r) + exp_i(M, -r));
}

ExpPolyFn ExpPolyFn::sin(long M, const Rational& r) {
  return (CycloNum(Rational(1, 2)) * CycloNum::i().inverse()) * (exp_i(M, r) - exp_i(M, -r));
}

ExpPolyFn ExpPolyFn::with_M(long new_M) const {
  if (new_M % M_ != 0) throw std::invalid_argument("new frequency denominator must be a multiple");
  long f = new_M / M_;
  ExpPolyFn r;
  r.M_ = new_M;
  r.num_ = num_.stretched(f);
  r.den_ = den_.stretched(f);
  return r;
}

ExpPolyFn ExpPolyFn::derivative() const {
  // d/dt = (i/M) w d/dw
  CycloNum scale = CycloNum::i() * CycloNum(Rational(1, M_));
  LaurentPoly n = num_.euler() * den_ - num_ * den_.euler();
  return ExpPolyFn(M_, scale * n, den_ * den_);
}

namespace {

// Taylor coefficients in t of sum_e c_e exp(i e t / M).
std::vector<CycloNum> poly_series(const LaurentPoly& p, long M, int order) {
  std::vector<CycloNum> out(order + 1);
  CycloNum i = CycloNum::i();
  for (const auto& [e, c] : p.terms()) {
    CycloNum step = i * CycloNum(Rational(e, M));
    CycloNum term = c;
    for (int j = 0; j <= order; ++j) {
      out[j] += term;
      term = term * step * CycloNum(Rational(1, j + 1));
    }
  }
  return out;
}

}  // namespace

std::vector<CycloNum> ExpPolyFn::taylor(int order) const {
  if (order < 0) throw std::invalid_argument("negative Taylor order");
  int lead = 0;
  int extra = static_cast<int>(den_.high() - den_.low()) + 1;
  auto d = poly_series(den_, M_, order + extra);
  while (lead <= order + extra && d[lead].is_zero()) ++lead;
  if (lead > order + extra) throw DivisionByZero();
  auto n = poly_series(num_, M_, order + lead);
  for (int j = 0; j < lead; ++j)
    if (!n[j].is_zero()) throw DivisionByZero();
  // (n_lead + n_{lead+1} t + ...) / (d_lead + d_{lead+1} t + ...)
  std::vector<CycloNum> q(order + 1);
  CycloNum inv = d[lead].inverse();
  for (int j = 0; j <= order; ++j) {
    CycloNum acc = n[j + lead];
    for (int l = 0; l < j; ++l) acc -= q[l] * d[j - l + lead];
    q[j] = acc * inv;
  }
  return q;
}

ExpPolyFn ExpPolyFn::operator-() const {
  ExpPolyFn r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

long lcm_M(long a, long b) { return std::lcm(a, b); }

}  // namespace

ExpPolyFn operator+(const ExpPolyFn& a, const ExpPolyFn& b) {
  long M = lcm_M(a.M_, b.M_);
  if (a.M_ != M || b.M_ != M) return a.with_M(M) + b.with_M(M);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ExpPolyFn(M, a.num_ + b.num_, a.den_);
  if (a.den_.high() >= b.den_.high()) {
    auto [q, r] = poly_divmod(a.den_, b.den_);
    if (r.is_zero()) return ExpPolyFn(M, a.num_ + b.num_ * q, a.den_);
  } else {
    auto [q, r] = poly_divmod(b.den_, a.den_);
    if (r.is_zero()) return ExpPolyFn(M, a.num_ * q + b.num_, b.den_);
  }
  return ExpPolyFn(M, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExpPolyFn operator*(const ExpPolyFn& a, const ExpPolyFn& b) {
  long M = lcm_M(a.M_, b.M_);
  if (a.M_ != M || b.M_ != M) return a.with_M(M) * b.with_M(M);
  return ExpPolyFn(M, a.num_ * b.num_, a.den_ * b.den_);
}

ExpPolyFn operator*(const CycloNum& c, const ExpPolyFn& a) {
  ExpPolyFn r = a;
  r.num_ = c * r.num_;
  return r;
}

ExpPolyFn operator/(const ExpPolyFn& a, const ExpPolyFn& b) {
  if (b.is_zero()) throw DivisionByZero();
  long M = lcm_M(a.M_, b.M_);
  if (a.M_ != M || b.M_ != M) return a.with_M(M) / b.with_M(M);
  return ExpPolyFn(M, a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const ExpPolyFn& a, const ExpPolyFn& b) {
  long M = lcm_M(a.M_, b.M_);
  if (a.M_ != M || b.M_ != M) return a.with_M(M) == b.with_M(M);
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ExpPolyFn::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ") with w = exp(i t/" + std::to_string(M_) + ")";
}

QuasiPolyResult quasipoly_check(const ExpPolyFn& f) {
  QuasiPolyResult r;
  // f is a Laurent polynomial in w iff den divides num.
  if (!f.den().is_monomial()) return r;
  r.is_quasipoly = true;
  QuasiPolyForm form;
  long s = f.den().low();
  CycloNum inv = f.den().leading().inverse();
  if (f.is_zero()) {
    r.form = form;
    return r;
  }
  for (const auto& [e, c] : f.num().terms()) {
    form.freqs.push_back(Rational(e - s, f.M()));
    form.coeffs.push_back(c * inv);
  }
  r.form = std::move(form);
  return r;
}

long frequency_denominator(const AlgebraParams& params) {
  long M = 1;
  for (const Rational& mu : {params.mu0, params.mu1}) M = std::lcm(M, mu.den().get_si());
  return M;
}

namespace {

void check_supported(const TraceSpec& spec) {
  if (spec.params().is_even() && spec.kappa() == -1)
    throw std::invalid_argument("generating functions for even-n supertraces are not supported");
}

CycloNum sin2(const Rational& r) {
  CycloNum s = trig_value(TrigKind::Sin, r);
  return s * s;
}

CycloNum cos2(const Rational& r) {
  CycloNum c = trig_value(TrigKind::Cos, r);
  return c * c;
}

CycloNum s_value(const TraceSpec& spec, int k) {
  int n = spec.params().n;
  return spec.group_values()[((k % n) + n) % n];
}

// sp(L_0)/mu through X (kappa=+1) or Y (kappa=-1); defined also at mu = 0.
CycloNum l0_over_mu(const TraceSpec& spec) {
  int n = spec.params().n;
  CycloNum acc;
  for (int r = 0; r < n; ++r) {
    if (spec.kappa() == 1 && r == 0) continue;
    CycloNum s = s_value(spec, r);
    if (s.is_zero()) continue;
    acc += (spec.kappa() == 1 ? sin2(Rational(r, n)) : cos2(Rational(r, n))) * s;
  }
  return CycloNum(Rational(-2, n)) * acc;
}

struct EvenData {
  CycloNum xp, xm;
};

EvenData even_data(const TraceSpec& spec) {
  int m = spec.params().m();
  CycloNum x1, x2;
  for (int l = 1; l <= m - 1; ++l) x1 += s_value(spec, 2 * l) * sin2(Rational(l, m));
  for (int l = 0; l <= m - 1; ++l) x2 += s_value(spec, 2 * l + 1) * sin2(Rational(2 * l + 1, 2 * m));
  return {x1 + x2, x1 - x2};
}

void check_consistent(const TraceSpec& spec) {
  const auto& p = spec.params();
  if (!p.is_even()) {
    if (!(spec.L_value(0) == CycloNum(p.mu0) * l0_over_mu(spec)))
      throw std::invalid_argument("trace values disagree with the parameters");
    return;
  }
  int m = p.m();
  auto d = even_data(spec);
  if (!(spec.L_value(0) == CycloNum(-p.mu0 / Rational(m)) * d.xp) ||
      !(spec.L_value(m) == CycloNum(-p.mu1 / Rational(m)) * d.xm))
    throw std::invalid_argument("trace values disagree with the parameters");
}

ExpPolyFn lambda_fn(long M, int n, long k) { return ExpPolyFn::constant(M, lambda_power(n, k)); }

// Fourier transform of Delta_{p+1}.
ExpPolyFn delta_tilde(const TraceSpec& spec, int k) {
  const auto& p = spec.params();
  long M = frequency_denominator(p);
  int n = p.n;
  ExpPolyFn d = ExpPolyFn::sin(M, p.mu0) * ExpPolyFn::constant(M, spec.L_value(0));
  if (p.is_even()) {
    int m = p.m();
    d = d + ExpPolyFn::constant(M, lambda_power(n, static_cast<long>(k) * m) * spec.L_value(m)) *
                ExpPolyFn::sin(M, p.mu1);
  }
  return lambda_fn(M, n, -k) * d;
}

}  // namespace

ExpPolyFn gk_closed_form(const TraceSpec& spec, int k) {
  check_supported(spec);
  check_consistent(spec);
  const auto& p = spec.params();
  int n = p.n;
  long M = frequency_denominator(p);
  ExpPolyFn e_it = ExpPolyFn::exp_i(M, Rational(1));
  ExpPolyFn one = ExpPolyFn::constant(M, CycloNum(1));
  CycloNum lk = lambda_power(n, k), lmk = lambda_power(n, -k);
  ExpPolyFn lam = ExpPolyFn::constant(M, lk);
  CycloNum i = CycloNum::i();
  if (!p.is_even()) {
    CycloNum kap(spec.kappa());
    ExpPolyFn g = ExpPolyFn::constant(M, kap * lmk * (kap - lk) * (kap - lk) * s_value(spec, k));
    if (!p.mu0.is_zero()) {
      CycloNum lmu = l0_over_mu(spec);
      g = g + CycloNum(2) * lmu * (ExpPolyFn::cos(M, p.mu0) - one);
      g = g + (CycloNum(2) * i * lmk * spec.L_value(0)) * ((lam - kap * e_it) * ExpPolyFn::sin(M, p.mu0));
    }
    ExpPolyFn d = kap * e_it - lam;
    return (kap * lk) * (e_it * g) / (d * d);
  }
  int m = p.m();
  auto x = even_data(spec);
  CycloNum sign(k % 2 == 0 ? 1 : -1);
  CycloNum c = CycloNum(2) * lk * CycloNum(Rational(1, m));
  ExpPolyFn f = ExpPolyFn::constant(M, (CycloNum(1) - lk) * (CycloNum(1) - lk) * s_value(spec, k));
  f = f + (c * x.xp) * (one - ExpPolyFn::cos(M, p.mu0));
  f = f + (sign * c * x.xm) * (one - ExpPolyFn::cos(M, p.mu1));
  ExpPolyFn inner = (CycloNum(p.mu0) * x.xp) * ExpPolyFn::sin(M, p.mu0) +
                    (sign * CycloNum(p.mu1) * x.xm) * ExpPolyFn::sin(M, p.mu1);
  f = f + (CycloNum(2) * i * CycloNum(Rational(1, m))) * ((e_it - lam) * inner);
  ExpPolyFn d = e_it - lam;
  return e_it * f / (d * d);
}

std::vector<ExpPolyFn> fp_from_gk(const TraceSpec& spec) {
  int n = spec.params().n;
  std::vector<ExpPolyFn> g;
  for (int k = 0; k < n; ++k) g.push_back(gk_closed_form(spec, k));
  long M = frequency_denominator(spec.params());
  std::vector<ExpPolyFn> f;
  for (int p = 0; p < n; ++p) {
    ExpPolyFn acc = ExpPolyFn::constant(M, CycloNum());
    for (int k = 0; k < n; ++k) acc = acc + lambda_power(n, -static_cast<long>(k) * p) * g[k];
    f.push_back(CycloNum(Rational(1, n)) * acc);
  }
  return f;
}

CycloNum psi_value(const TraceSpec& spec, int p) { return spec.L_value(p); }

ExpPolyFn delta_fn(const TraceSpec& spec, int p) {
  check_supported(spec);
  const auto& par = spec.params();
  int n = par.n;
  long M = frequency_denominator(par);
  int pp = ((p % n) + n) % n;
  ExpPolyFn d = ExpPolyFn::constant(M, CycloNum());
  if (pp == 0) d = ExpPolyFn::sin(M, par.mu0) * ExpPolyFn::constant(M, spec.L_value(0));
  if (par.is_even() && pp == par.m()) d = d + ExpPolyFn::sin(M, par.mu1) * ExpPolyFn::constant(M, spec.L_value(pp));
  return d;
}

ExpPolyFn phi_fn(const TraceSpec& spec, int p) {
  auto f = fp_from_gk(spec);
  int n = spec.params().n;
  return f[((p % n) + n) % n] + (CycloNum(2) * CycloNum::i()) * delta_fn(spec, p);
}

ExpPolyFn geq_residual(const TraceSpec& spec, int k) {
  const auto& p = spec.params();
  long M = frequency_denominator(p);
  CycloNum kap(spec.kappa());
  CycloNum lk = lambda_power(p.n, k);
  ExpPolyFn e_it = ExpPolyFn::exp_i(M, Rational(1));
  ExpPolyFn lam = ExpPolyFn::constant(M, lk);
  ExpPolyFn g = gk_closed_form(spec, k);
  CycloNum i = CycloNum::i();
  ExpPolyFn denom = lam - kap * e_it;
  ExpPolyFn rhs = i * ((lam + kap * e_it) / denom * g) +
                  (CycloNum(2) * i * kap * lk) * ((e_it * delta_tilde(spec, k)).derivative() / denom);
  return g.derivative() - rhs;
}

std::vector<ExpPolyFn> eqgenfun_residuals(const TraceSpec& spec) {
  const auto& par = spec.params();
  int n = par.n;
  long M = frequency_denominator(par);
  CycloNum kap(spec.kappa());
  CycloNum i = CycloNum::i();
  auto f = fp_from_gk(spec);
  std::vector<ExpPolyFn> df;
  for (const auto& x : f) df.push_back(x.derivative());
  ExpPolyFn e_it = ExpPolyFn::exp_i(M, Rational(1));
  std::vector<ExpPolyFn> out;
  for (int p0 = 0; p0 < n; ++p0) {
    int p1 = (p0 + 1) % n;
    ExpPolyFn lhs = df[p0] - kap * (e_it * df[p1]);
    ExpPolyFn rhs = i * f[p0] + (kap * i) * (e_it * f[p1]) +
                    (CycloNum(2) * kap * i) * (e_it * delta_fn(spec, p1)).derivative();
    out.push_back(lhs - rhs);
  }
  return out;
}

ExpPolyFn eqgenfun_residual(const TraceSpec& spec, int p) {
  int n = spec.params().n;
  return eqgenfun_residuals(spec)[((p % n) + n) % n];
}

namespace {

// mu_p with sp(s^2 Q_p) = (d^2/dt^2 + mu_p^2) F_p, or nullopt when F_p = sp(exp(t s) Q_p).
std::optional<Rational> special_mu(const AlgebraParams& par, int p) {
  if (p == 0) return par.mu0;
  if (par.is_even() && p == par.m()) return par.mu1;
  return std::nullopt;
}

}  // namespace

CycloNum s_power_trace(const TraceSpec& spec, int j, int p) {
  if (j < 0) throw std::invalid_argument("power must be non-negative");
  check_supported(spec);
  int n = spec.params().n;
  int pp = ((p % n) + n) % n;
  auto f = fp_from_gk(spec)[pp];
  auto mu = special_mu(spec.params(), pp);
  auto series = f.taylor(j);
  std::vector<CycloNum> deriv(j + 1);
  CycloNum fact(1);
  for (int l = 0; l <= j; ++l) {
    if (l > 0) fact = fact * CycloNum(l);
    deriv[l] = fact * series[l];
  }
  if (!mu) return deriv[j];
  if (j % 2 == 1) return CycloNum();
  // (D^2 + mu^2)^(j/2) applied at t = 0.
  int h = j / 2;
  CycloNum mu2(*mu * *mu), acc, binom(1), mupow(1);
  std::vector<CycloNum> mu_pows(h + 1);
  for (int l = 0; l <= h; ++l) {
    mu_pows[l] = mupow;
    mupow = mupow * mu2;
  }
  for (int l = 0; l <= h; ++l) {
    // C(h, l) D^(2l) mu^(2(h-l))
    acc += binom * deriv[2 * l] * mu_pows[h - l];
    binom = binom * CycloNum(Rational(h - l, l + 1));
  }
  return acc;
}

std::vector<NullVectorCandidate> null_vector_candidates(const TraceSpec& spec) {
  const auto& par = spec.params();
  if (par.is_even()) throw std::invalid_argument("null-vector construction is implemented for odd n");
  auto f = fp_from_gk(spec);
  const auto& alg = spec.algebra();
  int n = par.n;
  std::vector<NullVectorCandidate> out;
  AlgElem s = alg->singlet();
  CycloNum i = CycloNum::i();
  for (int p = 0; p < n; ++p) {
    if (f[p].is_zero()) continue;
    auto q = quasipoly_check(f[p]);
    if (!q.is_quasipoly) throw NondegenerateSpec("spec is nondegenerate");
    NullVectorCandidate c{p, q.form->freqs, alg->zero()};
    if (p != 0) {
      AlgElem v = alg->Q(p);
      for (const auto& r : q.form->freqs) v = (s - alg->scalar(i * CycloNum(r))) * v;
      c.element = v;
    } else {
      // distinct omega^2 = -r^2
      std::vector<Rational> sq;
      for (const auto& r : q.form->freqs) {
        Rational r2 = r * r;
        if (std::find(sq.begin(), sq.end(), r2) == sq.end()) sq.push_back(r2);
      }
      AlgElem s2 = s * s;
      AlgElem v = alg->Q(0);
      // D~_0(y) = prod (y + r^2) at y = s^2 - mu^2
      for (const auto& r2 : sq) v = (s2 - alg->scalar(CycloNum(par.mu0 * par.mu0 - r2))) * v;
      c.element = s2 * v;
    }
    out.push_back(std::move(c));
  }
  if (out.empty()) throw NondegenerateSpec("spec is nondegenerate: all generating functions vanish");
  return out;
}

NullCheck check_null_vector(const TraceSpec& spec, const AlgElem& v, int max_degree) {
  const auto& alg = spec.algebra();
  int n = spec.params().n;
  NullCheck r;
  // v x for the group-free part x of each basis monomial, built letter by letter.
  std::map<std::uint32_t, AlgElem> vx;
  std::vector<AlgElem> groups;
  for (int c = 0; c < 2 * n; ++c) groups.push_back(alg->group(GroupElem::from_code(n, c)));
  for (const auto& f : pbw_basis(n, max_degree)) {
    Monomial x = f;
    x.g = 0;
    auto it = vx.find(x.exps_key());
    if (it == vx.end()) {
      AlgElem prod = v;
      if (x.degree() > 0) {
        Monomial prefix = x;
        int last = 3;
        while (prefix.e[last] == 0) --last;
        --prefix.e[last];
        prod = vx.at(prefix.exps_key()) * alg->gen(static_cast<Letter>(last));
      }
      it = vx.emplace(x.exps_key(), std::move(prod)).first;
    }
    ++r.checked;
    if (!trace_eval(spec, it->second * groups[f.g]).is_zero()) ++r.nonzero;
  }
  return r;
}

}  // namespace sra
