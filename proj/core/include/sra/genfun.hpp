#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sra/traces.hpp"

namespace sra {

// Finite sum of c_e w^e, e in Z.  No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const CycloNum& c);
  static LaurentPoly monomial(long e, const CycloNum& c = CycloNum(1));

  const std::map<long, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  long low() const;   // requires !is_zero()
  long high() const;  // requires !is_zero()
  CycloNum coeff(long e) const;
  CycloNum leading() const { return terms_.rbegin()->second; }

  void add_term(long e, const CycloNum& c);
  LaurentPoly shifted(long s) const;
  // w -> w^f.
  LaurentPoly stretched(long f) const;
  // w d/dw.
  LaurentPoly euler() const;
  CycloNum at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const CycloNum& c, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  std::string str(const std::string& var = "w") const;

 private:
  std::map<long, CycloNum> terms_;
};

// Quotient and remainder as ordinary polynomials after shifting both to
// lowest exponent 0.  Throws DivisionByZero for a zero divisor.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);
// Monic gcd of the shifted polynomials.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// f(t) = num(w)/den(w) with w = exp(i t/M).  den has lowest exponent 0 and
// leading coefficient 1; when den divides num the quotient is stored with
// den = 1.  reduced() also cancels gcd(num, den).
class ExpPolyFn {
 public:
  ExpPolyFn() : ExpPolyFn(1, LaurentPoly(), LaurentPoly(CycloNum(1))) {}
  ExpPolyFn(long M, LaurentPoly num, LaurentPoly den);
  static ExpPolyFn constant(long M, const CycloNum& c);
  // exp(i r t); r*M must be an integer.
  static ExpPolyFn exp_i(long M, const Rational& r);
  static ExpPolyFn cos(long M, const Rational& r);
  static ExpPolyFn sin(long M, const Rational& r);

  long M() const { return M_; }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  ExpPolyFn reduced() const;

  // Same function over w' with w = w'^(new_M/M).
  ExpPolyFn with_M(long new_M) const;
  ExpPolyFn derivative() const;
  // Taylor coefficients c_0..c_order of f(t) = sum c_j t^j; the point t=0 may be a removable singularity.
  std::vector<CycloNum> taylor(int order) const;
  CycloNum value_at_zero() const { return taylor(0)[0]; }

  ExpPolyFn operator-() const;
  friend ExpPolyFn operator+(const ExpPolyFn& a, const ExpPolyFn& b);
  friend ExpPolyFn operator-(const ExpPolyFn& a, const ExpPolyFn& b) { return a + (-b); }
  friend ExpPolyFn operator*(const ExpPolyFn& a, const ExpPolyFn& b);
  friend ExpPolyFn operator*(const CycloNum& c, const ExpPolyFn& a);
  friend ExpPolyFn operator/(const ExpPolyFn& a, const ExpPolyFn& b);
  friend bool operator==(const ExpPolyFn& a, const ExpPolyFn& b);

  // "(num)/(den) with w = exp(i t/M)".
  std::string str() const;

 private:
  long M_;
  LaurentPoly num_;
  LaurentPoly den_;
};

// F(t) = sum_j c_j exp(omega_j t), omega_j = i * freq_j.
struct QuasiPolyForm {
  std::vector<Rational> freqs;
  std::vector<CycloNum> coeffs;
};

struct QuasiPolyResult {
  bool is_quasipoly = false;
  std::optional<QuasiPolyForm> form;
};

QuasiPolyResult quasipoly_check(const ExpPolyFn& f);

// Frequency denominator: lcm of 1 and the denominators of mu (mu0, mu1).
long frequency_denominator(const AlgebraParams& params);

// Generating functions.  Supported for odd n (both kappa) and even n with kappa = +1.
ExpPolyFn gk_closed_form(const TraceSpec& spec, int k);
std::vector<ExpPolyFn> fp_from_gk(const TraceSpec& spec);
CycloNum psi_value(const TraceSpec& spec, int p);
ExpPolyFn delta_fn(const TraceSpec& spec, int p);
ExpPolyFn phi_fn(const TraceSpec& spec, int p);

// Residuals that vanish identically when the closed forms solve their ODEs.
ExpPolyFn geq_residual(const TraceSpec& spec, int k);
ExpPolyFn eqgenfun_residual(const TraceSpec& spec, int p);
std::vector<ExpPolyFn> eqgenfun_residuals(const TraceSpec& spec);

// sp(s^j Q_p) from the Taylor data of F_p.
CycloNum s_power_trace(const TraceSpec& spec, int j, int p);

struct NullVectorCandidate {
  int p;
  std::vector<Rational> freqs;
  AlgElem element;
};

// D_p(s) Q_p for p != 0 and s^2 D~_0(s^2 - mu^2) Q_0, for the nonzero F_p.
// Odd n only.  Throws NondegenerateSpec when some F_p is not a quasipolynomial
// or all F_p vanish.
std::vector<NullVectorCandidate> null_vector_candidates(const TraceSpec& spec);

struct NullCheck {
  int checked = 0;   // basis monomials f tried
  int nonzero = 0;   // f with sp(v f) != 0
};

// sp(v f) for every PBW basis monomial f of degree <= max_degree.
NullCheck check_null_vector(const TraceSpec& spec, const AlgElem& v, int max_degree);

}  // namespace sra
