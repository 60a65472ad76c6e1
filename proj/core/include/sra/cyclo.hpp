#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "sra/rational.hpp"

namespace sra {

long euler_phi(long n);
std::vector<long> divisors(long n);

// Integer coefficients of the cyclotomic polynomial Phi_n, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1)
// with z = exp(2 pi i / N).  Coefficients share one positive denominator.
// Small values use 64-bit integers; anything that overflows moves to GMP.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long v);  // NOLINT
  CycloNum(int v) : CycloNum(static_cast<long>(v)) {}  // NOLINT
  CycloNum(const Rational& r);  // NOLINT
  CycloNum(const CycloNum& o);
  CycloNum(CycloNum&& o) noexcept;
  CycloNum& operator=(const CycloNum& o);
  CycloNum& operator=(CycloNum&& o) noexcept;
  ~CycloNum();

  // zeta_order^k.
  static CycloNum root_of_unity(int order, long k);
  // The imaginary unit, zeta_4.
  static CycloNum i();
  static CycloNum from_coeffs(int order, const std::vector<Rational>& coeffs);

  int order() const { return order_; }
  int degree() const;  // phi(order)
  std::vector<Rational> coeffs() const;
  Rational coeff(int j) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational to_rational() const;  // throws std::domain_error when not rational

  // Same value written over Q(zeta_new_order); new_order must be a multiple of order().
  CycloNum embed(int new_order) const;
  // Same value over the smallest cyclotomic field containing it.
  CycloNum minimize() const;

  CycloNum conj() const;
  // Automorphism zeta -> zeta^a, gcd(a, order) = 1.
  CycloNum galois(long a) const;
  CycloNum inverse() const;
  // this * zeta_root_order^k.
  CycloNum mul_root(int root_order, long k) const;

  std::complex<double> to_complex() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  // "1/2 + 3*z6^2 - z6"; the constant term uses plain rationals.
  std::string str() const;

 private:
  struct Big;
  void normalize_small();
  void set_from_big(std::vector<mpz_class> num, mpz_class den);
  std::vector<mpz_class> big_num() const;
  mpz_class big_den() const;
  bool same_small_denominator(const CycloNum& o) const;

  int order_ = 1;
  boost::container::small_vector<std::int64_t, 12> num_;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;

  friend struct CycloAccess;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& c);

enum class TrigKind { Cos, Sin };
// cos(pi r) or sin(pi r) as an exact element of a cyclotomic field.
CycloNum trig_value(TrigKind kind, const Rational& r);
// exp(i pi r).
CycloNum exp_i_pi(const Rational& r);

}  // namespace sra
