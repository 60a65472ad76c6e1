#include "sra/rational.hpp"

#include <numeric>

#include "sra/errors.hpp"

namespace sra {

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DivisionByZero();
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

static bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Rational Rational::parse(std::string_view s) {
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  std::size_t end = s.size();
  while (end > start && s[end - 1] == ' ') --end;
  std::string_view t = s.substr(start, end - start);
  bool neg = false;
  std::size_t off = 0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    off = 1;
  }
  std::string_view body = t.substr(off);
  auto slash = body.find('/');
  std::string_view ns = body.substr(0, slash);
  if (!all_digits(ns)) throw ParseError("malformed rational '" + std::string(s) + "'", start + off);
  mpz_class n(std::string(ns), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    std::string_view ds = body.substr(slash + 1);
    if (!all_digits(ds))
      throw ParseError("malformed rational '" + std::string(s) + "'", start + off + slash + 1);
    d = mpz_class(std::string(ds), 10);
    if (d == 0) throw DivisionByZero();
  }
  if (neg) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

std::string Rational::short_str() const {
  if (is_integer()) return q_.get_num().get_str();
  return str();
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.short_str(); }

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace sra
