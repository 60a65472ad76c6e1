#include "sra/cyclo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sra/errors.hpp"

namespace sra {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int canonical_order(long n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (n % 4 == 2) n /= 2;
  if (n > (1 << 20)) throw std::length_error("cyclotomic order too large");
  return static_cast<int>(n);
}

std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic table overflow");
  return r;
}

std::int64_t checked_sub64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic table overflow");
  return r;
}

struct CycloTables {
  int n = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;  // monic, degree phi
  // rows[e] = x^e mod Phi_n for 0 <= e < 2n
  std::vector<std::vector<std::int64_t>> rows;
};

std::vector<std::int64_t> compute_cyclotomic(int n, const std::map<int, std::vector<std::int64_t>>& known) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (long d : divisors(n)) {
    if (d == n) continue;
    const auto& q = known.at(static_cast<int>(d));
    int dq = static_cast<int>(q.size()) - 1;
    int dp = static_cast<int>(p.size()) - 1;
    std::vector<std::int64_t> quo(dp - dq + 1, 0);
    for (int i = dp; i >= dq; --i) {
      std::int64_t c = p[i];
      quo[i - dq] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dq; ++j) p[i - dq + j] = checked_sub64(p[i - dq + j], checked_mul64(c, q[j]));
    }
    p = std::move(quo);
  }
  return p;
}

std::mutex g_table_mutex;
std::map<int, std::vector<std::int64_t>> g_polys;
std::map<int, std::unique_ptr<CycloTables>> g_tables;
constexpr int kFastTables = 4096;
std::array<std::atomic<const CycloTables*>, kFastTables> g_fast{};

const std::vector<std::int64_t>& poly_locked(int n) {
  auto it = g_polys.find(n);
  if (it != g_polys.end()) return it->second;
  for (long d : divisors(n))
    if (d != n) poly_locked(static_cast<int>(d));
  auto p = compute_cyclotomic(n, g_polys);
  return g_polys.emplace(n, std::move(p)).first->second;
}

const CycloTables& tables(int n) {
  if (n < kFastTables) {
    const CycloTables* t = g_fast[n].load(std::memory_order_acquire);
    if (t) return *t;
  }
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_tables.find(n);
  if (it != g_tables.end()) return *it->second;
  auto t = std::make_unique<CycloTables>();
  t->n = n;
  t->poly = poly_locked(n);
  t->phi = static_cast<int>(t->poly.size()) - 1;
  int phi = t->phi;
  t->rows.resize(2 * static_cast<std::size_t>(n));
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < 2 * n; ++e) {
    t->rows[e] = cur;
    std::vector<std::int64_t> next(phi, 0);
    std::int64_t top = cur[phi - 1];
    for (int j = phi - 1; j >= 1; --j) next[j] = cur[j - 1];
    next[0] = 0;
    if (top != 0)
      for (int j = 0; j < phi; ++j) next[j] = checked_sub64(next[j], checked_mul64(top, t->poly[j]));
    cur = std::move(next);
  }
  const CycloTables* raw = t.get();
  g_tables.emplace(n, std::move(t));
  if (n < kFastTables) g_fast[n].store(raw, std::memory_order_release);
  return *raw;
}

// 128-bit integer that throws on overflow; lets every algorithm below run
// first on machine words and then again on GMP integers.
struct Overflow {};

struct C128 {
  __int128 v = 0;
  C128() = default;
  C128(std::int64_t x) : v(x) {}  // NOLINT
  static C128 raw(__int128 x) {
    C128 c;
    c.v = x;
    return c;
  }
};

inline C128 operator+(C128 a, C128 b) {
  __int128 r;
  if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
  return C128::raw(r);
}
inline C128 operator-(C128 a, C128 b) {
  __int128 r;
  if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
  return C128::raw(r);
}
inline C128 operator*(C128 a, C128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
  return C128::raw(r);
}
inline C128 operator-(C128 a) { return C128(0) - a; }
inline C128& operator+=(C128& a, C128 b) { return a = a + b; }
inline C128& operator-=(C128& a, C128 b) { return a = a - b; }
inline bool operator==(C128 a, C128 b) { return a.v == b.v; }
inline bool is_zero(C128 a) { return a.v == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline bool is_neg(C128 a) { return a.v < 0; }
inline bool is_neg(const mpz_class& a) { return sgn(a) < 0; }

unsigned __int128 uabs(__int128 x) { return x < 0 ? static_cast<unsigned __int128>(-(x + 1)) + 1 : x; }

unsigned __int128 ugcd(unsigned __int128 a, unsigned __int128 b) {
  if (a <= UINT64_MAX && b <= UINT64_MAX)
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline C128 gcd_int(C128 a, C128 b) {
  unsigned __int128 g = ugcd(uabs(a.v), uabs(b.v));
  if (g > static_cast<unsigned __int128>(std::numeric_limits<__int128>::max())) throw Overflow{};
  return C128::raw(static_cast<__int128>(g));
}
inline mpz_class gcd_int(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline C128 div_exact(C128 a, C128 b) { return C128::raw(a.v / b.v); }
inline mpz_class div_exact(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline bool is_one(C128 a) { return a.v == 1; }
inline bool is_one(const mpz_class& a) { return a == 1; }

template <class I>
struct Rep {
  boost::container::small_vector<I, 12> num;
  I den;
};

template <class I>
void normalize(Rep<I>& r) {
  bool all_zero = true;
  for (const auto& x : r.num)
    if (!is_zero(x)) {
      all_zero = false;
      break;
    }
  if (all_zero) {
    r.den = I(1);
    return;
  }
  if (is_neg(r.den)) {
    r.den = -r.den;
    for (auto& x : r.num) x = -x;
  }
  if (is_one(r.den)) return;
  I g = r.den;
  for (const auto& x : r.num) {
    if (is_zero(x)) continue;
    g = gcd_int(g, x);
    if (is_one(g)) return;
  }
  r.den = div_exact(r.den, g);
  for (auto& x : r.num)
    if (!is_zero(x)) x = div_exact(x, g);
}

template <class I>
Rep<I> add_rep(const Rep<I>& a, const Rep<I>& b, bool subtract) {
  Rep<I> r;
  std::size_t phi = a.num.size();
  r.num.resize(phi);
  if (a.den == b.den) {
    for (std::size_t j = 0; j < phi; ++j) r.num[j] = subtract ? I(a.num[j] - b.num[j]) : I(a.num[j] + b.num[j]);
    r.den = a.den;
  } else {
    I g = gcd_int(a.den, b.den);
    I fa = div_exact(b.den, g);
    I fb = div_exact(a.den, g);
    for (std::size_t j = 0; j < phi; ++j) {
      I x = a.num[j] * fa;
      I y = b.num[j] * fb;
      r.num[j] = subtract ? I(x - y) : I(x + y);
    }
    r.den = a.den * fa;
  }
  normalize(r);
  return r;
}

template <class I>
Rep<I> mul_rep(const Rep<I>& a, const Rep<I>& b, const CycloTables& t) {
  int phi = t.phi;
  std::vector<I> conv(2 * phi - 1, I(0));
  for (int i = 0; i < phi; ++i) {
    if (is_zero(a.num[i])) continue;
    for (int j = 0; j < phi; ++j) {
      if (is_zero(b.num[j])) continue;
      conv[i + j] += a.num[i] * b.num[j];
    }
  }
  Rep<I> r;
  r.num.assign(conv.begin(), conv.begin() + phi);
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (is_zero(conv[k])) continue;
    const auto& row = t.rows[k];
    for (int j = 0; j < phi; ++j)
      if (row[j] != 0) r.num[j] += conv[k] * I(row[j]);
  }
  r.den = a.den * b.den;
  normalize(r);
  return r;
}

// Sum of a.num[j] * x^(e(j)) reduced mod Phi_n, e(j) < 2n.
template <class I, class E>
Rep<I> remap_rep(const Rep<I>& a, const CycloTables& t, E exponent) {
  Rep<I> r;
  r.num.assign(t.phi, I(0));
  for (std::size_t j = 0; j < a.num.size(); ++j) {
    if (is_zero(a.num[j])) continue;
    const auto& row = t.rows[exponent(static_cast<long>(j))];
    for (int k = 0; k < t.phi; ++k)
      if (row[k] != 0) r.num[k] += a.num[j] * I(row[k]);
  }
  r.den = a.den;
  normalize(r);
  return r;
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) { return tables(n).poly; }

struct CycloNum::Big {
  std::vector<mpz_class> num;
  mpz_class den;
};

struct CycloAccess {
  static Rep<C128> small(const CycloNum& c) {
    Rep<C128> r;
    r.num.reserve(c.num_.size());
    for (auto x : c.num_) r.num.emplace_back(x);
    r.den = C128(c.den_);
    return r;
  }
  static Rep<mpz_class> big(const CycloNum& c) {
    Rep<mpz_class> r;
    if (c.big_) {
      r.num.assign(c.big_->num.begin(), c.big_->num.end());
      r.den = c.big_->den;
    } else {
      r.num.reserve(c.num_.size());
      for (auto x : c.num_) r.num.emplace_back(static_cast<long>(x));
      r.den = static_cast<long>(c.den_);
    }
    return r;
  }
  static CycloNum make(int order, const Rep<C128>& r) {
    bool ok = fits64(r.den.v);
    for (const auto& x : r.num) ok = ok && fits64(x.v);
    if (!ok) {
      Rep<mpz_class> b;
      for (const auto& x : r.num) b.num.push_back(to_mpz(x.v));
      b.den = to_mpz(r.den.v);
      return make(order, b);
    }
    CycloNum c;
    c.order_ = order;
    c.num_.resize(r.num.size());
    for (std::size_t j = 0; j < r.num.size(); ++j) c.num_[j] = static_cast<std::int64_t>(r.num[j].v);
    c.den_ = static_cast<std::int64_t>(r.den.v);
    return c;
  }
  static CycloNum make(int order, const Rep<mpz_class>& r) {
    bool ok = r.den.fits_slong_p();
    for (const auto& x : r.num) ok = ok && x.fits_slong_p();
    CycloNum c;
    c.order_ = order;
    if (ok) {
      c.num_.resize(r.num.size());
      for (std::size_t j = 0; j < r.num.size(); ++j) c.num_[j] = r.num[j].get_si();
      c.den_ = r.den.get_si();
    } else {
      c.big_ = std::make_unique<CycloNum::Big>();
      c.big_->num.assign(r.num.begin(), r.num.end());
      c.big_->den = r.den;
    }
    return c;
  }
  template <class F>
  static CycloNum run(int order, bool force_big, F f) {
    if (!force_big) {
      try {
        return make(order, f(C128{}));
      } catch (const Overflow&) {
      }
    }
    return make(order, f(mpz_class{}));
  }
  static bool is_big(const CycloNum& c) { return static_cast<bool>(c.big_); }
  template <class I>
  static Rep<I> rep(const CycloNum& c) {
    if constexpr (std::is_same_v<I, C128>)
      return small(c);
    else
      return big(c);
  }
};

CycloNum::CycloNum() : num_(1, 0) {}
CycloNum::CycloNum(long v) : num_(1, v) {}
CycloNum::CycloNum(const Rational& r) {
  Rep<mpz_class> rep;
  rep.num.push_back(r.num());
  rep.den = r.den();
  *this = CycloAccess::make(1, rep);
}
CycloNum::CycloNum(const CycloNum& o)
    : order_(o.order_), num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
CycloNum& CycloNum::operator=(const CycloNum& o) {
  if (this != &o) {
    order_ = o.order_;
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
  }
  return *this;
}
CycloNum::~CycloNum() = default;
CycloNum::CycloNum(CycloNum&& o) noexcept = default;
CycloNum& CycloNum::operator=(CycloNum&& o) noexcept = default;

int CycloNum::degree() const { return tables(order_).phi; }

CycloNum CycloNum::root_of_unity(int order, long k) {
  if (order <= 0) throw std::invalid_argument("root of unity order must be positive");
  long kk = ((k % order) + order) % order;
  int can = canonical_order(order);
  bool neg = false;
  if (can != order) {
    // zeta_{2q}^k = (-1)^k zeta_q^(k (q+1)/2) for odd q
    long q = can;
    neg = (kk % 2) == 1;
    kk = (kk * ((q + 1) / 2)) % q;
  }
  const auto& t = tables(can);
  CycloNum c;
  c.order_ = can;
  c.num_.assign(t.rows[kk].begin(), t.rows[kk].end());
  c.den_ = 1;
  if (neg)
    for (auto& x : c.num_) x = -x;
  return c;
}

CycloNum CycloNum::i() { return root_of_unity(4, 1); }

CycloNum CycloNum::from_coeffs(int order, const std::vector<Rational>& coeffs) {
  int can = canonical_order(order);
  const auto& t = tables(order == can ? can : order);
  if (static_cast<int>(coeffs.size()) != t.phi)
    throw DimensionMismatch("expected " + std::to_string(t.phi) + " coefficients for order " + std::to_string(order));
  CycloNum acc;
  for (int j = 0; j < t.phi; ++j) {
    if (coeffs[j].is_zero()) continue;
    acc += CycloNum(coeffs[j]) * root_of_unity(order, j);
  }
  if (acc.order_ != can) acc = acc.embed(can);
  return acc;
}

std::vector<mpz_class> CycloNum::big_num() const {
  auto num = CycloAccess::big(*this).num;
  return {num.begin(), num.end()};
}
mpz_class CycloNum::big_den() const { return CycloAccess::big(*this).den; }

std::vector<Rational> CycloNum::coeffs() const {
  auto r = CycloAccess::big(*this);
  std::vector<Rational> out;
  out.reserve(r.num.size());
  for (const auto& x : r.num) out.emplace_back(x, r.den);
  return out;
}

Rational CycloNum::coeff(int j) const {
  auto r = CycloAccess::big(*this);
  if (j < 0 || j >= static_cast<int>(r.num.size())) return Rational();
  return Rational(r.num[j], r.den);
}

bool CycloNum::is_zero() const {
  if (big_) return false;
  for (auto x : num_)
    if (x != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (big_ || den_ != 1 || num_[0] != 1) return false;
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  if (big_) {
    for (std::size_t j = 1; j < big_->num.size(); ++j)
      if (big_->num[j] != 0) return false;
    return true;
  }
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

Rational CycloNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number " + str() + " is not rational");
  return coeff(0);
}

CycloNum CycloNum::embed(int new_order) const {
  int target = canonical_order(new_order);
  if (target % order_ != 0)
    throw std::invalid_argument("cannot embed order " + std::to_string(order_) + " into order " +
                                std::to_string(new_order));
  if (target == order_) return *this;
  const auto& t = tables(target);
  long s = target / order_;
  return CycloAccess::run(target, CycloAccess::is_big(*this), [&](auto tag) {
    using I = decltype(tag);
    return remap_rep(CycloAccess::rep<I>(*this), t, [s](long j) { return j * s; });
  });
}

namespace {

// Gaussian elimination over Q; returns a solution of A x = b or nothing.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    mpq_class inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

CycloNum CycloNum::minimize() const {
  if (order_ == 1) return *this;
  auto target = coeffs();
  for (long d : divisors(order_)) {
    if (d % 4 == 2 || d == order_) continue;
    long s = order_ / d;
    int phid = static_cast<int>(euler_phi(d));
    int phin = degree();
    std::vector<std::vector<mpq_class>> a(phin, std::vector<mpq_class>(phid, 0));
    for (int j = 0; j < phid; ++j) {
      auto col = root_of_unity(order_, j * s).coeffs();
      for (int i = 0; i < phin; ++i) a[i][j] = col[i].value();
    }
    std::vector<mpq_class> b(phin);
    for (int i = 0; i < phin; ++i) b[i] = target[i].value();
    auto sol = solve_rational(a, b);
    if (!sol) continue;
    std::vector<Rational> c;
    for (auto& v : *sol) c.emplace_back(v);
    return from_coeffs(static_cast<int>(d), c);
  }
  return *this;
}

CycloNum CycloNum::galois(long a) const {
  long n = order_;
  long aa = ((a % n) + n) % n;
  if (std::gcd(aa, n) != 1) throw std::invalid_argument("Galois exponent must be coprime to the order");
  if (n == 1) return *this;
  const auto& t = tables(order_);
  return CycloAccess::run(order_, CycloAccess::is_big(*this), [&](auto tag) {
    using I = decltype(tag);
    return remap_rep(CycloAccess::rep<I>(*this), t, [aa, n](long j) { return (j * aa) % n; });
  });
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::mul_root(int root_order, long k) const {
  int can_root = canonical_order(root_order);
  if (can_root != root_order || order_ % root_order != 0) return *this * root_of_unity(root_order, k);
  long n = order_;
  long e = (((k % root_order) + root_order) % root_order) * (n / root_order);
  if (e == 0) return *this;
  const auto& t = tables(order_);
  return CycloAccess::run(order_, CycloAccess::is_big(*this), [&](auto tag) {
    using I = decltype(tag);
    return remap_rep(CycloAccess::rep<I>(*this), t, [e, n](long j) { return (j + e) % n; });
  });
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (order_ == 1) {
    auto r = CycloAccess::big(*this);
    Rep<mpz_class> inv;
    inv.num = {r.den};
    inv.den = r.num[0];
    normalize(inv);
    return CycloAccess::make(1, inv);
  }
  int phi = degree();
  std::vector<std::vector<mpq_class>> a(phi, std::vector<mpq_class>(phi, 0));
  for (int j = 0; j < phi; ++j) {
    auto col = mul_root(order_, j).coeffs();
    for (int i = 0; i < phi; ++i) a[i][j] = col[i].value();
  }
  std::vector<mpq_class> b(phi, 0);
  b[0] = 1;
  auto sol = solve_rational(a, b);
  if (!sol) throw InconsistentSystem("nonzero cyclotomic number has no inverse");
  std::vector<Rational> c;
  for (auto& v : *sol) c.emplace_back(v);
  return from_coeffs(order_, c);
}

std::complex<double> CycloNum::to_complex() const {
  auto c = coeffs();
  std::complex<long double> acc = 0;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    long double ang = two_pi * static_cast<long double>(j) / order_;
    acc += static_cast<long double>(c[j].to_double()) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

CycloNum CycloNum::operator-() const {
  CycloNum r(*this);
  if (r.big_)
    for (auto& x : r.big_->num) x = -x;
  else
    for (auto& x : r.num_) {
      if (x == INT64_MIN) return CycloNum(0) - *this;
      x = -x;
    }
  return r;
}

bool CycloNum::same_small_denominator(const CycloNum& o) const {
  return !big_ && !o.big_ && order_ == o.order_ && den_ == o.den_;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.is_zero()) return *this;
  if (order_ != o.order_) {
    int l = static_cast<int>(std::lcm(static_cast<long>(order_), static_cast<long>(o.order_)));
    CycloNum a = embed(l);
    a += o.embed(l);
    return *this = std::move(a);
  }
  if (same_small_denominator(o)) {
    bool ok = true;
    boost::container::small_vector<std::int64_t, 12> sum(num_.size());
    for (std::size_t j = 0; j < num_.size() && ok; ++j) ok = !__builtin_add_overflow(num_[j], o.num_[j], &sum[j]);
    if (ok && den_ == 1) {
      num_ = std::move(sum);
      return *this;
    }
  }
  bool force_big = big_ || o.big_;
  *this = CycloAccess::run(order_, force_big, [&](auto tag) {
    using I = decltype(tag);
    return add_rep(CycloAccess::rep<I>(*this), CycloAccess::rep<I>(o), false);
  });
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  if (o.is_zero()) return *this;
  if (order_ != o.order_) {
    int l = static_cast<int>(std::lcm(static_cast<long>(order_), static_cast<long>(o.order_)));
    CycloNum a = embed(l);
    a -= o.embed(l);
    return *this = std::move(a);
  }
  bool force_big = big_ || o.big_;
  *this = CycloAccess::run(order_, force_big, [&](auto tag) {
    using I = decltype(tag);
    return add_rep(CycloAccess::rep<I>(*this), CycloAccess::rep<I>(o), true);
  });
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.is_zero() || b.is_zero()) return CycloNum();
  if (a.order_ != b.order_) {
    int l = static_cast<int>(std::lcm(static_cast<long>(a.order_), static_cast<long>(b.order_)));
    return a.embed(l) * b.embed(l);
  }
  const auto& t = tables(a.order_);
  bool force_big = a.big_ || b.big_;
  return CycloAccess::run(a.order_, force_big, [&](auto tag) {
    using I = decltype(tag);
    return mul_rep(CycloAccess::rep<I>(a), CycloAccess::rep<I>(b), t);
  });
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }
CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this = *this * o.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.order_ != b.order_) {
    int l = static_cast<int>(std::lcm(static_cast<long>(a.order_), static_cast<long>(b.order_)));
    return a.embed(l) == b.embed(l);
  }
  if (!a.big_ && !b.big_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
}

std::string CycloNum::str() const {
  auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    Rational v = c[j];
    bool neg = v.sign() < 0;
    if (neg) v = -v;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (j == 0) {
      os << v.short_str();
      continue;
    }
    if (v != Rational(1)) os << v.short_str() << "*";
    os << "z" << order_;
    if (j > 1) os << "^" << j;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& c) { return os << c.str(); }

CycloNum exp_i_pi(const Rational& r) {
  // exp(i pi p/q) = zeta_{2q}^p
  mpz_class p = r.num();
  mpz_class q = r.den();
  if (!q.fits_slong_p() || q > (1 << 18)) throw std::length_error("denominator too large for a root of unity");
  long qq = q.get_si();
  mpz_class pm = p % (2 * qq);
  return CycloNum::root_of_unity(static_cast<int>(2 * qq), pm.get_si());
}

CycloNum trig_value(TrigKind kind, const Rational& r) {
  Rational arg = kind == TrigKind::Cos ? r : Rational(1, 2) - r;
  CycloNum z = exp_i_pi(arg);
  return (z + z.conj()) * CycloNum(Rational(1, 2));
}

}  // namespace sra
