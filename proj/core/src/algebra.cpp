#include "sra/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sra/errors.hpp"

namespace sra {

std::string letter_name(Letter l) {
  static const char* names[] = {"a0", "a1", "b0", "b1"};
  return names[static_cast<int>(l)];
}

AlgebraParams AlgebraParams::odd(int n, const Rational& nu) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd-n parameters need odd n >= 3");
  return {n, Rational(n) * nu, Rational()};
}

AlgebraParams AlgebraParams::even(int n, const Rational& nu0, const Rational& nu1) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("even-n parameters need even n >= 2");
  Rational m(n / 2);
  return {n, m * (nu0 + nu1), m * (nu0 - nu1)};
}

AlgebraParams AlgebraParams::from_mu(int n, const Rational& mu0, const Rational& mu1) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n % 2 == 1 && !mu1.is_zero()) throw std::invalid_argument("mu1 must vanish for odd n");
  return {n, mu0, mu1};
}

Rational AlgebraParams::nu() const {
  if (is_even()) throw std::logic_error("nu is defined for odd n; use nu0/nu1");
  return mu0 / Rational(n);
}

Rational AlgebraParams::nu0() const { return (mu0 + mu1) / Rational(2 * m()); }
Rational AlgebraParams::nu1() const { return (mu0 - mu1) / Rational(2 * m()); }

std::string AlgebraParams::str() const {
  std::ostringstream os;
  os << "n=" << n;
  if (is_even())
    os << " mu0=" << mu0 << " mu1=" << mu1;
  else
    os << " mu=" << mu0;
  return os.str();
}

Monomial Monomial::from_key(std::uint64_t k) {
  Monomial m;
  std::uint32_t ek = static_cast<std::uint32_t>((k >> 24) & 0xFFFFFFFFu);
  m.e = {static_cast<std::uint8_t>(ek >> 24), static_cast<std::uint8_t>(ek >> 16), static_cast<std::uint8_t>(ek >> 8),
         static_cast<std::uint8_t>(ek)};
  m.g = static_cast<std::uint16_t>(k & 0xFFFFFF);
  return m;
}

namespace {

inline int exp_of(std::uint32_t x, int l) { return (x >> (8 * (3 - l))) & 0xFF; }
inline std::uint32_t add_letter(std::uint32_t x, int l) {
  if (exp_of(x, l) == 255) throw std::length_error("monomial exponent overflow");
  return x + (1u << (8 * (3 - l)));
}
inline std::uint32_t remove_letter(std::uint32_t x, int l) { return x - (1u << (8 * (3 - l))); }
inline int max_letter(std::uint32_t x) {
  for (int l = 3; l >= 0; --l)
    if (exp_of(x, l)) return l;
  return -1;
}
inline int min_letter(std::uint32_t x) {
  for (int l = 0; l < 4; ++l)
    if (exp_of(x, l)) return l;
  return 4;
}
inline Monomial make_monomial(std::uint32_t x, int g) {
  Monomial m;
  m.e = {static_cast<std::uint8_t>(x >> 24), static_cast<std::uint8_t>(x >> 16), static_cast<std::uint8_t>(x >> 8),
         static_cast<std::uint8_t>(x)};
  m.g = static_cast<std::uint16_t>(g);
  return m;
}

inline int gmul(int n, int a, int b) {
  // codes: S_k -> k, R_k -> n + k
  bool ra = a >= n, rb = b >= n;
  int ka = ra ? a - n : a, kb = rb ? b - n : b;
  if (!ra && !rb) return (ka + kb) % n;
  if (ra && rb) return ((ka - kb) % n + n) % n;
  if (ra) return n + ((ka - kb) % n + n) % n;
  return n + (ka + kb) % n;
}

class Acc {
 public:
  void add(const Monomial& m, const CycloNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(m.key(), c);
    if (!inserted) it->second += c;
  }
  void add(const Monomial& m, CycloNum&& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(m.key(), std::move(c));
    if (!inserted) it->second += c;
  }
  Terms finish() {
    Terms out;
    out.reserve(map_.size());
    for (auto& [k, c] : map_)
      if (!c.is_zero()) out.push_back({Monomial::from_key(k), std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.m.key() < b.m.key(); });
    map_.clear();
    return out;
  }

 private:
  std::unordered_map<std::uint64_t, CycloNum> map_;
};

GroupAlgElem mu_L(const AlgebraParams& p, long q) {
  GroupAlgElem out = p.mu0.is_zero() ? GroupAlgElem(p.n) : CycloNum(p.mu0) * GroupAlgElem::L(p.n, q);
  if (p.is_even() && !p.mu1.is_zero()) out += CycloNum(p.mu1) * GroupAlgElem::L(p.n, q + p.m());
  return out;
}

std::vector<std::pair<int, CycloNum>> to_codes(const GroupAlgElem& x) {
  std::vector<std::pair<int, CycloNum>> out;
  for (const auto& [g, c] : x.terms()) out.emplace_back(g.code(), c);
  return out;
}

}  // namespace

Algebra::Algebra(const AlgebraParams& params) : params_(params) {
  int n = params.n;
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n % 2 == 1 && !params.mu1.is_zero()) throw std::invalid_argument("mu1 must vanish for odd n");
  twist_.resize(2 * n);
  for (int k = 0; k < n; ++k) {
    for (int alpha = 0; alpha < 2; ++alpha) {
      Letter a = static_cast<Letter>(alpha), b = static_cast<Letter>(2 + alpha);
      // S_k a = lambda^-k a S_k, S_k b = lambda^k b S_k
      twist_[k][alpha] = {a, lambda_power(n, -k)};
      twist_[k][2 + alpha] = {b, lambda_power(n, k)};
      // R_k a = -lambda^k b R_k, R_k b = -lambda^-k a R_k
      twist_[n + k][alpha] = {b, -lambda_power(n, k)};
      twist_[n + k][2 + alpha] = {a, -lambda_power(n, -k)};
    }
  }
  GroupAlgElem one(GroupElem::identity(n));
  GroupAlgElem l0 = mu_L(params, 0);
  auto idx = [](Letter l) { return static_cast<int>(l); };
  comm_[idx(Letter::a1)][idx(Letter::a0)] = to_codes(-mu_L(params, 1));
  comm_[idx(Letter::b0)][idx(Letter::a1)] = to_codes(one + l0);
  comm_[idx(Letter::b1)][idx(Letter::a0)] = to_codes(-(one + l0));
  comm_[idx(Letter::b1)][idx(Letter::b0)] = to_codes(-mu_L(params, -1));
}

std::shared_ptr<const Algebra> Algebra::create(const AlgebraParams& params) {
  return std::shared_ptr<const Algebra>(new Algebra(params));
}

std::shared_ptr<const Terms> Algebra::right_mul_letter(std::uint32_t x, Letter letter) const {
  int l = static_cast<int>(letter);
  std::uint64_t key = static_cast<std::uint64_t>(x) << 8 | static_cast<std::uint64_t>(l);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = right_memo_.find(key);
    if (it != right_memo_.end()) return it->second;
  }
  int n = params_.n;
  int t = max_letter(x);
  std::shared_ptr<const Terms> result;
  if (t <= l) {
    result = std::make_shared<const Terms>(Terms{{make_monomial(add_letter(x, l), 0), CycloNum(1)}});
  } else {
    // x' t l = (x' l) t + x' [t, l]
    std::uint32_t xp = remove_letter(x, t);
    Acc acc;
    auto sub = right_mul_letter(xp, letter);
    for (const auto& [y, c] : *sub) {
      const auto& [t2, f] = twist(y.g, static_cast<Letter>(t));
      CycloNum cf = y.g == 0 ? c : c * f;
      auto sub2 = right_mul_letter(y.exps_key(), t2);
      for (const auto& [z, d] : *sub2) acc.add(make_monomial(z.exps_key(), gmul(n, z.g, y.g)), cf * d);
    }
    for (const auto& [h, d] : commutator(static_cast<Letter>(t), letter)) acc.add(make_monomial(xp, h), d);
    result = std::make_shared<const Terms>(acc.finish());
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  right_memo_.emplace(key, result);
  return result;
}

std::shared_ptr<const Terms> Algebra::left_mul_letter(Letter letter, std::uint32_t y) const {
  int l = static_cast<int>(letter);
  std::uint64_t key = static_cast<std::uint64_t>(y) << 8 | static_cast<std::uint64_t>(l);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = left_memo_.find(key);
    if (it != left_memo_.end()) return it->second;
  }
  int n = params_.n;
  int s = min_letter(y);
  std::shared_ptr<const Terms> result;
  if (l <= s) {
    result = std::make_shared<const Terms>(Terms{{make_monomial(add_letter(y, l), 0), CycloNum(1)}});
  } else {
    // l s y' = s (l y') + [l, s] y'
    std::uint32_t yp = remove_letter(y, s);
    Acc acc;
    auto sub = left_mul_letter(letter, yp);
    for (const auto& [z, c] : *sub) {
      auto sub2 = left_mul_letter(static_cast<Letter>(s), z.exps_key());
      for (const auto& [w, d] : *sub2) acc.add(make_monomial(w.exps_key(), gmul(n, w.g, z.g)), c * d);
    }
    for (const auto& [h, d] : commutator(letter, static_cast<Letter>(s)))
      for (auto& [w, e] : left_mul_group(h, yp, Strategy::LeftInsertion)) acc.add(w, d * e);
    result = std::make_shared<const Terms>(acc.finish());
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  left_memo_.emplace(key, result);
  return result;
}

std::shared_ptr<const Terms> Algebra::swapped_normal(std::uint32_t y, Strategy s) const {
  std::uint64_t key = static_cast<std::uint64_t>(y) << 1 | (s == Strategy::LeftInsertion ? 1u : 0u);
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = swap_memo_.find(key);
    if (it != swap_memo_.end()) return it->second;
  }
  int n = params_.n;
  // word b0^e0 b1^e1 a0^e2 a1^e3
  int e0 = exp_of(y, 0), e1 = exp_of(y, 1), e2 = exp_of(y, 2), e3 = exp_of(y, 3);
  Terms z;
  Acc acc;
  if (s == Strategy::RightInsertion) {
    std::uint32_t start = static_cast<std::uint32_t>(e0) << 8 | static_cast<std::uint32_t>(e1);
    z.push_back({make_monomial(start, 0), CycloNum(1)});
    auto step = [&](Letter l) {
      for (const auto& [w, c] : z) {
        const auto& [l2, f] = twist(w.g, l);
        CycloNum cf = w.g == 0 ? c : c * f;
        for (const auto& [v, d] : *right_mul_letter(w.exps_key(), l2))
          acc.add(make_monomial(v.exps_key(), gmul(n, v.g, w.g)), cf * d);
      }
      z = acc.finish();
    };
    for (int i = 0; i < e2; ++i) step(Letter::a0);
    for (int i = 0; i < e3; ++i) step(Letter::a1);
  } else {
    std::uint32_t start = static_cast<std::uint32_t>(e2) << 24 | static_cast<std::uint32_t>(e3) << 16;
    z.push_back({make_monomial(start, 0), CycloNum(1)});
    auto step = [&](Letter l) {
      for (const auto& [w, c] : z)
        for (const auto& [v, d] : *left_mul_letter(l, w.exps_key()))
          acc.add(make_monomial(v.exps_key(), gmul(n, v.g, w.g)), c * d);
      z = acc.finish();
    };
    for (int i = 0; i < e1; ++i) step(Letter::b1);
    for (int i = 0; i < e0; ++i) step(Letter::b0);
  }
  auto result = std::make_shared<const Terms>(std::move(z));
  std::lock_guard<std::mutex> lock(memo_mutex_);
  swap_memo_.emplace(key, result);
  return result;
}

Terms Algebra::left_mul_group(int g, std::uint32_t y, Strategy s) const {
  int n = params_.n;
  CycloNum coef(1);
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < exp_of(y, l); ++i) coef *= twist(g, static_cast<Letter>(l)).second;
  if (g < n) return Terms{{make_monomial(y, g), coef}};
  Terms out;
  for (const auto& [w, e] : *swapped_normal(y, s)) out.push_back({make_monomial(w.exps_key(), gmul(n, w.g, g)), coef * e});
  return out;
}

namespace {

void right_apply(const Algebra& alg, Terms& z, Letter l) {
  int n = alg.n();
  Acc acc;
  for (const auto& [w, c] : z) {
    const auto& [l2, f] = alg.twist(w.g, l);
    CycloNum cf = w.g == 0 ? c : c * f;
    for (const auto& [v, d] : *alg.right_mul_letter(w.exps_key(), l2))
      acc.add(make_monomial(v.exps_key(), gmul(n, v.g, w.g)), cf * d);
  }
  z = acc.finish();
}

void right_group(const Algebra& alg, Terms& z, int g) {
  if (g == 0) return;
  for (auto& t : z) t.m.g = static_cast<std::uint16_t>(gmul(alg.n(), t.m.g, g));
  std::sort(z.begin(), z.end(), [](const Term& a, const Term& b) { return a.m.key() < b.m.key(); });
}

void left_apply(const Algebra& alg, Letter l, Terms& z) {
  int n = alg.n();
  Acc acc;
  for (const auto& [w, c] : z)
    for (const auto& [v, d] : *alg.left_mul_letter(l, w.exps_key()))
      acc.add(make_monomial(v.exps_key(), gmul(n, v.g, w.g)), c * d);
  z = acc.finish();
}

void left_group(const Algebra& alg, int g, Terms& z) {
  if (g == 0) return;
  int n = alg.n();
  Acc acc;
  for (const auto& [w, c] : z)
    for (auto& [v, d] : alg.left_mul_group(g, w.exps_key(), Strategy::LeftInsertion))
      acc.add(make_monomial(v.exps_key(), gmul(n, v.g, w.g)), c * d);
  z = acc.finish();
}

void scale(Terms& z, const CycloNum& c) {
  if (c.is_one()) return;
  if (c.is_zero()) {
    z.clear();
    return;
  }
  for (auto& t : z) t.c *= c;
}

std::vector<Letter> letters_of(const Monomial& m) {
  std::vector<Letter> out;
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < m.e[l]; ++i) out.push_back(static_cast<Letter>(l));
  return out;
}

}  // namespace

AlgElem Algebra::multiply(const AlgElem& x, const AlgElem& y, Strategy s) const {
  Acc acc;
  if (s == Strategy::RightInsertion) {
    for (const auto& [ym, d] : y.terms()) {
      Terms z = x.terms();
      for (Letter l : letters_of(ym)) right_apply(*this, z, l);
      right_group(*this, z, ym.g);
      for (auto& [w, c] : z) acc.add(w, c * d);
    }
  } else {
    for (const auto& [xm, c] : x.terms()) {
      Terms z = y.terms();
      left_group(*this, xm.g, z);
      auto ls = letters_of(xm);
      for (auto it = ls.rbegin(); it != ls.rend(); ++it) left_apply(*this, *it, z);
      for (auto& [w, d] : z) acc.add(w, c * d);
    }
  }
  return AlgElem(shared_from_this(), acc.finish());
}

std::size_t Algebra::memo_entries() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return right_memo_.size() + left_memo_.size() + swap_memo_.size();
}

void Algebra::clear_memo() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  right_memo_.clear();
  left_memo_.clear();
  swap_memo_.clear();
}

AlgElem Algebra::zero() const { return AlgElem(shared_from_this()); }
AlgElem Algebra::one() const { return scalar(CycloNum(1)); }
AlgElem Algebra::scalar(const CycloNum& c) const { return monomial(Monomial{}, c); }

AlgElem Algebra::monomial(const Monomial& m, const CycloNum& c) const {
  if (m.g >= 2 * params_.n) throw std::out_of_range("group code out of range");
  if (c.is_zero()) return zero();
  return AlgElem(shared_from_this(), Terms{{m, c}});
}

AlgElem Algebra::gen(Letter l) const {
  Monomial m;
  m.e[static_cast<int>(l)] = 1;
  return monomial(m);
}

AlgElem Algebra::group(const GroupElem& g) const {
  if (g.n() != params_.n) throw DimensionMismatch("group element of a different dihedral group");
  Monomial m;
  m.g = static_cast<std::uint16_t>(g.code());
  return monomial(m);
}

AlgElem Algebra::group(const GroupAlgElem& x) const {
  if (!x.is_zero() && x.n() != params_.n) throw DimensionMismatch("group algebra element of a different dihedral group");
  Terms t;
  for (const auto& [g, c] : x.terms()) {
    Monomial m;
    m.g = static_cast<std::uint16_t>(g.code());
    t.push_back({m, c});
  }
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.m.key() < b.m.key(); });
  return AlgElem(shared_from_this(), std::move(t));
}

AlgElem Algebra::L(long p) const { return group(GroupAlgElem::L(params_.n, p)); }
AlgElem Algebra::Q(long p) const { return group(GroupAlgElem::Q(params_.n, p)); }
AlgElem Algebra::mu_l0() const { return group(mu_L(params_, 0)); }

AlgElem Algebra::singlet() const {
  AlgElem a0 = gen(Letter::a0), a1 = gen(Letter::a1), b0 = gen(Letter::b0), b1 = gen(Letter::b1);
  // (1/2i) ({a0, b1} - {a1, b0})
  CycloNum c = CycloNum::i() * CycloNum(Rational(-1, 2));
  return c * (anticommutator(a0, b1) - anticommutator(a1, b0));
}

AlgElem Algebra::sl2(int alpha, int beta) const {
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1) throw std::out_of_range("sl2 indices are 0 or 1");
  AlgElem aa = gen(static_cast<Letter>(alpha)), bb = gen(static_cast<Letter>(2 + beta));
  AlgElem ab = gen(static_cast<Letter>(beta)), ba = gen(static_cast<Letter>(2 + alpha));
  return CycloNum(Rational(1, 2)) * (anticommutator(aa, bb) + anticommutator(ba, ab));
}

AlgElem::AlgElem(AlgebraPtr alg, Terms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

CycloNum AlgElem::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.m.key() < k.key(); });
  if (it != terms_.end() && it->m == m) return it->c;
  return CycloNum();
}

int AlgElem::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

int AlgElem::parity() const {
  int p = -2;
  for (const auto& t : terms_) {
    if (p == -2)
      p = t.m.parity();
    else if (p != t.m.parity())
      return -1;
  }
  return p == -2 ? 0 : p;
}

AlgElem AlgElem::parity_part(int eps) const {
  Terms t;
  for (const auto& x : terms_)
    if (x.m.parity() == eps) t.push_back(x);
  return AlgElem(alg_, std::move(t));
}

void AlgElem::check_same(const AlgElem& o) const {
  if (alg_ && o.alg_ && alg_ != o.alg_ && !(alg_->params() == o.alg_->params()))
    throw DimensionMismatch("elements of algebras with different parameters");
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  check_same(o);
  if (&o == this) return *this = CycloNum(2) * o;
  if (!alg_) alg_ = o.alg_;
  Terms out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.cbegin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->m.key() < j->m.key())) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->m.key() < i->m.key()) {
      out.push_back(*j++);
    } else {
      CycloNum c = i->c + j->c;
      if (!c.is_zero()) out.push_back({i->m, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) { return *this += -o; }

AlgElem AlgElem::operator-() const {
  AlgElem r(*this);
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  a.check_same(b);
  const AlgebraPtr& alg = a.alg_ ? a.alg_ : b.alg_;
  if (!alg) return AlgElem();
  return alg->multiply(a, b);
}

AlgElem operator*(const CycloNum& c, const AlgElem& a) {
  AlgElem r(a.alg_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.c = c * t.c;
  return r;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
  return true;
}

AlgElem AlgElem::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  if (!alg_) return AlgElem();
  AlgElem r = alg_->one();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string monomial_str(const Monomial& m, int n) {
  std::ostringstream os;
  bool first = true;
  for (int l = 0; l < 4; ++l) {
    if (m.e[l] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << letter_name(static_cast<Letter>(l));
    if (m.e[l] > 1) os << "^" << static_cast<int>(m.e[l]);
  }
  if (m.g != 0 || first) {
    if (!first) os << "*";
    os << GroupElem::from_code(n, m.g).str();
  }
  return os.str();
}

std::string AlgElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  int n = alg_->n();
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool simple = c.is_rational();
    bool neg = simple && c.to_rational().sign() < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (simple) {
      Rational v = c.to_rational().abs();
      if (v != Rational(1)) os << v.short_str() << "*";
    } else {
      os << "(" << cs << ")*";
    }
    os << monomial_str(m, n);
  }
  return os.str();
}

AlgElem commutator(const AlgElem& x, const AlgElem& y) { return x * y - y * x; }
AlgElem anticommutator(const AlgElem& x, const AlgElem& y) { return x * y + y * x; }

AlgElem super_commutator(const AlgElem& x, const AlgElem& y) {
  int px = x.parity(), py = y.parity();
  if (px < 0 || py < 0) throw std::invalid_argument("super commutator needs parity-homogeneous arguments");
  return (px & py) ? anticommutator(x, y) : commutator(x, y);
}

AlgElem normal_order(const AlgebraPtr& alg, const std::vector<WordItem>& word, Strategy s) {
  Terms z{{Monomial{}, CycloNum(1)}};
  auto group_code = [&](const GroupElem& g) {
    if (g.n() != alg->n()) throw DimensionMismatch("word mixes dihedral groups");
    return g.code();
  };
  if (s == Strategy::RightInsertion) {
    for (const auto& it : word) {
      switch (it.kind) {
        case WordItem::Kind::Gen: right_apply(*alg, z, it.letter); break;
        case WordItem::Kind::Group: right_group(*alg, z, group_code(it.group)); break;
        case WordItem::Kind::Scalar: scale(z, it.scalar); break;
      }
    }
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      switch (it->kind) {
        case WordItem::Kind::Gen: left_apply(*alg, it->letter, z); break;
        case WordItem::Kind::Group: left_group(*alg, group_code(it->group), z); break;
        case WordItem::Kind::Scalar: scale(z, it->scalar); break;
      }
    }
  }
  return AlgElem(alg, std::move(z));
}

GroupElem klein_element(int n) {
  if (n % 2 != 0) throw std::invalid_argument("no Klein operator for odd n");
  return GroupElem::S(n, n / 2);
}

AlgElem klein_conjugate(const AlgElem& x) {
  if (!x.algebra()) return x;
  int n = x.algebra()->n();
  GroupElem k = klein_element(n);
  Terms t;
  for (const auto& [m, c] : x.terms()) {
    Monomial w = m;
    if (m.parity() == 0) w.g = static_cast<std::uint16_t>(gmul(n, m.g, k.code()));
    t.push_back({w, c});
  }
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.m.key() < b.m.key(); });
  return AlgElem(x.algebra(), std::move(t));
}

}  // namespace sra
