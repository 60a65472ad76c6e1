#include "sra/traces.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sra/errors.hpp"
#include "sra/modular.hpp"

namespace sra {

namespace {

void check_kappa(int kappa) {
  if (kappa != 1 && kappa != -1) throw std::invalid_argument("kappa must be +1 or -1");
}

CycloNum sin2(const Rational& r) {
  CycloNum s = trig_value(TrigKind::Sin, r);
  return s * s;
}

CycloNum cos2(const Rational& r) {
  CycloNum c = trig_value(TrigKind::Cos, r);
  return c * c;
}

// value of the symmetric parameter at k: v_k = v_{n-k}, given v_first..v_m
CycloNum sym_param(const std::vector<CycloNum>& v, int first, int n, int k) {
  int kk = ((k % n) + n) % n;
  int j = std::min(kk, n - kk);
  if (j < first) return CycloNum();
  return v[j - first];
}

std::vector<CycloNum> glc_values(const AlgebraParams& p, int kappa, const std::vector<CycloNum>& free) {
  int n = p.n, m = p.m();
  std::vector<CycloNum> val(2 * n);
  if (!p.is_even()) {
    CycloNum mu(p.mu0);
    CycloNum two_mu_over_n = CycloNum(Rational(2) * p.mu0 / Rational(n));
    if (kappa == 1) {
      if (static_cast<int>(free.size()) != m)
        throw std::invalid_argument("odd-n trace needs " + std::to_string(m) + " parameters");
      CycloNum x;
      for (int r = 1; r < n; ++r) {
        CycloNum s = sym_param(free, 1, n, r);
        val[r] = s;
        if (!s.is_zero()) x += sin2(Rational(r, n)) * s;
      }
      CycloNum trl0 = -two_mu_over_n * x;
      for (int k = 0; k < n; ++k) val[n + k] = trl0;
      val[0] = -mu * trl0;
    } else {
      if (static_cast<int>(free.size()) != m + 1)
        throw std::invalid_argument("odd-n supertrace needs " + std::to_string(m + 1) + " parameters");
      CycloNum y;
      for (int r = 0; r < n; ++r) {
        CycloNum u = sym_param(free, 0, n, r);
        val[r] = u;
        if (!u.is_zero()) y += cos2(Rational(r, n)) * u;
      }
      CycloNum strl0 = -two_mu_over_n * y;
      for (int k = 0; k < n; ++k) val[n + k] = strl0;
    }
    return val;
  }
  if (kappa != 1) throw std::invalid_argument("even-n supertraces are obtained by klein_transport of a trace");
  if (static_cast<int>(free.size()) != m)
    throw std::invalid_argument("even-n trace needs " + std::to_string(m) + " parameters");
  CycloNum x1, x2;
  for (int r = 1; r < n; ++r) {
    CycloNum s = sym_param(free, 1, n, r);
    val[r] = s;
  }
  for (int l = 1; l <= m - 1; ++l) x1 += val[2 * l] * sin2(Rational(l, m));
  for (int l = 0; l <= m - 1; ++l) x2 += val[2 * l + 1] * sin2(Rational(2 * l + 1, 2 * m));
  CycloNum trl0 = -CycloNum(p.mu0 / Rational(m)) * (x1 + x2);
  CycloNum trlm = -CycloNum(p.mu1 / Rational(m)) * (x1 - x2);
  for (int k = 0; k < n; ++k) val[n + k] = k % 2 == 0 ? trl0 + trlm : trl0 - trlm;
  val[0] = -CycloNum(p.mu0) * trl0 - CycloNum(p.mu1) * trlm;
  return val;
}

}  // namespace

CycloNum TraceSpec::group_value(const GroupElem& g) const {
  if (g.n() != params_.n) throw DimensionMismatch("group element of a different dihedral group");
  return group_values_[g.code()];
}

CycloNum TraceSpec::L_value(long p) const {
  int n = params_.n;
  CycloNum acc;
  for (int k = 0; k < n; ++k) acc += lambda_power(n, k * p) * group_values_[n + k];
  return acc * CycloNum(Rational(1, n));
}

CycloNum TraceSpec::Q_value(long p) const {
  int n = params_.n;
  CycloNum acc;
  for (int k = 0; k < n; ++k) acc += lambda_power(n, -k * p) * group_values_[k];
  return acc * CycloNum(Rational(1, n));
}

bool TraceSpec::is_zero() const {
  return std::all_of(group_values_.begin(), group_values_.end(), [](const CycloNum& c) { return c.is_zero(); });
}

TraceSpec trace_spec_from_group_values(const AlgebraParams& params, int kappa, std::vector<CycloNum> values) {
  check_kappa(kappa);
  if (static_cast<int>(values.size()) != 2 * params.n)
    throw std::invalid_argument("expected one value per group element");
  for (auto& v : values) v = v.minimize();
  TraceSpec s;
  s.params_ = params;
  s.alg_ = Algebra::create(params);
  s.kappa_ = kappa;
  s.group_values_ = std::move(values);
  s.table_ = std::make_shared<TraceTable>();
  return s;
}

TraceSpec make_trace_spec(const AlgebraParams& params, int kappa, std::vector<CycloNum> free) {
  check_kappa(kappa);
  auto values = glc_values(params, kappa, free);
  TraceSpec s = trace_spec_from_group_values(params, kappa, std::move(values));
  s.free_ = std::move(free);
  return s;
}

TraceSpec klein_transport(const TraceSpec& trace) {
  const auto& p = trace.params();
  if (!p.is_even()) throw std::invalid_argument("Klein transport needs even n");
  int n = p.n;
  GroupElem k = klein_element(n);
  std::vector<CycloNum> values(2 * n);
  for (const auto& g : all_elements(n)) values[g.code()] = trace.group_value(g * k);
  return trace_spec_from_group_values(p, -trace.kappa(), std::move(values));
}

// Solves for the trace values of all weight-zero monomials of one even degree.
class TraceEngine {
 public:
  using Lower = std::function<CycloNum(const Monomial&)>;

  TraceEngine(const Algebra& alg, int kappa, int degree, Lower lower)
      : alg_(alg), n_(alg.n()), kappa_(kappa), d_(degree), lower_(std::move(lower)) {
    n2_ = 2 * n_;
    for (int e = 0; e < n2_; ++e) roots_.push_back(CycloNum::root_of_unity(n2_, e));
    enumerate();
    int u = static_cast<int>(unknown_keys_.size());
    parent_.resize(u);
    std::iota(parent_.begin(), parent_.end(), 0);
    fexp_.assign(u, 0);
    off_.assign(u, CycloNum());
    fixed_.assign(u, 0);
    val_.assign(u, CycloNum());
  }

  int unknown_count() const { return static_cast<int>(unknown_keys_.size()); }
  int unknown_index(const Monomial& m) const {
    auto it = exps_index_.find(m.exps_key());
    if (it == exps_index_.end()) return -1;
    return it->second * (2 * n_) + m.g;
  }

  void fix(int idx, const CycloNum& v) {
    int r = find(idx);
    // u_idx = z^F u_r + C
    CycloNum target = rootmul(v - off_or_zero(idx, r), -fexp_or_zero(idx, r));
    fix_root(r, target);
  }

  TraceStats run() {
    add_two_term_relations();
    std::vector<int> free_roots;
    for (int i = 0; i < unknown_count(); ++i)
      if (find(i) == i && !fixed_[i]) free_roots.push_back(i);
    int used = 0;
    if (!free_roots.empty()) used = solve_free_roots(free_roots);
    return TraceStats{d_, unknown_count(), static_cast<int>(free_roots.size()), used};
  }

  CycloNum value(int idx) {
    int r = find(idx);
    if (!fixed_[r]) throw InsufficientRelations(d_);
    return rootmul(val_[r], fexp_or_zero(idx, r)) + off_or_zero(idx, r);
  }

  const std::vector<std::uint64_t>& unknown_keys() const { return unknown_keys_; }

 private:
  int fexp_or_zero(int i, int r) const { return i == r ? 0 : fexp_[i]; }
  CycloNum off_or_zero(int i, int r) const { return i == r ? CycloNum() : off_[i]; }

  CycloNum rootmul(const CycloNum& c, int e) const {
    int ee = ((e % n2_) + n2_) % n2_;
    if (ee == 0 || c.is_zero()) return c;
    return c * roots_[ee];
  }

  void enumerate() {
    int j = d_ / 2;
    int idx = 0;
    for (int e0 = 0; e0 <= j; ++e0)
      for (int e1 = 0; e1 <= j; ++e1) {
        Monomial m;
        m.e = {static_cast<std::uint8_t>(e0), static_cast<std::uint8_t>(e1), static_cast<std::uint8_t>(j - e0),
               static_cast<std::uint8_t>(j - e1)};
        exps_index_.emplace(m.exps_key(), idx++);
        for (int g = 0; g < 2 * n_; ++g) {
          m.g = static_cast<std::uint16_t>(g);
          unknown_keys_.push_back(m.key());
        }
      }
  }

  int find(int i) {
    std::vector<int> path;
    int r = i;
    while (parent_[r] != r) {
      path.push_back(r);
      r = parent_[r];
    }
    // compress from the node nearest the root outward
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      int x = *it;
      int p = parent_[x];
      if (p == r) continue;
      off_[x] = rootmul(off_[p], fexp_[x]) + off_[x];
      fexp_[x] = (fexp_[x] + fexp_[p]) % n2_;
      parent_[x] = r;
    }
    return r;
  }

  const CycloNum& inv_one_minus_root(int e) {
    auto it = inv_cache_.find(e);
    if (it != inv_cache_.end()) return it->second;
    return inv_cache_.emplace(e, (CycloNum(1) - roots_[e]).inverse()).first->second;
  }

  void fix_root(int r, const CycloNum& v) {
    if (fixed_[r]) {
      if (!(val_[r] == v))
        throw InconsistentSystem("cyclicity relations disagree at degree " + std::to_string(d_));
      return;
    }
    fixed_[r] = 1;
    val_[r] = v;
  }

  // u_i = z^a u_j + beta
  void relate(int i, int j, int a, const CycloNum& beta) {
    int ri = find(i), rj = find(j);
    int fi = fexp_or_zero(i, ri), fj = fexp_or_zero(j, rj);
    CycloNum ci = off_or_zero(i, ri), cj = off_or_zero(j, rj);
    // z^fi u_ri + ci = z^(a+fj) u_rj + z^a cj + beta
    CycloNum rhs = rootmul(cj, a) + beta - ci;
    if (ri == rj) {
      int e = ((a + fj - fi) % n2_ + n2_) % n2_;
      // z^fi (1 - z^e) u_r = rhs
      if (e == 0) {
        if (fixed_[ri]) return;
        if (!rhs.is_zero())
          throw InconsistentSystem("cyclicity relations disagree at degree " + std::to_string(d_));
        return;
      }
      fix_root(ri, rootmul(rhs * inv_one_minus_root(e), -fi));
      return;
    }
    // u_ri = z^(a+fj-fi) u_rj + z^-fi rhs
    int link = ((a + fj - fi) % n2_ + n2_) % n2_;
    CycloNum c = rootmul(rhs, -fi);
    if (fixed_[ri]) fix_root(rj, rootmul(val_[ri] - c, -link));
    parent_[ri] = rj;
    fexp_[ri] = link;
    off_[ri] = c;
  }

  int twist_exp(int g, Letter l) const {
    // S_k: a -> lambda^-k, b -> lambda^k; R_k: a -> -lambda^k, b -> -lambda^-k (lambda = z^2)
    bool is_a = letter_is_a(l);
    if (g < n_) return ((is_a ? -2 * g : 2 * g) % n2_ + n2_) % n2_;
    int k = g - n_;
    return ((n_ + (is_a ? 2 * k : -2 * k)) % n2_ + n2_) % n2_;
  }

  int kappa_exp() const { return kappa_ == 1 ? 0 : n_; }

  int gmul(int a, int b) const {
    return (GroupElem::from_code(n_, a) * GroupElem::from_code(n_, b)).code();
  }

  void add_two_term_relations() {
    int u = unknown_count();
    for (int i = 0; i < u; ++i) {
      Monomial m = Monomial::from_key(unknown_keys_[i]);
      std::uint32_t x = m.exps_key();
      int g = m.g;
      if (d_ > 0) {
        // sp(l y g) = kappa sp(y g l) = kappa tw sp(y l' g)
        int l = 0;
        while (m.e[l] == 0) ++l;
        Letter letter = static_cast<Letter>(l);
        std::uint32_t y = x - (1u << (8 * (3 - l)));
        Letter l2 = alg_.twist(g, letter).first;
        int a = (twist_exp(g, letter) + kappa_exp()) % n2_;
        auto terms = alg_.right_mul_letter(y, l2);
        int top = -1;
        CycloNum lower;
        for (const auto& [z, c] : *terms) {
          Monomial w = z;
          w.g = static_cast<std::uint16_t>(gmul(z.g, g));
          if (w.degree() == d_)
            top = unknown_index(w);
          else
            lower += c * lower_(w);
        }
        relate(i, top, a, rootmul(lower, a));
      }
      if (n_ > 1) {
        // sp(x g S_1) = sp(S_1 x g)
        int h = 1;
        int lhs = unknown_index(with_group(m, gmul(g, h)));
        Terms hx = alg_.left_mul_group(h, x, Strategy::RightInsertion);
        int top = -1;
        CycloNum topc, lower;
        for (const auto& [z, c] : hx) {
          Monomial w = z;
          w.g = static_cast<std::uint16_t>(gmul(z.g, g));
          if (w.degree() == d_) {
            top = unknown_index(w);
            topc = c;
          } else {
            lower += c * lower_(w);
          }
        }
        relate(lhs, top, root_exp(topc), lower);
      }
    }
  }

  static Monomial with_group(Monomial m, int g) {
    m.g = static_cast<std::uint16_t>(g);
    return m;
  }

  int root_exp(const CycloNum& c) const {
    for (int e = 0; e < n2_; ++e)
      if (c == roots_[e]) return e;
    throw InconsistentSystem("group twist coefficient is not a root of unity");
  }

  struct Combo {
    int g;
    std::vector<std::pair<Letter, CycloNum>> parts;
    int weight;
  };

  std::vector<Combo> eigen_combos() const {
    std::vector<int> order;
    std::vector<char> seen(2 * n_, 0);
    for (const auto& cls : conjugacy_classes(n_)) {
      order.push_back(cls.front().code());
      seen[cls.front().code()] = 1;
    }
    for (int g = 0; g < 2 * n_; ++g)
      if (!seen[g]) order.push_back(g);
    std::vector<Combo> out;
    CycloNum kap(kappa_);
    for (int g : order) {
      for (int alpha = 0; alpha < 2; ++alpha) {
        Letter a = static_cast<Letter>(alpha), b = static_cast<Letter>(2 + alpha);
        int w = alpha == 0 ? -1 : 1;
        if (g < n_) {
          for (Letter l : {a, b}) {
            const auto& [l2, f] = alg_.twist(g, l);
            if (l2 == l && f == kap) out.push_back({g, {{l, CycloNum(1)}}, w});
          }
        } else {
          // R_k (a - kappa lambda^k b) R_k^{-1} = kappa (a - kappa lambda^k b)
          CycloNum beta = -kap * lambda_power(n_, g - n_);
          out.push_back({g, {{a, CycloNum(1)}, {b, beta}}, w});
        }
      }
    }
    return out;
  }

  std::vector<std::uint32_t> monomials_of_weight(int degree, int weight) const {
    std::vector<std::uint32_t> out;
    // e1 + e3 - e0 - e2 = weight, sum = degree
    if ((degree + weight) % 2 != 0) return out;
    int plus = (degree + weight) / 2, minus = (degree - weight) / 2;
    if (plus < 0 || minus < 0) return out;
    for (int e0 = 0; e0 <= minus; ++e0)
      for (int e1 = 0; e1 <= plus; ++e1)
        out.push_back(static_cast<std::uint32_t>(e0) << 24 | static_cast<std::uint32_t>(e1) << 16 |
                      static_cast<std::uint32_t>(minus - e0) << 8 | static_cast<std::uint32_t>(plus - e1));
    return out;
  }

  int solve_free_roots(const std::vector<int>& free_roots) {
    std::unordered_map<int, int> col;
    for (std::size_t c = 0; c < free_roots.size(); ++c) col[free_roots[c]] = static_cast<int>(c);
    int ncols = static_cast<int>(free_roots.size());
    IncrementalEchelon ech(ncols);
    int used = 0;
    for (const Combo& combo : eigen_combos()) {
      for (std::uint32_t y : monomials_of_weight(d_ + 1, -combo.weight)) {
        std::unordered_map<std::uint64_t, CycloNum> acc;
        auto add = [&](const Terms& t, const CycloNum& scale) {
          for (const auto& [z, c] : t) {
            Monomial w = z;
            w.g = static_cast<std::uint16_t>(gmul(z.g, combo.g));
            auto [it, ins] = acc.try_emplace(w.key(), c * scale);
            if (!ins) it->second += c * scale;
          }
        };
        for (const auto& [l, beta] : combo.parts) {
          add(*alg_.left_mul_letter(l, y), beta);
          add(*alg_.right_mul_letter(y, l), -beta);
        }
        std::vector<CycloNum> row(ncols);
        CycloNum constant;
        bool any = false;
        for (const auto& [key, c] : acc) {
          if (c.is_zero()) continue;
          Monomial w = Monomial::from_key(key);
          int deg = w.degree();
          if (deg > d_) throw InconsistentSystem("top-degree terms of a cyclicity relation do not cancel");
          if (deg < d_) {
            constant += c * lower_(w);
            continue;
          }
          int idx = unknown_index(w);
          int r = find(idx);
          int f = fexp_or_zero(idx, r);
          constant += c * off_or_zero(idx, r);
          if (fixed_[r]) {
            constant += c * rootmul(val_[r], f);
          } else {
            row[col.at(r)] += rootmul(c, f);
            any = true;
          }
        }
        if (!any) {
          if (!constant.is_zero())
            throw InconsistentSystem("cyclicity relations disagree at degree " + std::to_string(d_));
          continue;
        }
        ++used;
        auto st = ech.add_row(std::move(row), -constant);
        if (st == IncrementalEchelon::Status::Inconsistent)
          throw InconsistentSystem("cyclicity relations disagree at degree " + std::to_string(d_));
        if (ech.full()) break;
      }
      if (ech.full()) break;
    }
    if (!ech.full()) throw InsufficientRelations(d_);
    auto sol = ech.solution();
    for (int c = 0; c < ncols; ++c) fix_root(free_roots[c], sol[c]);
    return used;
  }

  const Algebra& alg_;
  int n_;
  int n2_;
  int kappa_;
  int d_;
  Lower lower_;
  std::vector<CycloNum> roots_;
  std::unordered_map<std::uint32_t, int> exps_index_;
  std::vector<std::uint64_t> unknown_keys_;
  std::vector<int> parent_;
  std::vector<int> fexp_;
  std::vector<CycloNum> off_;
  std::vector<char> fixed_;
  std::vector<CycloNum> val_;
  std::unordered_map<int, CycloNum> inv_cache_;

 public:
  // Drives the degree-by-degree computation for a spec.
  static void ensure(const TraceSpec& spec, int degree) {
    TraceTable& t = spec.table();
    std::lock_guard<std::mutex> lock(t.mutex_);
    if (t.values_.empty() && t.computed_degree_ == 0) {
      for (int g = 0; g < 2 * spec.params().n; ++g) {
        const CycloNum& v = spec.group_values()[g];
        if (v.is_zero()) continue;
        Monomial m;
        m.g = static_cast<std::uint16_t>(g);
        t.values_.emplace(m.key(), v);
      }
    }
    if (spec.is_zero()) {
      t.computed_degree_ = std::max(t.computed_degree_, degree);
      return;
    }
    for (int d = t.computed_degree_ + 2; d <= degree; d += 2) {
      auto lower = [&t](const Monomial& m) -> CycloNum {
        if (m.parity() != 0 || m.weight() != 0) return CycloNum();
        auto it = t.values_.find(m.key());
        return it == t.values_.end() ? CycloNum() : it->second;
      };
      TraceEngine eng(*spec.algebra(), spec.kappa(), d, lower);
      TraceStats st = eng.run();
      for (int i = 0; i < eng.unknown_count(); ++i) {
        CycloNum v = eng.value(i);
        if (!v.is_zero()) t.values_.emplace(eng.unknown_keys()[i], std::move(v));
      }
      t.stats_.push_back(st);
      t.computed_degree_ = d;
    }
  }

  static CycloNum lookup(const TraceSpec& spec, const Monomial& m) {
    if (m.parity() != 0 || m.weight() != 0) return CycloNum();
    TraceTable& t = spec.table();
    std::lock_guard<std::mutex> lock(t.mutex_);
    auto it = t.values_.find(m.key());
    return it == t.values_.end() ? CycloNum() : it->second;
  }
};

std::vector<TraceStats> TraceTable::stats() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_;
}

std::vector<CycloNum> derive_group_values(const AlgebraParams& params, int kappa, const std::vector<CycloNum>& free) {
  check_kappa(kappa);
  int n = params.n, m = params.m();
  auto alg = Algebra::create(params);
  TraceEngine eng(*alg, kappa, 0, [](const Monomial&) { return CycloNum(); });
  int first = (!params.is_even() && kappa == -1) ? 0 : 1;
  int expected = (!params.is_even() && kappa == -1) ? m + 1 : m;
  if (params.is_even() && kappa == -1) throw std::invalid_argument("even-n supertraces come from klein_transport");
  if (static_cast<int>(free.size()) != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " free parameters");
  for (int k = first; k < n; ++k) {
    Monomial mm;
    mm.g = static_cast<std::uint16_t>(k);
    eng.fix(eng.unknown_index(mm), sym_param(free, first, n, k));
  }
  eng.run();
  std::vector<CycloNum> out(2 * n);
  for (int g = 0; g < 2 * n; ++g) {
    Monomial mm;
    mm.g = static_cast<std::uint16_t>(g);
    out[g] = eng.value(eng.unknown_index(mm));
  }
  return out;
}

CycloNum trace_eval(const TraceSpec& spec, const AlgElem& x) {
  if (x.is_zero()) return CycloNum();
  if (!(x.algebra()->params() == spec.params())) throw DimensionMismatch("element and trace use different parameters");
  int top = 0;
  for (const auto& [m, c] : x.terms())
    if (m.parity() == 0 && m.weight() == 0) top = std::max(top, m.degree());
  TraceEngine::ensure(spec, top);
  CycloNum acc;
  for (const auto& [m, c] : x.terms()) {
    if (m.parity() != 0 || m.weight() != 0) continue;
    CycloNum v = TraceEngine::lookup(spec, m);
    if (!v.is_zero()) acc += c * v;
  }
  return acc;
}

namespace {

// sp(f v) over fs x vs.  f v = f0 (g_f v0) g_v, so one product per
// (f0, g_f, v0) serves every g_v.  Entries with mismatched weight or parity
// are zero and skipped.
CycloMatrix pair_traces(const TraceSpec& spec, const std::vector<Monomial>& fs, const std::vector<Monomial>& vs) {
  const auto& alg = spec.algebra();
  int n = spec.params().n;
  std::vector<AlgElem> groups;
  for (int c = 0; c < 2 * n; ++c) groups.push_back(alg->group(GroupElem::from_code(n, c)));
  auto classes = [](const std::vector<Monomial>& ms) {
    std::map<std::uint32_t, std::vector<int>> out;
    for (int i = 0; i < static_cast<int>(ms.size()); ++i) out[ms[i].exps_key()].push_back(i);
    return out;
  };
  auto fcls = classes(fs), vcls = classes(vs);
  std::map<std::pair<std::uint32_t, int>, AlgElem> conj;
  CycloMatrix t(static_cast<int>(fs.size()), static_cast<int>(vs.size()));
  for (const auto& [fk, fidx] : fcls) {
    Monomial f0 = fs[fidx[0]];
    f0.g = 0;
    AlgElem fe = alg->monomial(f0);
    for (const auto& [vk, vidx] : vcls) {
      Monomial v0 = vs[vidx[0]];
      v0.g = 0;
      if (f0.weight() + v0.weight() != 0 || f0.parity() != v0.parity()) continue;
      for (int i : fidx) {
        int gf = fs[i].g;
        auto it = conj.find({vk, gf});
        if (it == conj.end()) it = conj.emplace(std::make_pair(vk, gf), groups[gf] * alg->monomial(v0)).first;
        AlgElem x = fe * it->second;
        for (int j : vidx) t.at(i, j) = trace_eval(spec, x * groups[vs[j].g]);
      }
    }
  }
  return t;
}

}  // namespace

std::vector<Monomial> pbw_basis(int n, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int e0 = d; e0 >= 0; --e0)
      for (int e1 = d - e0; e1 >= 0; --e1)
        for (int e2 = d - e0 - e1; e2 >= 0; --e2) {
          int e3 = d - e0 - e1 - e2;
          for (int g = 0; g < 2 * n; ++g) {
            Monomial m;
            m.e = {static_cast<std::uint8_t>(e0), static_cast<std::uint8_t>(e1), static_cast<std::uint8_t>(e2),
                   static_cast<std::uint8_t>(e3)};
            m.g = static_cast<std::uint16_t>(g);
            out.push_back(m);
          }
        }
  std::sort(out.begin(), out.end());
  return out;
}

GramReport gram_matrix(const TraceSpec& spec, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("degree cutoff must be non-negative");
  const auto& alg = spec.algebra();
  GramReport rep;
  rep.degree = max_degree;
  rep.basis = pbw_basis(spec.params().n, max_degree);
  int nb = static_cast<int>(rep.basis.size());
  TraceEngine::ensure(spec, 2 * max_degree);
  rep.matrix = pair_traces(spec, rep.basis, rep.basis);
  // The matrix splits into blocks: row weight w, parity p against column
  // weight -w, parity p.
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int i = 0; i < nb; ++i) classes[{rep.basis[i].weight(), rep.basis[i].parity()}].push_back(i);
  for (const auto& [key, cols] : classes) {
    auto rit = classes.find({-key.first, key.second});
    std::vector<int> rows = rit == classes.end() ? std::vector<int>{} : rit->second;
    CycloMatrix block(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) block.at(static_cast<int>(r), static_cast<int>(c)) = rep.matrix.at(rows[r], cols[c]);
    auto res = fast_kernel(block);
    rep.rank += res.rank;
    for (const auto& v : res.basis) {
      AlgElem k = alg->zero();
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!v[c].is_zero()) k += alg->monomial(rep.basis[cols[c]], v[c]);
      rep.kernel.push_back(std::move(k));
    }
  }
  return rep;
}

GramKernel gram_kernel(const TraceSpec& spec, int max_degree, int vector_degree, int max_vectors) {
  if (vector_degree < 0 || max_degree < 0) throw std::invalid_argument("degree cutoff must be non-negative");
  const auto& alg = spec.algebra();
  GramKernel out;
  out.degree = max_degree;
  out.vector_degree = vector_degree;
  TraceEngine::ensure(spec, max_degree + vector_degree);
  auto fs = pbw_basis(spec.params().n, max_degree);
  auto vs = pbw_basis(spec.params().n, vector_degree);
  std::map<std::pair<int, int>, std::vector<int>> frows, vcols;
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) frows[{fs[i].weight(), fs[i].parity()}].push_back(i);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) vcols[{vs[i].weight(), vs[i].parity()}].push_back(i);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (const auto& [key, cols] : vcols) {
    auto rit = frows.find({-key.first, key.second});
    blocks.push_back({rit == frows.end() ? std::vector<int>{} : rit->second, cols});
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
    return x.first.size() * x.second.size() < y.first.size() * y.second.size();
  });
  for (const auto& [rows, cols] : blocks) {
    std::vector<Monomial> bf, bv;
    for (int r : rows) bf.push_back(fs[r]);
    for (int c : cols) bv.push_back(vs[c]);
    auto res = fast_kernel(pair_traces(spec, bf, bv));
    out.rank += res.rank;
    for (const auto& v : res.basis) {
      AlgElem k = alg->zero();
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!v[c].is_zero()) k += alg->monomial(bv[c], v[c]);
      out.kernel.push_back(std::move(k));
    }
    if (max_vectors > 0 && static_cast<int>(out.kernel.size()) >= max_vectors) break;
  }
  return out;
}

}  // namespace sra
