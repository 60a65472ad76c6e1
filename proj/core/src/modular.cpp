#include "sra/modular.hpp"

#include <gmp.h>

#include <algorithm>
#include <numeric>

namespace sra {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addm(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulm(a, a, p))
    if (e & 1) r = mulm(r, a, p);
  return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

u64 reduce(const mpz_class& x, u64 p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Primes p = 1 mod N below 2^62, largest first.
class PrimeStream {
 public:
  explicit PrimeStream(long n) : n_(n), k_(((u64(1) << 62) - 1) / static_cast<u64>(n)) {}
  u64 next() {
    for (;; --k_) {
      u64 p = k_ * static_cast<u64>(n_) + 1;
      mpz_class z(std::to_string(p));
      if (mpz_probab_prime_p(z.get_mpz_t(), 30)) {
        --k_;
        return p;
      }
    }
  }

 private:
  long n_;
  u64 k_;
};

u64 primitive_root_of_unity(long n, u64 p) {
  auto qs = prime_factors(n);
  for (u64 g = 2;; ++g) {
    u64 w = powm(g, (p - 1) / static_cast<u64>(n), p);
    bool ok = true;
    for (long q : qs) ok = ok && powm(w, static_cast<u64>(n / q), p) != 1;
    if (ok) return w;
  }
}

struct Entry {
  std::vector<mpz_class> num;  // power-basis numerators over a common denominator
  mpz_class den;
};

struct Pattern {
  std::vector<int> pivots;
  // kernel[t][i]: entry of vector t at pivots[i]
  std::vector<std::vector<u64>> kernel;
};

Pattern rref_mod(std::vector<std::vector<u64>>& m, int cols, u64 p) {
  int rows = static_cast<int>(m.size());
  Pattern out;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    u64 inv = invm(m[r][c], p);
    for (int k = c; k < cols; ++k) m[r][k] = mulm(m[r][k], inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (int k = c; k < cols; ++k)
        if (m[r][k]) m[i][k] = subm(m[i][k], mulm(f, m[r][k], p), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : out.pivots) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(out.pivots.size());
    for (int i = 0; i < r; ++i) v[i] = subm(0, m[i][f], p);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

// a / b with |a|, b <= sqrt(m / 2) and a = b x mod m.
bool rational_reconstruct(const mpz_class& x, const mpz_class& m, mpq_class& out) {
  mpz_class bound = sqrt(mpz_class(m / 2));
  mpz_class r0 = m, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  mpz_class g = gcd(r1, t1);
  if (g != 1) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

// Componentwise comparison of pivot lists of equal length.
bool pivots_below(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::optional<KernelResult> modular_impl(const CycloMatrix& a, int max_primes, bool small_only) {
  int rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return std::nullopt;
  long order = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!a.at(i, j).is_zero()) order = lcm_long(order, a.at(i, j).order());
  int phi = static_cast<int>(euler_phi(order));
  std::vector<long> exps;
  for (long e = 1; e <= order; ++e)
    if (std::gcd(e, order) == 1) exps.push_back(e % order);

  std::vector<Entry> entries(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const CycloNum& x = a.at(i, j);
      if (x.is_zero()) continue;
      auto cs = x.embed(static_cast<int>(order)).coeffs();
      Entry& e = entries[static_cast<std::size_t>(i) * cols + j];
      e.den = 1;
      for (const auto& c : cs) e.den = lcm(e.den, c.den());
      for (const auto& c : cs) e.num.push_back(c.num() * (e.den / c.den()));
    }

  PrimeStream primes(order);
  std::optional<std::vector<int>> best;
  std::vector<mpz_class> residues;  // [t][i][j] flattened
  mpz_class modulus = 1;
  std::vector<mpq_class> last;
  bool have_last = false;

  for (int used = 0; used < max_primes; ++used) {
    u64 p = primes.next();
    u64 w = primitive_root_of_unity(order, p);
    bool bad = false;
    std::vector<std::vector<u64>> red(entries.size());
    for (std::size_t k = 0; k < entries.size() && !bad; ++k) {
      const Entry& e = entries[k];
      if (e.num.empty()) continue;
      u64 d = reduce(e.den, p);
      if (d == 0) {
        bad = true;
        break;
      }
      u64 dinv = invm(d, p);
      for (const auto& x : e.num) red[k].push_back(mulm(reduce(x, p), dinv, p));
    }
    if (bad) continue;

    std::vector<std::vector<u64>> vand(phi, std::vector<u64>(phi));
    std::vector<Pattern> pats;
    for (int s = 0; s < phi; ++s) {
      u64 ws = powm(w, static_cast<u64>(exps[s]), p);
      std::vector<u64> pw(phi);
      pw[0] = 1;
      for (int j = 1; j < phi; ++j) pw[j] = mulm(pw[j - 1], ws, p);
      vand[s] = pw;
      std::vector<std::vector<u64>> m(rows, std::vector<u64>(cols, 0));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          const auto& e = red[static_cast<std::size_t>(i) * cols + j];
          u64 acc = 0;
          for (std::size_t k = 0; k < e.size(); ++k) acc = addm(acc, mulm(e[k], pw[k], p), p);
          m[i][j] = acc;
        }
      pats.push_back(rref_mod(m, cols, p));
      if (pats.back().pivots != pats.front().pivots) {
        bad = true;
        break;
      }
    }
    if (bad) continue;
    const auto& piv = pats.front().pivots;
    int rank = static_cast<int>(piv.size());
    int dim = cols - rank;
    if (dim == 0) return KernelResult{rank, {}};
    if (small_only && dim > rank) return std::nullopt;
    if (best) {
      if (piv.size() < best->size() || (piv.size() == best->size() && !pivots_below(piv, *best))) continue;
      if (piv != *best) best.reset();
    }
    if (!best) {
      best = piv;
      residues.assign(static_cast<std::size_t>(dim) * rank * phi, 0);
      modulus = 1;
      have_last = false;
    }

    // Power-basis coordinates mod p: solve the Vandermonde system for each entry.
    std::vector<std::vector<u64>> aug(phi, std::vector<u64>(2 * phi, 0));
    for (int s = 0; s < phi; ++s) {
      for (int j = 0; j < phi; ++j) aug[s][j] = vand[s][j];
      aug[s][phi + s] = 1;
    }
    rref_mod(aug, 2 * phi, p);
    mpz_class pz(std::to_string(p));
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (int t = 0; t < dim; ++t)
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < phi; ++j) {
          u64 c = 0;
          for (int s = 0; s < phi; ++s) c = addm(c, mulm(aug[j][phi + s], pats[s].kernel[t][i], p), p);
          mpz_class& x = residues[(static_cast<std::size_t>(t) * rank + i) * phi + j];
          mpz_class diff = mpz_class(std::to_string(c)) - x;
          mpz_class lift = diff * minv;
          mpz_fdiv_r(lift.get_mpz_t(), lift.get_mpz_t(), pz.get_mpz_t());
          x += modulus * lift;
        }
    modulus *= pz;

    std::vector<mpq_class> rec(residues.size());
    bool ok = true;
    for (std::size_t k = 0; k < residues.size() && ok; ++k) ok = rational_reconstruct(residues[k], modulus, rec[k]);
    if (!ok) continue;
    bool stable = have_last && rec == last;
    last = std::move(rec);
    have_last = true;
    if (!stable) continue;

    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    KernelResult res;
    res.rank = rank;
    int t = 0;
    for (int f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      std::vector<CycloNum> v(cols);
      v[f] = CycloNum(1);
      for (int i = 0; i < rank; ++i) {
        std::vector<Rational> cs;
        for (int j = 0; j < phi; ++j) cs.emplace_back(last[(static_cast<std::size_t>(t) * rank + i) * phi + j]);
        v[piv[i]] = CycloNum::from_coeffs(static_cast<int>(order), cs).minimize();
      }
      res.basis.push_back(std::move(v));
      ++t;
    }
    bool verified = true;
    for (const auto& v : res.basis) {
      for (int i = 0; i < rows && verified; ++i) {
        CycloNum acc;
        for (int j = 0; j < cols; ++j)
          if (!v[j].is_zero() && !a.at(i, j).is_zero()) acc += a.at(i, j) * v[j];
        verified = acc.is_zero();
      }
      if (!verified) break;
    }
    if (verified) return res;
  }
  return std::nullopt;
}

}  // namespace

std::optional<KernelResult> modular_kernel(const CycloMatrix& a, int max_primes) {
  if (a.rows() == 0 || a.cols() == 0) {
    KernelResult r;
    auto s = solve_exact(a, std::vector<CycloNum>(a.rows()));
    r.rank = s.rank;
    r.basis = std::move(s.nullspace);
    return r;
  }
  return modular_impl(a, max_primes, false);
}

KernelResult fast_kernel(const CycloMatrix& a) {
  if (auto r = modular_impl(a, 64, true)) return std::move(*r);
  auto s = solve_exact(a, std::vector<CycloNum>(a.rows()));
  return KernelResult{s.rank, std::move(s.nullspace)};
}

}  // namespace sra
