#pragma once

#include <map>
#include <random>
#include <vector>

#include "sra/algebra.hpp"
#include "sra/cyclo.hpp"

namespace sra::testing {

inline CycloNum random_scalar(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), pw(0, order - 1);
  return CycloNum(Rational(num(rng), den(rng))) * CycloNum::root_of_unity(order, pw(rng));
}

inline Monomial random_monomial(std::mt19937& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), letter(0, 3), grp(0, 2 * n - 1);
  Monomial m;
  int d = deg(rng);
  for (int i = 0; i < d; ++i) ++m.e[letter(rng)];
  m.g = static_cast<std::uint16_t>(grp(rng));
  return m;
}

inline AlgElem random_element(std::mt19937& rng, const AlgebraPtr& alg, int max_degree, int max_terms = 3) {
  std::uniform_int_distribution<int> count(1, max_terms);
  AlgElem x = alg->zero();
  int k = count(rng);
  for (int i = 0; i < k; ++i) x += alg->monomial(random_monomial(rng, alg->n(), max_degree), random_scalar(rng, alg->n()));
  return x;
}

// Homogeneous in parity, as needed by super-commutators.
inline AlgElem random_homogeneous(std::mt19937& rng, const AlgebraPtr& alg, int max_degree, int parity,
                                  int max_terms = 3) {
  AlgElem x = alg->zero();
  while (x.is_zero()) x = random_element(rng, alg, max_degree, max_terms).parity_part(parity);
  return x;
}

// Random word over generators and group elements.
inline std::vector<WordItem> random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), kind(0, 2), letter(0, 3), grp(0, 2 * n - 1);
  std::vector<WordItem> w;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    if (kind(rng) == 0)
      w.push_back(WordItem::grp(GroupElem::from_code(n, grp(rng))));
    else
      w.push_back(WordItem::gen(static_cast<Letter>(letter(rng))));
  }
  return w;
}

// Naive word rewriting used as an independent oracle: repeatedly rewrite the
// leftmost adjacent pair that is out of normal order.  Tokens 0..3 are the
// generators, 4 + code are group elements.
class NaiveRewriter {
 public:
  NaiveRewriter(int n, Rational mu0, Rational mu1) : n_(n), mu0_(mu0), mu1_(mu1) {}

  std::map<std::vector<int>, CycloNum> normalize(const std::vector<int>& word) const {
    std::map<std::vector<int>, CycloNum> todo{{word, CycloNum(1)}}, done;
    while (!todo.empty()) {
      auto [w, c] = *todo.begin();
      todo.erase(todo.begin());
      if (c.is_zero()) continue;
      auto add = [&](std::map<std::vector<int>, CycloNum>& m, const std::vector<int>& key, const CycloNum& v) {
        auto it = m.find(key);
        if (it == m.end())
          m.emplace(key, v);
        else {
          it->second += v;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      int pos = -1;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool gi = w[i] >= 4, gj = w[i + 1] >= 4;
        if ((gi && gj) || (gi && !gj) || (!gi && !gj && w[i] > w[i + 1])) {
          pos = static_cast<int>(i);
          break;
        }
      }
      if (pos < 0) {
        add(done, w, c);
        continue;
      }
      int x = w[pos], y = w[pos + 1];
      std::vector<int> pre(w.begin(), w.begin() + pos), post(w.begin() + pos + 2, w.end());
      auto join = [&](std::vector<int> mid) {
        std::vector<int> r = pre;
        r.insert(r.end(), mid.begin(), mid.end());
        r.insert(r.end(), post.begin(), post.end());
        return r;
      };
      if (x >= 4 && y >= 4) {
        GroupElem g = GroupElem::from_code(n_, x - 4) * GroupElem::from_code(n_, y - 4);
        add(todo, join({4 + g.code()}), c);
      } else if (x >= 4) {
        GroupElem g = GroupElem::from_code(n_, x - 4);
        int k = g.index();
        bool is_a = y < 2;
        int alpha = y & 1;
        CycloNum f;
        int y2;
        if (g.kind() == GroupKind::S) {
          f = CycloNum::root_of_unity(n_, is_a ? -k : k);
          y2 = y;
        } else {
          f = -CycloNum::root_of_unity(n_, is_a ? k : -k);
          y2 = is_a ? 2 + alpha : alpha;
        }
        add(todo, join({y2, x}), c * f);
      } else {
        // x > y: x y = y x + [x, y]
        add(todo, join({y, x}), c);
        for (auto& [code, v] : bracket(x, y)) add(todo, join({4 + code}), c * v);
      }
    }
    return done;
  }

 private:
  // [x, y] for generator tokens x > y, from the defining relations written
  // with epsilon^{01} = 1.
  std::vector<std::pair<int, CycloNum>> bracket(int x, int y) const {
    auto ml = [&](long q, const CycloNum& scale) {
      std::vector<std::pair<int, CycloNum>> out;
      for (int k = 0; k < n_; ++k) {
        CycloNum v = CycloNum(mu0_) * CycloNum::root_of_unity(n_, k * q);
        if (n_ % 2 == 0) v += CycloNum(mu1_) * CycloNum::root_of_unity(n_, k * (q + n_ / 2));
        out.emplace_back(n_ + k, v * CycloNum(Rational(1, n_)) * scale);
      }
      return out;
    };
    // tokens: 0 a0, 1 a1, 2 b0, 3 b1
    if (x == 1 && y == 0) return ml(1, CycloNum(-1));           // [a1,a0] = -[a0,a1]
    if (x == 3 && y == 2) return ml(-1, CycloNum(-1));          // [b1,b0]
    if (x == 2 && y == 1) {                                     // [b0,a1] = -[a1,b0] = 1 + muL
      auto v = ml(0, CycloNum(1));
      v.emplace_back(0, CycloNum(1));
      return v;
    }
    if (x == 3 && y == 0) {                                     // [b1,a0] = -[a0,b1]
      auto v = ml(0, CycloNum(-1));
      v.emplace_back(0, CycloNum(-1));
      return v;
    }
    return {};
  }

  int n_;
  Rational mu0_, mu1_;
};

inline std::vector<int> word_tokens(const std::vector<WordItem>& w) {
  std::vector<int> out;
  for (const auto& it : w) out.push_back(it.kind == WordItem::Kind::Gen ? static_cast<int>(it.letter) : 4 + it.group.code());
  return out;
}

// Converts the naive rewriter output (sorted letters followed by at most one
// group token) to an AlgElem.
inline AlgElem from_naive(const AlgebraPtr& alg, const std::map<std::vector<int>, CycloNum>& terms) {
  AlgElem out = alg->zero();
  for (const auto& [w, c] : terms) {
    Monomial m;
    for (int t : w) {
      if (t < 4)
        ++m.e[t];
      else
        m.g = static_cast<std::uint16_t>(t - 4);
    }
    out += alg->monomial(m, c);
  }
  return out;
}

}  // namespace sra::testing
