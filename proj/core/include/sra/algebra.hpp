#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sra/cyclo.hpp"
#include "sra/dihedral.hpp"
#include "sra/rational.hpp"

namespace sra {

// Generators in their fixed normal order a0 < a1 < b0 < b1.
enum class Letter : std::uint8_t { a0 = 0, a1 = 1, b0 = 2, b1 = 3 };

inline int letter_alpha(Letter l) { return static_cast<int>(l) & 1; }
inline bool letter_is_a(Letter l) { return static_cast<int>(l) < 2; }
std::string letter_name(Letter l);

// Deformation parameters.  Odd n: mu0 = n nu, mu1 = 0.  Even n = 2m:
// mu0 = m (nu0 + nu1), mu1 = m (nu0 - nu1), where nu0 couples to the
// reflections R_{2l} and nu1 to R_{2l+1}.
struct AlgebraParams {
  int n = 3;
  Rational mu0;
  Rational mu1;

  static AlgebraParams odd(int n, const Rational& nu);
  static AlgebraParams even(int n, const Rational& nu0, const Rational& nu1);
  static AlgebraParams from_mu(int n, const Rational& mu0, const Rational& mu1 = Rational());

  bool is_even() const { return n % 2 == 0; }
  int m() const { return n / 2; }
  Rational nu() const;   // odd n only
  Rational nu0() const;  // even n only
  Rational nu1() const;  // even n only
  std::string str() const;

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

// (a0)^k0 (a1)^k1 (b0)^l0 (b1)^l1 g
struct Monomial {
  std::array<std::uint8_t, 4> e{};
  std::uint16_t g = 0;  // GroupElem::code()

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  int parity() const { return degree() & 1; }
  // Eigenvalue of ad T^{01}: a1, b1 count +1 and a0, b0 count -1.
  int weight() const { return e[1] + e[3] - e[0] - e[2]; }
  std::uint32_t exps_key() const {
    return static_cast<std::uint32_t>(e[0]) << 24 | static_cast<std::uint32_t>(e[1]) << 16 |
           static_cast<std::uint32_t>(e[2]) << 8 | e[3];
  }
  // Sorts by degree, then exponents, then group element.
  std::uint64_t key() const {
    return static_cast<std::uint64_t>(degree()) << 56 | static_cast<std::uint64_t>(exps_key()) << 24 | g;
  }
  static Monomial from_key(std::uint64_t k);
  GroupElem group(int n) const { return GroupElem::from_code(n, g); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e && a.g == b.g; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

struct Term {
  Monomial m;
  CycloNum c;
};
using Terms = std::vector<Term>;

class AlgElem;

// Reduction order used to bring words to normal form.  Both give the same
// answer; the second exists so that the two can be compared.
enum class Strategy { RightInsertion, LeftInsertion };

// The algebra for fixed parameters: structure constants and the memoized
// rewriting tables.  Shared between every element built from it.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> create(const AlgebraParams& params);

  const AlgebraParams& params() const { return params_; }
  int n() const { return params_.n; }

  AlgElem zero() const;
  AlgElem one() const;
  AlgElem scalar(const CycloNum& c) const;
  AlgElem gen(Letter l) const;
  AlgElem group(const GroupElem& g) const;
  AlgElem group(const GroupAlgElem& x) const;
  AlgElem monomial(const Monomial& m, const CycloNum& c = CycloNum(1)) const;
  AlgElem L(long p) const;
  AlgElem Q(long p) const;
  AlgElem singlet() const;
  AlgElem sl2(int alpha, int beta) const;
  // mu0 L_0 + mu1 L_m (odd n: mu L_0)
  AlgElem mu_l0() const;

  // g l g^{-1} = coefficient * l'
  const std::pair<Letter, CycloNum>& twist(int g, Letter l) const { return twist_[g][static_cast<int>(l)]; }
  // [t, l] for t > l as a combination of group element codes.
  const std::vector<std::pair<int, CycloNum>>& commutator(Letter t, Letter l) const {
    return comm_[static_cast<int>(t)][static_cast<int>(l)];
  }

  // Normal form of x * l for a group-free normal monomial x.
  std::shared_ptr<const Terms> right_mul_letter(std::uint32_t x, Letter l) const;
  // Normal form of l * y.
  std::shared_ptr<const Terms> left_mul_letter(Letter l, std::uint32_t y) const;
  // Normal form of g * y.
  Terms left_mul_group(int g, std::uint32_t y, Strategy s) const;

  AlgElem multiply(const AlgElem& x, const AlgElem& y, Strategy s = Strategy::RightInsertion) const;

  std::size_t memo_entries() const;
  void clear_memo() const;

 private:
  explicit Algebra(const AlgebraParams& params);
  std::shared_ptr<const Terms> swapped_normal(std::uint32_t y, Strategy s) const;

  AlgebraParams params_;
  std::vector<std::array<std::pair<Letter, CycloNum>, 4>> twist_;
  std::array<std::array<std::vector<std::pair<int, CycloNum>>, 4>, 4> comm_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const Terms>> right_memo_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const Terms>> left_memo_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const Terms>> swap_memo_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Element of the algebra in PBW normal form.
class AlgElem {
 public:
  AlgElem() = default;
  explicit AlgElem(AlgebraPtr alg) : alg_(std::move(alg)) {}
  AlgElem(AlgebraPtr alg, Terms terms);  // terms must be normal and free of duplicates

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloNum coeff(const Monomial& m) const;
  int max_degree() const;
  // 0 or 1 when homogeneous in parity, -1 otherwise.
  int parity() const;
  AlgElem parity_part(int eps) const;

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem operator-() const;
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
  friend AlgElem operator*(const CycloNum& c, const AlgElem& a);
  friend bool operator==(const AlgElem& a, const AlgElem& b);

  AlgElem pow(int k) const;
  std::string str() const;

 private:
  void check_same(const AlgElem& o) const;
  AlgebraPtr alg_;
  Terms terms_;
};

AlgElem commutator(const AlgElem& x, const AlgElem& y);
AlgElem anticommutator(const AlgElem& x, const AlgElem& y);
// x y - (-1)^{eps(x) eps(y)} y x for homogeneous x, y.
AlgElem super_commutator(const AlgElem& x, const AlgElem& y);

// Items of an unnormalized word.
struct WordItem {
  enum class Kind { Gen, Group, Scalar } kind;
  Letter letter = Letter::a0;
  GroupElem group;
  CycloNum scalar;
  static WordItem gen(Letter l) { return {Kind::Gen, l, {}, {}}; }
  static WordItem grp(const GroupElem& g) { return {Kind::Group, Letter::a0, g, {}}; }
  static WordItem sc(const CycloNum& c) { return {Kind::Scalar, Letter::a0, {}, c}; }
};

AlgElem normal_order(const AlgebraPtr& alg, const std::vector<WordItem>& word,
                     Strategy s = Strategy::RightInsertion);

// Even n only: x K^{eps(x)+1} with K = S_m, applied to each parity component.
AlgElem klein_conjugate(const AlgElem& x);
GroupElem klein_element(int n);

std::string monomial_str(const Monomial& m, int n);

}  // namespace sra
