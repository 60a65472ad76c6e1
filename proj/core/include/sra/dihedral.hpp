#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "sra/cyclo.hpp"

namespace sra {

enum class GroupKind : unsigned char { S, R };

// Element of the dihedral group I_2(n): rotations S_k and reflections R_k,
// k mod n, with S_0 the identity and
//   R_k R_l = S_{k-l}, S_k S_l = S_{k+l}, R_k S_l = R_{k-l}, S_k R_l = R_{k+l}.
class GroupElem {
 public:
  GroupElem() = default;
  GroupElem(int n, GroupKind kind, long index);
  static GroupElem S(int n, long k) { return GroupElem(n, GroupKind::S, k); }
  static GroupElem R(int n, long k) { return GroupElem(n, GroupKind::R, k); }
  static GroupElem identity(int n) { return S(n, 0); }
  // code = k for S_k, n + k for R_k.
  static GroupElem from_code(int n, int code);

  int n() const { return n_; }
  GroupKind kind() const { return kind_; }
  int index() const { return index_; }
  int code() const { return kind_ == GroupKind::S ? index_ : n_ + index_; }
  bool is_identity() const { return kind_ == GroupKind::S && index_ == 0; }
  bool is_reflection() const { return kind_ == GroupKind::R; }

  GroupElem inverse() const;
  int order() const;
  std::string str() const;

  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) = default;
  friend auto operator<=>(const GroupElem& a, const GroupElem& b) { return a.code() <=> b.code(); }

 private:
  int n_ = 1;
  GroupKind kind_ = GroupKind::S;
  int index_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GroupElem& g);

std::vector<GroupElem> all_elements(int n);
std::vector<GroupElem> conjugacy_class(const GroupElem& g);
std::vector<std::vector<GroupElem>> conjugacy_classes(int n);

// lambda = exp(2 pi i / n).
CycloNum lambda_power(int n, long k);

// Finite linear combination of group elements; zero coefficients are never stored.
class GroupAlgElem {
 public:
  GroupAlgElem() = default;
  explicit GroupAlgElem(int n) : n_(n) {}
  GroupAlgElem(const GroupElem& g, CycloNum c = CycloNum(1));

  // L_p = (1/n) sum_k lambda^(kp) R_k,  Q_p = (1/n) sum_k lambda^(-kp) S_k.
  static GroupAlgElem L(int n, long p);
  static GroupAlgElem Q(int n, long p);

  int n() const { return n_; }
  const std::map<GroupElem, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloNum coeff(const GroupElem& g) const;
  void add_term(const GroupElem& g, const CycloNum& c);

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  GroupAlgElem operator-() const;
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend GroupAlgElem operator*(const CycloNum& c, const GroupAlgElem& a);
  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b);

  std::string str() const;

 private:
  int n_ = 1;
  std::map<GroupElem, CycloNum> terms_;
};

}  // namespace sra
