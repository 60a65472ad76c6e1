#include "sra/dihedral.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sra/errors.hpp"

namespace sra {

GroupElem::GroupElem(int n, GroupKind kind, long index) : n_(n), kind_(kind) {
  if (n < 1) throw std::invalid_argument("dihedral group order parameter must be positive");
  index_ = static_cast<int>(((index % n) + n) % n);
}

GroupElem GroupElem::from_code(int n, int code) {
  if (code < 0 || code >= 2 * n) throw std::out_of_range("group element code out of range");
  return code < n ? S(n, code) : R(n, code - n);
}

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("group elements of different dihedral groups");
  int n = a.n_;
  if (a.kind_ == GroupKind::S && b.kind_ == GroupKind::S) return GroupElem::S(n, a.index_ + b.index_);
  if (a.kind_ == GroupKind::R && b.kind_ == GroupKind::R) return GroupElem::S(n, a.index_ - b.index_);
  if (a.kind_ == GroupKind::R) return GroupElem::R(n, a.index_ - b.index_);
  return GroupElem::R(n, a.index_ + b.index_);
}

GroupElem GroupElem::inverse() const { return kind_ == GroupKind::R ? *this : S(n_, -index_); }

int GroupElem::order() const {
  if (kind_ == GroupKind::R) return 2;
  return n_ / std::gcd(n_, index_ == 0 ? n_ : index_);
}

std::string GroupElem::str() const { return (kind_ == GroupKind::S ? "S" : "R") + std::to_string(index_); }

std::ostream& operator<<(std::ostream& os, const GroupElem& g) { return os << g.str(); }

std::vector<GroupElem> all_elements(int n) {
  std::vector<GroupElem> out;
  for (int c = 0; c < 2 * n; ++c) out.push_back(GroupElem::from_code(n, c));
  return out;
}

std::vector<GroupElem> conjugacy_class(const GroupElem& g) {
  std::set<GroupElem> cls;
  for (const auto& h : all_elements(g.n())) cls.insert(h * g * h.inverse());
  return {cls.begin(), cls.end()};
}

std::vector<std::vector<GroupElem>> conjugacy_classes(int n) {
  std::vector<std::vector<GroupElem>> out;
  std::set<GroupElem> seen;
  for (const auto& g : all_elements(n)) {
    if (seen.count(g)) continue;
    auto cls = conjugacy_class(g);
    seen.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

CycloNum lambda_power(int n, long k) { return CycloNum::root_of_unity(n, k); }

GroupAlgElem::GroupAlgElem(const GroupElem& g, CycloNum c) : n_(g.n()) {
  if (!c.is_zero()) terms_.emplace(g, std::move(c));
}

GroupAlgElem GroupAlgElem::L(int n, long p) {
  GroupAlgElem out(n);
  CycloNum inv_n(Rational(1, n));
  for (int k = 0; k < n; ++k) out.add_term(GroupElem::R(n, k), lambda_power(n, k * p) * inv_n);
  return out;
}

GroupAlgElem GroupAlgElem::Q(int n, long p) {
  GroupAlgElem out(n);
  CycloNum inv_n(Rational(1, n));
  for (int k = 0; k < n; ++k) out.add_term(GroupElem::S(n, k), lambda_power(n, -k * p) * inv_n);
  return out;
}

CycloNum GroupAlgElem::coeff(const GroupElem& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? CycloNum() : it->second;
}

void GroupAlgElem::add_term(const GroupElem& g, const CycloNum& c) {
  if (c.is_zero()) return;
  if (g.n() != n_) {
    if (!terms_.empty()) throw DimensionMismatch("group algebra elements of different dihedral groups");
    n_ = g.n();
  }
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupAlgElem GroupAlgElem::operator-() const {
  GroupAlgElem out(n_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem out(a.n_);
  for (const auto& [g, c] : a.terms_)
    for (const auto& [h, d] : b.terms_) out.add_term(g * h, c * d);
  return out;
}

GroupAlgElem operator*(const CycloNum& c, const GroupAlgElem& a) {
  GroupAlgElem out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [g, d] : a.terms_) out.terms_.emplace(g, c * d);
  return out;
}

bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) { return a.terms_ == b.terms_; }

std::string GroupAlgElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << g.str();
  }
  return os.str();
}

}  // namespace sra
