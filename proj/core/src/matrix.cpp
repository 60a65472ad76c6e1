#include "sra/matrix.hpp"

#include "sra/errors.hpp"

namespace sra {

CycloMatrix CycloMatrix::identity(int n) {
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloNum(1);
  return m;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product with incompatible shapes");
  CycloMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

std::vector<CycloNum> CycloMatrix::apply(const std::vector<CycloNum>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("vector length does not match matrix");
  std::vector<CycloNum> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SolveResult solve_exact(const CycloMatrix& a, const std::vector<CycloNum>& b) {
  int rows = a.rows();
  int cols = a.cols();
  if (static_cast<int>(b.size()) != rows) throw DimensionMismatch("right-hand side length does not match matrix");
  std::vector<std::vector<CycloNum>> m(rows, std::vector<CycloNum>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
    m[i][cols] = b[i];
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    CycloNum inv = m[r][c].inverse();
    for (int k = c; k <= cols; ++k)
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      CycloNum f = m[i][c];
      for (int k = c; k <= cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  // Back substitution; row i only has entries in non-pivot columns right of
  // its pivot once the rows below are reduced.
  for (int i = r - 1; i >= 0; --i)
    for (int u = 0; u < i; ++u) {
      if (m[u][pivots[i]].is_zero()) continue;
      CycloNum f = m[u][pivots[i]];
      for (int k = pivots[i]; k <= cols; ++k)
        if (!m[i][k].is_zero()) m[u][k] -= f * m[i][k];
    }
  SolveResult res;
  res.rank = r;
  res.consistent = true;
  for (int i = r; i < rows; ++i)
    if (!m[i][cols].is_zero()) res.consistent = false;
  res.particular.assign(cols, CycloNum());
  if (res.consistent)
    for (int i = 0; i < r; ++i) res.particular[pivots[i]] = m[i][cols];
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycloNum> v(cols);
    v[f] = CycloNum(1);
    for (int i = 0; i < r; ++i)
      if (!m[i][f].is_zero()) v[pivots[i]] = -m[i][f];
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

std::vector<std::vector<CycloNum>> kernel(const CycloMatrix& a) {
  return solve_exact(a, std::vector<CycloNum>(a.rows())).nullspace;
}

int rank(const CycloMatrix& a) { return solve_exact(a, std::vector<CycloNum>(a.rows())).rank; }

IncrementalEchelon::Status IncrementalEchelon::add_row(std::vector<CycloNum> coeffs, CycloNum rhs) {
  if (static_cast<int>(coeffs.size()) != cols_) throw DimensionMismatch("equation length does not match system");
  for (const auto& row : rows_) {
    const CycloNum& f = coeffs[row.pivot];
    if (f.is_zero()) continue;
    CycloNum fc = f;
    for (int k = 0; k < cols_; ++k)
      if (!row.coeffs[k].is_zero()) coeffs[k] -= fc * row.coeffs[k];
    if (!row.rhs.is_zero()) rhs -= fc * row.rhs;
  }
  int pivot = -1;
  for (int k = 0; k < cols_; ++k)
    if (!coeffs[k].is_zero()) {
      pivot = k;
      break;
    }
  if (pivot < 0) return rhs.is_zero() ? Status::Redundant : Status::Inconsistent;
  CycloNum inv = coeffs[pivot].inverse();
  for (auto& x : coeffs)
    if (!x.is_zero()) x *= inv;
  rhs *= inv;
  for (auto& row : rows_) {
    const CycloNum f = row.coeffs[pivot];
    if (f.is_zero()) continue;
    for (int k = 0; k < cols_; ++k)
      if (!coeffs[k].is_zero()) row.coeffs[k] -= f * coeffs[k];
    row.rhs -= f * rhs;
  }
  pivot_row_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back(Row{pivot, std::move(coeffs), std::move(rhs)});
  return Status::Independent;
}

std::vector<CycloNum> IncrementalEchelon::solution() const {
  std::vector<CycloNum> x(cols_);
  for (const auto& row : rows_) x[row.pivot] = row.rhs;
  return x;
}

}  // namespace sra
