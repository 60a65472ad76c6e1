#pragma once

#include <vector>

#include "sra/cyclo.hpp"

namespace sra {

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static CycloMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycloNum& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const CycloNum& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  std::vector<CycloNum> apply(const std::vector<CycloNum>& v) const;
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<CycloNum> data_;
};

struct SolveResult {
  bool consistent = false;
  int rank = 0;
  std::vector<CycloNum> particular;               // free variables set to zero
  std::vector<std::vector<CycloNum>> nullspace;  // basis of ker A
};

SolveResult solve_exact(const CycloMatrix& a, const std::vector<CycloNum>& b);
std::vector<std::vector<CycloNum>> kernel(const CycloMatrix& a);
int rank(const CycloMatrix& a);

// Row-reduced system that grows one equation at a time.
class IncrementalEchelon {
 public:
  enum class Status { Independent, Redundant, Inconsistent };

  explicit IncrementalEchelon(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  // Adds sum_j coeffs[j] x_j = rhs.
  Status add_row(std::vector<CycloNum> coeffs, CycloNum rhs);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool full() const { return rank() == cols_; }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  // Solution with free variables set to zero.
  std::vector<CycloNum> solution() const;

 private:
  struct Row {
    int pivot;
    std::vector<CycloNum> coeffs;
    CycloNum rhs;
  };
  int cols_;
  std::vector<int> pivot_row_;
  std::vector<Row> rows_;
};

}  // namespace sra
