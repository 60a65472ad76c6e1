#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "sra/algebra.hpp"
#include "sra/matrix.hpp"

namespace sra {

class TraceTable;

// A kappa-trace (kappa = +1) or kappa-supertrace (kappa = -1) on the algebra,
// fixed by its values on the group algebra.  Copies share the memo table.
class TraceSpec {
 public:
  TraceSpec() = default;

  const AlgebraParams& params() const { return params_; }
  const AlgebraPtr& algebra() const { return alg_; }
  int kappa() const { return kappa_; }
  const std::vector<CycloNum>& free() const { return free_; }

  CycloNum group_value(const GroupElem& g) const;
  const std::vector<CycloNum>& group_values() const { return group_values_; }  // by GroupElem::code()
  CycloNum L_value(long p) const;
  CycloNum Q_value(long p) const;
  bool is_zero() const;

  TraceTable& table() const { return *table_; }

 private:
  friend TraceSpec make_trace_spec(const AlgebraParams&, int, std::vector<CycloNum>);
  friend TraceSpec trace_spec_from_group_values(const AlgebraParams&, int, std::vector<CycloNum>);
  AlgebraParams params_;
  AlgebraPtr alg_;
  int kappa_ = 1;
  std::vector<CycloNum> free_;
  std::vector<CycloNum> group_values_;
  std::shared_ptr<TraceTable> table_;
};

// Free parameters: odd n, kappa = +1: (s_1..s_m); odd n, kappa = -1:
// (u_0..u_m); even n, kappa = +1: (s_1..s_m).  Group values follow from the
// Ground Level Conditions.
TraceSpec make_trace_spec(const AlgebraParams& params, int kappa, std::vector<CycloNum> free);
// Spec with prescribed values on all group elements (indexed by code).  The
// values are not checked here; an inconsistent choice surfaces as an
// InconsistentSystem error during evaluation.
TraceSpec trace_spec_from_group_values(const AlgebraParams& params, int kappa, std::vector<CycloNum> values);
// Even n: the supertrace f -> tr(f K^{eps(f)+1}), K = S_m.
TraceSpec klein_transport(const TraceSpec& trace);

// Re-derives the group values of a spec from its free parameters by solving
// the cyclicity relations of degree 0 and 2 with the rewriting engine.
std::vector<CycloNum> derive_group_values(const AlgebraParams& params, int kappa, const std::vector<CycloNum>& free);

CycloNum trace_eval(const TraceSpec& spec, const AlgElem& x);

struct TraceStats {
  int degree;
  int unknowns;
  int free_roots;
  int equations_used;
};

// Memoized trace values of weight-zero, even-degree normal monomials.
class TraceTable {
 public:
  TraceTable() = default;
  std::vector<TraceStats> stats() const;

 private:
  friend class TraceEngine;
  mutable std::mutex mutex_;
  int computed_degree_ = 0;
  std::unordered_map<std::uint64_t, CycloNum> values_;
  std::vector<TraceStats> stats_;
};

struct GramReport {
  int degree = 0;
  std::vector<Monomial> basis;
  CycloMatrix matrix;
  int rank = 0;
  std::vector<AlgElem> kernel;
};

std::vector<Monomial> pbw_basis(int n, int max_degree);
GramReport gram_matrix(const TraceSpec& spec, int max_degree);

// Elements v spanned by basis monomials of degree <= vector_degree with
// sp(f v) = 0 for every basis monomial f of degree <= max_degree.  Weight
// blocks are solved smallest first; with max_vectors > 0 the search stops once
// that many vectors are found and rank only covers the blocks solved.
struct GramKernel {
  int degree = 0;
  int vector_degree = 0;
  int rank = 0;
  std::vector<AlgElem> kernel;
};

GramKernel gram_kernel(const TraceSpec& spec, int max_degree, int vector_degree, int max_vectors = 0);

}  // namespace sra
