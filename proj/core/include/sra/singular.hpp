#pragma once

#include <string>
#include <vector>

#include "sra/genfun.hpp"
#include "sra/traces.hpp"

namespace sra {

enum class SingularFamily { Th2Item1, Th2Item2, Th2Item3, Nondegenerate, Ak1, Ak3, Ak4, Ak5, Generic };

std::string family_name(SingularFamily f);
SingularFamily family_from_name(const std::string& s);

// Solution space of a degeneracy system.  Odd n: basis vectors are values of
// the free parameters (s_1..s_m for kappa = +1, u_0..u_m for kappa = -1).
// Even n: basis vectors are (s'_1, ..., s'_{2m-1}).
// matched_family is the case predicted from the parameters alone; the
// solution space is computed independently.
struct SingularVerdict {
  AlgebraParams params;
  int kappa = 1;
  int solution_dim = 0;
  std::vector<std::vector<CycloNum>> basis;
  SingularFamily matched_family = SingularFamily::Nondegenerate;
};

// Rows g_k(t_{k,l}) = 0, k = 0..n-1, l = 0, 1, in the free parameters.
// Throws InconsistentSystem if d/dt g_k(t_{k,l}) fails to vanish on a
// solution.
SingularVerdict solve_147(int n, int kappa, const Rational& nu);
// The same rows as a matrix (2n x number of free parameters).
CycloMatrix system_147(int n, int kappa, const Rational& nu);

struct DegenerateFamily {
  bool half_integer = false;
  long z = 0;      // integer family: nu = z/n
  Rational nu;     // half-integer family
  static DegenerateFamily integer(long z) { return {false, z, Rational()}; }
  static DegenerateFamily half(const Rational& nu) { return {true, 0, nu}; }
};

// Free parameter values of tr_z (kappa = +1), str_z or str_{1/2} (kappa = -1).
std::vector<CycloNum> degenerate_family_values(int n, int kappa, const DegenerateFamily& family,
                                               const CycloNum& tau = CycloNum(1));
TraceSpec degenerate_family(int n, int kappa, const DegenerateFamily& family, const CycloNum& tau = CycloNum(1));

// sum_{k=0}^{n-1} cos(2 pi k mu / n).
CycloNum suum_sum(int n, const Rational& mu);
// True iff mu is an integer and the cosine sum vanishes.
bool check_integer_mu_constraints(int n, const Rational& mu);
// sin(pi mu (1 + theta)) sin((2k - n) pi mu / n), theta = 0 for kappa = +1, 1 for kappa = -1.
CycloNum sol1_product(int n, int kappa, const Rational& mu, int k);
// cos(2 pi k z/n + pi k/n + pi z + pi/2): the half-integer branch mu = z + 1/2.
CycloNum half_integer_cosine(int n, long z, int k);

// Even n = 2m: unknowns s'_1..s'_{2m-1} constrained by the rotation-point
// conditions together with the symmetry s'_{2m-r} = s'_r.
SingularVerdict solve_even_system(int m, const Rational& mu0, const Rational& mu1);
SingularFamily classify_even(int m, const Rational& mu0, const Rational& mu1);
// (X_1, X_2) of an s' vector.
std::pair<CycloNum, CycloNum> even_x_values(int m, const std::vector<CycloNum>& sprime);

struct FrequencyComparison {
  int p = 0;
  std::vector<Rational> trace_freqs;      // omega = i * freq, sorted
  std::vector<Rational> supertrace_freqs;
  bool equal = false;
};

struct KernelComparison {
  int degree = 0;
  int trace_kernel_dim = 0;
  int supertrace_kernel_dim = 0;
  int joint_rank = 0;
  bool spans_equal = false;
};

struct IdealCompareReport {
  int n = 0;
  long z = 0;
  CycloNum tau;
  int max_degree = 0;
  std::vector<FrequencyComparison> frequencies;
  std::vector<KernelComparison> kernels;
  bool frequency_sets_equal = false;
};

IdealCompareReport ideal_compare(int n, long z, const CycloNum& tau, int max_degree);

}  // namespace sra
