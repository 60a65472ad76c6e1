#pragma once

#include <optional>
#include <vector>

#include "sra/matrix.hpp"

namespace sra {

struct KernelResult {
  int rank = 0;
  // Reduced echelon normalization: one vector per non-pivot column f, with
  // v[f] = 1 and zeros on the other non-pivot columns.
  std::vector<std::vector<CycloNum>> basis;
};

// Kernel through elimination modulo primes p = 1 mod N (one run per complex
// embedding), Chinese remaindering and rational reconstruction.  Each
// reconstructed vector is checked exactly against a, and a kernel that is
// trivial modulo p is trivial over the field, so a returned result is exact.
// nullopt when max_primes primes give no verified basis.
std::optional<KernelResult> modular_kernel(const CycloMatrix& a, int max_primes = 64);

// Same basis as solve_exact(a, 0).nullspace.  Uses modular_kernel when the
// kernel is small against the rank and exact elimination otherwise.
KernelResult fast_kernel(const CycloMatrix& a);

}  // namespace sra
