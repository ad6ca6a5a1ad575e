#pragma once

// Spectra of mixed Cayley graphs Cay(G, S).
//
// Two independent routes:
//   * exact: the Hermitian adjacency matrix is sum_g w(g) rho_reg(g), so its
//     eigenvalues are those of the per-irrep blocks
//       sum_{S\T} rho(s) + i sum_T rho(s) - i sum_T rho(s^{-1}),
//     each irrep contributing dim(rho) copies of its block's eigenvalues;
//   * numeric: cyclic Jacobi rotations on the full |G| x |G| matrix.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayint/cyclotomic.hpp"
#include "cayint/extension.hpp"
#include "cayint/representations.hpp"

namespace cayint {

class HermitianMatrix {
 public:
  explicit HermitianMatrix(int n);
  /// Row-major entries. Throws StructuralError unless the matrix is Hermitian.
  HermitianMatrix(int n, std::vector<std::complex<double>> entries);

  int size() const noexcept { return n_; }
  std::complex<double> at(int k, int j) const { return a_[static_cast<std::size_t>(k * n_ + j)]; }
  /// Sets (k, j) and the mirrored conj entry (j, k).
  void set(int k, int j, std::complex<double> v);
  bool is_hermitian(double tol = 0.0) const;

  const std::vector<std::complex<double>>& entries() const noexcept { return a_; }

 private:
  int n_;
  std::vector<std::complex<double>> a_;
};

/// Entry (k, j): 1 if both arcs g_k -> g_j and g_j -> g_k exist, i if only the
/// forward arc, -i if only the backward arc, 0 otherwise. Arc g -> h iff g^{-1}h in S.
HermitianMatrix adjacency(const ExtGroup& group, const ConnectionSet& cs);

/// One dim x dim block per representation, in rep order.
std::vector<CycloMatrix> babai_blocks(const ExtGroup& group, const ConnectionSet& cs, const std::vector<Rep>& reps);

struct BlockSpectrum {
  int label = 0;
  int dim = 1;
  /// dim 1: the scalar. dim 2: trace (delta).
  CycloInt trace;
  /// dim 2 only: determinant (epsilon) and delta^2 - 4 epsilon.
  CycloInt det;
  CycloInt discriminant;
  bool integral = false;
  /// Block eigenvalues (1 or 2), exact when integral.
  std::vector<std::int64_t> exact;
  std::vector<double> numeric;
};

struct SpectrumReport {
  bool integral = false;
  /// Sorted; |G| values counting each block eigenvalue dim times.
  std::vector<double> eigenvalues;
  /// Aligned with eigenvalues: the integer when that eigenvalue is known exactly.
  std::vector<std::optional<std::int64_t>> exact;
  std::vector<BlockSpectrum> blocks;
};

SpectrumReport exact_spectrum(const ExtGroup& group, const ConnectionSet& cs, const std::vector<Rep>& reps);

/// Sorted eigenvalues of a Hermitian matrix by complex Jacobi rotation sweeps.
/// Throws ConvergenceError if the off-diagonal mass stays above 1e-12.
std::vector<double> numeric_spectrum(const HermitianMatrix& m);

/// Every eigenvalue within tol of an integer.
bool is_integral_numeric(std::span<const double> eigenvalues, double tol = 1e-6);

}  // namespace cayint
