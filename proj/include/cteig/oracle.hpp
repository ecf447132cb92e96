#pragma once

#include <vector>

#include "cteig/extreme.hpp"

namespace cteig {

struct OracleResult {
  std::vector<Real> eigenvalues;  ///< ascending, length n
  Real offdiag_norm;              ///< final off-diagonal Frobenius norm of the embedding
};

inline constexpr int kMaxJacobiSweeps = 60;

/// Brute-force Hermitian eigensolver used as ground truth: embeds the
/// complex matrix into the real symmetric [[Re, -Im], [Im, Re]] doubling and
/// runs cyclic-by-row Jacobi sweeps until the off-diagonal Frobenius norm
/// drops below 2^(-mantissa_bits/2) * ||m||_F (in practice well below). The
/// doubled spectrum comes in coincident pairs; they are deduplicated by
/// sorting and taking every second value, and a pair gap above
/// 2^(-mantissa_bits/4) * ||m||_F raises PairMismatchError.
///
/// Shares no code with the characteristic-equation solvers. 53-bit contexts
/// run on native doubles; wider contexts run the same sweep in Real.
OracleResult dense_hermitian_eigenvalues(const DenseMatrix& m, const PrecisionContext& ctx);

/// Same oracle on A(alpha, n) without materializing a DenseMatrix.
OracleResult oracle_spectrum(const PerturbationParams& p, const PrecisionContext& ctx);

/// Second, independent oracle for the strong-regime extremes: bisects
/// charpoly_cheb on [-4|alpha|, 0) or (4, 4 + 4|alpha|] down to width
/// 2^(-mantissa_bits+8). Raises NoBracketError when the endpoint signs do
/// not change (the extreme eigenvalue still lies inside [0, 4]).
Real extreme_eigenvalue_bisection(const PerturbationParams& p, ExtremeSide side);

}  // namespace cteig
