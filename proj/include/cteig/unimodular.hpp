#pragma once

#include <utility>
#include <vector>

#include "cteig/toeplitz.hpp"

namespace cteig {

/// theta for |alpha| = 1, alpha != +-1:
/// j*pi/n - (2/n) arctan(l^((-1)^j)), which lies in I_{n,j}. Also accepts
/// near-unimodular parameters (the closed form is their stable limit).
Real theta_unimodular(const PerturbationParams& p, long j);

/// theta for the circulant cases alpha = +1 / -1 (sign). Consecutive indices
/// share theta in pairs: alpha = +1 pairs (2q, 2q+1) at 2q*pi/n; alpha = -1
/// pairs (2q-1, 2q) at (2q-1)*pi/n. Most eigenvalues are double.
Real theta_circulant(int sign, long n, long j, const PrecisionContext& ctx);

/// The canonical eigenvector for the circulant cases: sine branch for
/// one parity, cosine for the other, both at theta_circulant(sign, n, j).
/// Raises ZeroVectorError when the sine branch degenerates (theta = 0 or pi,
/// detected exactly from the index); callers substitute the cosine branch.
std::vector<Real> eigvec_circulant(int sign, long n, long j, const PrecisionContext& ctx);

/// eigvec_circulant with the degenerate sine branch replaced by the cosine
/// branch at the same theta; never throws ZeroVectorError.
std::vector<Real> eigvec_circulant_resolved(int sign, long n, long j, const PrecisionContext& ctx);

/// Spectrum in closed form for the zero, unimodular and circulant regimes.
struct ClosedFormSpectrum {
  std::vector<Real> thetas;                                 ///< indexed by j-1
  std::vector<std::pair<Real, long>> multiplicity_pattern;  ///< ascending (eigenvalue, count)
};

ClosedFormSpectrum closed_form_spectrum(const PerturbationParams& p);

}  // namespace cteig
