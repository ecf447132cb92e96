#pragma once

#include <utility>
#include <vector>

#include "cteig/interior.hpp"

namespace cteig {

enum class ExtremeSide { kFirst, kLast };

/// Contraction segment [log|alpha|/2, 3 log|alpha|/2] certified for the
/// extreme-eigenvalue fixed-point maps when n > n2_threshold.
struct StrongSegment {
  Real lower;
  Real upper;
};

StrongSegment strong_segment(const PerturbationParams& p);

/// Transfer function psi mapping t = tanh(n x / 2) to the implied tanh(x)
/// on the characteristic curve:
///   2(|alpha|^2 - 1) t / (|alpha+sigma|^2 t^2 + |alpha-sigma|^2),
/// with sigma = +1 for the first eigenvalue and (-1)^n for the last.
/// psi(1) = tanh(log|alpha|). Requires |alpha| > 1, t in [0, 1].
Real extreme_transfer(const PerturbationParams& p, ExtremeSide side, const Real& t);

/// Derivative of the transfer function in t.
Real extreme_transfer_d1(const PerturbationParams& p, ExtremeSide side, const Real& t);

/// Fixed-point map arctanh(psi(tanh(n x / 2))) for x > 0. Contractive on the
/// strong segment once n > n2_threshold, with Lipschitz constant below
/// 4/(|alpha|+1)^2. Raises ArctanhDomainError if the transfer value reaches
/// 1 (a symptom of using n <= N2).
Real extreme_map(const PerturbationParams& p, ExtremeSide side, const Real& x);

/// Solves the positive fixed point of extreme_map, starting from log|alpha|
/// (the n -> infinity limit of the solution). Requires the strong regime and
/// n > n2_threshold; the first eigenvalue is lambda_map_below(theta) < 0,
/// the last is lambda_map_above(theta) > 4.
ThetaSolution solve_theta_extreme(const PerturbationParams& p, ExtremeSide side);

/// Exponential-limit approximations -s_alpha (first) and 4 + s_alpha (last);
/// the true extremes converge to them at rate |alpha|^-n.
Real lambda_limit_extreme(const PerturbationParams& p, ExtremeSide side);

/// (lambda_2 - lambda_1, lambda_n - lambda_{n-1}); both approach s_alpha as
/// n grows. Input must be the ascending spectrum of a strong-regime matrix.
std::pair<Real, Real> spectral_gaps(const PerturbationParams& p,
                                    const std::vector<Real>& eigenvalues);

}  // namespace cteig
