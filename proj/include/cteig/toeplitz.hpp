#pragma once

#include <vector>

#include "cteig/arith.hpp"

namespace cteig {

/// Classification of the corner perturbation by |alpha|. The unimodular and
/// circulant regimes have closed-form spectra; weak (< 1) and strong (> 1)
/// are solved through the characteristic-equation fixed points.
enum class Regime {
  kZero,
  kWeak,
  kUnimodularGeneric,
  kCirculantPlus,
  kCirculantMinus,
  kStrong,
};

const char* regime_name(Regime r);

/// Near-unimodular inputs within this distance of the unit circle are routed
/// to the closed forms (the contraction thresholds diverge there).
inline constexpr long kNearUnimodularExp = -40;

/// Dense materialization cap; the solver paths never need the matrix, only
/// the oracle and residual cross-checks do.
inline constexpr long kDenseLimit = 4096;

/// The pair (alpha, n) plus every derived constant the solvers consume.
struct PerturbationParams {
  PrecisionContext ctx;
  Complex alpha;
  long n = 0;
  Real alpha_abs;     ///< |alpha|
  Real alpha_abs_sq;  ///< |alpha|^2
  Real k_alpha;       ///< (1 - |alpha|^2)/|1 + alpha|^2; zero exactly iff |alpha| == 1; NaN at alpha == -1
  Real l_alpha;       ///< |1 - alpha|/|1 + alpha|; NaN at alpha == -1
  Real n1_threshold;  ///< 4(|alpha| + 1)/||alpha| - 1|; +inf on the unit circle
  Real n2_threshold;  ///< strong regime only (NaN otherwise)
  Real s_alpha;       ///< (|alpha| - 1)^2/|alpha|, the limiting spectral gap; strong only
  Regime regime = Regime::kZero;
  bool near_unimodular = false;
  Real pi;  ///< pi at ctx precision, cached for the solvers

  static PerturbationParams create(const Complex& alpha, long n, const PrecisionContext& ctx);

  /// |alpha + sigma|^2 for sigma = +-1, used by the trig/hyperbolic forms.
  Real corner_sq(int sigma) const;
};

/// Row-major Hermitian matrix holder for the oracle and residual checks.
class DenseMatrix {
 public:
  DenseMatrix(long n, const PrecisionContext& ctx);

  long size() const { return n_; }
  const PrecisionContext& context() const { return ctx_; }

  const Complex& at(long i, long j) const { return entries_[i * n_ + j]; }
  void set(long i, long j, const Complex& v) { entries_[i * n_ + j] = v; }

 private:
  long n_;
  PrecisionContext ctx_;
  std::vector<Complex> entries_;
};

/// A(alpha, n): diagonal 2, off-diagonals -1, corner (n,1) = -alpha and
/// corner (1,n) = -conj(alpha). Trace is exactly 2n.
DenseMatrix build_matrix(const PerturbationParams& p);

/// Generating symbol 4 sin^2(x/2) - 2 Re(alpha e^{i(n-1)x}).
Real symbol_value(const PerturbationParams& p, const Real& x);

/// Chebyshev polynomial of the second kind U_m(t). Three-term recurrence for
/// |t| <= 1 + 2^-20, hyperbolic closed form beyond (the recurrence amplifies
/// rounding error outside [-1, 1]).
Real chebyshev_u(long m, const Real& t);

/// det(lambda I - A) = U_n((lambda-2)/2) - |alpha|^2 U_{n-2}((lambda-2)/2)
///                     - 2 (-1)^n Re(alpha).
Real charpoly_cheb(const PerturbationParams& p, const Real& lambda);

/// Quotient form of det(g(x) I - A) on x in (0, pi); equals
/// charpoly_cheb(g(x)) away from the poles of tan(n x / 2). Raises PoleError
/// within 2^(-mantissa_bits/2) of a pole, where the quotient loses all
/// precision; callers reroute to charpoly_cheb there.
Real charpoly_trig(const PerturbationParams& p, const Real& x);

enum class HyperBranch { kBelow, kAbove };

/// Hyperbolic form of the characteristic polynomial under lambda = g_-(x)
/// (below) or lambda = g_+(x) (above), x > 0. Evaluated through the
/// overflow-safe tanh(n x / 2).
Real charpoly_hyper(const PerturbationParams& p, const Real& x, HyperBranch branch);

// Changes of variable carrying x to an eigenvalue candidate:
// lambda_map covers (0,4), the below/above maps cover the two escape rays.
Real lambda_map(const Real& x);         ///< 4 sin^2(x/2), increasing on [0, pi]
Real lambda_map_d1(const Real& x);      ///< 2 sin x
Real lambda_map_d2(const Real& x);      ///< 2 cos x
Real lambda_map_below(const Real& x);   ///< -4 sinh^2(x/2), decreasing on [0, inf)
Real lambda_map_above(const Real& x);   ///< 4 + 4 sinh^2(x/2), increasing

}  // namespace cteig
