#pragma once

#include "cteig/toeplitz.hpp"

namespace cteig {

/// The phase correction and the tangent equation depend on the index j only
/// through its parity.
enum class Parity { kOdd, kEven };

inline Parity parity_of(long j) { return (j % 2 != 0) ? Parity::kOdd : Parity::kEven; }

/// Phase correction entering the interior characteristic equation
/// n*theta = j*pi + phase(theta). Defined for alpha != +-1, takes values in
/// [-pi, 0], and extends continuously to the endpoints: for |alpha| < 1 it
/// runs from 0 at x = 0 to -pi at x = pi; for |alpha| > 1 the endpoint
/// values swap. Constant when |alpha| = 1.
Real phase_correction(const PerturbationParams& p, Parity parity, const Real& x);

/// Derivative of phase_correction. Bounded by 4(|alpha|+1)/||alpha|-1| on
/// (0, pi) and of one sign: nonpositive for |alpha| <= 1, nonnegative for
/// |alpha| > 1 (the sign of -k_alpha).
Real phase_correction_d1(const PerturbationParams& p, Parity parity, const Real& x);

/// Right-hand side of the tangent form tan(n x / 2) = tan_rhs(x) of the
/// characteristic equation on (0, pi). For |alpha| < 1 it is positive and
/// strictly decreasing for odd parity, negative and strictly decreasing for
/// even parity.
Real tan_rhs(const PerturbationParams& p, Parity parity, const Real& x);

/// Iteration map (j*pi + phase(x))/n; self-map of [0, pi] with Lipschitz
/// constant at most n1_threshold/n.
Real interior_map(const PerturbationParams& p, long j, const Real& x);

enum class Branch { kTrig, kHyperBelow, kHyperAbove };
enum class SolveMethod { kClosedForm, kFixedPoint, kBisection, kOracle };

const char* branch_name(Branch b);
const char* method_name(SolveMethod m);

/// A solved change-of-variable point with its provenance. The eigenvalue is
/// recovered as lambda_map(theta) for the trig branch and
/// lambda_map_below/above(theta) for the hyperbolic branches.
struct ThetaSolution {
  Real theta;
  long j = 0;
  Branch branch = Branch::kTrig;
  long iterations = 0;
  Real final_step;  ///< last fixed-point increment, or final bracket width
  SolveMethod method = SolveMethod::kFixedPoint;
};

enum class InteriorStrategy { kAuto, kFixedPoint, kBisection };

/// Stop tolerance 2^(8 - mantissa_bits) shared by all iterative solvers.
Real fixed_point_tolerance(const PrecisionContext& ctx);

inline constexpr long kMaxFixedPointIterations = 10000;

/// Solves theta in ((j-1)pi/n, j pi/n) with n*theta = j*pi + phase(theta).
///
/// Strategy kAuto uses the fixed-point iteration from the interval midpoint
/// when the contraction has real headroom (n > 2*n1_threshold) and the
/// tangent-form bisection otherwise; bisection is valid for every n >= 3 in
/// the weak regime. |alpha| = 1 and near-unimodular inputs collapse to the
/// one-step closed form.
///
/// Index range: 1..n for |alpha| <= 1, 2..n-1 for |alpha| > 1.
ThetaSolution solve_theta_interior(const PerturbationParams& p, long j,
                                   InteriorStrategy strategy = InteriorStrategy::kAuto);

/// Three-term expansion of the interior eigenvalue around j*pi/n; the error
/// decays like n^-3 with an alpha-dependent constant.
Real lambda_asymptotic_interior(const PerturbationParams& p, long j);

namespace detail {
/// tan_rhs without the weak-regime precondition, for the strong-regime
/// bisection fallback.
Real tan_rhs_any(const PerturbationParams& p, Parity parity, const Real& x);
}  // namespace detail

}  // namespace cteig
