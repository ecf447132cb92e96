#include "cteig/interior.hpp"

#include <utility>

#include "cteig/unimodular.hpp"

namespace cteig {

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::kTrig: return "trig";
    case Branch::kHyperBelow: return "hyper_below";
    case Branch::kHyperAbove: return "hyper_above";
  }
  return "?";
}

const char* method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::kClosedForm: return "closed_form";
    case SolveMethod::kFixedPoint: return "fixed_point";
    case SolveMethod::kBisection: return "bisection";
    case SolveMethod::kOracle: return "oracle";
  }
  return "?";
}

Real fixed_point_tolerance(const PrecisionContext& ctx) {
  return pow2(8 - ctx.mantissa_bits, ctx);
}

namespace {

void require_eta_defined(const PerturbationParams& p) {
  if (p.regime == Regime::kCirculantPlus || p.regime == Regime::kCirculantMinus) {
    throw RegimeError("phase correction undefined for alpha = +-1; use the circulant closed forms");
  }
}

struct BaseEval {
  Real value;
  bool infinite;
};

// The nonnegative root branch s*k*cot(x) + sqrt(k^2 cot^2 x + l^2) with
// s = +1 (odd parity) / -1 (even). Evaluated through tan on whichever half
// of [0, pi] keeps the combination cancellation-free; the rationalized form
// l^2 tan / (sqrt(...) - s k) covers the sign pattern where the direct sum
// would cancel. Endpoints x = 0, pi resolve to 0 or +inf by the sign of the
// surviving term.
BaseEval stable_base(const PerturbationParams& p, Parity parity, const Real& x) {
  const Real& k = p.k_alpha;
  const Real& l = p.l_alpha;
  if (k.is_zero()) return {l, false};  // |alpha| = 1: constant

  Real half_pi = ldexp(p.pi, -1);
  bool left = x <= half_pi;
  Real t = left ? tan(x) : tan(p.pi - x);
  int s = (parity == Parity::kOdd) ? 1 : -1;
  if (!left) s = -s;
  Real a = (s > 0) ? k : -k;

  if (t.is_zero()) {
    return a > 0L ? BaseEval{Real(p.ctx), true} : BaseEval{Real(0L, p.ctx), false};
  }
  Real q = hypot(k, l * t);
  if (a >= 0L) return {(a + q) / t, false};
  return {l * l * t / (q - a), false};
}

}  // namespace

Real phase_correction(const PerturbationParams& p, Parity parity, const Real& x) {
  require_eta_defined(p);
  Real xc = max(Real(0L, p.ctx), min(x, p.pi));
  BaseEval b = stable_base(p, parity, xc);
  Real angle = b.infinite ? ldexp(p.pi, -1) : atan(b.value);
  if (parity == Parity::kOdd) return ldexp(angle, 1) - p.pi;
  return -ldexp(angle, 1);
}

Real phase_correction_d1(const PerturbationParams& p, Parity parity, const Real& x) {
  require_eta_defined(p);
  const Real& k = p.k_alpha;
  const Real& l = p.l_alpha;
  if (k.is_zero()) return Real(0L, p.ctx);

  Real xc = max(Real(0L, p.ctx), min(x, p.pi));
  Real half_pi = ldexp(p.pi, -1);
  bool left = xc <= half_pi;
  Real t = left ? tan(xc) : tan(p.pi - xc);
  int s = (parity == Parity::kOdd) ? 1 : -1;
  if (!left) s = -s;
  Real a = (s > 0) ? k : -k;

  Real q = hypot(k, l * t);
  Real one_plus_t2 = 1L + t * t;
  if (a >= 0L) {
    Real b = a + q;
    return -ldexp(k, 1) * (b / q) * one_plus_t2 / (t * t + b * b);
  }
  Real pden = q - a;
  Real l2 = l * l;
  return -ldexp(k, 1) * l2 * one_plus_t2 * pden / (q * (pden * pden + l2 * l2 * t * t));
}

Real detail::tan_rhs_any(const PerturbationParams& p, Parity parity, const Real& x) {
  if (!(x > 0L) || !(x < p.pi)) {
    throw std::domain_error("tan_rhs: requires x in (0, pi)");
  }
  BaseEval b = stable_base(p, parity, x);
  if (b.infinite) throw std::domain_error("tan_rhs: unbounded at this x");
  return (parity == Parity::kOdd) ? b.value : -b.value;
}

Real tan_rhs(const PerturbationParams& p, Parity parity, const Real& x) {
  require_eta_defined(p);
  if (!(p.regime == Regime::kWeak || p.regime == Regime::kZero)) {
    throw std::domain_error("tan_rhs: defined for |alpha| < 1 only");
  }
  return detail::tan_rhs_any(p, parity, x);
}

Real interior_map(const PerturbationParams& p, long j, const Real& x) {
  return (j * p.pi + phase_correction(p, parity_of(j), x)) / p.n;
}

namespace {

void require_interior_index(const PerturbationParams& p, long j) {
  bool strong = p.regime == Regime::kStrong;
  long lo = strong ? 2 : 1;
  long hi = strong ? p.n - 1 : p.n;
  if (j < lo || j > hi) {
    throw std::invalid_argument("solve_theta_interior: index out of range for this regime");
  }
}

ThetaSolution solve_interior_fixed_point(const PerturbationParams& p, long j, bool may_fall_back) {
  const Real tol = fixed_point_tolerance(p.ctx);
  Real x = (2 * j - 1) * ldexp(p.pi, -1) / p.n;  // midpoint of I_{n,j}
  Real step = Real::pos_inf(p.ctx);
  for (long it = 1; it <= kMaxFixedPointIterations; ++it) {
    Real next = interior_map(p, j, x);
    step = abs(next - x);
    x = std::move(next);
    if (step <= tol) {
      return ThetaSolution{std::move(x), j, Branch::kTrig, it, step, SolveMethod::kFixedPoint};
    }
  }
  if (may_fall_back) {
    return ThetaSolution{std::move(x), j, Branch::kTrig, -1, step, SolveMethod::kFixedPoint};
  }
  throw NoConvergenceError("solve_theta_interior: fixed point hit the iteration cap (regime misclassification?)");
}

ThetaSolution solve_interior_bisection(const PerturbationParams& p, long j) {
  const Real tol = fixed_point_tolerance(p.ctx);
  const Parity parity = parity_of(j);
  Real lo = (j - 1) * p.pi / p.n;
  Real hi = j * p.pi / p.n;
  Real width = hi - lo;

  // G(x) = tan(n x / 2) - tan_rhs(x): negative at the left end of I_{n,j},
  // positive at the right end, for both parities and both regimes.
  auto g_sign = [&](const Real& x) -> int {
    Real half_nx = ldexp(x * p.n, -1);
    Real s2(p.ctx), c2(p.ctx);
    sin_cos(half_nx, s2, c2);
    if (c2.is_zero()) return s2.sign();  // at a pole tan dominates
    Real diff = s2 / c2 - detail::tan_rhs_any(p, parity, x);
    return diff.sign();
  };

  if (p.regime == Regime::kStrong) {
    // Uniqueness of the root in I_{n,j} is only proven for n > N1; validate
    // the bracket before trusting bisection.
    Real nudge = width * pow2(-20, p.ctx);
    if (!(g_sign(lo + nudge) < 0 && g_sign(hi - nudge) > 0)) {
      throw FallbackUnavailableError("solve_theta_interior: no sign-change bracket in I_{n,j}");
    }
  }

  long iters = 0;
  while (width > tol && iters < p.ctx.mantissa_bits + 64) {
    Real mid = ldexp(lo + hi, -1);
    if (g_sign(mid) > 0) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
    width = hi - lo;
    ++iters;
  }
  Real theta = ldexp(lo + hi, -1);
  return ThetaSolution{std::move(theta), j, Branch::kTrig, iters, width, SolveMethod::kBisection};
}

}  // namespace

ThetaSolution solve_theta_interior(const PerturbationParams& p, long j, InteriorStrategy strategy) {
  require_eta_defined(p);
  require_interior_index(p, j);

  if (p.regime == Regime::kUnimodularGeneric || p.near_unimodular) {
    Real theta = theta_unimodular(p, j);
    return ThetaSolution{std::move(theta), j, Branch::kTrig, 0, Real(0L, p.ctx),
                         SolveMethod::kClosedForm};
  }
  if (p.regime == Regime::kZero) {
    Real theta = j * p.pi / (p.n + 1);
    return ThetaSolution{std::move(theta), j, Branch::kTrig, 0, Real(0L, p.ctx),
                         SolveMethod::kClosedForm};
  }

  switch (strategy) {
    case InteriorStrategy::kFixedPoint:
      if (!(Real(p.n, p.ctx) > p.n1_threshold)) {
        throw std::invalid_argument("solve_theta_interior: fixed point requires n > N1(alpha)");
      }
      return solve_interior_fixed_point(p, j, /*may_fall_back=*/false);
    case InteriorStrategy::kBisection:
      return solve_interior_bisection(p, j);
    case InteriorStrategy::kAuto:
      break;
  }

  // Auto: the fixed point needs contraction headroom to finish inside the
  // iteration cap at high precision; below 2*N1 the bisection (valid for all
  // n >= 3 in the weak regime) is the faster certain path.
  if (Real(p.n, p.ctx) > ldexp(p.n1_threshold, 1)) {
    ThetaSolution sol = solve_interior_fixed_point(p, j, /*may_fall_back=*/true);
    if (sol.iterations > 0) return sol;
  }
  return solve_interior_bisection(p, j);
}

Real lambda_asymptotic_interior(const PerturbationParams& p, long j) {
  require_eta_defined(p);
  require_interior_index(p, j);
  Real x = (j == p.n) ? p.pi : j * p.pi / p.n;
  Parity parity = parity_of(j);
  Real e = phase_correction(p, parity, x);
  Real e1 = phase_correction_d1(p, parity, x);
  Real d1 = lambda_map_d1(x);
  Real first = d1 * e / p.n;
  Real second = (d1 * e * e1 + ldexp(lambda_map_d2(x) * e * e, -1)) / p.n / p.n;
  return lambda_map(x) + first + second;
}

}  // namespace cteig
