#include "cteig/extreme.hpp"

namespace cteig {

namespace {

void require_strong(const PerturbationParams& p, const char* op) {
  if (p.regime != Regime::kStrong) {
    throw RegimeError(std::string(op) + ": requires |alpha| > 1");
  }
}

int sigma_of(const PerturbationParams& p, ExtremeSide side) {
  if (side == ExtremeSide::kFirst) return 1;
  return p.n % 2 == 0 ? 1 : -1;
}

}  // namespace

StrongSegment strong_segment(const PerturbationParams& p) {
  require_strong(p, "strong_segment");
  Real lower = ldexp(log(p.alpha_abs), -1);
  return StrongSegment{lower, 3L * lower};
}

Real extreme_transfer(const PerturbationParams& p, ExtremeSide side, const Real& t) {
  require_strong(p, "extreme_transfer");
  if (!(t >= 0L) || !(t <= 1L)) {
    throw std::domain_error("extreme_transfer: requires t in [0, 1]");
  }
  int sigma = sigma_of(p, side);
  Real num = ldexp((p.alpha_abs_sq - 1L) * t, 1);
  return num / (p.corner_sq(sigma) * t * t + p.corner_sq(-sigma));
}

Real extreme_transfer_d1(const PerturbationParams& p, ExtremeSide side, const Real& t) {
  require_strong(p, "extreme_transfer");
  if (!(t >= 0L) || !(t <= 1L)) {
    throw std::domain_error("extreme_transfer: requires t in [0, 1]");
  }
  int sigma = sigma_of(p, side);
  Real pcoef = p.corner_sq(sigma);
  Real den = pcoef * t * t + p.corner_sq(-sigma);
  Real num = ldexp((p.alpha_abs_sq - 1L) * (p.corner_sq(-sigma) - pcoef * t * t), 1);
  return num / (den * den);
}

Real extreme_map(const PerturbationParams& p, ExtremeSide side, const Real& x) {
  require_strong(p, "extreme_map");
  if (!(x > 0L)) throw std::domain_error("extreme_map: requires x > 0");
  Real t = tanh_half_n(x, p.n, p.ctx);
  Real psi = extreme_transfer(p, side, t);
  if (psi >= 1L) {
    throw ArctanhDomainError("extreme_map: transfer value >= 1 (is n <= N2?)");
  }
  return arctanh_safe(psi, p.ctx);
}

ThetaSolution solve_theta_extreme(const PerturbationParams& p, ExtremeSide side) {
  require_strong(p, "solve_theta_extreme");
  if (!(Real(p.n, p.ctx) > p.n2_threshold)) {
    throw RegimeError("solve_theta_extreme: requires n > N2(alpha) = " + p.n2_threshold.str());
  }

  const Real tol = fixed_point_tolerance(p.ctx);
  Real x = log(p.alpha_abs);
  Real step = Real::pos_inf(p.ctx);
  long iters = 0;
  for (long it = 1; it <= kMaxFixedPointIterations; ++it) {
    Real next = extreme_map(p, side, x);
    step = abs(next - x);
    x = std::move(next);
    iters = it;
    if (step <= tol) break;
  }
  if (step > tol) {
    throw NoConvergenceError("solve_theta_extreme: fixed point hit the iteration cap");
  }

  StrongSegment seg = strong_segment(p);
  Real slack = seg.lower * pow2(-20, p.ctx);
  if (x < seg.lower - slack || x > seg.upper + slack) {
    throw NoConvergenceError("solve_theta_extreme: solution escaped the certified segment");
  }

  Branch branch = side == ExtremeSide::kFirst ? Branch::kHyperBelow : Branch::kHyperAbove;
  long j = side == ExtremeSide::kFirst ? 1 : p.n;
  return ThetaSolution{std::move(x), j, branch, iters, step, SolveMethod::kFixedPoint};
}

Real lambda_limit_extreme(const PerturbationParams& p, ExtremeSide side) {
  require_strong(p, "lambda_limit_extreme");
  return side == ExtremeSide::kFirst ? -p.s_alpha : 4L + p.s_alpha;
}

std::pair<Real, Real> spectral_gaps(const PerturbationParams& p,
                                    const std::vector<Real>& eigenvalues) {
  require_strong(p, "spectral_gaps");
  if (static_cast<long>(eigenvalues.size()) != p.n) {
    throw std::invalid_argument("spectral_gaps: expected n eigenvalues");
  }
  for (size_t i = 1; i < eigenvalues.size(); ++i) {
    if (!(eigenvalues[i] >= eigenvalues[i - 1])) {
      throw std::invalid_argument("spectral_gaps: spectrum must be ascending");
    }
  }
  size_t last = eigenvalues.size() - 1;
  return {eigenvalues[1] - eigenvalues[0], eigenvalues[last] - eigenvalues[last - 1]};
}

}  // namespace cteig
