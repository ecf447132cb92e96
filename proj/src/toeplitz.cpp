#include "cteig/toeplitz.hpp"

#include <utility>

namespace cteig {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kZero: return "zero";
    case Regime::kWeak: return "weak";
    case Regime::kUnimodularGeneric: return "unimodular";
    case Regime::kCirculantPlus: return "circulant_plus";
    case Regime::kCirculantMinus: return "circulant_minus";
    case Regime::kStrong: return "strong";
  }
  return "?";
}

PerturbationParams PerturbationParams::create(const Complex& alpha, long n,
                                              const PrecisionContext& ctx) {
  if (n < 3) throw std::invalid_argument("PerturbationParams: n must be >= 3");
  if (!alpha.re.is_finite() || !alpha.im.is_finite()) {
    throw std::invalid_argument("PerturbationParams: alpha must be finite");
  }

  PerturbationParams p{ctx,
                       alpha,
                       n,
                       Real(ctx),
                       Real(ctx),
                       Real::nan(ctx),
                       Real::nan(ctx),
                       Real::nan(ctx),
                       Real::nan(ctx),
                       Real::nan(ctx),
                       Regime::kZero,
                       false,
                       Real::pi(ctx)};

  p.alpha_abs_sq = alpha.modulus_sq();
  p.alpha_abs = sqrt(p.alpha_abs_sq);

  const Real one(1L, ctx);
  const bool re_is_one = alpha.re == one && alpha.im.is_zero();
  const bool re_is_minus_one = alpha.re == -one && alpha.im.is_zero();

  if (alpha.is_zero()) {
    p.regime = Regime::kZero;
  } else if (re_is_one) {
    p.regime = Regime::kCirculantPlus;
  } else if (re_is_minus_one) {
    p.regime = Regime::kCirculantMinus;
  } else if (p.alpha_abs_sq == one) {
    p.regime = Regime::kUnimodularGeneric;
  } else if (p.alpha_abs_sq < one) {
    p.regime = Regime::kWeak;
  } else {
    p.regime = Regime::kStrong;
  }

  if (!re_is_minus_one) {
    Complex one_plus(one + alpha.re, alpha.im);
    Complex one_minus(one - alpha.re, -alpha.im);
    p.k_alpha = (one - p.alpha_abs_sq) / one_plus.modulus_sq();
    p.l_alpha = one_minus.modulus() / one_plus.modulus();
  }

  if (p.regime == Regime::kWeak || p.regime == Regime::kStrong) {
    Real dist = abs(p.alpha_abs - one);
    p.n1_threshold = 4L * (p.alpha_abs + one) / dist;
    p.near_unimodular = dist < pow2(kNearUnimodularExp, ctx);
  } else if (p.regime == Regime::kZero) {
    p.n1_threshold = Real(4L, ctx);  // 4(0+1)/|0-1|
  } else {
    p.n1_threshold = Real::pos_inf(ctx);
  }

  if (p.regime == Regime::kStrong) {
    Real log_abs = log(p.alpha_abs);
    p.n2_threshold = (20L * log(p.alpha_abs + one) - 4L * log(log_abs)) / log_abs;
    Real dm1 = p.alpha_abs - one;
    p.s_alpha = dm1 * dm1 / p.alpha_abs;
  }

  return p;
}

Real PerturbationParams::corner_sq(int sigma) const {
  Real re_shift = sigma >= 0 ? alpha.re + 1L : alpha.re - 1L;
  return re_shift * re_shift + alpha.im * alpha.im;
}

DenseMatrix::DenseMatrix(long n, const PrecisionContext& ctx)
    : n_(n), ctx_(ctx), entries_(static_cast<size_t>(n) * n, Complex::zero(ctx)) {
  if (n < 1) throw std::invalid_argument("DenseMatrix: n must be >= 1");
}

DenseMatrix build_matrix(const PerturbationParams& p) {
  if (p.n > kDenseLimit) {
    throw OracleLimitError("build_matrix: n exceeds the dense materialization limit");
  }
  DenseMatrix m(p.n, p.ctx);
  const Real two(2L, p.ctx);
  const Real minus_one(-1L, p.ctx);
  const Real zero(0L, p.ctx);
  for (long i = 0; i < p.n; ++i) {
    m.set(i, i, Complex(two, zero));
    if (i + 1 < p.n) {
      m.set(i, i + 1, Complex(minus_one, zero));
      m.set(i + 1, i, Complex(minus_one, zero));
    }
  }
  m.set(p.n - 1, 0, -p.alpha);              // entry (n, 1)
  m.set(0, p.n - 1, -p.alpha.conjugate());  // entry (1, n)
  return m;
}

Real symbol_value(const PerturbationParams& p, const Real& x) {
  Real s(p.ctx), c(p.ctx);
  sin_cos(x * (p.n - 1), s, c);
  return lambda_map(x) - 2L * (p.alpha.re * c - p.alpha.im * s);
}

namespace {

// Both U_m and U_{m-2} in one pass; callers of the characteristic polynomial
// need the pair.
std::pair<Real, Real> chebyshev_u_pair(long m, const Real& t) {
  const PrecisionContext ctx(t.precision());
  const Real one(1L, ctx);
  Real boundary = one + pow2(-20, ctx);

  if (abs(t) <= boundary) {
    Real prev2(1L, ctx);      // U_0
    Real prev = ldexp(t, 1);  // U_1
    if (m == 0) return {prev2, Real::nan(ctx)};
    if (m == 1) return {prev, Real::nan(ctx)};
    Real two_t = ldexp(t, 1);
    Real um2(ctx);
    for (long i = 2; i <= m; ++i) {
      if (i == m) um2 = prev2;  // U_{m-2}
      Real cur = two_t * prev - prev2;
      prev2 = prev;
      prev = std::move(cur);
    }
    return {prev, um2};
  }

  // |t| > 1: U_m(cosh y) = sinh((m+1)y)/sinh(y), with U_m(-t) = (-1)^m U_m(t).
  Real at = abs(t);
  Real y = acosh(at);
  Real sh = sinh(y);
  auto closed = [&](long k) {
    Real val = sinh(y * (k + 1)) / sh;
    if (t.sign() < 0 && (k % 2 != 0)) val = -val;
    return val;
  };
  return {closed(m), m >= 2 ? closed(m - 2) : Real::nan(ctx)};
}

}  // namespace

Real chebyshev_u(long m, const Real& t) {
  if (m < 0) throw std::invalid_argument("chebyshev_u: m must be >= 0");
  return chebyshev_u_pair(m, t).first;
}

Real charpoly_cheb(const PerturbationParams& p, const Real& lambda) {
  Real arg = ldexp(lambda - 2L, -1);
  auto [un, un2] = chebyshev_u_pair(p.n, arg);
  Real val = un - p.alpha_abs_sq * un2;
  Real corr = ldexp(p.alpha.re, 1);
  return (p.n % 2 == 0) ? val - corr : val + corr;
}

Real charpoly_trig(const PerturbationParams& p, const Real& x) {
  if (p.regime == Regime::kCirculantPlus || p.regime == Regime::kCirculantMinus) {
    throw RegimeError("charpoly_trig: undefined for alpha = +-1");
  }
  if (!(x > 0L) || !(x < p.pi)) {
    throw std::domain_error("charpoly_trig: requires x in (0, pi)");
  }
  Real half_nx = ldexp(x * p.n, -1);
  Real s2(p.ctx), c2(p.ctx);
  sin_cos(half_nx, s2, c2);
  if (abs(c2) < pow2(-p.ctx.mantissa_bits / 2, p.ctx)) {
    throw PoleError("charpoly_trig: tan(n x / 2) pole; use charpoly_cheb");
  }
  Real t = s2 / c2;
  Real sx(p.ctx), cx(p.ctx);
  sin_cos(x, sx, cx);
  Real cot = cx / sx;
  Real quad = t * t - ldexp(p.k_alpha * cot * t, 1) - p.l_alpha * p.l_alpha;
  Real val = p.corner_sq(+1) * quad / (1L + t * t);
  return (p.n % 2 == 0) ? -val : val;  // factor (-1)^(n+1)
}

Real charpoly_hyper(const PerturbationParams& p, const Real& x, HyperBranch branch) {
  if (!(x > 0L)) throw std::domain_error("charpoly_hyper: requires x > 0");
  TanhHalf th = tanh_half_n_pair(x, p.n, p.ctx);
  const Real& t = th.value;
  Real one_minus_t2 = th.one_minus * (1L + t);
  Real coth = 1L / tanh(x);
  int sigma = (branch == HyperBranch::kBelow) ? 1 : (p.n % 2 == 0 ? 1 : -1);
  Real quad = p.corner_sq(sigma) * t * t -
              ldexp((p.alpha_abs_sq - 1L) * t * coth, 1) + p.corner_sq(-sigma);
  Real val = quad / one_minus_t2;
  if (branch == HyperBranch::kBelow && p.n % 2 != 0) val = -val;  // factor (-1)^n
  return val;
}

Real lambda_map(const Real& x) {
  Real s = sin(ldexp(x, -1));
  return ldexp(s * s, 2);
}

Real lambda_map_d1(const Real& x) { return ldexp(sin(x), 1); }

Real lambda_map_d2(const Real& x) { return ldexp(cos(x), 1); }

Real lambda_map_below(const Real& x) {
  Real s = sinh(ldexp(x, -1));
  return -ldexp(s * s, 2);
}

Real lambda_map_above(const Real& x) {
  Real s = sinh(ldexp(x, -1));
  return 4L + ldexp(s * s, 2);
}

}  // namespace cteig
