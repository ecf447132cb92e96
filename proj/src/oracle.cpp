#include "cteig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace cteig {

namespace {

// Scalar adapters so the sweep below runs unchanged on double and Real.
struct DoubleOps {
  using Scalar = double;
  static double from_long(long v) { return static_cast<double>(v); }
  static double abs(double x) { return std::fabs(x); }
  static double sqrt(double x) { return std::sqrt(x); }
  static double ldexp(double x, long e) { return std::ldexp(x, static_cast<int>(e)); }
};

struct RealOps {
  using Scalar = Real;
  explicit RealOps(const PrecisionContext& c) : ctx(c) {}
  PrecisionContext ctx;
  Real from_long(long v) const { return Real(v, ctx); }
  static Real abs(const Real& x) { return cteig::abs(x); }
  static Real sqrt(const Real& x) { return cteig::sqrt(x); }
  static Real ldexp(const Real& x, long e) { return cteig::ldexp(x, e); }
};

template <class Ops>
typename Ops::Scalar off_norm(const std::vector<typename Ops::Scalar>& b, long d,
                              const Ops& ops) {
  using S = typename Ops::Scalar;
  S sum = ops.from_long(0);
  for (long i = 0; i < d; ++i) {
    for (long j = i + 1; j < d; ++j) {
      const S& v = b[i * d + j];
      sum = sum + v * v;
    }
  }
  return Ops::sqrt(Ops::ldexp(sum, 1));
}

template <class Ops>
typename Ops::Scalar frob_norm(const std::vector<typename Ops::Scalar>& b, long d,
                               const Ops& ops) {
  using S = typename Ops::Scalar;
  S sum = ops.from_long(0);
  for (long i = 0; i < d * d; ++i) sum = sum + b[i] * b[i];
  return Ops::sqrt(sum);
}

// Cyclic-by-row Jacobi on a symmetric d x d matrix, diagonalizing in place.
// Returns the final off-diagonal Frobenius norm.
template <class Ops>
typename Ops::Scalar jacobi_sweeps(std::vector<typename Ops::Scalar>& b, long d,
                                   long mantissa_bits, const Ops& ops) {
  using S = typename Ops::Scalar;
  const S scale = frob_norm(b, d, ops);
  const S one = ops.from_long(1);
  const S stop = scale * Ops::ldexp(one, 6 - mantissa_bits);
  const S required = scale * Ops::ldexp(one, -mantissa_bits / 2);
  // Rotations below this threshold cannot move the off-norm past the target.
  const S skip = d > 1 ? stop / ops.from_long(4 * d * d) : stop;

  S off = off_norm(b, d, ops);
  if (scale == ops.from_long(0)) return off;

  S prev_off = off;
  long stalled = 0;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (!(off > stop)) break;
    for (long p = 0; p < d; ++p) {
      for (long q = p + 1; q < d; ++q) {
        S apq = b[p * d + q];
        if (!(Ops::abs(apq) > skip)) continue;
        S tau = (b[q * d + q] - b[p * d + p]) / Ops::ldexp(apq, 1);
        S t = one / (Ops::abs(tau) + Ops::sqrt(one + tau * tau));
        if (tau < ops.from_long(0)) t = ops.from_long(0) - t;
        S c = one / Ops::sqrt(one + t * t);
        S s = t * c;
        for (long k = 0; k < d; ++k) {
          S bkp = b[k * d + p];
          S bkq = b[k * d + q];
          b[k * d + p] = c * bkp - s * bkq;
          b[k * d + q] = s * bkp + c * bkq;
        }
        for (long k = 0; k < d; ++k) {
          S bpk = b[p * d + k];
          S bqk = b[q * d + k];
          b[p * d + k] = c * bpk - s * bqk;
          b[q * d + k] = s * bpk + c * bqk;
        }
      }
    }
    off = off_norm(b, d, ops);
    if (!(off < prev_off * Ops::ldexp(one, -1))) {
      if (++stalled >= 3 && off <= required) break;  // rounding floor reached
    } else {
      stalled = 0;
    }
    prev_off = off;
  }
  if (off > required) {
    throw NoConvergenceError("jacobi oracle: off-diagonal norm did not converge in 60 sweeps");
  }
  return off;
}

template <class Ops>
std::vector<typename Ops::Scalar> jacobi_diagonal(std::vector<typename Ops::Scalar>& b,
                                                  long d) {
  std::vector<typename Ops::Scalar> diag;
  diag.reserve(d);
  for (long i = 0; i < d; ++i) diag.push_back(b[i * d + i]);
  std::sort(diag.begin(), diag.end());
  return diag;
}

// Pairs adjacent sorted values of the doubled spectrum and keeps every
// second one.
template <class Ops>
OracleResult dedup_pairs(const std::vector<typename Ops::Scalar>& sorted, long n,
                         const typename Ops::Scalar& off, const typename Ops::Scalar& scale,
                         long mantissa_bits, const PrecisionContext& ctx, const Ops& ops) {
  using S = typename Ops::Scalar;
  const S pair_tol = scale * Ops::ldexp(ops.from_long(1), -mantissa_bits / 4);
  OracleResult out{{}, Real(ctx)};
  out.eigenvalues.reserve(n);
  for (long i = 0; i < n; ++i) {
    S gap = sorted[2 * i + 1] - sorted[2 * i];
    if (gap > pair_tol) {
      throw PairMismatchError("jacobi oracle: doubled spectrum did not pair up");
    }
    if constexpr (std::is_same_v<S, double>) {
      out.eigenvalues.emplace_back(sorted[2 * i], ctx);
    } else {
      out.eigenvalues.push_back(sorted[2 * i]);
    }
  }
  if constexpr (std::is_same_v<S, double>) {
    out.offdiag_norm = Real(off, ctx);
  } else {
    out.offdiag_norm = off;
  }
  return out;
}

OracleResult run_double(std::vector<double>& b, long n, const PrecisionContext& ctx) {
  DoubleOps ops;
  long d = 2 * n;
  double scale = std::max(frob_norm(b, d, ops), 1.0);
  double off = jacobi_sweeps(b, d, ctx.mantissa_bits, ops);
  auto diag = jacobi_diagonal<DoubleOps>(b, d);
  return dedup_pairs(diag, n, off, scale, ctx.mantissa_bits, ctx, ops);
}

OracleResult run_real(std::vector<Real>& b, long n, const PrecisionContext& ctx) {
  RealOps ops(ctx);
  long d = 2 * n;
  Real scale = max(frob_norm(b, d, ops), Real(1L, ctx));
  Real off = jacobi_sweeps(b, d, ctx.mantissa_bits, ops);
  auto diag = jacobi_diagonal<RealOps>(b, d);
  return dedup_pairs(diag, n, off, scale, ctx.mantissa_bits, ctx, ops);
}

}  // namespace

OracleResult dense_hermitian_eigenvalues(const DenseMatrix& m, const PrecisionContext& ctx) {
  const long n = m.size();
  if (n > kDenseLimit) {
    throw OracleLimitError("dense_hermitian_eigenvalues: n exceeds the oracle limit");
  }
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      const Complex& a = m.at(i, j);
      const Complex& b = m.at(j, i);
      if (a.re != b.re || a.im != -b.im) {
        throw std::invalid_argument("dense_hermitian_eigenvalues: matrix is not Hermitian");
      }
    }
  }

  const long d = 2 * n;
  if (ctx.mantissa_bits == 53) {
    std::vector<double> b(static_cast<size_t>(d) * d, 0.0);
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        double re = m.at(i, j).re.to_double();
        double im = m.at(i, j).im.to_double();
        b[i * d + j] = re;
        b[(n + i) * d + (n + j)] = re;
        b[i * d + (n + j)] = -im;
        b[(n + i) * d + j] = im;
      }
    }
    return run_double(b, n, ctx);
  }

  std::vector<Real> b(static_cast<size_t>(d) * d, Real(0L, ctx));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const Complex& e = m.at(i, j);
      b[i * d + j] = e.re;
      b[(n + i) * d + (n + j)] = e.re;
      b[i * d + (n + j)] = -e.im;
      b[(n + i) * d + j] = e.im;
    }
  }
  return run_real(b, n, ctx);
}

OracleResult oracle_spectrum(const PerturbationParams& p, const PrecisionContext& ctx) {
  const long n = p.n;
  if (n > kDenseLimit) {
    throw OracleLimitError("oracle_spectrum: n exceeds the oracle limit");
  }
  const long d = 2 * n;

  if (ctx.mantissa_bits == 53) {
    std::vector<double> b(static_cast<size_t>(d) * d, 0.0);
    auto put = [&](long i, long j, double re, double im) {
      b[i * d + j] = re;
      b[(n + i) * d + (n + j)] = re;
      b[i * d + (n + j)] = -im;
      b[(n + i) * d + j] = im;
    };
    for (long i = 0; i < n; ++i) {
      put(i, i, 2.0, 0.0);
      if (i + 1 < n) {
        put(i, i + 1, -1.0, 0.0);
        put(i + 1, i, -1.0, 0.0);
      }
    }
    double are = p.alpha.re.to_double();
    double aim = p.alpha.im.to_double();
    put(n - 1, 0, -are, -aim);
    put(0, n - 1, -are, aim);
    return run_double(b, n, ctx);
  }

  return dense_hermitian_eigenvalues(build_matrix(p), ctx);
}

Real extreme_eigenvalue_bisection(const PerturbationParams& p, ExtremeSide side) {
  if (p.regime != Regime::kStrong) {
    throw RegimeError("extreme_eigenvalue_bisection: requires |alpha| > 1");
  }
  const PrecisionContext& ctx = p.ctx;
  Real lo(ctx), hi(ctx);
  if (side == ExtremeSide::kFirst) {
    lo = -ldexp(p.alpha_abs, 2);
    hi = Real(0L, ctx);
  } else {
    lo = Real(4L, ctx);
    hi = 4L + ldexp(p.alpha_abs, 2);
  }
  int sign_lo = charpoly_cheb(p, lo).sign();
  int sign_hi = charpoly_cheb(p, hi).sign();
  if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi) {
    throw NoBracketError("extreme_eigenvalue_bisection: no sign change (extreme inside [0,4]?)");
  }

  const Real width_target = pow2(8 - ctx.mantissa_bits, ctx);
  long max_steps = ctx.mantissa_bits + 64;
  for (long it = 0; it < max_steps && hi - lo > width_target; ++it) {
    Real mid = ldexp(lo + hi, -1);
    int s = charpoly_cheb(p, mid).sign();
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return ldexp(lo + hi, -1);
}

}  // namespace cteig
