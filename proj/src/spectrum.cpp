#include "cteig/spectrum.hpp"

#include <exception>
#include <thread>
#include <utility>

namespace cteig {

const char* spectrum_method_name(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::kAuto: return "auto";
    case SpectrumMethod::kFixedPoint: return "fixed_point";
    case SpectrumMethod::kAsymptotic: return "asymptotic";
    case SpectrumMethod::kOracle: return "oracle";
  }
  return "?";
}

namespace {

// Index-parallel loop; thetas for different j are independent solves.
template <typename F>
void parallel_for(long begin, long end, F&& fn) {
  long range = end - begin;
  long workers = static_cast<long>(std::thread::hardware_concurrency());
  workers = std::min({workers, range / 16, 8L});
  if (workers <= 1) {
    for (long i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  long chunk = (range + workers - 1) / workers;
  for (long w = 0; w < workers; ++w) {
    long lo = begin + w * chunk;
    long hi = std::min(end, lo + chunk);
    pool.emplace_back([&, lo, hi, w] {
      try {
        for (long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Spectrum make_empty(const PerturbationParams& p) {
  Spectrum s{p, {}, {}, {}, {}, false, false, p.near_unimodular, p.ctx.mantissa_bits};
  s.eigenvalues.reserve(p.n);
  s.thetas.resize(p.n);
  s.methods.assign(p.n, SolveMethod::kOracle);
  s.multiplicity.assign(p.n, 1);
  return s;
}

bool is_circulant(const PerturbationParams& p) {
  return p.regime == Regime::kCirculantPlus || p.regime == Regime::kCirculantMinus;
}

void check_ascending(const Spectrum& s, bool allow_ties) {
  for (size_t i = 1; i < s.eigenvalues.size(); ++i) {
    bool ok = allow_ties ? s.eigenvalues[i] >= s.eigenvalues[i - 1]
                         : s.eigenvalues[i] > s.eigenvalues[i - 1];
    if (!ok) {
      throw NoConvergenceError("full_spectrum: assembled eigenvalues are not ascending");
    }
  }
}

Spectrum oracle_path(const PerturbationParams& p, const PrecisionContext& oracle_ctx) {
  if (p.n > kDenseLimit) {
    throw OracleLimitError("full_spectrum: oracle limited to n <= 4096");
  }
  Spectrum s = make_empty(p);
  OracleResult r = oracle_spectrum(p, oracle_ctx);
  s.eigenvalues = std::move(r.eigenvalues);
  s.methods.assign(p.n, SolveMethod::kOracle);
  s.eigenvalue_bits = oracle_ctx.mantissa_bits;
  s.localization_certified = false;
  check_ascending(s, /*allow_ties=*/true);
  return s;
}

Spectrum closed_form_path(const PerturbationParams& p) {
  Spectrum s = make_empty(p);
  ClosedFormSpectrum cf = closed_form_spectrum(p);
  for (long j = 1; j <= p.n; ++j) {
    const Real& theta = cf.thetas[j - 1];
    s.eigenvalues.push_back(lambda_map(theta));
    s.thetas[j - 1] = ThetaSolution{theta, j, Branch::kTrig, 0, Real(0L, p.ctx),
                                    SolveMethod::kClosedForm};
    s.methods[j - 1] = SolveMethod::kClosedForm;
  }
  long idx = 0;
  for (const auto& group : cf.multiplicity_pattern) {
    for (long c = 0; c < group.second; ++c) s.multiplicity[idx++] = group.second;
  }
  s.localization_certified = true;
  check_ascending(s, /*allow_ties=*/is_circulant(p));
  return s;
}

Spectrum asymptotic_path(const PerturbationParams& p) {
  if (is_circulant(p)) return closed_form_path(p);
  Spectrum s = make_empty(p);
  bool strong = p.regime == Regime::kStrong;
  std::vector<Real> values(p.n, Real(p.ctx));
  long lo = strong ? 2 : 1;
  long hi = strong ? p.n - 1 : p.n;
  parallel_for(lo, hi + 1, [&](long j) { values[j - 1] = lambda_asymptotic_interior(p, j); });
  if (strong) {
    values[0] = lambda_limit_extreme(p, ExtremeSide::kFirst);
    values[p.n - 1] = lambda_limit_extreme(p, ExtremeSide::kLast);
  }
  s.eigenvalues = std::move(values);
  s.methods.assign(p.n, SolveMethod::kClosedForm);
  s.localization_certified = false;
  return s;
}

Spectrum analytic_path(const PerturbationParams& p) {
  if (is_circulant(p)) return closed_form_path(p);

  Spectrum s = make_empty(p);
  bool strong = p.regime == Regime::kStrong;
  long lo = strong ? 2 : 1;
  long hi = strong ? p.n - 1 : p.n;

  std::vector<Real> values(p.n, Real(p.ctx));
  parallel_for(lo, hi + 1, [&](long j) {
    ThetaSolution sol = solve_theta_interior(p, j);
    values[j - 1] = lambda_map(sol.theta);
    s.methods[j - 1] = sol.method;
    s.thetas[j - 1] = std::move(sol);
  });

  bool extremes_certified = true;
  if (strong) {
    if (Real(p.n, p.ctx) > p.n2_threshold) {
      ThetaSolution first = solve_theta_extreme(p, ExtremeSide::kFirst);
      ThetaSolution last = solve_theta_extreme(p, ExtremeSide::kLast);
      values[0] = lambda_map_below(first.theta);
      values[p.n - 1] = lambda_map_above(last.theta);
      s.methods[0] = first.method;
      s.methods[p.n - 1] = last.method;
      s.thetas[0] = std::move(first);
      s.thetas[p.n - 1] = std::move(last);
    } else {
      // Below the certified range the extremes may sit anywhere around
      // [0, 4]; locate them by charpoly sign change at full precision.
      values[0] = extreme_eigenvalue_bisection(p, ExtremeSide::kFirst);
      values[p.n - 1] = extreme_eigenvalue_bisection(p, ExtremeSide::kLast);
      s.methods[0] = SolveMethod::kOracle;
      s.methods[p.n - 1] = SolveMethod::kOracle;
      extremes_certified = false;
    }
  }

  s.eigenvalues = std::move(values);
  s.localization_certified = extremes_certified;
  check_ascending(s, /*allow_ties=*/false);
  return s;
}

}  // namespace

Spectrum full_spectrum(const PerturbationParams& p, SpectrumMethod method) {
  switch (method) {
    case SpectrumMethod::kOracle:
      return oracle_path(p, p.ctx);
    case SpectrumMethod::kAsymptotic:
      return asymptotic_path(p);
    case SpectrumMethod::kAuto:
    case SpectrumMethod::kFixedPoint:
      break;
  }

  if (p.regime == Regime::kZero || p.regime == Regime::kUnimodularGeneric ||
      is_circulant(p) || p.near_unimodular) {
    return closed_form_path(p);
  }

  try {
    return analytic_path(p);
  } catch (const FallbackUnavailableError&) {
  } catch (const NoBracketError&) {
  } catch (const NoConvergenceError&) {
  }
  // Analytic path failed (strong regime with small n, typically): the
  // 53-bit dense oracle is the last resort.
  Spectrum s = oracle_path(p, PrecisionContext(53));
  s.used_oracle_fallback = true;
  return s;
}

EigenPair eigenvector(const PerturbationParams& p, const ThetaSolution& ts) {
  const PrecisionContext& ctx = p.ctx;
  const long n = p.n;
  const Real& theta = ts.theta;
  std::vector<Complex> v;
  v.reserve(n);

  if (is_circulant(p)) {
    int sign = p.regime == Regime::kCirculantPlus ? 1 : -1;
    std::vector<Real> rv = eigvec_circulant_resolved(sign, n, ts.j, ctx);
    for (long k = 0; k < n; ++k) v.emplace_back(rv[k], Real(0L, ctx));
  } else if (ts.branch == Branch::kTrig) {
    for (long k = 1; k <= n; ++k) {
      Real a = sin(k * theta);
      Real b = sin((n - k) * theta);
      v.emplace_back(a + p.alpha.re * b, -p.alpha.im * b);
    }
  } else {
    // sinh forms grow like |alpha|^n; pre-scale to keep components tame.
    Real rescale = exp(-(p.n * log(p.alpha_abs)));
    bool alternating = ts.branch == Branch::kHyperAbove;
    for (long k = 1; k <= n; ++k) {
      Real a = sinh(k * theta) * rescale;
      Real b = sinh((n - k) * theta) * rescale;
      if (alternating) {
        if (k % 2 != 0) a = -a;
        if ((k + n) % 2 != 0) b = -b;
      }
      v.emplace_back(a + p.alpha.re * b, -p.alpha.im * b);
    }
  }

  long best = 0;
  Real best_sq = v[0].modulus_sq();
  for (long k = 1; k < n; ++k) {
    Real m = v[k].modulus_sq();
    if (m > best_sq) {
      best_sq = m;
      best = k;
    }
  }
  Real floor = pow2(2 * (8 - ctx.mantissa_bits), ctx);  // squared threshold
  if (!(best_sq > floor)) {
    throw ZeroVectorError("eigenvector: all components vanish (theta error?)");
  }
  Complex pivot = v[best];
  for (auto& c : v) c = c / pivot;

  Real lambda(ctx);
  switch (ts.branch) {
    case Branch::kTrig: lambda = lambda_map(theta); break;
    case Branch::kHyperBelow: lambda = lambda_map_below(theta); break;
    case Branch::kHyperAbove: lambda = lambda_map_above(theta); break;
  }

  EigenPair pair{std::move(lambda), std::move(v), Real(ctx)};
  pair.residual = residual_norm(p, pair.eigenvalue, pair.vector);
  return pair;
}

Real residual_norm(const PerturbationParams& p, const Real& eigenvalue,
                   const std::vector<Complex>& v) {
  const long n = p.n;
  if (static_cast<long>(v.size()) != n) {
    throw std::invalid_argument("residual_norm: vector length must equal n");
  }
  const PrecisionContext& ctx = p.ctx;
  Real err_sq(0L, ctx);
  Real norm_sq(0L, ctx);
  for (long k = 0; k < n; ++k) {
    Complex row = ldexp(Real(1L, ctx), 1) * v[k];
    if (k > 0) row = row - v[k - 1];
    if (k + 1 < n) row = row - v[k + 1];
    if (k == 0) row = row - p.alpha.conjugate() * v[n - 1];
    if (k == n - 1) row = row - p.alpha * v[0];
    Complex diff = row - eigenvalue * v[k];
    err_sq = err_sq + diff.modulus_sq();
    norm_sq = norm_sq + v[k].modulus_sq();
  }
  return sqrt(err_sq / norm_sq);
}

}  // namespace cteig
