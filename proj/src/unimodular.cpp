#include "cteig/unimodular.hpp"

namespace cteig {

namespace {

void require_unimodular(const PerturbationParams& p) {
  if (p.regime != Regime::kUnimodularGeneric && !p.near_unimodular) {
    throw RegimeError("theta_unimodular: requires |alpha| = 1, alpha != +-1");
  }
}

void require_circulant_args(int sign, long n, long j) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("theta_circulant: sign must be +1 or -1");
  }
  if (n < 3) throw std::invalid_argument("theta_circulant: n must be >= 3");
  if (j < 1 || j > n) throw std::invalid_argument("theta_circulant: j out of range");
}

// The shared theta of the pair containing j, as the integer multiple m of
// pi/n. alpha = +1: m = j rounded down to even; alpha = -1: m = j rounded
// down to odd.
long circulant_multiple(int sign, long j) {
  if (sign > 0) return (j % 2 == 0) ? j : j - 1;
  return (j % 2 != 0) ? j : j - 1;
}

bool circulant_sine_branch(int sign, long j) {
  return sign > 0 ? (j % 2 == 0) : (j % 2 != 0);
}

}  // namespace

Real theta_unimodular(const PerturbationParams& p, long j) {
  require_unimodular(p);
  if (j < 1 || j > p.n) throw std::invalid_argument("theta_unimodular: j out of range");
  Real a = atan(p.l_alpha);
  // odd j: (j pi - pi + 2 atan l)/n, using arctan(1/l) = pi/2 - arctan(l);
  // even j: (j pi - 2 atan l)/n.
  Real num = (j % 2 != 0) ? (j - 1) * p.pi + ldexp(a, 1) : j * p.pi - ldexp(a, 1);
  return num / p.n;
}

Real theta_circulant(int sign, long n, long j, const PrecisionContext& ctx) {
  require_circulant_args(sign, n, j);
  return circulant_multiple(sign, j) * Real::pi(ctx) / n;
}

namespace {

std::vector<Real> circulant_vector(int sign, long n, long j, const PrecisionContext& ctx,
                                   bool sine) {
  Real theta = theta_circulant(sign, n, j, ctx);
  std::vector<Real> v;
  v.reserve(n);
  for (long k = 1; k <= n; ++k) {
    v.push_back(sine ? sin(k * theta) : cos(k * theta));
  }
  return v;
}

}  // namespace

std::vector<Real> eigvec_circulant(int sign, long n, long j, const PrecisionContext& ctx) {
  require_circulant_args(sign, n, j);
  bool sine = circulant_sine_branch(sign, j);
  long m = circulant_multiple(sign, j);
  if (sine && (m == 0 || m == n)) {
    throw ZeroVectorError("eigvec_circulant: sine branch vanishes at theta in {0, pi}");
  }
  return circulant_vector(sign, n, j, ctx, sine);
}

std::vector<Real> eigvec_circulant_resolved(int sign, long n, long j,
                                            const PrecisionContext& ctx) {
  require_circulant_args(sign, n, j);
  bool sine = circulant_sine_branch(sign, j);
  long m = circulant_multiple(sign, j);
  if (sine && (m == 0 || m == n)) sine = false;
  return circulant_vector(sign, n, j, ctx, sine);
}

ClosedFormSpectrum closed_form_spectrum(const PerturbationParams& p) {
  ClosedFormSpectrum out;
  out.thetas.reserve(p.n);

  switch (p.regime) {
    case Regime::kZero:
      for (long j = 1; j <= p.n; ++j) out.thetas.push_back(j * p.pi / (p.n + 1));
      break;
    case Regime::kUnimodularGeneric:
      for (long j = 1; j <= p.n; ++j) out.thetas.push_back(theta_unimodular(p, j));
      break;
    case Regime::kCirculantPlus:
    case Regime::kCirculantMinus: {
      int sign = p.regime == Regime::kCirculantPlus ? 1 : -1;
      for (long j = 1; j <= p.n; ++j) {
        out.thetas.push_back(theta_circulant(sign, p.n, j, p.ctx));
      }
      break;
    }
    default:
      if (p.near_unimodular) {
        for (long j = 1; j <= p.n; ++j) out.thetas.push_back(theta_unimodular(p, j));
        break;
      }
      throw RegimeError("closed_form_spectrum: no closed form for this regime");
  }

  long i = 0;
  while (i < p.n) {
    long count = 1;
    while (i + count < p.n && out.thetas[i + count] == out.thetas[i]) ++count;
    out.multiplicity_pattern.emplace_back(lambda_map(out.thetas[i]), count);
    i += count;
  }
  return out;
}

}  // namespace cteig
