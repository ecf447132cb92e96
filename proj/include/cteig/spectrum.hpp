#pragma once

#include <optional>
#include <vector>

#include "cteig/oracle.hpp"
#include "cteig/unimodular.hpp"

namespace cteig {

/// Eigenvalue with its formula eigenvector and the relative residual
/// ||A v - lambda v||_2 / ||v||_2.
struct EigenPair {
  Real eigenvalue;
  std::vector<Complex> vector;
  Real residual;
};

enum class SpectrumMethod { kAuto, kFixedPoint, kAsymptotic, kOracle };

const char* spectrum_method_name(SpectrumMethod m);

/// The assembled spectrum. Eigenvalues ascend (strictly except at
/// alpha = +-1); theta is stored alongside every analytically solved
/// eigenvalue and eigenvectors are always rebuilt from theta, never from
/// lambda. Oracle-computed entries carry no theta.
struct Spectrum {
  PerturbationParams params;
  std::vector<Real> eigenvalues;
  std::vector<std::optional<ThetaSolution>> thetas;
  std::vector<SolveMethod> methods;
  std::vector<long> multiplicity;
  bool localization_certified = false;
  bool used_oracle_fallback = false;
  bool near_unimodular_warning = false;
  long eigenvalue_bits = 0;  ///< precision actually backing the values (53 on oracle fallback)
};

/// Computes all n eigenvalues.
///
/// kAuto / kFixedPoint dispatch by regime: closed forms for alpha = 0,
/// |alpha| = 1 and alpha = +-1; the interior fixed point / bisection for
/// weak alpha; for strong alpha the hyperbolic fixed points handle the two
/// extremes once n > N2 and the charpoly bisection oracle covers them below
/// that, with the dense 53-bit oracle as the final fallback (n <= 4096).
/// kAsymptotic returns the three-term expansions (interior) and the
/// exponential limits -s_alpha / 4+s_alpha (extremes). kOracle runs the
/// dense oracle at the context precision.
Spectrum full_spectrum(const PerturbationParams& p,
                       SpectrumMethod method = SpectrumMethod::kAuto);

/// Builds the formula eigenvector for a solved theta and computes its
/// relative residual. Trig branch: v_k = sin(k theta) + conj(alpha)
/// sin((n-k) theta); hyperbolic branches use the sinh forms with the
/// alternating signs for the top eigenvalue, pre-scaled by |alpha|^-n.
/// The result is normalized so its largest-modulus component equals 1.
EigenPair eigenvector(const PerturbationParams& p, const ThetaSolution& ts);

/// Relative residual by direct tridiagonal-plus-corners multiplication;
/// O(n), no dense matrix involved.
Real residual_norm(const PerturbationParams& p, const Real& eigenvalue,
                   const std::vector<Complex>& v);

}  // namespace cteig
