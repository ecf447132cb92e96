#pragma once

#include <random>

#include "cteig/toeplitz.hpp"

namespace cteig::testing {

inline const PrecisionContext& ctx256() {
  static PrecisionContext c(256);
  return c;
}

inline const PrecisionContext& ctx53() {
  static PrecisionContext c(53);
  return c;
}

inline Real R(const char* s, const PrecisionContext& ctx = ctx256()) {
  return Real::from_string(s, ctx);
}

inline Complex C(const char* re, const char* im, const PrecisionContext& ctx = ctx256()) {
  return Complex(R(re, ctx), R(im, ctx));
}

inline PerturbationParams params(const char* re, const char* im, long n,
                                 const PrecisionContext& ctx = ctx256()) {
  return PerturbationParams::create(C(re, im, ctx), n, ctx);
}

/// Deterministic alpha sampler over an annulus, used by property tests.
class AlphaSampler {
 public:
  explicit AlphaSampler(unsigned seed) : rng_(seed) {}

  Complex sample(double min_mod, double max_mod, const PrecisionContext& ctx = ctx256()) {
    std::uniform_real_distribution<double> mod(min_mod, max_mod);
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    double m = mod(rng_);
    double a = ang(rng_);
    return Complex(Real(m * std::cos(a), ctx), Real(m * std::sin(a), ctx));
  }

 private:
  std::mt19937 rng_;
};

inline double dbl(const Real& x) { return x.to_double(); }

}  // namespace cteig::testing
