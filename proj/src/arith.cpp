#include "cteig/arith.hpp"

#include <algorithm>
#include <cstdlib>

namespace cteig {

namespace {

long wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

void check_finite(const Real& r, const char* op) {
  if (!r.is_finite()) throw NonFiniteError(op);
}

}  // namespace

Real make_with_prec(long prec) { return Real(static_cast<mpfr_prec_t>(prec)); }

std::string Real::str() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* digits = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
  std::string d(digits);
  mpfr_free_str(digits);
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(0, 1);
  }
  // mpfr convention: value = 0.d1d2... * 10^e
  std::string out = sign + d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

Real Real::from_string(const std::string& s, const PrecisionContext& ctx) {
  if (s.empty()) throw std::invalid_argument("Real::from_string: empty input");
  Real r(ctx);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end != s.c_str() + s.size()) {
    throw std::invalid_argument("Real::from_string: cannot parse '" + s + "'");
  }
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r = make_with_prec(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  check_finite(r, "add");
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = make_with_prec(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  check_finite(r, "sub");
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = make_with_prec(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  check_finite(r, "mul");
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = make_with_prec(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  check_finite(r, "div");
  return r;
}

Real operator-(const Real& a) {
  Real r = make_with_prec(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r = make_with_prec(a.precision());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  check_finite(r, "add");
  return r;
}

Real operator-(const Real& a, long b) {
  Real r = make_with_prec(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  check_finite(r, "sub");
  return r;
}

Real operator*(const Real& a, long b) {
  Real r = make_with_prec(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  check_finite(r, "mul");
  return r;
}

Real operator/(const Real& a, long b) {
  Real r = make_with_prec(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  check_finite(r, "div");
  return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(long a, const Real& b) {
  Real r = make_with_prec(b.precision());
  mpfr_si_sub(r.v_, a, b.raw(), MPFR_RNDN);
  check_finite(r, "sub");
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real r = make_with_prec(b.precision());
  mpfr_si_div(r.v_, a, b.raw(), MPFR_RNDN);
  check_finite(r, "div");
  return r;
}

#define CTEIG_UNARY(name, mpfr_fn)                 \
  Real name(const Real& x) {                       \
    Real r = make_with_prec(x.precision());        \
    mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);          \
    check_finite(r, #name);                        \
    return r;                                      \
  }

CTEIG_UNARY(abs, mpfr_abs)
CTEIG_UNARY(sqrt, mpfr_sqrt)
CTEIG_UNARY(sin, mpfr_sin)
CTEIG_UNARY(cos, mpfr_cos)
CTEIG_UNARY(tan, mpfr_tan)
CTEIG_UNARY(atan, mpfr_atan)
CTEIG_UNARY(acosh, mpfr_acosh)
CTEIG_UNARY(sinh, mpfr_sinh)
CTEIG_UNARY(cosh, mpfr_cosh)
CTEIG_UNARY(tanh, mpfr_tanh)
CTEIG_UNARY(exp, mpfr_exp)
CTEIG_UNARY(log, mpfr_log)

#undef CTEIG_UNARY

Real hypot(const Real& x, const Real& y) {
  Real r = make_with_prec(wider(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  check_finite(r, "hypot");
  return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
  s = make_with_prec(x.precision());
  c = make_with_prec(x.precision());
  mpfr_sin_cos(s.raw(), c.raw(), x.raw(), MPFR_RNDN);
  check_finite(s, "sin_cos");
  check_finite(c, "sin_cos");
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real ldexp(const Real& x, long e) {
  Real r = make_with_prec(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  check_finite(r, "ldexp");
  return r;
}

Real pow2(long e, const PrecisionContext& ctx) {
  return ldexp(Real(1L, ctx), e);
}

TanhHalf tanh_half_n_pair(const Real& x, long n, const PrecisionContext& ctx) {
  if (!(x > 0L)) throw std::domain_error("tanh_half_n: requires x > 0");
  if (n < 1) throw std::domain_error("tanh_half_n: requires n >= 1");
  Real minus_nx = make_with_prec(ctx.mantissa_bits);
  mpfr_mul_si(minus_nx.raw(), x.raw(), -n, MPFR_RNDN);
  Real u = make_with_prec(ctx.mantissa_bits);
  mpfr_exp(u.raw(), minus_nx.raw(), MPFR_RNDN);  // u = exp(-n x), in (0, 1)
  // tanh(n x/2) = (1 - u)/(1 + u); expm1 keeps 1 - u fully accurate when
  // u is close to 1 (small n x).
  Real one_minus_u = make_with_prec(ctx.mantissa_bits);
  mpfr_expm1(one_minus_u.raw(), minus_nx.raw(), MPFR_RNDN);
  mpfr_neg(one_minus_u.raw(), one_minus_u.raw(), MPFR_RNDN);
  Real denom = u + 1L;
  Real value = one_minus_u / denom;
  Real complement = ldexp(u, 1) / denom;  // 2u/(1+u) = 1 - tanh(n x / 2)
  check_finite(value, "tanh_half_n");
  return TanhHalf{value, complement};
}

Real tanh_half_n(const Real& x, long n, const PrecisionContext& ctx) {
  return tanh_half_n_pair(x, n, ctx).value;
}

Real arctanh_safe(const Real& t, const PrecisionContext& ctx) {
  if (!(abs(t) < 1L)) {
    throw std::domain_error("arctanh_safe: requires |t| < 1");
  }
  Real r = make_with_prec(ctx.mantissa_bits);
  mpfr_atanh(r.raw(), t.raw(), MPFR_RNDN);
  check_finite(r, "arctanh_safe");
  return r;
}

}  // namespace cteig
