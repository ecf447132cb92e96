#pragma once

#include <mpfr.h>

#include <string>

#include "cteig/errors.hpp"

namespace cteig {

/// Working precision in binary digits of the significand. Every Real derived
/// from a context carries this precision; arithmetic between Reals rounds to
/// the wider operand. 53 matches IEEE double, 256 is the solver default.
struct PrecisionContext {
  long mantissa_bits;

  explicit PrecisionContext(long bits = 256) : mantissa_bits(bits) {
    if (bits < 53) {
      throw std::invalid_argument("PrecisionContext: mantissa_bits must be >= 53");
    }
  }
};

/// Arbitrary-precision real scalar backed by MPFR, with value semantics.
/// All operations round to nearest and are deterministic: two evaluations of
/// the same expression with the same inputs give bit-identical results.
/// Values are immutable once computed and safe to read from several threads.
class Real {
 public:
  Real() : Real(static_cast<mpfr_prec_t>(53)) {}

  explicit Real(const PrecisionContext& ctx)
      : Real(static_cast<mpfr_prec_t>(ctx.mantissa_bits)) {}

  Real(long value, const PrecisionContext& ctx) : Real(ctx) {
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  Real(int value, const PrecisionContext& ctx) : Real(static_cast<long>(value), ctx) {}

  Real(double value, const PrecisionContext& ctx) : Real(ctx) {
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  Real(const Real& o) : Real(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }

  Real(Real&& o) noexcept : Real(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Decimal string with enough digits that re-parsing at the same precision
  /// recovers the value bit for bit.
  std::string str() const;

  /// Parses a decimal string at the context precision. Rejects trailing
  /// garbage and empty input.
  static Real from_string(const std::string& s, const PrecisionContext& ctx);

  static Real pi(const PrecisionContext& ctx) {
    Real r(ctx);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  static Real nan(const PrecisionContext& ctx) { return Real(ctx); }

  static Real pos_inf(const PrecisionContext& ctx) {
    Real r(ctx);
    mpfr_set_inf(r.v_, 1);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  // -- comparisons (false on NaN operands, as for doubles) --
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator!=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) != 0; }

  // -- arithmetic; result precision is the wider operand's --
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator+(long a, const Real& b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

 private:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_nan(v_);
  }

  friend Real make_with_prec(long prec);

  mpfr_t v_;
};

Real make_with_prec(long prec);

// Transcendental kernels. MPFR evaluates these correctly rounded to the
// operand precision; each wrapper raises NonFiniteError if the result is NaN
// or infinite.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real acosh(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real hypot(const Real& x, const Real& y);

/// Simultaneous sin/cos, one argument reduction.
void sin_cos(const Real& x, Real& s, Real& c);

Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// x * 2^e, exact.
Real ldexp(const Real& x, long e);

/// 2^e at context precision, exact.
Real pow2(long e, const PrecisionContext& ctx);

/// Overflow-safe tanh(n*x/2), evaluated as 1 - 2*exp(-n*x)/(1 + exp(-n*x)).
/// Requires x > 0, n >= 1; finite for every representable n*x. The result of
/// the standard tanh formula would overflow through exp(n*x/2) long before
/// this form degrades.
Real tanh_half_n(const Real& x, long n, const PrecisionContext& ctx);

/// Both tanh(n*x/2) and 1 - tanh(n*x/2); the complement stays fully accurate
/// when tanh(n*x/2) rounds to 1.
struct TanhHalf {
  Real value;
  Real one_minus;
};
TanhHalf tanh_half_n_pair(const Real& x, long n, const PrecisionContext& ctx);

/// Inverse hyperbolic tangent (1/2) log((1+t)/(1-t)). Requires |t| < 1;
/// a violation signals that a transfer value escaped its certified range.
Real arctanh_safe(const Real& t, const PrecisionContext& ctx);

/// Complex scalar over Real. Only the handful of operations the matrix and
/// eigenvector paths need.
struct Complex {
  Real re;
  Real im;

  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex zero(const PrecisionContext& ctx) {
    return Complex(Real(0L, ctx), Real(0L, ctx));
  }

  Real modulus() const { return hypot(re, im); }
  Real modulus_sq() const { return re * re + im * im; }
  Complex conjugate() const { return Complex(re, -im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const Real& s, const Complex& a) {
    return Complex(s * a.re, s * a.im);
  }
  friend Complex operator*(const Complex& a, const Real& s) { return s * a; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.modulus_sq();
    Complex num = a * b.conjugate();
    return Complex(num.re / d, num.im / d);
  }
};

}  // namespace cteig
