#pragma once

// Extended-precision real and complex scalars on top of MPFR.
//
// Precision is counted in decimal digits and travels with each value. A
// binary operation produces a result at the larger of its operands'
// precisions; compound assignment rounds into the destination's precision.
// Changing precision is always explicit (with_digits).

#include <mpfr.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <string_view>
#include <utility>

#include "tors3/error.hpp"
#include "tors3/rational.hpp"

namespace tors3 {

inline constexpr int kDoubleDigits = 16;

inline mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 4;
}

class BigReal {
 public:
  BigReal() : BigReal(kDoubleDigits) {}

  explicit BigReal(int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_zero(v_, 1);
  }

  BigReal(double x, int digits) : BigReal(digits) { mpfr_set_d(v_, x, MPFR_RNDN); }

  BigReal(const Integer& z, int digits) : BigReal(digits) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

  BigReal(const Rational& q, int digits) : BigReal(digits) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

  static BigReal from_long(long x, int digits) {
    BigReal r(digits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  static BigReal parse(std::string_view text, int digits) {
    BigReal r(digits);
    std::string s(text);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw InvariantError("malformed decimal literal '" + s + "'");
    return r;
  }

  BigReal(const BigReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigReal(BigReal&& o) noexcept : digits_(o.digits_), live_(o.live_) {
    std::memcpy(v_, o.v_, sizeof(mpfr_t));
    o.live_ = false;
  }

  BigReal& operator=(const BigReal& o) {
    if (this == &o) return *this;
    if (!live_) {
      mpfr_init2(v_, mpfr_get_prec(o.v_));
      live_ = true;
    } else if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    }
    digits_ = o.digits_;
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }

  BigReal& operator=(BigReal&& o) noexcept {
    if (this == &o) return *this;
    if (live_) mpfr_clear(v_);
    std::memcpy(v_, o.v_, sizeof(mpfr_t));
    digits_ = o.digits_;
    live_ = o.live_;
    o.live_ = false;
    return *this;
  }

  ~BigReal() {
    if (live_) mpfr_clear(v_);
  }

  int digits() const { return digits_; }

  BigReal with_digits(int digits) const {
    BigReal r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// log10 |x| as a double; -inf for zero. Safe far outside double range.
  double log10_abs() const {
    if (mpfr_zero_p(v_)) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  /// Scientific notation with `sig` significant digits (default: all).
  std::string to_string(int sig = -1) const {
    if (sig <= 0) sig = digits_;
    if (mpfr_zero_p(v_)) return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", sig - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  BigReal operator-() const {
    BigReal r(digits_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator/=(const BigReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }

#define TORS3_BIGREAL_BINOP(op, fn)                                   \
  friend BigReal operator op(const BigReal& a, const BigReal& b) {    \
    BigReal r(std::max(a.digits_, b.digits_));                        \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
    return r;                                                         \
  }
  TORS3_BIGREAL_BINOP(+, mpfr_add)
  TORS3_BIGREAL_BINOP(-, mpfr_sub)
  TORS3_BIGREAL_BINOP(*, mpfr_mul)
  TORS3_BIGREAL_BINOP(/, mpfr_div)
#undef TORS3_BIGREAL_BINOP

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
  int digits_ = kDoubleDigits;
  bool live_ = true;
};

inline BigReal abs(const BigReal& x) {
  BigReal r(x.digits());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

inline BigReal sqrt(const BigReal& x) {
  BigReal r(x.digits());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

/// 10^e at the given precision.
inline BigReal pow10(long e, int digits) {
  BigReal r(digits);
  mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

/// Greatest integer not exceeding r.
inline Integer floor_int(const BigReal& r) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDD);
  return z;
}

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(int digits) : re(digits), im(digits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(std::complex<double> z, int digits) : re(z.real(), digits), im(z.imag(), digits) {}
  BigComplex(const Rational& q, int digits) : re(q, digits), im(digits) {}

  BigReal re;
  BigReal im;

  int digits() const { return std::min(re.digits(), im.digits()); }

  BigComplex with_digits(int d) const { return {re.with_digits(d), im.with_digits(d)}; }

  std::complex<double> to_std() const { return {re.to_double(), im.to_double()}; }

  /// |z|^2
  BigReal norm() const { return re * re + im * im; }

  BigReal abs() const { return sqrt(norm()); }

  /// log10 |z|, computed without forming |z| in double.
  double log10_abs() const {
    if (re.is_zero() && im.is_zero()) return -INFINITY;
    double lr = re.log10_abs(), li = im.log10_abs();
    double hi = std::max(lr, li), lo = std::min(lr, li);
    if (!std::isfinite(lo)) return hi;
    return hi + 0.5 * std::log10(1.0 + std::pow(10.0, 2.0 * (lo - hi)));
  }

  BigComplex conj() const { return {re, -im}; }

  BigComplex operator-() const { return {-re, -im}; }

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& b) { return {s * b.re, s * b.im}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal den = b.norm();
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
};

inline BigComplex pow(const BigComplex& z, unsigned n) {
  BigComplex result(BigReal::from_long(1, z.digits()), BigReal(z.digits()));
  BigComplex base = z;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

}  // namespace tors3
