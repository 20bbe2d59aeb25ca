#pragma once

#include <cmath>
#include <complex>

#include "tors3/big.hpp"
#include "tors3/rational.hpp"

namespace tors3 {

using Complex = std::complex<double>;

/// Uniform access to the two complex scalar types the numeric code is
/// instantiated with: hardware doubles for path tracking and BigComplex for
/// refinement.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static Real real_from_rational(const Rational& q, int) { return q.get_d(); }
  static Complex zero(int) { return {0.0, 0.0}; }
  static Complex one(int) { return {1.0, 0.0}; }
  static Complex from_rational(const Rational& q, int) { return {q.get_d(), 0.0}; }
  static double log10_abs(const Complex& z) {
    double a = std::abs(z);
    return a == 0.0 ? -INFINITY : std::log10(a);
  }
  static int digits(const Complex&) { return kDoubleDigits; }
};

template <>
struct ScalarTraits<BigComplex> {
  using Real = BigReal;
  static Real real_from_rational(const Rational& q, int digits) { return BigReal(q, digits); }
  static BigComplex zero(int digits) { return BigComplex(digits); }
  static BigComplex one(int digits) { return {BigReal::from_long(1, digits), BigReal(digits)}; }
  static BigComplex from_rational(const Rational& q, int digits) { return BigComplex(q, digits); }
  static double log10_abs(const BigComplex& z) { return z.log10_abs(); }
  static int digits(const BigComplex& z) { return z.digits(); }
};

}  // namespace tors3
