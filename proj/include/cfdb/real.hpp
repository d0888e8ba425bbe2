#ifndef CFDB_REAL_HPP
#define CFDB_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "cfdb/exact.hpp"

namespace cfdb {

// Arbitrary-precision real backed by MPFR.  Every value carries its working
// precision in bits; binary operations land on the minimum of the two operand
// precisions.
class Real {
public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
  Real(long n, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  Real(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  Real(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real at(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_); }
  bool is_inf() const { return mpfr_inf_p(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sgn() const { return mpfr_sgn(v_); }
  // binary exponent: value in [2^(e-1), 2^e); 0 for zero
  long exp2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class round_to_int() const;

  Real operator-() const;
  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }
  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool operator==(const Real& o) const { return mpfr_equal_p(v_, o.v_); }

  std::string str(size_t digits = 0) const;
  // leading hex digits of the significand, for golden pinning
  std::string hex_prefix(int bits) const;

private:
  mpfr_t v_;
};

Real real_abs(const Real& x);
Real real_neg(const Real& x);
Real mul_2si(const Real& x, long e);
Real real_max(const Real& a, const Real& b);
Real real_min(const Real& a, const Real& b);

#define CFDB_DECL_FN1(name) Real r_##name(const Real& x);
CFDB_DECL_FN1(sqrt)
CFDB_DECL_FN1(exp)
CFDB_DECL_FN1(log)
CFDB_DECL_FN1(sin)
CFDB_DECL_FN1(cos)
CFDB_DECL_FN1(tan)
CFDB_DECL_FN1(sinh)
CFDB_DECL_FN1(cosh)
CFDB_DECL_FN1(tanh)
CFDB_DECL_FN1(coth)
CFDB_DECL_FN1(atan)
CFDB_DECL_FN1(asin)
CFDB_DECL_FN1(acos)
CFDB_DECL_FN1(atanh)
CFDB_DECL_FN1(asinh)
CFDB_DECL_FN1(acosh)
CFDB_DECL_FN1(gamma)
CFDB_DECL_FN1(lngamma)
CFDB_DECL_FN1(digamma)
CFDB_DECL_FN1(zeta)
CFDB_DECL_FN1(erf)
CFDB_DECL_FN1(erfc)
CFDB_DECL_FN1(eint)
CFDB_DECL_FN1(li2)
#undef CFDB_DECL_FN1
Real r_pow(const Real& x, const Real& y);
Real r_pow_si(const Real& x, long e);
Real r_gamma_inc(const Real& a, const Real& x);  // upper incomplete

Real const_pi(mpfr_prec_t prec);
Real const_euler(mpfr_prec_t prec);
Real const_catalan(mpfr_prec_t prec);

// 2^e as a Real
Real pow2(long e, mpfr_prec_t prec);

// Complex value as a pair of Reals.
class Complex {
public:
  Complex() = default;
  explicit Complex(Real re) : re_(std::move(re)), im_(Real(0L, re_.prec())) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(const Exact& e, mpfr_prec_t prec)
      : re_(e.re(), prec), im_(e.im(), prec) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return std::min(re_.prec(), im_.prec()); }
  bool is_real_within(long bits) const;

  Complex operator-() const { return Complex(real_neg(re_), real_neg(im_)); }
  Complex operator+(const Complex& o) const {
    return Complex(re_ + o.re_, im_ + o.im_);
  }
  Complex operator-(const Complex& o) const {
    return Complex(re_ - o.re_, im_ - o.im_);
  }
  Complex operator*(const Complex& o) const {
    return Complex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Complex operator/(const Complex& o) const;

private:
  Real re_{64}, im_{64};
};

Real c_abs(const Complex& z);
Complex c_sqrt(const Complex& z);
Complex c_exp(const Complex& z);
Complex c_log(const Complex& z);
Complex c_pow(const Complex& z, const Complex& w);
Complex c_pow_si(const Complex& z, long e);

}  // namespace cfdb

#endif
