#include "cfdb/real.hpp"

#include <algorithm>

namespace cfdb {

namespace {
mpfr_prec_t join(const Real& a, const Real& b) {
  return std::min(a.prec(), b.prec());
}
}  // namespace

mpz_class Real::round_to_int() const {
  mpfr_t t;
  mpfr_init2(t, prec());
  mpfr_round(t, v_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define CFDB_BINOP(op, fn)                       \
  Real Real::operator op(const Real& o) const { \
    Real r(join(*this, o));                      \
    fn(r.raw(), v_, o.v_, MPFR_RNDN);            \
    return r;                                    \
  }
CFDB_BINOP(+, mpfr_add)
CFDB_BINOP(-, mpfr_sub)
CFDB_BINOP(*, mpfr_mul)
CFDB_BINOP(/, mpfr_div)
#undef CFDB_BINOP

std::string Real::str(size_t digits) const {
  if (is_nan()) return "nan";
  if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 2;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  std::string out = (neg ? "-" : "");
  out += d.substr(0, 1) + "." + (d.size() > 1 ? d.substr(1) : "0");
  out += "e" + std::to_string(e - 1);
  return out;
}

std::string Real::hex_prefix(int bits) const {
  int nibbles = (bits + 3) / 4;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 16, static_cast<size_t>(nibbles), v_,
                         MPFR_RNDZ);
  std::string out(s);
  mpfr_free_str(s);
  return out + "@" + std::to_string(e);
}

Real real_abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real real_neg(const Real& x) { return -x; }

Real mul_2si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real real_max(const Real& a, const Real& b) { return a.cmp(b) >= 0 ? a : b; }
Real real_min(const Real& a, const Real& b) { return a.cmp(b) <= 0 ? a : b; }

#define CFDB_FN1(name, fn)          \
  Real r_##name(const Real& x) {    \
    Real r(x.prec());               \
    fn(r.raw(), x.raw(), MPFR_RNDN); \
    return r;                       \
  }
CFDB_FN1(sqrt, mpfr_sqrt)
CFDB_FN1(exp, mpfr_exp)
CFDB_FN1(log, mpfr_log)
CFDB_FN1(sin, mpfr_sin)
CFDB_FN1(cos, mpfr_cos)
CFDB_FN1(tan, mpfr_tan)
CFDB_FN1(sinh, mpfr_sinh)
CFDB_FN1(cosh, mpfr_cosh)
CFDB_FN1(tanh, mpfr_tanh)
CFDB_FN1(atan, mpfr_atan)
CFDB_FN1(asin, mpfr_asin)
CFDB_FN1(acos, mpfr_acos)
CFDB_FN1(atanh, mpfr_atanh)
CFDB_FN1(asinh, mpfr_asinh)
CFDB_FN1(acosh, mpfr_acosh)
CFDB_FN1(gamma, mpfr_gamma)
CFDB_FN1(lngamma, mpfr_lngamma)
CFDB_FN1(digamma, mpfr_digamma)
CFDB_FN1(zeta, mpfr_zeta)
CFDB_FN1(erf, mpfr_erf)
CFDB_FN1(erfc, mpfr_erfc)
CFDB_FN1(eint, mpfr_eint)
CFDB_FN1(li2, mpfr_li2)
#undef CFDB_FN1

Real r_coth(const Real& x) {
  Real r(x.prec());
  mpfr_coth(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real r_pow(const Real& x, const Real& y) {
  Real r(join(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real r_pow_si(const Real& x, long e) {
  Real r(x.prec());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real r_gamma_inc(const Real& a, const Real& x) {
  Real r(join(a, x));
  mpfr_gamma_inc(r.raw(), a.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real const_pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real const_euler(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
Real const_catalan(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_catalan(r.raw(), MPFR_RNDN);
  return r;
}

Real pow2(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  return mul_2si(r, e);
}

bool Complex::is_real_within(long bits) const {
  if (im_.is_zero()) return true;
  if (re_.is_zero()) return im_.exp2() < -bits;
  return im_.exp2() - re_.exp2() < -bits;
}

Complex Complex::operator/(const Complex& o) const {
  Real n = o.re_ * o.re_ + o.im_ * o.im_;
  return Complex((re_ * o.re_ + im_ * o.im_) / n,
                 (im_ * o.re_ - re_ * o.im_) / n);
}

Real c_abs(const Complex& z) {
  Real r(z.prec());
  mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
  return r;
}

Complex c_sqrt(const Complex& z) {
  if (z.im().is_zero()) {
    if (z.re().sgn() >= 0) return Complex(r_sqrt(z.re()));
    return Complex(Real(0L, z.prec()), r_sqrt(real_neg(z.re())));
  }
  // sqrt via polar decomposition
  Real r = c_abs(z);
  Real u = r_sqrt(mul_2si(r + z.re(), -1));
  Real v = r_sqrt(mul_2si(r - z.re(), -1));
  if (z.im().sgn() < 0) v = real_neg(v);
  return Complex(u, v);
}

Complex c_exp(const Complex& z) {
  Real e = r_exp(z.re());
  return Complex(e * r_cos(z.im()), e * r_sin(z.im()));
}

Complex c_log(const Complex& z) {
  Real r(z.prec());
  mpfr_atan2(r.raw(), z.im().raw(), z.re().raw(), MPFR_RNDN);
  return Complex(r_log(c_abs(z)), r);
}

Complex c_pow_si(const Complex& z, long e) {
  if (e == 0) return Complex(Real(1L, z.prec()));
  bool inv = e < 0;
  unsigned long k = inv ? -static_cast<unsigned long>(e) : e;
  Complex base = z, acc(Real(1L, z.prec()));
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  if (inv) return Complex(Real(1L, z.prec())) / acc;
  return acc;
}

Complex c_pow(const Complex& z, const Complex& w) {
  if (w.im().is_zero() && z.im().is_zero() && z.re().sgn() > 0)
    return Complex(r_pow(z.re(), w.re()));
  return c_exp(c_log(z) * w);
}

}  // namespace cfdb
