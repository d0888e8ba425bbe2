#ifndef CFDB_EXACT_HPP
#define CFDB_EXACT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cfdb {

struct exact_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact scalar of the evaluation field Q(i).  The imaginary part is zero for
// almost every value in the database; it becomes nonzero through the symbol I
// (complex E-fields, the z=2i test transform) and stays exact under +,-,*,/.
class Exact {
public:
  Exact() : re_(0), im_(0) {}
  Exact(long n) : re_(n), im_(0) {}
  Exact(const mpz_class& z) : re_(z), im_(0) {}
  Exact(const mpq_class& q) : re_(q), im_(0) { re_.canonicalize(); }
  Exact(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Exact ratio(long num, long den);
  static Exact i() { return Exact(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_integer() const { return is_real() && re_.get_den() == 1; }
  // sign of a real value; throws on complex
  int sgn() const;

  Exact operator-() const { return Exact(-re_, -im_); }
  Exact operator+(const Exact& o) const { return Exact(re_ + o.re_, im_ + o.im_); }
  Exact operator-(const Exact& o) const { return Exact(re_ - o.re_, im_ - o.im_); }
  Exact operator*(const Exact& o) const;
  Exact operator/(const Exact& o) const;
  Exact& operator+=(const Exact& o) { return *this = *this + o; }
  Exact& operator-=(const Exact& o) { return *this = *this - o; }
  Exact& operator*=(const Exact& o) { return *this = *this * o; }
  Exact& operator/=(const Exact& o) { return *this = *this / o; }
  bool operator==(const Exact& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Exact& o) const { return !(*this == o); }

  Exact inv() const;
  Exact pow(long e) const;
  // squared modulus re^2+im^2 (exact, rational)
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  std::string str() const;

private:
  mpq_class re_, im_;
};

mpz_class factorial(unsigned long n);
mpz_class binomial_zz(const mpz_class& n, unsigned long k);
// exact Bernoulli number B_n as a rational (B_1 = -1/2)
mpq_class bernoulli(unsigned long n);
// exact Euler number E_n (integer; odd-index values are 0)
mpz_class euler_number(unsigned long n);
// generalized Bernoulli number B_{n,chi} for the quadratic character mod |D|,
// D in {-3, 8, -8}; used for exact L(chi, -k) values
mpq_class bernoulli_chi(int D, unsigned long n);

}  // namespace cfdb

#endif
