#include "cfdb/exact.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace cfdb {

Exact Exact::ratio(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return Exact(q);
}

int Exact::sgn() const {
  if (im_ != 0) throw exact_error("sgn of a complex value");
  return ::sgn(re_);
}

Exact Exact::operator*(const Exact& o) const {
  if (im_ == 0 && o.im_ == 0) return Exact(mpq_class(re_ * o.re_));
  return Exact(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

Exact Exact::inv() const {
  if (is_zero()) throw exact_error("division by zero");
  if (im_ == 0) return Exact(mpq_class(1 / re_));
  mpq_class n = norm();
  return Exact(re_ / n, -im_ / n);
}

Exact Exact::operator/(const Exact& o) const {
  if (o.is_zero()) throw exact_error("division by zero");
  if (im_ == 0 && o.im_ == 0) return Exact(mpq_class(re_ / o.re_));
  return *this * o.inv();
}

Exact Exact::pow(long e) const {
  if (e == 0) return Exact(1);
  if (e < 0) return inv().pow(-e);
  Exact base = *this, acc(1);
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Exact::str() const {
  if (im_ == 0) return re_.get_str();
  std::string s = re_ == 0 ? "" : re_.get_str();
  std::string t = im_.get_str();
  if (!s.empty() && t[0] != '-') s += "+";
  return s + t + "*I";
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial_zz(const mpz_class& n, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

namespace {

// Bernoulli numbers via the tangent-number style recurrence on
// B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k, cached.
std::vector<mpq_class>& bernoulli_cache() {
  static std::vector<mpq_class> cache{mpq_class(1)};
  return cache;
}
std::mutex bernoulli_mu;

}  // namespace

mpq_class bernoulli(unsigned long n) {
  std::lock_guard<std::mutex> lock(bernoulli_mu);
  auto& cache = bernoulli_cache();
  while (cache.size() <= n) {
    unsigned long m = cache.size();
    mpq_class s(0);
    for (unsigned long k = 0; k < m; ++k) {
      if (k > 1 && (k & 1)) continue;  // odd B_k vanish except B_1
      s += mpq_class(binomial_zz(mpz_class(m + 1), k)) * cache[k];
    }
    cache.push_back(-s / mpq_class(m + 1));
  }
  return cache[n];
}

mpz_class euler_number(unsigned long n) {
  // E_n from sum_{k=0..n} C(n,k) E_k = 0 for even n>0 over pairs; classic
  // secant-number recurrence: E_0=1, odd E vanish,
  // E_{2m} = - sum_{j<m} C(2m, 2j) E_{2j}.
  if (n & 1) return 0;
  static std::vector<mpz_class> cache{mpz_class(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  unsigned long m = n / 2;
  while (cache.size() <= m) {
    unsigned long mm = cache.size();
    mpz_class s(0);
    for (unsigned long j = 0; j < mm; ++j)
      s += binomial_zz(mpz_class(2 * mm), 2 * j) * cache[j];
    cache.push_back(-s);
  }
  return cache[m];
}

namespace {

int chi_value(int D, unsigned long r) {
  if (D == -3) {
    switch (r % 3) {
      case 1: return 1;
      case 2: return -1;
      default: return 0;
    }
  }
  if (D == 8) {
    switch (r % 8) {
      case 1: case 7: return 1;
      case 3: case 5: return -1;
      default: return 0;
    }
  }
  if (D == -8) {
    switch (r % 8) {
      case 1: case 3: return 1;
      case 5: case 7: return -1;
      default: return 0;
    }
  }
  throw exact_error("unsupported character conductor");
}

}  // namespace

mpq_class bernoulli_chi(int D, unsigned long n) {
  // B_{n,chi} defined by sum_{a=1}^{f} chi(a) t e^{at}/(e^{ft}-1)
  //                     = sum_n B_{n,chi} t^n/n!.
  // Expand exactly to order n as rational power series.
  unsigned long f = (D == -3) ? 3 : 8;
  unsigned long ord = n + 2;
  // denominator: (e^{f t}-1)/t = sum_{k>=0} f^{k+1} t^k/(k+1)!
  std::vector<mpq_class> den(ord), num(ord, mpq_class(0));
  mpz_class fk(1);
  for (unsigned long k = 0; k < ord; ++k) {
    fk *= f;
    den[k] = mpq_class(fk) / mpq_class(factorial(k + 1));
  }
  for (unsigned long a = 1; a <= f; ++a) {
    int c = chi_value(D, a);
    if (!c) continue;
    mpz_class ak(1);
    for (unsigned long k = 0; k < ord; ++k) {
      num[k] += mpq_class(c) * mpq_class(ak) / mpq_class(factorial(k));
      ak *= a;
    }
  }
  // series division num/den
  std::vector<mpq_class> q(ord);
  for (unsigned long k = 0; k < ord; ++k) {
    mpq_class s = num[k];
    for (unsigned long j = 1; j <= k; ++j) s -= den[j] * q[k - j];
    q[k] = s / den[0];
  }
  return q[n] * mpq_class(factorial(n));
}

}  // namespace cfdb
