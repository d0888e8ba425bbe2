#ifndef CFDB_NUMERICS_HPP
#define CFDB_NUMERICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfdb/exact.hpp"
#include "cfdb/real.hpp"

namespace cfdb {
namespace num {

// ---- constants (cached, thread-safe lookup-or-compute)
Real pi(mpfr_prec_t prec);
Real euler(mpfr_prec_t prec);
Real catalan(mpfr_prec_t prec);

// ---- gamma and relatives
Real gamma_r(const Real& x);                      // PoleError on nonpositive ints
Real psi_m(unsigned m, const Real& x, mpfr_prec_t prec);  // m-th polygamma

// ---- zeta family
// Hurwitz zeta for real s != 1, a > 0, by Euler-Maclaurin with certified tail
Real hurwitz_zeta(const Real& s, const Real& a, mpfr_prec_t prec);
// Dirichlet L for the quadratic characters D in {-3, 8, -8}, integer s >= 2
Real dirichlet_l(int D, long s, mpfr_prec_t prec);
// direct-summation oracle for the same L values (independent route; the
// character sum is folded into a rational-term series and tail-expanded)
Real dirichlet_l_direct(int D, long s, mpfr_prec_t prec);
// exact L(chi_D, -k) via generalized Bernoulli numbers
mpq_class dirichlet_l_neg(int D, unsigned long k);

// ---- other special functions
Real polylog(long s, const Real& x, mpfr_prec_t prec);  // s>=2, x in [-1,1]
Real besselj(const Real& nu, const Real& z, mpfr_prec_t prec);
Real besseli(const Real& nu, const Real& z, mpfr_prec_t prec);
// generalized hypergeometric pFq by ascending series (p<=q+1; |z|<1, or the
// z=1 / z=-1 boundary with exact rational parameters via tail expansion)
Real hypergeom_pfq(const std::vector<Real>& as, const std::vector<Real>& bs,
                   const Real& z, mpfr_prec_t prec);
std::optional<Real> hypergeom_pfq_exact(const std::vector<mpq_class>& as,
                                        const std::vector<mpq_class>& bs,
                                        const mpq_class& z, mpfr_prec_t prec);

// ---- function tiers
enum class Tier { A, B };
struct TierInfo {
  Tier tier;
  std::string reason;  // for B: "unsupported" or "unregistered"
};
TierInfo tier_of(const std::string& name);

}  // namespace num

// ---- dense polynomials over Q(i), used for term-ratio analysis
using Poly = std::vector<Exact>;  // p[i] * n^i

Poly p_add(const Poly& a, const Poly& b);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, const Exact& c);
// substitute n -> n + 1
Poly p_shift1(const Poly& a);
Exact p_eval(const Poly& a, const Exact& x);
Poly p_normalize(Poly a);

// Exact rational function rho(n) = num(n)/den(n).
struct RatFun {
  Poly num{Exact(1)};
  Poly den{Exact(1)};
  RatFun() = default;
  RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}
  static RatFun constant(const Exact& c) { return RatFun({c}, {Exact(1)}); }
  RatFun operator*(const RatFun& o) const {
    return RatFun(p_mul(num, o.num), p_mul(den, o.den));
  }
  RatFun operator/(const RatFun& o) const {
    return RatFun(p_mul(num, o.den), p_mul(den, o.num));
  }
  RatFun operator+(const RatFun& o) const {
    return RatFun(p_add(p_mul(num, o.den), p_mul(o.num, den)),
                  p_mul(den, o.den));
  }
  RatFun operator-(const RatFun& o) const;
  Exact eval(const Exact& x) const;
  // expansion in powers of 1/N to `terms` coefficients; fails (empty) when
  // deg num > deg den (ratio unbounded)
  std::vector<Exact> expand_at_infinity(size_t terms) const;
};

// Tail of a hypergeometric-type series: given the term ratio
// rho(n) = T(n+1)/T(n) as an exact rational function and the value T(N),
// return  sum_{n>=N} T(n)  in the form T(N)*G with an error bound.
// Requires |rho(inf)| <= 1 and, at rho(inf)=1, decay exponent s>1.
struct TailResult {
  Exact g;          // G(N), exact
  mpq_class err_over_t;  // bound for |tail - T(N)*G| / |T(N)|
  bool ok = false;
};
TailResult hyperterm_tail(const RatFun& rho, unsigned long N, int max_order,
                          mpfr_prec_t prec);

}  // namespace cfdb

#endif
