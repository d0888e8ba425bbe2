#ifndef CFDB_EVAL_HPP
#define CFDB_EVAL_HPP

#include "cfdb/value.hpp"

namespace cfdb {

enum class EvalErr {
  UnboundSymbol,
  UnknownFunction,
  DivisionByZero,
  DomainError,
  ExactnessError,
  ArityMismatch,
  PoleError,
  TypeError,
  Unsupported
};

struct eval_error : std::runtime_error {
  eval_error(EvalErr code, const std::string& what, std::string symbol = "")
      : std::runtime_error(what), code(code), symbol(std::move(symbol)) {}
  EvalErr code;
  std::string symbol;  // offending name, when meaningful
};

struct Mode {
  enum Kind { ExactK, RealK, ComplexK, SeriesK } kind = RealK;
  mpfr_prec_t prec = 256;
  // series-mode truncation used when no O() term bounds the expression
  long series_order = 16;

  static Mode exact() { return {ExactK, 256, 16}; }
  static Mode real(mpfr_prec_t p) { return {RealK, p, 16}; }
  static Mode cplx(mpfr_prec_t p) { return {ComplexK, p, 16}; }
  static Mode series(long order = 16, mpfr_prec_t p = 256) {
    return {SeriesK, p, order};
  }
};

Value eval(const Expr& e, const EnvPtr& env, const Mode& mode);
Value apply(const Value& closure, const std::vector<Value>& args,
            const Mode& mode);

// numeric coercions
Real to_real(const Value& v, mpfr_prec_t prec);
Complex to_complex(const Value& v, mpfr_prec_t prec);
// |v| as a Real (works for Exact/Real/Complex)
Real abs_value(const Value& v, mpfr_prec_t prec);

Value v_add(const Value& a, const Value& b, const Mode& m);
Value v_sub(const Value& a, const Value& b, const Mode& m);
Value v_mul(const Value& a, const Value& b, const Mode& m);
Value v_div(const Value& a, const Value& b, const Mode& m);
Value v_neg(const Value& a, const Mode& m);
Value v_pow(const Value& a, const Value& b, const Mode& m);

TruncSeries ts_add(const TruncSeries& a, const TruncSeries& b, const Mode& m);
TruncSeries ts_mul(const TruncSeries& a, const TruncSeries& b, const Mode& m);
TruncSeries ts_div(const TruncSeries& a, const TruncSeries& b, const Mode& m);
TruncSeries ts_scalar(const Value& c, const std::string& var);

// the function table built from the Definitions block of a database
std::shared_ptr<const Env::FuncTable> build_func_table(
    const std::vector<std::pair<std::string, Env::FuncDef>>& defs);

}  // namespace cfdb

#endif
