#ifndef CFDB_VALUE_HPP
#define CFDB_VALUE_HPP

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cfdb/ast.hpp"
#include "cfdb/exact.hpp"
#include "cfdb/real.hpp"

namespace cfdb {

class Value;
class Env;
using EnvPtr = std::shared_ptr<const Env>;

// Truncated (Laurent) power series in one formal variable:
//   sum_{j=lo}^{order-1} coeffs[j-lo] * var^j  +  O(var^order)
// `order` == kPolyOrder marks an untruncated polynomial.
struct TruncSeries {
  static constexpr long kPolyOrder = std::numeric_limits<long>::max() / 4;
  std::string var = "x";
  long lo = 0;
  std::vector<Value> coeffs;
  long order = kPolyOrder;

  bool is_poly() const { return order >= kPolyOrder; }
};

struct ClosureVal {
  std::vector<std::string> params;
  Expr body;
  EnvPtr env;
};

// An expression whose evaluation is deferred because it still contains the
// reserved index n (the paper's closure-wrapped coefficient trick).
struct PendingVal {
  Expr expr;
  EnvPtr env;
};

struct VectorVal {
  std::vector<Value> items;
  bool is_matrix = false;  // rows as nested VectorVal
};

class Value {
public:
  using Box = std::variant<Exact, Real, Complex, std::string,
                           std::shared_ptr<const TruncSeries>,
                           std::shared_ptr<const VectorVal>,
                           std::shared_ptr<const ClosureVal>,
                           std::shared_ptr<const PendingVal>>;

  Value() : v_(Exact(0)) {}
  Value(Exact e) : v_(std::move(e)) {}
  Value(Real r) : v_(std::move(r)) {}
  Value(Complex c) : v_(std::move(c)) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(TruncSeries s)
      : v_(std::make_shared<const TruncSeries>(std::move(s))) {}
  Value(VectorVal s) : v_(std::make_shared<const VectorVal>(std::move(s))) {}
  Value(ClosureVal s) : v_(std::make_shared<const ClosureVal>(std::move(s))) {}
  Value(PendingVal s) : v_(std::make_shared<const PendingVal>(std::move(s))) {}

  bool is_exact() const { return std::holds_alternative<Exact>(v_); }
  bool is_real() const { return std::holds_alternative<Real>(v_); }
  bool is_complex() const { return std::holds_alternative<Complex>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_series() const {
    return std::holds_alternative<std::shared_ptr<const TruncSeries>>(v_);
  }
  bool is_vector() const {
    return std::holds_alternative<std::shared_ptr<const VectorVal>>(v_);
  }
  bool is_closure() const {
    return std::holds_alternative<std::shared_ptr<const ClosureVal>>(v_);
  }
  bool is_pending() const {
    return std::holds_alternative<std::shared_ptr<const PendingVal>>(v_);
  }

  const Exact& exact() const { return std::get<Exact>(v_); }
  const Real& real() const { return std::get<Real>(v_); }
  const Complex& complex() const { return std::get<Complex>(v_); }
  const std::string& str() const { return std::get<std::string>(v_); }
  const TruncSeries& series() const {
    return *std::get<std::shared_ptr<const TruncSeries>>(v_);
  }
  const VectorVal& vector() const {
    return *std::get<std::shared_ptr<const VectorVal>>(v_);
  }
  const ClosureVal& closure() const {
    return *std::get<std::shared_ptr<const ClosureVal>>(v_);
  }
  const PendingVal& pending() const {
    return *std::get<std::shared_ptr<const PendingVal>>(v_);
  }

  std::string str_repr() const;

private:
  Box v_;
};

class Env : public std::enable_shared_from_this<Env> {
public:
  struct FuncDef {
    std::vector<std::string> params;
    Expr body;
  };
  using FuncTable = std::map<std::string, FuncDef>;

  static EnvPtr root(std::shared_ptr<const FuncTable> funcs) {
    auto e = std::make_shared<Env>();
    e->funcs_ = std::move(funcs);
    return e;
  }
  static EnvPtr extend(EnvPtr parent, std::string name, Value v) {
    auto e = std::make_shared<Env>();
    e->parent_ = parent;
    e->funcs_ = parent ? parent->funcs_ : nullptr;
    e->vars_.emplace(std::move(name), std::move(v));
    return e;
  }
  static EnvPtr extend(EnvPtr parent,
                       std::vector<std::pair<std::string, Value>> vars) {
    auto e = std::make_shared<Env>();
    e->parent_ = parent;
    e->funcs_ = parent ? parent->funcs_ : nullptr;
    for (auto& [k, v] : vars) e->vars_.emplace(std::move(k), std::move(v));
    return e;
  }

  const Value* lookup(const std::string& name) const {
    for (const Env* e = this; e; e = e->parent_.get()) {
      auto it = e->vars_.find(name);
      if (it != e->vars_.end()) return &it->second;
    }
    return nullptr;
  }
  const FuncDef* lookup_func(const std::string& name) const {
    if (!funcs_) return nullptr;
    auto it = funcs_->find(name);
    return it == funcs_->end() ? nullptr : &it->second;
  }
  bool has_any(const std::vector<std::string>& names) const {
    for (auto& n : names)
      if (lookup(n)) return true;
    return false;
  }

private:
  EnvPtr parent_;
  std::map<std::string, Value> vars_;
  std::shared_ptr<const FuncTable> funcs_;
};

}  // namespace cfdb

#endif
