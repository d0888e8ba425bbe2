#ifndef CFDB_AST_HPP
#define CFDB_AST_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace cfdb {

enum class Nk {
  Int,
  Sym,
  Str,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Fact,
  Call,     // name + args; O(...) and iterators included
  Closure,  // params + body
  Vec,
  Mat,      // rows flattened in kids, row length in cols
  Index,    // kids[0][ kids[1] ]
  Bind      // var = expr   (first argument of sum/prod/intnum)
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  Nk k;
  mpz_class ival;                    // Int
  std::string name;                  // Sym, Str, Call, Bind
  std::vector<std::string> params;   // Closure
  std::vector<Expr> kids;
  int cols = 0;                      // Mat row width
  int line = 0, col = 0;
};

Expr mk_int(mpz_class v);
Expr mk_int(long v);
Expr mk_sym(std::string s);
Expr mk_str(std::string s);
Expr mk1(Nk k, Expr a);
Expr mk2(Nk k, Expr a, Expr b);
Expr mk_call(std::string name, std::vector<Expr> args);
Expr mk_closure(std::vector<std::string> params, Expr body);
Expr mk_vec(std::vector<Expr> items);
Expr mk_mat(std::vector<Expr> items, int cols);
Expr mk_bind(std::string var, Expr value);

bool expr_eq(const Expr& a, const Expr& b);
// canonical one-line rendering that re-parses to an identical tree
std::string unparse(const Expr& e);
// true when `sym` occurs free in e (closure params shadow)
bool has_free_sym(const Expr& e, const std::string& sym);
// all free symbols of e
std::vector<std::string> free_syms(const Expr& e);
// substitute free occurrences of sym by a replacement tree
Expr subst(const Expr& e, const std::string& sym, const Expr& repl);

}  // namespace cfdb

#endif
