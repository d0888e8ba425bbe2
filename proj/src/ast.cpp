#include "cfdb/ast.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cfdb {

namespace {
std::shared_ptr<ExprNode> node(Nk k) {
  auto p = std::make_shared<ExprNode>();
  p->k = k;
  return p;
}
}  // namespace

Expr mk_int(mpz_class v) {
  auto p = node(Nk::Int);
  p->ival = std::move(v);
  return p;
}
Expr mk_int(long v) { return mk_int(mpz_class(v)); }
Expr mk_sym(std::string s) {
  auto p = node(Nk::Sym);
  p->name = std::move(s);
  return p;
}
Expr mk_str(std::string s) {
  auto p = node(Nk::Str);
  p->name = std::move(s);
  return p;
}
Expr mk1(Nk k, Expr a) {
  auto p = node(k);
  p->kids.push_back(std::move(a));
  return p;
}
Expr mk2(Nk k, Expr a, Expr b) {
  auto p = node(k);
  p->kids.push_back(std::move(a));
  p->kids.push_back(std::move(b));
  return p;
}
Expr mk_call(std::string name, std::vector<Expr> args) {
  auto p = node(Nk::Call);
  p->name = std::move(name);
  p->kids = std::move(args);
  return p;
}
Expr mk_closure(std::vector<std::string> params, Expr body) {
  auto p = node(Nk::Closure);
  p->params = std::move(params);
  p->kids.push_back(std::move(body));
  return p;
}
Expr mk_vec(std::vector<Expr> items) {
  auto p = node(Nk::Vec);
  p->kids = std::move(items);
  return p;
}
Expr mk_mat(std::vector<Expr> items, int cols) {
  auto p = node(Nk::Mat);
  p->kids = std::move(items);
  p->cols = cols;
  return p;
}
Expr mk_bind(std::string var, Expr value) {
  auto p = node(Nk::Bind);
  p->name = std::move(var);
  p->kids.push_back(std::move(value));
  return p;
}

bool expr_eq(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->k != b->k || a->name != b->name || a->params != b->params ||
      a->cols != b->cols || a->kids.size() != b->kids.size())
    return false;
  if (a->k == Nk::Int && a->ival != b->ival) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!expr_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

namespace {

// precedence levels for printing
int prec_of(const Expr& e) {
  switch (e->k) {
    case Nk::Closure: return 1;
    case Nk::Bind: return 2;
    case Nk::Call:
      return e->name == "==" ? 5 : 100;
    case Nk::Add: case Nk::Sub: return 10;
    case Nk::Neg: return 25;
    case Nk::Mul: case Nk::Div: return 20;
    case Nk::Pow: return 30;
    default: return 100;
  }
}

void up(std::ostringstream& os, const Expr& e);

// whether the printed form of e begins with an integer literal
bool leftmost_is_int(const Expr& e) {
  switch (e->k) {
    case Nk::Int: return true;
    case Nk::Add: case Nk::Sub: case Nk::Mul: case Nk::Div:
    case Nk::Pow: case Nk::Fact: case Nk::Index:
      return leftmost_is_int(e->kids[0]);
    default: return false;
  }
}

void up_child(std::ostringstream& os, const Expr& e, int parent, bool right) {
  int p = prec_of(e);
  bool paren = p < parent || (p == parent && right && p != 30) ||
               (p == parent && !right && p == 30);
  if (paren) os << '(';
  up(os, e);
  if (paren) os << ')';
}

void up(std::ostringstream& os, const Expr& e) {
  switch (e->k) {
    case Nk::Int: os << e->ival.get_str(); break;
    case Nk::Sym: os << e->name; break;
    case Nk::Str: os << '"' << e->name << '"'; break;
    case Nk::Neg: {
      os << '-';
      const Expr& a = e->kids[0];
      // "-9^n" would re-lex with -9 as a literal base; force parens
      if (a->k != Nk::Int && leftmost_is_int(a)) {
        os << '(';
        up(os, a);
        os << ')';
      } else {
        up_child(os, a, 26, true);
      }
      break;
    }
    case Nk::Add:
      up_child(os, e->kids[0], 10, false);
      os << '+';
      up_child(os, e->kids[1], 10, true);
      break;
    case Nk::Sub:
      up_child(os, e->kids[0], 10, false);
      os << '-';
      up_child(os, e->kids[1], 10, true);
      break;
    case Nk::Mul:
      up_child(os, e->kids[0], 20, false);
      os << '*';
      up_child(os, e->kids[1], 20, true);
      break;
    case Nk::Div:
      up_child(os, e->kids[0], 20, false);
      os << '/';
      up_child(os, e->kids[1], 20, true);
      break;
    case Nk::Pow:
      up_child(os, e->kids[0], 30, false);
      os << '^';
      up_child(os, e->kids[1], 30, true);
      break;
    case Nk::Fact:
      up_child(os, e->kids[0], 100, false);
      os << '!';
      break;
    case Nk::Call: {
      if (e->name == "==" && e->kids.size() == 2) {
        up_child(os, e->kids[0], 6, false);
        os << "==";
        up_child(os, e->kids[1], 6, true);
        break;
      }
      os << e->name << '(';
      for (size_t i = 0; i < e->kids.size(); ++i) {
        if (i) os << ',';
        up(os, e->kids[i]);
      }
      os << ')';
      break;
    }
    case Nk::Closure: {
      if (e->params.size() == 1)
        os << e->params[0];
      else {
        os << '(';
        for (size_t i = 0; i < e->params.size(); ++i) {
          if (i) os << ',';
          os << e->params[i];
        }
        os << ')';
      }
      os << "->";
      up_child(os, e->kids[0], 2, true);
      break;
    }
    case Nk::Vec: {
      os << '[';
      for (size_t i = 0; i < e->kids.size(); ++i) {
        if (i) os << ',';
        up(os, e->kids[i]);
      }
      os << ']';
      break;
    }
    case Nk::Mat: {
      os << '[';
      int c = e->cols;
      for (size_t i = 0; i < e->kids.size(); ++i) {
        if (i) os << (i % c == 0 ? ';' : ',');
        up(os, e->kids[i]);
      }
      os << ']';
      break;
    }
    case Nk::Index:
      up_child(os, e->kids[0], 100, false);
      os << '[';
      up(os, e->kids[1]);
      os << ']';
      break;
    case Nk::Bind:
      os << e->name << '=';
      up_child(os, e->kids[0], 2, true);
      break;
  }
}

void collect_free(const Expr& e, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (e->k) {
    case Nk::Sym:
      if (!bound.count(e->name)) out.insert(e->name);
      return;
    case Nk::Closure: {
      std::set<std::string> inner = bound;
      for (auto& p : e->params) inner.insert(p);
      collect_free(e->kids[0], inner, out);
      return;
    }
    case Nk::Bind: {
      // iterator variable is bound in the surrounding call, handled there
      collect_free(e->kids[0], bound, out);
      return;
    }
    case Nk::Call: {
      if ((e->name == "sum" || e->name == "prod" || e->name == "intnum") &&
          !e->kids.empty() && e->kids[0]->k == Nk::Bind) {
        std::set<std::string> inner = bound;
        inner.insert(e->kids[0]->name);
        collect_free(e->kids[0]->kids[0], bound, out);
        for (size_t i = 1; i < e->kids.size(); ++i)
          collect_free(e->kids[i], inner, out);
        return;
      }
      break;
    }
    default: break;
  }
  for (auto& k : e->kids) collect_free(k, bound, out);
}

}  // namespace

std::string unparse(const Expr& e) {
  std::ostringstream os;
  up(os, e);
  return os.str();
}

bool has_free_sym(const Expr& e, const std::string& sym) {
  std::set<std::string> bound, out;
  collect_free(e, bound, out);
  return out.count(sym) > 0;
}

std::vector<std::string> free_syms(const Expr& e) {
  std::set<std::string> bound, out;
  collect_free(e, bound, out);
  return {out.begin(), out.end()};
}

Expr subst(const Expr& e, const std::string& sym, const Expr& repl) {
  switch (e->k) {
    case Nk::Sym: return e->name == sym ? repl : e;
    case Nk::Int: case Nk::Str: return e;
    case Nk::Closure: {
      if (std::find(e->params.begin(), e->params.end(), sym) !=
          e->params.end())
        return e;
      return mk_closure(e->params, subst(e->kids[0], sym, repl));
    }
    default: {
      auto p = std::make_shared<ExprNode>(*e);
      bool changed = false;
      for (auto& k : p->kids) {
        Expr s = subst(k, sym, repl);
        if (s != k) changed = true;
        k = s;
      }
      return changed ? Expr(p) : e;
    }
  }
}

}  // namespace cfdb
