#include "cfdb/parser.hpp"

#include <algorithm>
#include <cassert>

namespace cfdb {

namespace {

class Parser {
public:
  Parser(const std::vector<Token>& toks, bool lenient,
         std::vector<Quirk>* quirks)
      : t_(toks), lenient_(lenient), quirks_(quirks) {}

  Expr parse_all() {
    Expr e = expr(0);
    if (pos_ != t_.size()) fail("trailing tokens after expression");
    return e;
  }

  Expr expr(int min_bp) {
    Expr lhs = prefix();
    for (;;) {
      const Token* t = peek();
      if (!t) break;
      if (t->kind == TokKind::Quirk) {
        // lenient recovery for stray characters inside an expression
        // (the `\Gamma` defect): drop the character and splice the
        // neighbours with an implicit product.
        quirk("illegal-char-spliced", t->text, t->line, t->col);
        ++pos_;
        const Token* nx = peek();
        if (nx && starts_atom(*nx)) {
          Expr rhs = expr(21);
          lhs = mk2(Nk::Mul, lhs, rhs);
          continue;
        }
        continue;
      }
      if (t->kind != TokKind::Op) break;
      int lbp, rbp;
      Nk k;
      if (t->text == "==") { lbp = 5; rbp = 6; k = Nk::Call; }
      else if (t->text == "=") { lbp = 3; rbp = 4; k = Nk::Bind; }
      else if (t->text == "+") { lbp = 10; rbp = 11; k = Nk::Add; }
      else if (t->text == "-") { lbp = 10; rbp = 11; k = Nk::Sub; }
      else if (t->text == "*") { lbp = 20; rbp = 21; k = Nk::Mul; }
      else if (t->text == "/") { lbp = 20; rbp = 21; k = Nk::Div; }
      else if (t->text == "^") { lbp = 30; rbp = 29; k = Nk::Pow; }
      else break;  // '->' handled in prefix, '!' in postfix
      if (lbp < min_bp) break;
      ++pos_;
      if (k == Nk::Bind) {
        if (lhs->k == Nk::Sym) {
          Expr rhs = expr(rbp);
          lhs = mk_bind(lhs->name, rhs);
        } else if (lhs->k == Nk::Call &&
                   std::all_of(lhs->kids.begin(), lhs->kids.end(),
                               [](const Expr& a) { return a->k == Nk::Sym; })) {
          // function definition: name(p1,...,pk) = body
          std::vector<std::string> params;
          for (auto& a : lhs->kids) params.push_back(a->name);
          Expr rhs = expr(rbp);
          lhs = mk_bind(lhs->name, mk_closure(std::move(params), rhs));
        } else {
          fail("left side of '=' must be a name");
        }
      } else if (t->text == "==") {
        Expr rhs = expr(rbp);
        lhs = mk_call("==", {lhs, rhs});
      } else {
        Expr rhs = expr(rbp);
        lhs = mk2(k, lhs, rhs);
      }
    }
    return lhs;
  }

private:
  const std::vector<Token>& t_;
  size_t pos_ = 0;
  bool lenient_;
  std::vector<Quirk>* quirks_;

  const Token* peek(size_t ahead = 0) const {
    return pos_ + ahead < t_.size() ? &t_[pos_ + ahead] : nullptr;
  }
  const Token& next() {
    if (pos_ >= t_.size()) throw parse_error("unexpected end of record", 0, 0);
    return t_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token* t = peek();
    throw parse_error(msg, t ? t->line : 0, t ? t->col : 0);
  }
  void quirk(const std::string& code, const std::string& detail, int l, int c) {
    if (quirks_) quirks_->push_back({code, detail, l, c});
  }
  static bool starts_atom(const Token& t) {
    return t.kind == TokKind::Integer || t.kind == TokKind::Ident ||
           t.kind == TokKind::Str ||
           (t.kind == TokKind::Punct && (t.text == "(" || t.text == "[")) ||
           (t.kind == TokKind::Op && t.text == "-");
  }

  Expr prefix() {
    // one-parameter closure written without parentheses: k->body
    const Token* t = peek();
    if (t && t->kind == TokKind::Ident) {
      const Token* nx = peek(1);
      if (nx && nx->kind == TokKind::Op && nx->text == "->") {
        std::string p = t->text;
        pos_ += 2;
        Expr body = expr(4);
        return mk_closure({p}, body);
      }
    }
    return postfix(atom());
  }

  Expr atom() {
    const Token& t = next();
    switch (t.kind) {
      case TokKind::Integer: {
        auto e = mk_int(mpz_class(t.text));
        return e;
      }
      case TokKind::Str: return mk_str(t.text);
      case TokKind::Ident: {
        return mk_sym(t.text);
      }
      case TokKind::Op:
        if (t.text == "-") {
          Expr inner = expr(25);
          if (inner->k == Nk::Int) return mk_int(-inner->ival);
          return mk1(Nk::Neg, inner);
        }
        if (t.text == "+") return expr(25);
        fail("unexpected operator '" + t.text + "'");
      case TokKind::Punct:
        if (t.text == "(") return paren_or_closure();
        if (t.text == "[") return vector_or_matrix();
        fail("unexpected '" + t.text + "'");
      case TokKind::Quirk: {
        quirk("illegal-char-dropped", t.text, t.line, t.col);
        return atom();
      }
      default: fail("unexpected token");
    }
  }

  Expr paren_or_closure() {
    // try (p1,...,pk)->body, including ()->body
    size_t save = pos_;
    std::vector<std::string> params;
    bool is_params = true;
    if (peek() && peek()->kind == TokKind::Punct && peek()->text == ")") {
      ++pos_;
    } else {
      for (;;) {
        const Token* id = peek();
        if (!id || id->kind != TokKind::Ident) { is_params = false; break; }
        params.push_back(id->text);
        ++pos_;
        const Token* sep = peek();
        if (sep && sep->kind == TokKind::Punct && sep->text == ")") { ++pos_; break; }
        if (sep && sep->kind == TokKind::Punct && sep->text == ",") { ++pos_; continue; }
        is_params = false;
        break;
      }
    }
    if (is_params && peek() && peek()->kind == TokKind::Op &&
        peek()->text == "->") {
      ++pos_;
      Expr body = expr(4);
      return mk_closure(std::move(params), body);
    }
    pos_ = save;
    Expr inner = expr(0);
    expect_punct(")");
    return inner;
  }

  Expr vector_or_matrix() {
    std::vector<Expr> items;
    std::vector<size_t> row_ends;
    if (peek() && peek()->kind == TokKind::Punct && peek()->text == "]") {
      ++pos_;
      return mk_vec({});
    }
    for (;;) {
      items.push_back(expr(0));
      const Token& sep = next();
      if (sep.kind != TokKind::Punct) fail("expected ',', ';' or ']'");
      if (sep.text == ",") continue;
      if (sep.text == ";") { row_ends.push_back(items.size()); continue; }
      if (sep.text == "]") break;
      fail("expected ',', ';' or ']'");
    }
    if (row_ends.empty()) return mk_vec(std::move(items));
    row_ends.push_back(items.size());
    size_t cols = row_ends[0];
    for (size_t i = 1; i < row_ends.size(); ++i)
      if (row_ends[i] - row_ends[i - 1] != cols)
        fail("ragged matrix rows");
    return mk_mat(std::move(items), static_cast<int>(cols));
  }

  Expr postfix(Expr e) {
    for (;;) {
      const Token* t = peek();
      if (!t) break;
      if (t->kind == TokKind::Punct && t->text == "(") {
        if (e->k != Nk::Sym) fail("call of a non-name");
        ++pos_;
        std::vector<Expr> args;
        if (peek() && peek()->kind == TokKind::Punct && peek()->text == ")") {
          ++pos_;
        } else {
          for (;;) {
            args.push_back(expr(0));
            const Token& sep = next();
            if (sep.kind == TokKind::Punct && sep.text == ")") break;
            if (sep.kind == TokKind::Punct && sep.text == ",") continue;
            fail("expected ',' or ')'");
          }
        }
        e = mk_call(e->name, std::move(args));
        continue;
      }
      if (t->kind == TokKind::Punct && t->text == "[") {
        ++pos_;
        Expr idx = expr(0);
        expect_punct("]");
        e = mk2(Nk::Index, e, idx);
        continue;
      }
      if (t->kind == TokKind::Op && t->text == "!") {
        ++pos_;
        e = mk1(Nk::Fact, e);
        continue;
      }
      break;
    }
    return e;
  }

  void expect_punct(const std::string& s) {
    const Token& t = next();
    if (t.kind != TokKind::Punct || t.text != s)
      throw parse_error("expected '" + s + "'", t.line, t.col);
  }
};

bool is_scalar_zero(const Expr& e) { return e->k == Nk::Int && e->ival == 0; }

// Shape probe with GP semantics: scalar*vector (either order), vector/scalar
// and -vector distribute, so `z*[a,b]` is a vector.
const ExprNode* vec_shape(const Expr& e) {
  switch (e->k) {
    case Nk::Vec: return e.get();
    case Nk::Neg: return vec_shape(e->kids[0]);
    case Nk::Mul: {
      const ExprNode* l = vec_shape(e->kids[0]);
      if (l) return l;
      return vec_shape(e->kids[1]);
    }
    case Nk::Div: return vec_shape(e->kids[0]);
    default: return nullptr;
  }
}

bool shape_is_vec(const Expr& e) { return vec_shape(e) != nullptr; }
bool shape_is_closure(const Expr& e) { return e->k == Nk::Closure; }

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string comment_title(const std::string& text) {
  // strip /* */ and decorations
  std::string body = text.substr(2, text.size() - 4);
  std::string t = trim(body);
  if (t.empty()) return "";
  if (t.find_first_not_of("*") == std::string::npos) return "";
  return t;
}

}  // namespace

Expr parse_expr_tokens(const std::vector<Token>& toks, bool lenient,
                       std::vector<Quirk>* quirks) {
  std::vector<Token> clean;
  clean.reserve(toks.size());
  for (auto& t : toks)
    if (t.kind != TokKind::Comment) clean.push_back(t);
  Parser p(clean, lenient, quirks);
  return p.parse_all();
}

Expr parse_expr_string(const std::string& text) {
  LexResult lr = tokenize(text, false);
  return parse_expr_tokens(lr.tokens, false, nullptr);
}

int typevec(const Expr& v) {
  if (v->k == Nk::Closure) return 1;
  if (v->k == Nk::Bind && v->kids[0]->k == Nk::Closure) return 1;
  const ExprNode* vv = vec_shape(v);
  if (!vv || (vv->kids.size() != 5 && vv->kids.size() != 8))
    throw incorrect_entry("incorrect entry");
  if (vv->kids.size() == 5) return 2;
  const Expr& v2 = vv->kids[1];
  const ExprNode* ab = vec_shape(v2);
  if (!ab || ab->kids.size() != 2) throw incorrect_entry("incorrect entry");
  const Expr& a = ab->kids[0];
  const Expr& b = ab->kids[1];
  if (shape_is_closure(a) || shape_is_closure(b)) return 3;
  const ExprNode* av = vec_shape(a);
  const ExprNode* bv = vec_shape(b);
  if (!av || !bv) throw incorrect_entry("incorrect entry 2");
  if (av->kids.empty() || bv->kids.empty())
    throw incorrect_entry("incorrect entry 2");
  if (shape_is_closure(av->kids.back()) || shape_is_closure(bv->kids.back()))
    return 4;
  if (shape_is_vec(av->kids.front()) || shape_is_vec(bv->kids.front()))
    return 5;
  return 6;
}

namespace {

ConvView parse_conv(const Expr& v3, Record& rec) {
  ConvView cv;
  const ExprNode* vec = vec_shape(v3);
  if (!vec) {
    // v[3] may in principle be 0; keep fields null
    rec.quirks.push_back({"v3-not-a-vector", unparse(v3), 0, 0});
    return cv;
  }
  if (vec->kids.size() == 4) {
    cv.d = vec->kids[0];
    cv.fedp = vec->kids[1];
    cv.c = vec->kids[2];
    cv.a = vec->kids[3];
  } else if (vec->kids.size() == 3) {
    // documented data defect: C missing, third component is the expansion
    cv.d = vec->kids[0];
    cv.fedp = vec->kids[1];
    cv.c = nullptr;
    cv.a = vec->kids[2];
    rec.quirks.push_back({"v3-three-components", unparse(v3), 0, 0});
  } else {
    rec.quirks.push_back({"v3-bad-arity", unparse(v3), 0, 0});
  }
  return cv;
}

void build_views(Record& rec) {
  const Expr& v = rec.payload;
  if (rec.type == 1) {
    DefinitionView dv;
    if (v->k == Nk::Bind && v->kids[0]->k == Nk::Closure) {
      dv.name = v->name;
      dv.params = v->kids[0]->params;
      dv.body = v->kids[0]->kids[0];
    }
    rec.def = std::move(dv);
    return;
  }
  const ExprNode* vec = vec_shape(v);
  if (rec.type == 2) {
    ParamFamilyView fam;
    const ExprNode* head = vec_shape(vec->kids[0]);
    if (head && head->kids.size() == 3) {
      fam.limit = head->kids[0];
      fam.a_poly = head->kids[1];
      fam.b_poly = head->kids[2];
    } else {
      rec.quirks.push_back({"family-head-shape", unparse(vec->kids[0]), 0, 0});
    }
    const ExprNode* conv = vec_shape(vec->kids[1]);
    if (conv && conv->kids.size() == 2) {
      fam.d = conv->kids[0];
      fam.fedp = conv->kids[1];
    }
    if (vec->kids[2]->k == Nk::Str) fam.anchor = vec->kids[2]->name;
    fam.test = vec->kids[3];
    if (vec->kids[4]->k == Nk::Str) fam.info = vec->kids[4]->name;
    rec.family = std::move(fam);
    return;
  }
  CfEntryView e;
  e.limit = vec->kids[0];
  e.ab = vec->kids[1];
  e.conv = parse_conv(vec->kids[2], rec);
  e.series = vec->kids[3];
  e.test = vec->kids[4];
  if (vec->kids[5]->k == Nk::Str)
    e.label = vec->kids[5]->name;
  else
    rec.quirks.push_back({"label-not-a-string", unparse(vec->kids[5]), 0, 0});
  if (const ExprNode* ap = vec_shape(vec->kids[6])) {
    for (auto& s : ap->kids)
      if (s->k == Nk::Str) e.apery.push_back(s->name);
  }
  if (vec->kids[7]->k == Nk::Str) e.info = vec->kids[7]->name;
  rec.entry = std::move(e);
}

}  // namespace

const Record* Database::find_label(const std::string& label) const {
  auto it = by_label.find(label);
  if (it == by_label.end()) return nullptr;
  return &records[it->second - 1];
}

std::vector<int> Database::families_for(const std::string& anchor) const {
  std::vector<int> out;
  for (auto& r : records)
    if (r.kind == RecordKind::ParamFamily && r.family &&
        r.family->anchor == anchor)
      out.push_back(r.index);
  return out;
}

Database parse_database(const std::string& source, bool lenient) {
  Database db;
  LexResult lr = tokenize(source, lenient);
  db.file_quirks = lr.quirks;

  // split on top-level ';'
  std::vector<std::vector<Token>> items;
  std::vector<Token> cur;
  std::string pending_section;
  std::vector<std::pair<size_t, std::string>> section_marks;  // item idx, title
  int depth = 0;
  for (auto& t : lr.tokens) {
    if (t.kind == TokKind::Comment) {
      if (depth == 0 && cur.empty()) {
        std::string title = comment_title(t.text);
        if (!title.empty()) section_marks.push_back({items.size(), title});
      }
      continue;
    }
    if (t.kind == TokKind::Punct && (t.text == "(" || t.text == "["))
      ++depth;
    if (t.kind == TokKind::Punct && (t.text == ")" || t.text == "]"))
      --depth;
    if (t.kind == TokKind::Punct && t.text == ";" && depth == 0) {
      if (!cur.empty()) items.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(t);
  }
  if (!cur.empty()) items.push_back(std::move(cur));

  // parse each item
  db.records.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    Record rec;
    rec.index = static_cast<int>(i + 1);
    auto& toks = items[i];
    rec.line0 = toks.front().line;
    rec.line1 = toks.back().line;
    {
      size_t b = toks.front().offset;
      const Token& last = toks.back();
      size_t e = last.offset + last.text.size() +
                 (last.kind == TokKind::Str ? 2 : 0);
      rec.raw = source.substr(b, e - b);
    }
    try {
      rec.payload = parse_expr_tokens(toks, lenient, &rec.quirks);
      rec.kind = RecordKind::Unparsed;
    } catch (const parse_error& pe) {
      if (!lenient) throw;
      rec.kind = RecordKind::Unparsed;
      rec.quirks.push_back({"unparsed", pe.what(), pe.line, pe.col});
      db.records.push_back(std::move(rec));
      continue;
    }
    db.records.push_back(std::move(rec));
  }

  // classify + views
  for (auto& rec : db.records) {
    if (!rec.payload) continue;
    try {
      rec.type = typevec(rec.payload);
    } catch (const incorrect_entry& ie) {
      rec.quirks.push_back({"incorrect-entry", ie.what(), rec.line0, 0});
      rec.kind = RecordKind::Unparsed;
      continue;
    }
    switch (rec.type) {
      case 1: rec.kind = RecordKind::Definition; break;
      case 2: rec.kind = RecordKind::ParamFamily; break;
      default: rec.kind = RecordKind::CfEntry; break;
    }
    build_views(rec);
    if (rec.entry) {
      auto [it, inserted] = db.by_label.insert({rec.entry->label, rec.index});
      if (!inserted)
        rec.quirks.push_back({"duplicate-label", rec.entry->label, rec.line0, 0});
    }
  }

  // stitch lexer quirks onto their records by line
  for (auto& q : db.file_quirks) {
    for (auto& rec : db.records)
      if (q.line >= rec.line0 && q.line <= rec.line1) {
        bool present = false;
        for (auto& rq : rec.quirks)
          if (rq.code == "illegal-char-spliced" || rq.code == "illegal-char-dropped")
            present = true;
        if (!present) rec.quirks.push_back(q);
        break;
      }
  }

  // sections: headings tile the record range; zero-record headings drop
  {
    std::vector<std::pair<size_t, std::string>>& marks = section_marks;
    for (size_t m = 0; m < marks.size(); ++m) {
      size_t first = marks[m].first;
      size_t last = (m + 1 < marks.size()) ? marks[m + 1].first
                                           : db.records.size();
      if (m + 1 < marks.size() && marks[m + 1].first == first) continue;
      if (first >= last) continue;
      db.sections.push_back({marks[m].second, static_cast<int>(first + 1),
                             static_cast<int>(last)});
    }
    for (auto& s : db.sections)
      for (int i = s.first; i <= s.last; ++i)
        db.records[i - 1].section = s.title;
  }
  return db;
}

}  // namespace cfdb
