#include "cfdb/token.hpp"

#include <cctype>

namespace cfdb {

namespace {
bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_cont(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
}  // namespace

LexResult tokenize(const std::string& src, bool lenient) {
  LexResult out;
  size_t i = 0, n = src.size();
  int line = 1, col = 1;
  auto advance = [&](size_t to) {
    for (; i < to; ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](TokKind k, size_t begin, size_t end, int l, int c) {
    out.tokens.push_back({k, src.substr(begin, end - begin), l, c, begin});
  };
  while (i < n) {
    char c = src[i];
    int l0 = line, c0 = col;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(i + 1);
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      size_t j = src.find("*/", i + 2);
      if (j == std::string::npos)
        throw lex_error("unterminated comment", l0, c0);
      push(TokKind::Comment, i, j + 2, l0, c0);
      advance(j + 2);
      continue;
    }
    if (c == '"') {
      // raw text between quotes; backslashes are TeX fragments, kept verbatim
      size_t j = i + 1;
      while (j < n && src[j] != '"') ++j;
      if (j >= n) throw lex_error("unterminated string", l0, c0);
      out.tokens.push_back(
          {TokKind::Str, src.substr(i + 1, j - i - 1), l0, c0, i});
      advance(j + 1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      push(TokKind::Integer, i, j, l0, c0);
      advance(j);
      continue;
    }
    if (c == '-' && i + 1 < n &&
        std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
      // a minus directly followed by digits is a negative literal whenever
      // the previous token cannot end an expression
      const Token* prev = nullptr;
      for (auto it = out.tokens.rbegin(); it != out.tokens.rend(); ++it)
        if (it->kind != TokKind::Comment) {
          prev = &*it;
          break;
        }
      bool literal = !prev;
      if (prev) {
        if (prev->kind == TokKind::Op && prev->text != "!")
          literal = true;
        else if (prev->kind == TokKind::Punct &&
                 (prev->text == "(" || prev->text == "[" ||
                  prev->text == "," || prev->text == ";"))
          literal = true;
      }
      if (literal) {
        size_t j = i + 1;
        while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        push(TokKind::Integer, i, j, l0, c0);
        advance(j);
        continue;
      }
    }
    if (ident_start(c)) {
      size_t j = i;
      while (j < n && ident_cont(src[j])) ++j;
      while (j < n && src[j] == '\'') ++j;  // psi', psi'', airyA'
      push(TokKind::Ident, i, j, l0, c0);
      advance(j);
      continue;
    }
    if (c == '-' && i + 1 < n && src[i + 1] == '>') {
      push(TokKind::Op, i, i + 2, l0, c0);
      advance(i + 2);
      continue;
    }
    if (c == '=' && i + 1 < n && src[i + 1] == '=') {
      push(TokKind::Op, i, i + 2, l0, c0);
      advance(i + 2);
      continue;
    }
    if (std::string("+-*/^=!").find(c) != std::string::npos) {
      push(TokKind::Op, i, i + 1, l0, c0);
      advance(i + 1);
      continue;
    }
    if (std::string("()[],;").find(c) != std::string::npos) {
      push(TokKind::Punct, i, i + 1, l0, c0);
      advance(i + 1);
      continue;
    }
    if (!lenient)
      throw lex_error(std::string("illegal character '") + c + "'", l0, c0);
    out.tokens.push_back({TokKind::Quirk, std::string(1, c), l0, c0, i});
    out.quirks.push_back({"illegal-char", std::string(1, c), l0, c0});
    advance(i + 1);
  }
  return out;
}

}  // namespace cfdb
