#ifndef CFDB_TOKEN_HPP
#define CFDB_TOKEN_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cfdb {

enum class TokKind { Integer, Ident, Str, Op, Punct, Comment, Quirk };

struct Token {
  TokKind kind;
  std::string text;
  int line = 0;
  int col = 0;
  // byte offset of the token start in the source
  size_t offset = 0;
};

struct Quirk {
  std::string code;
  std::string detail;
  int line = 0;
  int col = 0;
};

struct lex_error : std::runtime_error {
  lex_error(const std::string& what, int line, int col)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

struct LexResult {
  std::vector<Token> tokens;  // comments included, whitespace dropped
  std::vector<Quirk> quirks;
};

// Tokenize the database dialect.  In lenient mode illegal characters become
// Quirk tokens instead of throwing.
LexResult tokenize(const std::string& source, bool lenient = true);

}  // namespace cfdb

#endif
