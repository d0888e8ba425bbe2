#ifndef CFDB_PARSER_HPP
#define CFDB_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfdb/ast.hpp"
#include "cfdb/token.hpp"

namespace cfdb {

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line, int col)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

enum class RecordKind { Definition, ParamFamily, CfEntry, Unparsed };

struct DefinitionView {
  std::string name;
  std::vector<std::string> params;
  Expr body;
};

// v[3] = [d,[F,E,D,P],C,A]
struct ConvView {
  Expr d;     // radicand (1 = no quadratic extension)
  Expr fedp;  // 4-vector, 0, [0,0,0,0], or a closure yielding the 4-vector
  Expr c;     // closure or 0; null when the field was absent (3-component v[3])
  Expr a;     // truncated expansion in x or y, 0, or 1
};

struct CfEntryView {
  Expr limit;
  Expr ab;  // [a,b]
  ConvView conv;
  Expr series;  // 0, S, [S,T], [[],T]
  Expr test;    // v[5]
  std::string label;
  std::vector<std::string> apery;
  std::string info;
};

struct ParamFamilyView {
  Expr limit;
  Expr a_poly;
  Expr b_poly;
  Expr d;
  Expr fedp;
  std::string anchor;
  Expr test;
  std::string info;
};

struct Record {
  int index = 0;  // 1-based position in the file
  RecordKind kind = RecordKind::Unparsed;
  int type = 0;   //six-type classification, 0 when not classified
  Expr payload;   // whole parsed value (null for Unparsed)
  std::optional<DefinitionView> def;
  std::optional<CfEntryView> entry;
  std::optional<ParamFamilyView> family;
  std::string section;
  std::vector<Quirk> quirks;
  int line0 = 0, line1 = 0;
  std::string raw;
};

struct SectionInfo {
  std::string title;
  int first = 0, last = 0;  // 1-based inclusive record range
};

struct Database {
  std::vector<Record> records;
  std::vector<SectionInfo> sections;
  std::map<std::string, int> by_label;        // CF entry label -> index
  std::map<std::string, int> family_by_anchor_first;  // anchor -> first family index
  std::vector<Quirk> file_quirks;             // lexer-level quirks
  const Record* find_label(const std::string& label) const;
  std::vector<int> families_for(const std::string& anchor) const;
};

// Parse one expression from a token range (no trailing tokens allowed).
Expr parse_expr_tokens(const std::vector<Token>& toks, bool lenient,
                       std::vector<Quirk>* quirks);
Expr parse_expr_string(const std::string& text);

// Classify a parsed top-level payload by the six-type scheme.
// Scalar*vector products distribute before shape inspection.  Throws
// incorrect_entry on malformed shapes.
struct incorrect_entry : std::runtime_error {
  using std::runtime_error::runtime_error;
};
int typevec(const Expr& payload);

Database parse_database(const std::string& source, bool lenient = true);

}  // namespace cfdb

#endif
