#include "doctest.h"

#include "cfdb/token.hpp"
#include "support.hpp"

using namespace cfdb;

TEST_CASE("closure arrow and call") {
  auto lr = tokenize("k->zeta(k)");
  REQUIRE(lr.tokens.size() == 6);
  CHECK(lr.tokens[0].kind == TokKind::Ident);
  CHECK(lr.tokens[1].text == "->");
  CHECK(lr.tokens[2].text == "zeta");
  CHECK(lr.tokens[3].text == "(");
  CHECK(lr.tokens[4].text == "k");
  CHECK(lr.tokens[5].text == ")");
}

TEST_CASE("vector with power operator") {
  auto lr = tokenize("[3,-9*n^2]");
  REQUIRE(lr.tokens.size() == 9);
  CHECK(lr.tokens[0].text == "[");
  CHECK(lr.tokens[2].text == ",");
  CHECK(lr.tokens[3].text == "-9");
  CHECK(lr.tokens[3].kind == TokKind::Integer);
  CHECK(lr.tokens[4].text == "*");
  CHECK(lr.tokens[6].text == "^");
  CHECK(lr.tokens[6].kind == TokKind::Op);
}

TEST_CASE("derivative quotes and factorial") {
  auto lr = tokenize("psi''(z)/2-k!");
  CHECK(lr.tokens[0].text == "psi''");
  CHECK(lr.tokens[0].kind == TokKind::Ident);
  bool has_fact = false;
  for (auto& t : lr.tokens)
    if (t.kind == TokKind::Op && t.text == "!") has_fact = true;
  CHECK(has_fact);
}

TEST_CASE("strings keep raw TeX text") {
  auto lr = tokenize("[\"3\\nmid u\"]");
  REQUIRE(lr.tokens.size() == 3);
  CHECK(lr.tokens[1].kind == TokKind::Str);
  CHECK(lr.tokens[1].text == "3\\nmid u");
}

TEST_CASE("positions cover input") {
  auto lr = tokenize("a+b\n  c*d");
  CHECK(lr.tokens[0].line == 1);
  CHECK(lr.tokens[3].line == 2);
  CHECK(lr.tokens[3].col == 3);
}

TEST_CASE("lenient mode records quirk tokens for illegal characters") {
  auto lr = tokenize("1)\\Gamma(k", true);
  REQUIRE(lr.quirks.size() == 1);
  CHECK(lr.quirks[0].code == "illegal-char");
  CHECK(lr.quirks[0].detail == "\\");
  CHECK_THROWS_AS(tokenize("\\Gamma", false), lex_error);
}

TEST_CASE("unterminated string and comment are fatal") {
  CHECK_THROWS_AS(tokenize("\"abc", true), lex_error);
  CHECK_THROWS_AS(tokenize("/* abc", true), lex_error);
}

TEST_CASE("full database lexes with exactly the known backslash quirk") {
  std::string src = read_data_file();
  auto lr = tokenize(src, true);
  REQUIRE(lr.quirks.size() == 1);
  CHECK(lr.quirks[0].detail == "\\");
  // the defect sits in entry 4.A.2's C closure
  CHECK(lr.quirks[0].line == 1815);
  CHECK(lr.tokens.size() > 100000);
}
