#include "doctest.h"

#include <set>

#include "cfdb/parser.hpp"
#include "support.hpp"

using namespace cfdb;

TEST_CASE("definition record") {
  auto db = parse_database(
      "R1(k,n)=(n^k*(2*n+1)+(n-1)^k*(2*n-3))/(2*n-1);");
  REQUIRE(db.records.size() == 1);
  auto& r = db.records[0];
  CHECK(r.kind == RecordKind::Definition);
  CHECK(r.type == 1);
  REQUIRE(r.def.has_value());
  CHECK(r.def->name == "R1");
  CHECK(r.def->params == std::vector<std::string>{"k", "n"});
}

TEST_CASE("parametric family record") {
  auto db = parse_database(
      "[[()->Pi,2*k+2,(2*n-1)*(2*n+2*k-4*u-1)],[1,[0,-1,0,k+1]],"
      "\"1.2.1\",[],\"u<=k/2\"];");
  REQUIRE(db.records.size() == 1);
  auto& r = db.records[0];
  CHECK(r.kind == RecordKind::ParamFamily);
  CHECK(r.type == 2);
  REQUIRE(r.family.has_value());
  CHECK(r.family->anchor == "1.2.1");
  CHECK(r.family->info == "u<=k/2");
  CHECK(unparse(r.family->a_poly) == "2*k+2");
}

static const char* kEntry324 =
    "[(z)->cosh(Pi*z),[[1,1/2,4*n^2-8*n+(2*z^2+5)],"
    "[2*z^2,-4*n^4+8*n^3+(-4*z^2-6)*n^2+(4*z^2+2)*n+(-z^2-1/4)]],"
    "[1,[0,1,0,1],(z)->z^2*cosh(Pi*z),"
    "1-1/2*z^2*x+(1/6*z^4-1/6*z^2-1/12)*x^2+(-1/24*z^4+1/6*z^2+1/12)*x^3+O(x^4)],"
    "[[1,4*z^2,[1/2-I*z,1;1/2+I*z,1;3/2,-2],1],"
    " [1,-4*z^2,[-1/2,2;1/2-I*z,-1;1/2+I*z,-1],1]],"
    "[],\"3.2.4\",[\"AP->3.2.5\",\"APD->3.2.4.5\"],\"\"];";

TEST_CASE("cf entry record with series on both sides") {
  auto db = parse_database(kEntry324);
  REQUIRE(db.records.size() == 1);
  auto& r = db.records[0];
  CHECK(r.kind == RecordKind::CfEntry);
  REQUIRE(r.entry.has_value());
  CHECK(r.entry->label == "3.2.4");
  CHECK(r.entry->apery ==
        std::vector<std::string>{"AP->3.2.5", "APD->3.2.4.5"});
  // series field is [S,T]
  REQUIRE(r.entry->series->k == Nk::Vec);
  CHECK(r.entry->series->kids.size() == 2);
  // factor matrix parsed with ';' as row separator
  auto S = r.entry->series->kids[0];
  REQUIRE(S->k == Nk::Vec);
  CHECK(S->kids[2]->k == Nk::Mat);
  CHECK(S->kids[2]->cols == 2);
  CHECK(S->kids[2]->kids.size() == 6);
}

TEST_CASE("matrix semicolon only separates rows inside brackets") {
  auto db = parse_database("[1,[2,3;4,5],6];[7];");
  REQUIRE(db.records.size() == 2);
}

TEST_CASE("typevec exemplars") {
  CHECK(typevec(parse_expr_string("k->zeta(k)")) == 1);
  // five components
  CHECK(typevec(parse_expr_string(
            "[[()->2^(1/3),u,3*n*(3*n+3-u)],[1,[0,-1,0,1/3*u]],\"x\",[],\"\"]")) == 2);
  // 1.5.10: closure in v[2][1]
  CHECK(typevec(parse_expr_string(
            "[k->zeta(k),[k->[0,n^k+(n-1)^k],k->[1,-n^(2*k)]],[1,[0,1,0,k-1],"
            "k->1/(k-1),0],0,[3],\"1.5.10\",[\"NO\",\"NO\"],\"\"]")) == 3);
  // 2.1.0.1: closure as last element of a part
  CHECK(typevec(parse_expr_string(
            "[()->1,[[0,n->f(n)],[n->f(n+1)+1]],[0,0,0,0],0,[],\"2.1.0.1\","
            "[\"NO\",\"NO\"],\"\"]")) == 4);
  // 1.1.6: period 2
  CHECK(typevec(parse_expr_string(
            "[()->2^(1/3),[[[0,5],[2*n,12*n+6]],[[6,-1/3],[-(n+1)*(3*n+2),"
            "-n*(3*n+1)]]],[2,[0,(1+d)^2,0,0],()->1,0],0,[],\"1.1.6\","
            "[\"NO\",\"NO\"],\"\"]")) == 5);
  // 1.1.0.5: plain period 1
  CHECK(typevec(parse_expr_string(
            "[()->3^(1/2),[[3/2,(2*n+1)^2],[2,-n^2*(n+2)^2]],[3,[0,(2+d)^2,0,0],"
            "()->1,0],0,[],\"1.1.0.5\",[\"NO\",\"NO\"],\"\"]")) == 6);
}

TEST_CASE("typevec distributes scalar*vector before shape checks") {
  // v[2][2] written as (z^2-1)*[...] must still read as a vector part
  CHECK(typevec(parse_expr_string(
            "[(z)->z,[[z,3,-2*n+1],(z^2-1)*[-2*z,2*(n+1)*(2*n+1)]],"
            "[1,[0,1,0,1],0,0],0,[],\"t\",[\"NO\",\"NO\"],\"\"]")) == 6);
  CHECK(typevec(parse_expr_string(
            "[(z)->z,[z*[[0,3],[2*n-1,3]],[[18,4],2*[(3*n-1)^3,(3*n+1)^3]]],"
            "[1,[0,1,0,1],0,0],0,[],\"t\",[\"NO\",\"NO\"],\"\"]")) == 5);
  CHECK_THROWS_AS(typevec(parse_expr_string("[1,2,3]")), incorrect_entry);
}

TEST_CASE("unparse round-trips to an identical tree") {
  const char* exprs[] = {
      "k->[0,n^k+(n-1)^k]",
      "1-1/2*z^2*x+(1/6*z^4-1/6*z^2-1/12)*x^2+O(x^4)",
      "sum(j=0,k-2,(-1)^(j+1)*binomial(k,j+2)/j!)",
      "[1/2-I*z,1;1/2+I*z,1;3/2,-2]",
      "-n^(2*k)",
      "airy(z)[1]",
      "intnum(t=z,[oo,1],exp(-t)/t^nu)",
      "(z)->exp(Pi*z/2)",
  };
  for (auto* s : exprs) {
    Expr e = parse_expr_string(s);
    Expr e2 = parse_expr_string(unparse(e));
    CAPTURE(s);
    CAPTURE(unparse(e));
    CHECK(expr_eq(e, e2));
  }
}

TEST_CASE("full database parses to the expected shape") {
  auto db = parse_database(read_data_file());
  CHECK(db.records.size() == 1779);

  int defs = 0;
  for (auto& r : db.records)
    if (r.kind == RecordKind::Definition) ++defs;
  CHECK(defs == 45);
  for (int i = 1; i <= 45; ++i)
    CHECK(db.records[i - 1].kind == RecordKind::Definition);

  // section index: contiguous, covering, first section exact
  REQUIRE(!db.sections.empty());
  CHECK(db.sections.front().title == "Definitions");
  CHECK(db.sections.front().first == 1);
  CHECK(db.sections.front().last == 45);
  int expect = 1;
  for (auto& s : db.sections) {
    CHECK(s.first == expect);
    expect = s.last + 1;
  }
  CHECK(expect == 1780);

  auto sec2 = db.sections[1];
  CHECK(sec2.title == "Constants: $2^{1/3}$");
  CHECK(sec2.first == 46);
  CHECK(sec2.last == 82);
  CHECK(db.sections[2].first == 83);
  CHECK(db.sections[2].last == 217);

  // every record classifies; no unparsed leftovers
  for (auto& r : db.records) {
    CAPTURE(r.index);
    CHECK(r.kind != RecordKind::Unparsed);
    CHECK(r.type >= 1);
    CHECK(r.type <= 6);
  }

  // label table: duplicates are exactly the two documented ones
  std::set<std::string> dups;
  for (auto& r : db.records)
    for (auto& q : r.quirks)
      if (q.code == "duplicate-label") dups.insert(q.detail);
  CHECK(dups == std::set<std::string>{"1.2.7", "5.1.6"});

  // quirk records stay within the documented ledger
  std::set<int> quirky;
  for (auto& r : db.records)
    if (!r.quirks.empty()) quirky.insert(r.index);
  CHECK(quirky.size() <= 10);

  // the `\Gamma` defect lands on entry 4.A.2
  const Record* g = db.find_label("4.A.2");
  REQUIRE(g != nullptr);
  bool spliced = false;
  for (auto& q : g->quirks)
    if (q.code == "illegal-char-spliced") spliced = true;
  CHECK(spliced);

  // documented three-component v[3] defects
  for (const char* lab : {"1.6.44.7", "4.1.14.EA", "3.3.5.5"}) {
    const Record* r = db.find_label(lab);
    REQUIRE(r != nullptr);
    bool found = false;
    for (auto& q : r->quirks)
      if (q.code == "v3-three-components") found = true;
    CAPTURE(lab);
    CHECK(found);
  }

  // type census pinned (guards against classification drift)
  int census[7] = {0};
  for (auto& r : db.records) census[r.type]++;
  CHECK(census[1] == 45);
  CHECK(census[2] == 608);
  CHECK(census[3] == 23);
  CHECK(census[4] == 11);
  CHECK(census[5] == 194);
  CHECK(census[6] == 898);
}

TEST_CASE("database round-trip through unparse") {
  auto db = parse_database(read_data_file());
  for (auto& r : db.records) {
    if (!r.payload) continue;
    Expr back = parse_expr_string(unparse(r.payload));
    CAPTURE(r.index);
    REQUIRE(expr_eq(r.payload, back));
  }
}
