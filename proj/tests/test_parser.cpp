#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stella/harness.hpp"
#include "stella/parser.hpp"
#include "stella/pretty.hpp"
#include "support/util.hpp"

using namespace stella;
using testutil::E;
using testutil::T;

TEST_CASE("program header and pragmas") {
  Program p = parse_program(
      "language core;\n"
      "extend with #unit-type, #references;\n"
      "fn main(n : Nat) -> Nat { return n }\n");
  CHECK(p.language == "core");
  REQUIRE(p.extensions.size() == 2);
  CHECK(p.extensions[0] == "#unit-type");
  CHECK(p.has_extension("#references"));
  REQUIRE(p.decls.size() == 1);
  CHECK(p.decls[0]->name == "main");
  CHECK(p.decls[0]->params.size() == 1);
  CHECK(p.decls[0]->type->kind == TypeKind::Nat);
}

TEST_CASE("expression forms parse to the right constructors") {
  CHECK(E("succ(0)")->kind == ExprKind::Succ);
  CHECK(E("if b then 0 else succ(0)")->kind == ExprKind::If);
  CHECK(E("fn(x : Nat) { return x }")->kind == ExprKind::Abstraction);
  CHECK(E("f(x, y)")->kind == ExprKind::Application);
  CHECK(E("f[Nat]")->kind == ExprKind::TypeApplication);
  CHECK(E("{0, true}")->kind == ExprKind::Tuple);
  CHECK(E("p.1")->kind == ExprKind::TupleProj);
  CHECK(E("{x = 0}")->kind == ExprKind::Record);
  CHECK(E("r.x")->kind == ExprKind::RecordProj);
  CHECK(E("inl(0)")->kind == ExprKind::Inl);
  CHECK(E("<| value = 0 |>")->kind == ExprKind::Variant);
  CHECK(E("[0, succ(0)]")->kind == ExprKind::ListLit);
  CHECK(E("cons(0, xs)")->kind == ExprKind::ConsList);
  CHECK(E("match x { inl(a) => a | inr(b) => b }")->kind == ExprKind::Match);
  CHECK(E("let x = 0 in x")->kind == ExprKind::Let);
  CHECK(E("letrec f : Nat = 0 in f")->kind == ExprKind::LetRec);
  CHECK(E("x as Nat")->kind == ExprKind::Ascription);
  CHECK(E("x cast as Nat")->kind == ExprKind::CastAs);
  CHECK(E("unit; 0")->kind == ExprKind::Sequence);
  CHECK(E("new(0)")->kind == ExprKind::NewRef);
  CHECK(E("*r")->kind == ExprKind::Deref);
  CHECK(E("r := 0")->kind == ExprKind::Assign);
  CHECK(E("panic!")->kind == ExprKind::Panic);
  CHECK(E("throw(0)")->kind == ExprKind::Throw);
  CHECK(E("try { x } with { y }")->kind == ExprKind::TryWith);
  CHECK(E("try { x } catch { inl(a) => a }")->kind == ExprKind::TryCatch);
  CHECK(E("fix(f)")->kind == ExprKind::Fix);
  CHECK(E("fold [T] e")->kind == ExprKind::Fold);
  CHECK(E("unfold [T] e")->kind == ExprKind::Unfold);
  CHECK(E("Nat::rec(n, z, s)")->kind == ExprKind::NatRec);
  CHECK(E("Nat::iszero(n)")->kind == ExprKind::NatIsZero);
  CHECK(E("List::head(xs)")->kind == ExprKind::ListHead);
  CHECK(E("42")->kind == ExprKind::NatLit);
}

TEST_CASE("type forms parse to the right constructors") {
  CHECK(T("Nat")->kind == TypeKind::Nat);
  CHECK(T("Bool")->kind == TypeKind::Bool);
  CHECK(T("Unit")->kind == TypeKind::Unit);
  CHECK(T("Top")->kind == TypeKind::Top);
  CHECK(T("Bot")->kind == TypeKind::Bot);
  CHECK(T("fn(Nat, Bool) -> Nat")->kind == TypeKind::Fn);
  CHECK(T("{Nat, Bool}")->kind == TypeKind::Tuple);
  CHECK(T("{x : Nat}")->kind == TypeKind::Record);
  CHECK(T("Nat + Bool")->kind == TypeKind::Sum);
  CHECK(T("<| value : Nat |>")->kind == TypeKind::Variant);
  CHECK(T("[Nat]")->kind == TypeKind::List);
  CHECK(T("&Nat")->kind == TypeKind::Ref);
  CHECK(T("forall X. fn(X) -> X")->kind == TypeKind::Forall);
  CHECK(T("rec L. Unit + L")->kind == TypeKind::Mu);
  CHECK(T("auto")->kind == TypeKind::Meta);
  CHECK(T("MyAlias")->kind == TypeKind::Var);
}

TEST_CASE("operator structure") {
  // arrow is right-associative
  TypePtr t = T("fn(Nat) -> fn(Bool) -> Nat");
  REQUIRE(t->kind == TypeKind::Fn);
  CHECK(t->inner->kind == TypeKind::Fn);
  // application binds tighter than ascription
  ExprPtr e = E("f(x) as Nat");
  REQUIRE(e->kind == ExprKind::Ascription);
  CHECK(e->args[0]->kind == ExprKind::Application);
  // sequence is right-nested
  ExprPtr s = E("a; b; c");
  REQUIRE(s->kind == ExprKind::Sequence);
  CHECK(s->args[1]->kind == ExprKind::Sequence);
}

TEST_CASE("spans point into the source") {
  Program p = parse_program(
      "language core;\n\nfn main(n : Nat) -> Nat {\n  return succ(n)\n}\n");
  CHECK(p.decls[0]->span.line == 3);
  CHECK(p.decls[0]->body->span.line == 4);
}

TEST_CASE("malformed input raises ParseException") {
  CHECK_THROWS_AS(parse_program("fn main"), ParseException);
  CHECK_THROWS_AS(parse_program("language core; fn main( { }"), ParseException);
  CHECK_THROWS_AS((void)E("succ("), ParseException);
  CHECK_THROWS_AS((void)E("let = 0 in x"), ParseException);
  CHECK_THROWS_AS((void)T("fn(Nat -> Nat"), ParseException);
  try {
    parse_program("language core;\nfn main(n : Nat -> Nat { return n }");
    FAIL("expected a parse error");
  } catch (const ParseException& err) {
    CHECK(err.error().span.line >= 1);
  }
}

TEST_CASE("nested function declarations") {
  Program p = parse_program(
      "language core;\n"
      "extend with #nested-function-declarations;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  fn helper(k : Nat) -> Nat { return succ(k) }\n"
      "  return helper(n)\n"
      "}\n");
  REQUIRE(p.decls.size() == 1);
  CHECK(p.decls[0]->nested.size() == 1);
  CHECK(p.decls[0]->nested[0]->name == "helper");
}

TEST_CASE("pretty-printed output reparses to an equal program") {
  const char* sources[] = {
      "language core;\nfn main(n : Nat) -> Nat { return succ(n) }",
      "language core;\nextend with #pairs, #records;\n"
      "fn main(n : Nat) -> Nat { return {a = {n, n}}.a.2 }",
      "language core;\nextend with #sum-types, #unit-type;\n"
      "fn main(n : Nat) -> Nat {"
      " return match (inl(n) as Nat + Unit) { inl(k) => k | inr(u) => 0 } }",
  };
  for (const char* src : sources) {
    Program p = parse_program(src);
    Program q = parse_program(pretty_print(p));
    CHECK(program_equal(p, q));
  }
}

TEST_CASE("parse-pretty round trip over the conformance corpus") {
  namespace fs = std::filesystem;
  int count = 0;
  for (const auto& entry : fs::recursive_directory_iterator(STELLA_CORPUS_DIR)) {
    if (entry.path().extension() != ".stella") continue;
    ++count;
    CAPTURE(entry.path().string());
    Program p = parse_program(read_file(entry.path()));
    std::string printed = pretty_print(p);
    Program q = parse_program(printed);
    CHECK(program_equal(p, q));
    // printing is a fixed point after one round
    CHECK(pretty_print(q) == printed);
  }
  CHECK(count >= 70);
}
