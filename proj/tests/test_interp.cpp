#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stella/harness.hpp"
#include "stella/interp.hpp"
#include "stella/parser.hpp"
#include "support/util.hpp"

using namespace stella;
using testutil::T;

namespace {

Outcome run(const std::string& source, std::uint64_t input,
            InterpOptions opts = {}) {
  Program p = parse_program(source);
  Interpreter interp(p, opts);
  return interp.run_main(val::nat(input));
}

NatValue nat_result(const Outcome& o) {
  REQUIRE(o.kind == Outcome::Kind::Normal);
  REQUIRE(o.value->kind == ValueKind::Nat);
  return o.value->nat;
}

}  // namespace

TEST_CASE("value printing uses surface syntax") {
  CHECK(value_to_string(val::nat(3)) == "3");
  CHECK(value_to_string(val::boolean(true)) == "true");
  CHECK(value_to_string(val::unit()) == "unit");
  CHECK(value_to_string(val::tuple({val::nat(1), val::boolean(false)})) ==
        "{1, false}");
  CHECK(value_to_string(val::record({{"x", val::nat(0)}})) == "{x = 0}");
  CHECK(value_to_string(val::inl(val::nat(2))) == "inl(2)");
  CHECK(value_to_string(val::variant("value", val::nat(1))) ==
        "<| value = 1 |>");
  CHECK(value_to_string(val::list({val::nat(1), val::nat(2)})) == "[1, 2]");
}

TEST_CASE("value equality is structural") {
  CHECK(value_equal(val::nat(5), val::nat(5)));
  CHECK_FALSE(value_equal(val::nat(5), val::nat(6)));
  CHECK(value_equal(val::inl(val::unit()), val::inl(val::unit())));
  CHECK_FALSE(value_equal(val::inl(val::unit()), val::inr(val::unit())));
  CHECK(value_equal(val::record({{"x", val::nat(1)}}),
                    val::record({{"x", val::nat(1)}})));
}

TEST_CASE("arithmetic core") {
  const char* src =
      "language core;\n"
      "fn main(n : Nat) -> Nat { return succ(succ(n)) }\n";
  for (std::uint64_t i = 0; i < 6; ++i)
    CHECK(nat_result(run(src, i)) == i + 2);
}

TEST_CASE("Nat::rec iterates the step function") {
  const char* src =
      "language core;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  return Nat::rec(n, 0,\n"
      "    fn(i : Nat) { return fn(r : Nat) { return succ(succ(r)) } })\n"
      "}\n";
  for (std::uint64_t i = 0; i < 6; ++i)
    CHECK(nat_result(run(src, i)) == 2 * i);
}

TEST_CASE("letrec and fix compute recursive functions") {
  const char* letrec_src =
      "language core;\n"
      "extend with #letrec-bindings, #let-bindings;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  return letrec add3 : fn(Nat) -> Nat =\n"
      "    fn(k : Nat) { return if Nat::iszero(k) then 3 else succ(add3(Nat::pred(k))) }\n"
      "  in add3(n)\n"
      "}\n";
  for (std::uint64_t i = 0; i < 4; ++i)
    CHECK(nat_result(run(letrec_src, i)) == i + 3);

  const char* fix_src =
      "language core;\n"
      "extend with #fixpoint-combinator;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  return fix(fn(rep : fn(Nat) -> Nat) {\n"
      "    return fn(k : Nat) {\n"
      "      return if Nat::iszero(k) then 0 else succ(succ(rep(Nat::pred(k))))\n"
      "    }\n"
      "  })(n)\n"
      "}\n";
  for (std::uint64_t i = 0; i < 4; ++i)
    CHECK(nat_result(run(fix_src, i)) == 2 * i);
}

TEST_CASE("references allocate in a per-run store") {
  const char* src =
      "language core;\n"
      "extend with #references, #sequencing, #let-bindings, #unit-type;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  return let r = new(n) in (r := succ(*r); succ(*r))\n"
      "}\n";
  Program p = parse_program(src);
  Interpreter interp(p, {});
  CHECK(nat_result(interp.run_main(val::nat(3))) == 5);
  CHECK(interp.store().cells.size() == 1);
  // a second run starts from an empty store: no leakage between runs
  CHECK(nat_result(interp.run_main(val::nat(3))) == 5);
  CHECK(interp.store().cells.size() == 1);
}

TEST_CASE("exceptions, panic, and runtime errors as outcomes") {
  Outcome thrown = run(
      "language core;\n"
      "extend with #exceptions, #exception-type-declaration;\n"
      "exception type = Nat\n"
      "fn main(n : Nat) -> Nat { return throw(succ(n)) }\n",
      1);
  CHECK(thrown.kind == Outcome::Kind::Thrown);
  CHECK(value_equal(thrown.value, val::nat(2)));

  Outcome caught = run(
      "language core;\n"
      "extend with #exceptions, #exception-type-declaration;\n"
      "exception type = Nat\n"
      "fn main(n : Nat) -> Nat { return try { throw(n) } catch { k => succ(k) } }\n",
      4);
  CHECK(nat_result(caught) == 5);

  Outcome panicked = run(
      "language core;\nextend with #panic;\n"
      "fn main(n : Nat) -> Nat { return panic! }\n",
      0);
  CHECK(panicked.kind == Outcome::Kind::Panicked);

  Outcome head_of_empty = run(
      "language core;\nextend with #lists, #type-ascriptions;\n"
      "fn main(n : Nat) -> Nat { return List::head([] as [Nat]) }\n",
      0);
  CHECK(head_of_empty.kind == Outcome::Kind::RuntimeError);
}

TEST_CASE("fuel exhaustion escapes as its own exception") {
  const char* src =
      "language core;\n"
      "extend with #fixpoint-combinator;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  return fix(fn(rep : fn(Nat) -> Nat) {\n"
      "    return fn(k : Nat) { return rep(k) }\n"
      "  })(n)\n"
      "}\n";
  InterpOptions opts;
  opts.fuel = 10'000;
  CHECK_THROWS_AS((void)run(src, 0, opts), FuelExhausted);
}

TEST_CASE("evaluation is deterministic across interpreter instances") {
  const char* src =
      "language core;\n"
      "extend with #pairs, #let-bindings;\n"
      "fn main(n : Nat) -> Nat { return let p = {succ(n), n} in p.1 }\n";
  for (std::uint64_t i = 0; i < 4; ++i) {
    Outcome a = run(src, i);
    Outcome b = run(src, i);
    CHECK(value_equal(a.value, b.value));
  }
}

TEST_CASE("type erasure: generics behave like their monomorphized form") {
  const char* generic_src =
      "language core;\nextend with #universal-types;\n"
      "generic fn id[T](x : T) -> T { return x }\n"
      "fn main(x : Nat) -> Nat { return id[Nat](x) }\n";
  const char* mono_src =
      "language core;\n"
      "fn id(x : Nat) -> Nat { return x }\n"
      "fn main(x : Nat) -> Nat { return id(x) }\n";
  for (std::uint64_t i = 0; i < 6; ++i)
    CHECK(nat_result(run(generic_src, i)) == nat_result(run(mono_src, i)));
}

TEST_CASE("runtime cast checks values structurally") {
  CHECK(value_conforms(val::nat(1), T("Nat")));
  CHECK(value_conforms(val::nat(1), T("Top")));
  CHECK_FALSE(value_conforms(val::nat(1), T("Bool")));
  CHECK(value_conforms(val::record({{"x", val::nat(1)}, {"y", val::nat(2)}}),
                       T("{x : Nat}")));
  CHECK_FALSE(value_conforms(val::record({{"y", val::nat(2)}}), T("{x : Nat}")));
  CHECK(value_conforms(val::inl(val::nat(0)), T("Nat + Bool")));
  CHECK_FALSE(value_conforms(val::inl(val::boolean(true)), T("Nat + Bool")));

  Outcome ok = run(
      "language core;\n"
      "extend with #type-cast, #top-type, #structural-subtyping, #type-ascriptions;\n"
      "fn main(n : Nat) -> Nat { return (n as Top) cast as Nat }\n",
      7);
  CHECK(nat_result(ok) == 7);
  Outcome bad = run(
      "language core;\n"
      "extend with #type-cast, #top-type, #structural-subtyping, #type-ascriptions;\n"
      "fn main(n : Nat) -> Bool { return (n as Top) cast as Bool }\n",
      7);
  CHECK(bad.kind == Outcome::Kind::RuntimeError);
}

TEST_CASE("outcome_to_string matches the CLI format") {
  Outcome normal{Outcome::Kind::Normal, val::nat(4), ""};
  CHECK(outcome_to_string(normal) == "4");
  Outcome panicked{Outcome::Kind::Panicked, nullptr, ""};
  CHECK(outcome_to_string(panicked) == "panic!");
  Outcome thrown{Outcome::Kind::Thrown, val::nat(3), ""};
  CHECK(outcome_to_string(thrown) == "uncaught exception: 3");
}
