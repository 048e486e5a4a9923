#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <string>

#include "stella/interp.hpp"
#include "stella/parser.hpp"
#include "stella/pretty.hpp"
#include "stella/subtype.hpp"
#include "stella/typecheck.hpp"

namespace {

// A mid-sized program exercising records, sums, matches, and recursion.
std::string make_source(int functions) {
  std::ostringstream out;
  out << "language core;\n"
      << "extend with #records, #sum-types, #let-bindings, #unit-type,\n"
      << "  #type-ascriptions;\n";
  for (int i = 0; i < functions; ++i) {
    out << "fn helper" << i << "(r : {x : Nat, y : Nat}) -> Nat {\n"
        << "  return let s = (if Nat::iszero(r.x) then inl(r.y) else inr(r.x))"
        << " as Nat + Nat\n"
        << "  in match s { inl(a) => succ(a) | inr(b) => b }\n"
        << "}\n";
  }
  out << "fn main(n : Nat) -> Nat {\n  return helper0({x = n, y = n})\n}\n";
  return out.str();
}

void BM_Parse(benchmark::State& state) {
  std::string src = make_source(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stella::parse_program(src));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(src.size()));
}
BENCHMARK(BM_Parse)->Arg(1)->Arg(16)->Arg(64);

void BM_Typecheck(benchmark::State& state) {
  stella::Program p =
      stella::parse_program(make_source(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    stella::typecheck_program(p);
  }
}
BENCHMARK(BM_Typecheck)->Arg(1)->Arg(16)->Arg(64);

void BM_PrettyRoundTrip(benchmark::State& state) {
  stella::Program p = stella::parse_program(make_source(16));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stella::parse_program(stella::pretty_print(p)));
  }
}
BENCHMARK(BM_PrettyRoundTrip);

void BM_Interpret(benchmark::State& state) {
  stella::Program p = stella::parse_program(
      "language core;\n"
      "fn main(n : Nat) -> Nat {\n"
      "  return Nat::rec(n, 0,\n"
      "    fn(i : Nat) { return fn(r : Nat) { return succ(r) } })\n"
      "}\n");
  stella::Interpreter interp(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        interp.run_main(stella::val::nat(state.range(0))));
  }
}
BENCHMARK(BM_Interpret)->Arg(10)->Arg(1000);

void BM_Subtype(benchmark::State& state) {
  stella::TypePtr wide = stella::parse_type(
      "{a : {x : Nat, y : Nat}, b : fn({x : Nat, y : Nat}) -> Top,"
      " c : <| l : Nat |>}");
  stella::TypePtr narrow = stella::parse_type(
      "{a : {x : Nat}, b : fn({x : Nat, y : Nat, z : Nat}) -> Top,"
      " c : <| l : Nat, m : Bool |>}");
  for (auto _ : state) {
    benchmark::DoNotOptimize(stella::is_subtype(wide, narrow));
  }
}
BENCHMARK(BM_Subtype);

}  // namespace

BENCHMARK_MAIN();
