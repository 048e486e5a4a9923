#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stella/pretty.hpp"
#include "stella/reconstruct.hpp"
#include "stella/subtype.hpp"
#include "support/gen.hpp"
#include "support/util.hpp"

using namespace stella;
using testutil::Ctx;
using testutil::E;
using testutil::T;
using testutil::error_tag;

TEST_CASE("unify solves simple systems") {
  Substitution s = unify({{ty::meta(1), T("Nat"), {}}});
  CHECK(type_eq(apply_substitution(ty::meta(1), s), T("Nat")));

  s = unify({{ty::fn({ty::meta(1)}, T("Bool")), ty::fn({T("Nat")}, ty::meta(2)), {}}});
  CHECK(type_eq(apply_substitution(ty::meta(1), s), T("Nat")));
  CHECK(type_eq(apply_substitution(ty::meta(2), s), T("Bool")));
}

TEST_CASE("unify follows metavariable chains") {
  Substitution s = unify({{ty::meta(1), ty::meta(2), {}},
                          {ty::meta(2), T("Bool"), {}}});
  CHECK(type_eq(apply_substitution(ty::meta(1), s), T("Bool")));
  // repeated application is a fixed point
  for (const auto& [id, t] : s) {
    TypePtr once = apply_substitution(t, s);
    CHECK(type_eq(apply_substitution(once, s), once));
  }
}

TEST_CASE("unify rejects clashes and cycles") {
  CHECK(error_tag([] { unify({{T("Nat"), T("Bool"), {}}}); }) ==
        ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION);
  CHECK(error_tag([] {
          unify({{ty::meta(1), ty::fn({ty::meta(1)}, T("Nat")), {}}});
        }) == ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE);
  CHECK(error_tag([] {
          unify({{ty::meta(1), ty::list(ty::meta(2)), {}},
                 {ty::meta(2), ty::list(ty::meta(1)), {}}});
        }) == ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE);
}

TEST_CASE("apply_substitution") {
  Substitution s{{1, T("Nat")}};
  CHECK(type_eq(apply_substitution(T("fn(auto) -> auto"), s),
                apply_substitution(T("fn(auto) -> auto"), s)));
  CHECK(type_eq(apply_substitution(ty::fn({ty::meta(1)}, ty::meta(1)), s),
                T("fn(Nat) -> Nat")));
  CHECK(type_eq(apply_substitution(T("Bool"), {}), T("Bool")));
  CHECK(contains_meta(ty::list(ty::meta(3))));
  CHECK_FALSE(contains_meta(T("fn(Nat) -> [Bool]")));
}

TEST_CASE("constraint generation mirrors the typing rules") {
  Ctx ctx({"#type-reconstruction"});
  auto [t1, c1] = ctx.tc->generate_constraints(E("fn(x : auto) { return succ(x) }"));
  REQUIRE(t1->kind == TypeKind::Fn);
  CHECK(t1->params[0]->kind == TypeKind::Meta);
  CHECK(t1->inner->kind == TypeKind::Nat);
  Substitution s = unify(c1);
  CHECK(type_eq(apply_substitution(t1, s), T("fn(Nat) -> Nat")));

  Ctx ctx2({"#type-reconstruction"});
  auto [t2, c2] = ctx2.tc->generate_constraints(E("fn(x : auto) { return x }"));
  REQUIRE(t2->kind == TypeKind::Fn);
  CHECK(type_eq(t2->params[0], t2->inner));
  CHECK(unify(c2).empty());
}

TEST_CASE("conflicting branches are unsolvable") {
  Ctx ctx({"#type-reconstruction"});
  ctx.bind("x", "Bool");
  auto [t, cs] = ctx.tc->generate_constraints(E("if x then 0 else false"));
  (void)t;
  CHECK(error_tag([&] { unify(cs); }) ==
        ErrorTag::ERROR_UNEXPECTED_TYPE_FOR_EXPRESSION);
}

TEST_CASE("whole-program reconstruction") {
  testutil::accept_program(
      "language core;\nextend with #type-reconstruction;\n"
      "fn inc(x : auto) -> auto { return succ(x) }\n"
      "fn main(n : Nat) -> Nat { return inc(inc(n)) }\n");
  CHECK(testutil::program_error(
            "language core;\nextend with #type-reconstruction;\n"
            "fn selfapply(f : auto) -> auto { return f(f) }\n"
            "fn main(n : Nat) -> Nat { return n }\n") ==
        ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE);
}

namespace {

// A type template whose leaves may be metavariables M1..Mk.
TypePtr gen_template(std::mt19937& rng, int depth, int k) {
  auto roll = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth <= 0 || roll(100) < 30)
    return ty::meta(1 + roll(k));
  switch (roll(6)) {
    case 0: return ty::nat();
    case 1: return ty::boolean();
    case 2:
      return ty::fn({gen_template(rng, depth - 1, k)},
                    gen_template(rng, depth - 1, k));
    case 3:
      return ty::sum(gen_template(rng, depth - 1, k),
                     gen_template(rng, depth - 1, k));
    case 4: return ty::list(gen_template(rng, depth - 1, k));
    default:
      return ty::tuple({gen_template(rng, depth - 1, k),
                        gen_template(rng, depth - 1, k)});
  }
}

TypePtr instantiate(const TypePtr& t, const Substitution& ground) {
  return apply_substitution(t, ground);
}

}  // namespace

TEST_CASE("property: solvable systems built from a ground substitution") {
  std::mt19937 rng(9001);
  for (int iter = 0; iter < 1000; ++iter) {
    int k = 1 + static_cast<int>(rng() % 4);
    Substitution ground;
    for (int i = 1; i <= k; ++i)
      ground[i] = testgen::gen_type(rng, 2);
    std::vector<Constraint> cs;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) {
      TypePtr templ = gen_template(rng, 3, k);
      cs.push_back({templ, instantiate(templ, ground), {}});
    }
    Substitution sol = unify(cs);
    for (const auto& c : cs) {
      TypePtr l = apply_substitution(c.left, sol);
      TypePtr r = apply_substitution(c.right, sol);
      CAPTURE(type_to_string(c.left));
      CAPTURE(type_to_string(c.right));
      CHECK(type_eq(l, r));
      CHECK_FALSE(contains_meta(r));
    }
    // the solution never contains a cycle: application reaches a fixed point
    for (const auto& [id, t] : sol) {
      TypePtr once = apply_substitution(t, sol);
      CHECK(type_eq(apply_substitution(once, sol), once));
    }
  }
}

TEST_CASE("property: occurs violations are always rejected") {
  std::mt19937 rng(9002);
  for (int iter = 0; iter < 200; ++iter) {
    // wrap M1 in one to three constructors, then demand M1 equal the wrap
    TypePtr t = ty::meta(1);
    int wraps = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < wraps; ++i) {
      switch (rng() % 3) {
        case 0: t = ty::list(t); break;
        case 1: t = ty::fn({t}, ty::nat()); break;
        default: t = ty::sum(t, ty::boolean()); break;
      }
    }
    CHECK(error_tag([&] { unify({{ty::meta(1), t, {}}}); }) ==
          ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE);
  }
}
