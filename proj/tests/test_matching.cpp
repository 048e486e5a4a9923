#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stella/matching.hpp"
#include "stella/pretty.hpp"
#include "stella/subtype.hpp"
#include "support/oracle.hpp"
#include "support/util.hpp"

using namespace stella;
using testutil::T;
using testutil::error_tag;

static const MatchingOptions kPlain{};
static const MatchingOptions kStructural{true, false};

TEST_CASE("pattern_bindings assigns types to pattern variables") {
  BindingSet bs = pattern_bindings(
      pat::variant("value", pat::var("n")),
      T("<| value : Nat, failure : Unit |>"), kPlain);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].first == "n");
  CHECK(type_eq(bs[0].second, T("Nat")));

  bs = pattern_bindings(pat::wildcard(), T("{x : Nat}"), kPlain);
  CHECK(bs.empty());

  bs = pattern_bindings(
      pat::tuple({pat::var("a"), pat::var("b")}), T("{Nat, Bool}"), kPlain);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].first == "a");
  CHECK(type_eq(bs[0].second, T("Nat")));
  CHECK(bs[1].first == "b");
  CHECK(type_eq(bs[1].second, T("Bool")));
}

TEST_CASE("pattern shape must fit the scrutinee type") {
  CHECK(error_tag([&] {
          pattern_bindings(pat::inl(pat::var("a")), T("Nat"), kPlain);
        }) == ErrorTag::ERROR_UNEXPECTED_PATTERN_FOR_TYPE);
  CHECK(error_tag([&] {
          pattern_bindings(pat::variant("oops", pat::var("a")),
                           T("<| value : Nat |>"), kPlain);
        }) == ErrorTag::ERROR_UNEXPECTED_PATTERN_FOR_TYPE);
}

TEST_CASE("nested patterns are gated behind #structural-patterns") {
  PatternPtr nested = pat::succ(pat::succ(pat::var("m")));
  CHECK(error_tag([&] { pattern_bindings(nested, T("Nat"), kPlain); }) ==
        ErrorTag::ERROR_EXTENSION_NOT_ENABLED);
  BindingSet bs = pattern_bindings(nested, T("Nat"), kStructural);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].first == "m");
  CHECK(type_eq(bs[0].second, T("Nat")));
}

TEST_CASE("non-linear patterns are rejected") {
  CHECK(error_tag([&] {
          pattern_bindings(pat::tuple({pat::var("a"), pat::var("a")}),
                           T("{Nat, Nat}"), kPlain);
        }) == ErrorTag::ERROR_DUPLICATE_PATTERN_VARIABLE);
}

TEST_CASE("is_exhaustive ground truths") {
  CHECK(is_exhaustive(T("Nat"), {pat::zero(), pat::succ(pat::var("k"))}));
  CHECK_FALSE(is_exhaustive(T("Nat"), {pat::zero()}));
  CHECK(is_exhaustive(T("Bool"), {pat::ptrue(), pat::pfalse()}));
  CHECK_FALSE(is_exhaustive(T("Bool"), {pat::ptrue()}));
  CHECK(is_exhaustive(T("Unit"), {pat::punit()}));
  CHECK(is_exhaustive(T("Nat + Bool"),
                      {pat::inl(pat::var("a")), pat::inr(pat::var("b"))}));
  CHECK_FALSE(is_exhaustive(T("Nat + Bool"), {pat::inl(pat::var("a"))}));
  CHECK_FALSE(is_exhaustive(T("<| value : Nat, failure : Unit |>"),
                            {pat::variant("value", pat::var("n"))}));
  CHECK(is_exhaustive(T("<| value : Nat, failure : Unit |>"),
                      {pat::variant("value", pat::var("n")),
                       pat::variant("failure", pat::wildcard())}));
  CHECK(is_exhaustive(T("fn(Nat) -> Nat"), {pat::wildcard()}));
  CHECK(is_exhaustive(T("{Nat, Bool}"),
                      {pat::tuple({pat::wildcard(), pat::wildcard()})}));
  CHECK(is_exhaustive(T("[Nat]"),
                      {pat::list({}), pat::cons(pat::var("h"), pat::var("t"))}));
  CHECK_FALSE(is_exhaustive(T("[Nat]"), {pat::list({})}));
}

TEST_CASE("exhaustiveness agrees with the value-enumeration oracle") {
  std::mt19937 rng(271828);
  int checked = 0;
  while (checked < 400) {
    TypePtr t = testoracle::gen_finite_type(rng, 2);
    auto values = testoracle::enumerate_values(t, 64);
    if (!values) continue;
    auto patterns = testoracle::gen_simple_patterns(rng, t);
    if (patterns.empty()) continue;
    bool oracle = true;
    for (const auto& v : *values)
      if (!testoracle::covered(patterns, v)) {
        oracle = false;
        break;
      }
    CAPTURE(stella::type_to_string(t));
    CHECK(is_exhaustive(t, patterns) == oracle);
    ++checked;
  }
}
