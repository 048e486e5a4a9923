// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "stella/harness.hpp"
#include "stella/interp.hpp"
#include "stella/matching.hpp"
#include "stella/parser.hpp"
#include "stella/poly.hpp"
#include "stella/pretty.hpp"
#include "stella/reconstruct.hpp"
#include "stella/subtype.hpp"
#include "stella/typecheck.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

namespace fs = std::filesystem;
using namespace stella;

namespace {

const fs::path kCorpus = STELLA_CORPUS_DIR;

const char* kListings[] = {
    "increment_twice.stella",    "exceptions_fail.stella",
    "subtyping_records.stella",  "subtyping_variants.stella",
    "generic_id.stella",         "generic_const.stella",
    "self_application.stella",
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool check_ok(const std::string& source) {
  try {
    typecheck_program(parse_program(source));
    return true;
  } catch (...) {
    return false;
  }
}

Outcome run_nat(const Program& p, std::uint64_t input) {
  return eval_program(p, val::nat(input));
}

// --- criterion 1: the reference listings parse and typecheck quickly -------

bool criterion_listings() {
  auto start = std::chrono::steady_clock::now();
  for (const char* name : kListings) {
    std::string src = read_file(kCorpus / "well-typed" / name);
    if (!check_ok(src)) {
      std::fprintf(stderr, "  listing failed to typecheck: %s\n", name);
      return false;
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    std::fprintf(stderr, "  listings took %.3fs (budget 1s)\n", elapsed);
    return false;
  }
  return true;
}

// --- criterion 2: run semantics of the four executable listings ------------

bool criterion_run_semantics() {
  Program fig1 =
      parse_program(read_file(kCorpus / "well-typed/increment_twice.stella"));
  Program fig2 =
      parse_program(read_file(kCorpus / "well-typed/exceptions_fail.stella"));
  Program fig5 =
      parse_program(read_file(kCorpus / "well-typed/generic_id.stella"));
  Program fig6 =
      parse_program(read_file(kCorpus / "well-typed/generic_const.stella"));
  for (std::uint64_t n = 0; n <= 5; ++n) {
    Outcome o1 = run_nat(fig1, n);
    if (o1.kind != Outcome::Kind::Normal ||
        !value_equal(o1.value, val::nat(NatValue(n) + 3)))
      return false;
    Outcome o2 = run_nat(fig2, n);
    if (o2.kind != Outcome::Kind::Normal ||
        !value_equal(o2.value, val::boolean(false)))
      return false;
    Outcome o5 = run_nat(fig5, n);
    if (o5.kind != Outcome::Kind::Normal ||
        !value_equal(o5.value, val::nat(NatValue(n))))
      return false;
    Outcome o6 = run_nat(fig6, n);
    if (o6.kind != Outcome::Kind::Normal ||
        !value_equal(o6.value, val::nat(NatValue(n))))
      return false;
  }
  return true;
}

// --- criterion 3: subtype ground truths and pragma sensitivity -------------

std::string drop_pragma(std::string src, const std::string& ext) {
  for (const std::string needle :
       {", " + ext, ext + ", ", ext}) {
    auto pos = src.find(needle);
    if (pos != std::string::npos) {
      src.erase(pos, needle.size());
      return src;
    }
  }
  return src;
}

bool criterion_subtype_truths() {
  TypePtr wide = ty::record({{"x", ty::nat()}, {"y", ty::nat()}});
  TypePtr narrow = ty::record({{"x", ty::nat()}});
  if (!is_subtype(wide, narrow) || is_subtype(narrow, wide)) return false;

  TypePtr small = ty::variant({{"value", ty::nat()}});
  TypePtr big = ty::variant({{"value", ty::nat()}, {"failure", ty::unit()}});
  if (!is_subtype(small, big) || is_subtype(big, small)) return false;

  // deleting the pragma must flip the verdict of both subtyping listings
  for (const char* name :
       {"subtyping_records.stella", "subtyping_variants.stella"}) {
    std::string src = read_file(kCorpus / "well-typed" / name);
    if (!check_ok(src)) return false;
    std::string stripped = drop_pragma(src, "#structural-subtyping");
    if (stripped == src || check_ok(stripped)) return false;
  }
  return true;
}

// --- criterion 4: property suites within the time budget -------------------

bool property_subtype(std::mt19937& rng) {
  for (int i = 0; i < 1000; ++i) {
    TypePtr t = testgen::gen_type(rng, 4);
    if (!is_subtype(t, t)) return false;
  }
  for (int i = 0; i < 1000; ++i) {
    TypePtr a = testgen::gen_type(rng, 3);
    TypePtr b = testgen::gen_super(rng, a);
    TypePtr c = testgen::gen_super(rng, b);
    if (!is_subtype(a, b) || !is_subtype(b, c) || !is_subtype(a, c))
      return false;
  }
  return true;
}

bool property_exhaustiveness(std::mt19937& rng) {
  int checked = 0;
  while (checked < 300) {
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
    if (is_exhaustive(t, patterns) != oracle) return false;
    ++checked;
  }
  return true;
}

TypePtr meta_template(std::mt19937& rng, int depth, int k) {
  auto roll = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth <= 0 || roll(100) < 30) return ty::meta(1 + roll(k));
  switch (roll(5)) {
    case 0: return ty::nat();
    case 1:
      return ty::fn({meta_template(rng, depth - 1, k)},
                    meta_template(rng, depth - 1, k));
    case 2:
      return ty::sum(meta_template(rng, depth - 1, k),
                     meta_template(rng, depth - 1, k));
    case 3: return ty::list(meta_template(rng, depth - 1, k));
    default:
      return ty::tuple({meta_template(rng, depth - 1, k),
                        meta_template(rng, depth - 1, k)});
  }
}

bool property_unification(std::mt19937& rng) {
  for (int iter = 0; iter < 1000; ++iter) {
    int k = 1 + static_cast<int>(rng() % 4);
    Substitution ground;
    for (int i = 1; i <= k; ++i) ground[i] = testgen::gen_type(rng, 2);
    std::vector<Constraint> cs;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < n; ++j) {
      TypePtr templ = meta_template(rng, 3, k);
      cs.push_back({templ, apply_substitution(templ, ground), {}});
    }
    try {
      Substitution sol = unify(cs);
      for (const auto& c : cs)
        if (!type_eq(apply_substitution(c.left, sol),
                     apply_substitution(c.right, sol)))
          return false;
    } catch (const TypeError&) {
      return false;
    }
  }
  for (int iter = 0; iter < 100; ++iter) {
    TypePtr t = ty::list(ty::meta(1));
    for (unsigned i = 0, wraps = rng() % 3; i < wraps; ++i)
      t = ty::fn({t}, ty::nat());
    try {
      unify({{ty::meta(1), t, {}}});
      return false;
    } catch (const TypeError& e) {
      if (e.diagnostic().tag != ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE)
        return false;
    }
  }
  return true;
}

TypePtr gen_poly_type(std::mt19937& rng, int depth) {
  static const char* vars[] = {"A", "B", "C", "X", "Y"};
  auto roll = [&](int n) { return static_cast<int>(rng() % n); };
  if (depth <= 0) return roll(2) == 0 ? ty::nat() : ty::var(vars[roll(5)]);
  switch (roll(6)) {
    case 0: return ty::var(vars[roll(5)]);
    case 1:
      return ty::fn({gen_poly_type(rng, depth - 1)},
                    gen_poly_type(rng, depth - 1));
    case 2:
      return ty::sum(gen_poly_type(rng, depth - 1),
                     gen_poly_type(rng, depth - 1));
    case 3: return ty::forall({vars[roll(5)]}, gen_poly_type(rng, depth - 1));
    case 4: return ty::mu(vars[roll(5)], gen_poly_type(rng, depth - 1));
    default: return ty::list(gen_poly_type(rng, depth - 1));
  }
}

bool property_capture_avoidance(std::mt19937& rng) {
  static const char* vars[] = {"A", "B", "C", "X", "Y"};
  for (int i = 0; i < 500; ++i) {
    TypePtr t = gen_poly_type(rng, 3);
    std::string x = vars[rng() % 5];
    TypePtr u = gen_poly_type(rng, 2);
    auto fv_t = free_type_vars(t);
    auto fv_u = free_type_vars(u);
    TypePtr result = substitute(t, {{x, u}});
    std::set<std::string> expected = fv_t;
    bool occurs = expected.erase(x) > 0;
    if (occurs) expected.insert(fv_u.begin(), fv_u.end());
    if (free_type_vars(result) != expected) return false;
  }
  return true;
}

bool property_round_trip() {
  for (const auto& entry : fs::recursive_directory_iterator(kCorpus)) {
    if (entry.path().extension() != ".stella") continue;
    Program p = parse_program(read_file(entry.path()));
    Program q = parse_program(pretty_print(p));
    if (!program_equal(p, q)) return false;
  }
  return true;
}

bool criterion_properties() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(0xC0FFEE);
  bool ok = property_subtype(rng) && property_exhaustiveness(rng) &&
            property_unification(rng) && property_capture_avoidance(rng) &&
            property_round_trip();
  double elapsed = seconds_since(start);
  if (elapsed >= 30.0) {
    std::fprintf(stderr, "  property suites took %.1fs (budget 30s)\n",
                 elapsed);
    return false;
  }
  return ok;
}

// --- criterion 5: soundness smoke over the well-typed corpus ---------------

bool criterion_soundness() {
  for (const auto& entry :
       fs::directory_iterator(kCorpus / "well-typed")) {
    if (entry.path().extension() != ".stella") continue;
    Program p = parse_program(read_file(entry.path()));
    typecheck_program(p);
    const Decl* main_decl = nullptr;
    for (const auto& d : p.decls)
      if (d->kind == DeclKind::Function && d->name == "main")
        main_decl = d.get();
    if (!main_decl) return false;
    for (std::uint64_t n = 0; n <= 3; ++n) {
      Outcome o = run_nat(p, n);
      if (o.kind != Outcome::Kind::Normal) continue;
      if (!value_conforms(o.value, main_decl->type)) {
        std::fprintf(stderr, "  %s: result %s does not conform to %s\n",
                     entry.path().filename().c_str(),
                     value_to_string(o.value).c_str(),
                     type_to_string(main_decl->type).c_str());
        return false;
      }
    }
  }
  return true;
}

// --- criterion 6: the negative corpus ---------------------------------------

bool criterion_negative_corpus() {
  auto cases = scan_corpus(kCorpus);
  int ill = 0;
  std::set<ErrorTag> tags;
  for (const auto& c : cases)
    if (c.kind == CorpusCase::Kind::IllTyped) {
      ++ill;
      tags.insert(c.expected_tag);
    }
  if (ill < 30 || tags.size() < 15) {
    std::fprintf(stderr, "  corpus has %d ill-typed cases over %zu tags\n",
                 ill, tags.size());
    return false;
  }
  for (ErrorTag required : {
           ErrorTag::ERROR_MISSING_MAIN,
           ErrorTag::ERROR_UNDEFINED_VARIABLE,
           ErrorTag::ERROR_NONEXHAUSTIVE_MATCH_PATTERNS,
           ErrorTag::ERROR_OCCURS_CHECK_INFINITE_TYPE,
           ErrorTag::ERROR_UNEXPECTED_SUBTYPE,
           ErrorTag::ERROR_NOT_A_GENERIC_FUNCTION,
       })
    if (!tags.count(required)) {
      std::fprintf(stderr, "  corpus lacks tag %s\n", tag_name(required));
      return false;
    }
  HarnessReport report = run_corpus(cases);
  if (report.failed != 0) {
    for (const auto& r : report.results)
      if (!r.passed)
        std::fprintf(stderr, "  %s: %s\n", r.path.c_str(), r.detail.c_str());
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"reference listings parse and typecheck under 1s", criterion_listings},
      {"run semantics of the executable listings on inputs 0..5",
       criterion_run_semantics},
      {"subtype ground truths and pragma sensitivity",
       criterion_subtype_truths},
      {"randomized property suites under 30s", criterion_properties},
      {"soundness smoke test over the well-typed corpus",
       criterion_soundness},
      {"negative corpus breadth and conformance", criterion_negative_corpus},
  };
  bool all = true;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  unexpected exception: %s\n", e.what());
    }
    std::printf("%s: %s\n", ok ? "PASS" : "FAIL", c.name);
    all = all && ok;
  }
  return all ? 0 : 1;
}
