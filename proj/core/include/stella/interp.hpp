#ifndef STELLA_INTERP_HPP
#define STELLA_INTERP_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "stella/syntax.hpp"

namespace stella {

using NatValue = boost::multiprecision::cpp_int;

enum class ValueKind {
  Nat,
  Bool,
  Unit,
  Closure,
  TypeClosure,
  Tuple,
  Record,
  Inl,
  Inr,
  Variant,
  List,
  Location,
  Folded,
  // fixpoint in waiting: applying it self-applies the wrapped closure
  Fix,
};

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct ValueField {
  std::string label;
  ValuePtr value;
};

struct EnvNode;
using EnvPtr = std::shared_ptr<EnvNode>;

struct EnvNode {
  std::string name;
  ValuePtr value;  // patched after creation for recursive bindings
  EnvPtr parent;
};

struct Value {
  ValueKind kind;
  NatValue nat;
  bool boolean = false;
  // Closure
  std::vector<std::string> params;
  ExprPtr body;
  EnvPtr env;
  std::vector<DeclPtr> nested;
  // Inl/Inr/Variant payload, TypeClosure and Fix underlying closure,
  // Folded payload
  ValuePtr inner;
  std::vector<ValuePtr> elems;  // Tuple, List
  std::vector<ValueField> fields;
  std::string label;  // Variant
  std::size_t location = 0;
  TypePtr folded_type;
};

namespace val {
ValuePtr nat(NatValue n);
ValuePtr boolean(bool b);
ValuePtr unit();
ValuePtr tuple(std::vector<ValuePtr> elems);
ValuePtr record(std::vector<ValueField> fields);
ValuePtr inl(ValuePtr v);
ValuePtr inr(ValuePtr v);
ValuePtr variant(std::string label, ValuePtr v);
ValuePtr list(std::vector<ValuePtr> elems);
ValuePtr location(std::size_t index);
ValuePtr folded(TypePtr t, ValuePtr v);
}  // namespace val

bool value_equal(const ValuePtr& a, const ValuePtr& b);

// Values rendered in surface syntax; closures print as <fn>.
std::string value_to_string(const ValuePtr& v);

struct Store {
  std::vector<ValuePtr> cells;
};

struct Outcome {
  enum class Kind { Normal, Thrown, Panicked, RuntimeError };
  Kind kind = Kind::Normal;
  ValuePtr value;     // Normal result or Thrown payload
  std::string error;  // RuntimeError kind, e.g. "cast-failure"
};

struct InterpOptions {
  std::uint64_t fuel = 10'000'000;
};

// Raised when the evaluation step budget runs out; deliberately not an
// Outcome so callers can distinguish it from program-level errors.
class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted() : std::runtime_error("fuel exhausted") {}
};

// Structural runtime check backing `cast as` and the soundness smoke test.
// Function and reference internals are taken on faith.
bool value_conforms(const ValuePtr& v, const TypePtr& t);

class Interpreter {
 public:
  explicit Interpreter(const Program& program, InterpOptions opts = {});

  // Applies main to `input` under a fresh store.
  Outcome run_main(const ValuePtr& input);

  // Evaluates a closed expression against the program's globals.
  Outcome eval_closed(const ExprPtr& e);

  const Store& store() const { return store_; }

 private:
  const Program& program_;
  InterpOptions opts_;
  Store store_;
  EnvPtr globals_;
  std::uint64_t fuel_ = 0;

  ValuePtr eval(const ExprPtr& e, const EnvPtr& env);
  ValuePtr apply(const ValuePtr& f, const std::vector<ValuePtr>& args,
                 Span span);
  EnvPtr bind_functions(const std::vector<DeclPtr>& decls, EnvPtr base);
  Outcome with_outcome(const ExprPtr& e, const EnvPtr& env);
};

Outcome eval_program(const Program& p, const ValuePtr& input,
                     InterpOptions opts = {});

}  // namespace stella

#endif  // STELLA_INTERP_HPP
