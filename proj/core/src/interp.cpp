#include "stella/interp.hpp"

#include <utility>

#include "stella/poly.hpp"

namespace stella {

namespace {

// Non-local exits used inside eval; converted to Outcomes at the boundary.
struct ThrownSignal {
  ValuePtr payload;
};
struct PanicSignal {};
struct RuntimeSignal {
  std::string kind;
};

ValuePtr make_value(Value v) {
  return std::make_shared<const Value>(std::move(v));
}

ValuePtr lookup(const EnvPtr& env, const std::string& name) {
  for (EnvPtr n = env; n; n = n->parent) {
    if (n->name == name) {
      if (!n->value) {
        throw RuntimeSignal{"uninitialized-binding"};
      }
      return n->value;
    }
  }
  throw RuntimeSignal{"unbound-variable"};
}

EnvPtr extend(EnvPtr env, std::string name, ValuePtr v) {
  auto node = std::make_shared<EnvNode>();
  node->name = std::move(name);
  node->value = std::move(v);
  node->parent = std::move(env);
  return node;
}

ValuePtr closure_of_decl(const DeclPtr& d, EnvPtr env) {
  Value v{ValueKind::Closure};
  for (const auto& p : d->params) v.params.push_back(p.name);
  v.body = d->body;
  v.env = std::move(env);
  v.nested = d->nested;
  return make_value(std::move(v));
}

bool match_pattern(const PatternPtr& p, const ValuePtr& v,
                   std::vector<std::pair<std::string, ValuePtr>>& out) {
  switch (p->kind) {
    case PatternKind::Var:
      out.emplace_back(p->name, v);
      return true;
    case PatternKind::Wildcard:
      return true;
    case PatternKind::True:
      return v->kind == ValueKind::Bool && v->boolean;
    case PatternKind::False:
      return v->kind == ValueKind::Bool && !v->boolean;
    case PatternKind::Zero:
      return v->kind == ValueKind::Nat && v->nat == 0;
    case PatternKind::Int:
      return v->kind == ValueKind::Nat && v->nat == p->value;
    case PatternKind::Succ:
      return v->kind == ValueKind::Nat && v->nat > 0 &&
             match_pattern(p->args[0], val::nat(v->nat - 1), out);
    case PatternKind::Unit:
      return v->kind == ValueKind::Unit;
    case PatternKind::Inl:
      return v->kind == ValueKind::Inl && match_pattern(p->args[0], v->inner, out);
    case PatternKind::Inr:
      return v->kind == ValueKind::Inr && match_pattern(p->args[0], v->inner, out);
    case PatternKind::Variant:
      return v->kind == ValueKind::Variant && v->label == p->name &&
             match_pattern(p->args[0], v->inner, out);
    case PatternKind::Tuple: {
      if (v->kind != ValueKind::Tuple || v->elems.size() != p->args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (!match_pattern(p->args[i], v->elems[i], out)) return false;
      }
      return true;
    }
    case PatternKind::Record: {
      if (v->kind != ValueKind::Record) return false;
      for (const auto& f : p->fields) {
        const ValuePtr* field = nullptr;
        for (const auto& g : v->fields) {
          if (g.label == f.label) {
            field = &g.value;
            break;
          }
        }
        if (!field || !match_pattern(f.pat, *field, out)) return false;
      }
      return true;
    }
    case PatternKind::List: {
      if (v->kind != ValueKind::List || v->elems.size() != p->args.size()) {
        return false;
      }
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (!match_pattern(p->args[i], v->elems[i], out)) return false;
      }
      return true;
    }
    case PatternKind::Cons: {
      if (v->kind != ValueKind::List || v->elems.empty()) return false;
      if (!match_pattern(p->args[0], v->elems[0], out)) return false;
      std::vector<ValuePtr> rest(v->elems.begin() + 1, v->elems.end());
      return match_pattern(p->args[1], val::list(std::move(rest)), out);
    }
    case PatternKind::Ascription:
      return match_pattern(p->args[0], v, out);
  }
  return false;
}

}  // namespace

namespace val {

ValuePtr nat(NatValue n) {
  Value v{ValueKind::Nat};
  v.nat = std::move(n);
  return make_value(std::move(v));
}

ValuePtr boolean(bool b) {
  Value v{ValueKind::Bool};
  v.boolean = b;
  return make_value(std::move(v));
}

ValuePtr unit() { return make_value(Value{ValueKind::Unit}); }

ValuePtr tuple(std::vector<ValuePtr> elems) {
  Value v{ValueKind::Tuple};
  v.elems = std::move(elems);
  return make_value(std::move(v));
}

ValuePtr record(std::vector<ValueField> fields) {
  Value v{ValueKind::Record};
  v.fields = std::move(fields);
  return make_value(std::move(v));
}

ValuePtr inl(ValuePtr p) {
  Value v{ValueKind::Inl};
  v.inner = std::move(p);
  return make_value(std::move(v));
}

ValuePtr inr(ValuePtr p) {
  Value v{ValueKind::Inr};
  v.inner = std::move(p);
  return make_value(std::move(v));
}

ValuePtr variant(std::string label, ValuePtr p) {
  Value v{ValueKind::Variant};
  v.label = std::move(label);
  v.inner = std::move(p);
  return make_value(std::move(v));
}

ValuePtr list(std::vector<ValuePtr> elems) {
  Value v{ValueKind::List};
  v.elems = std::move(elems);
  return make_value(std::move(v));
}

ValuePtr location(std::size_t index) {
  Value v{ValueKind::Location};
  v.location = index;
  return make_value(std::move(v));
}

ValuePtr folded(TypePtr t, ValuePtr p) {
  Value v{ValueKind::Folded};
  v.folded_type = std::move(t);
  v.inner = std::move(p);
  return make_value(std::move(v));
}

}  // namespace val

bool value_equal(const ValuePtr& a, const ValuePtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ValueKind::Nat:
      return a->nat == b->nat;
    case ValueKind::Bool:
      return a->boolean == b->boolean;
    case ValueKind::Unit:
      return true;
    case ValueKind::Inl:
    case ValueKind::Inr:
      return value_equal(a->inner, b->inner);
    case ValueKind::Variant:
      return a->label == b->label && value_equal(a->inner, b->inner);
    case ValueKind::Tuple:
    case ValueKind::List: {
      if (a->elems.size() != b->elems.size()) return false;
      for (std::size_t i = 0; i < a->elems.size(); ++i) {
        if (!value_equal(a->elems[i], b->elems[i])) return false;
      }
      return true;
    }
    case ValueKind::Record: {
      if (a->fields.size() != b->fields.size()) return false;
      for (std::size_t i = 0; i < a->fields.size(); ++i) {
        if (a->fields[i].label != b->fields[i].label) return false;
        if (!value_equal(a->fields[i].value, b->fields[i].value)) return false;
      }
      return true;
    }
    case ValueKind::Location:
      return a->location == b->location;
    case ValueKind::Folded:
      return value_equal(a->inner, b->inner);
    case ValueKind::Closure:
    case ValueKind::TypeClosure:
    case ValueKind::Fix:
      return a == b;
  }
  return false;
}

std::string value_to_string(const ValuePtr& v) {
  switch (v->kind) {
    case ValueKind::Nat:
      return v->nat.str();
    case ValueKind::Bool:
      return v->boolean ? "true" : "false";
    case ValueKind::Unit:
      return "unit";
    case ValueKind::Closure:
    case ValueKind::Fix:
      return "<fn>";
    case ValueKind::TypeClosure:
      return "<generic fn>";
    case ValueKind::Tuple: {
      std::string s = "{";
      for (std::size_t i = 0; i < v->elems.size(); ++i) {
        if (i) s += ", ";
        s += value_to_string(v->elems[i]);
      }
      return s + "}";
    }
    case ValueKind::Record: {
      std::string s = "{";
      for (std::size_t i = 0; i < v->fields.size(); ++i) {
        if (i) s += ", ";
        s += v->fields[i].label + " = " + value_to_string(v->fields[i].value);
      }
      return s + "}";
    }
    case ValueKind::Inl:
      return "inl(" + value_to_string(v->inner) + ")";
    case ValueKind::Inr:
      return "inr(" + value_to_string(v->inner) + ")";
    case ValueKind::Variant:
      return "<| " + v->label + " = " + value_to_string(v->inner) + " |>";
    case ValueKind::List: {
      std::string s = "[";
      for (std::size_t i = 0; i < v->elems.size(); ++i) {
        if (i) s += ", ";
        s += value_to_string(v->elems[i]);
      }
      return s + "]";
    }
    case ValueKind::Location:
      return "<ref " + std::to_string(v->location) + ">";
    case ValueKind::Folded:
      return "fold(" + value_to_string(v->inner) + ")";
  }
  return "<value>";
}

bool value_conforms(const ValuePtr& v, const TypePtr& t) {
  switch (t->kind) {
    case TypeKind::Top:
      return true;
    case TypeKind::Bot:
      return false;
    case TypeKind::Var:
    case TypeKind::Alias:
    case TypeKind::Meta:
      return true;
    case TypeKind::Nat:
      return v->kind == ValueKind::Nat;
    case TypeKind::Bool:
      return v->kind == ValueKind::Bool;
    case TypeKind::Unit:
      return v->kind == ValueKind::Unit;
    case TypeKind::Fn:
      if (v->kind == ValueKind::Fix) return true;
      return v->kind == ValueKind::Closure &&
             v->params.size() == t->params.size();
    case TypeKind::Forall:
      return v->kind == ValueKind::TypeClosure;
    case TypeKind::Tuple: {
      if (v->kind != ValueKind::Tuple || v->elems.size() != t->params.size()) {
        return false;
      }
      for (std::size_t i = 0; i < t->params.size(); ++i) {
        if (!value_conforms(v->elems[i], t->params[i])) return false;
      }
      return true;
    }
    case TypeKind::Record: {
      if (v->kind != ValueKind::Record) return false;
      // width subtyping: extra fields in the value are fine
      for (const auto& f : t->fields) {
        bool ok = false;
        for (const auto& g : v->fields) {
          if (g.label == f.label) {
            ok = value_conforms(g.value, f.type);
            break;
          }
        }
        if (!ok) return false;
      }
      return true;
    }
    case TypeKind::Sum:
      if (v->kind == ValueKind::Inl) {
        return value_conforms(v->inner, t->params[0]);
      }
      if (v->kind == ValueKind::Inr) {
        return value_conforms(v->inner, t->params[1]);
      }
      return false;
    case TypeKind::Variant: {
      if (v->kind != ValueKind::Variant) return false;
      const TypePtr* field = record_field(t, v->label);
      return field && value_conforms(v->inner, *field);
    }
    case TypeKind::List: {
      if (v->kind != ValueKind::List) return false;
      for (const auto& e : v->elems) {
        if (!value_conforms(e, t->inner)) return false;
      }
      return true;
    }
    case TypeKind::Ref:
      return v->kind == ValueKind::Location;
    case TypeKind::Mu: {
      if (v->kind != ValueKind::Folded) return false;
      TypeSubstitution subst{{t->name, t}};
      return value_conforms(v->inner, substitute(t->inner, subst));
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

Interpreter::Interpreter(const Program& program, InterpOptions opts)
    : program_(program), opts_(opts) {
  std::vector<DeclPtr> fns;
  for (const auto& d : program_.decls) {
    if (d->kind == DeclKind::Function) fns.push_back(d);
  }
  globals_ = bind_functions(fns, nullptr);
}

EnvPtr Interpreter::bind_functions(const std::vector<DeclPtr>& decls,
                                   EnvPtr base) {
  EnvPtr head = std::move(base);
  std::vector<EnvNode*> nodes;
  for (const auto& d : decls) {
    head = extend(head, d->name, nullptr);
    nodes.push_back(head.get());
  }
  for (std::size_t i = 0; i < decls.size(); ++i) {
    ValuePtr fn = closure_of_decl(decls[i], head);
    if (!decls[i]->generic_binders.empty()) {
      Value wrapped{ValueKind::TypeClosure};
      wrapped.inner = std::move(fn);
      fn = make_value(std::move(wrapped));
    }
    nodes[i]->value = std::move(fn);
  }
  return head;
}

Outcome Interpreter::run_main(const ValuePtr& input) {
  store_.cells.clear();
  fuel_ = opts_.fuel;
  Outcome out;
  try {
    ValuePtr main_fn = lookup(globals_, "main");
    out.value = apply(main_fn, {input}, Span{});
  } catch (const ThrownSignal& t) {
    out.kind = Outcome::Kind::Thrown;
    out.value = t.payload;
  } catch (const PanicSignal&) {
    out.kind = Outcome::Kind::Panicked;
  } catch (const RuntimeSignal& r) {
    out.kind = Outcome::Kind::RuntimeError;
    out.error = r.kind;
  }
  return out;
}

Outcome Interpreter::eval_closed(const ExprPtr& e) {
  store_.cells.clear();
  fuel_ = opts_.fuel;
  return with_outcome(e, globals_);
}

Outcome Interpreter::with_outcome(const ExprPtr& e, const EnvPtr& env) {
  Outcome out;
  try {
    out.value = eval(e, env);
  } catch (const ThrownSignal& t) {
    out.kind = Outcome::Kind::Thrown;
    out.value = t.payload;
  } catch (const PanicSignal&) {
    out.kind = Outcome::Kind::Panicked;
  } catch (const RuntimeSignal& r) {
    out.kind = Outcome::Kind::RuntimeError;
    out.error = r.kind;
  }
  return out;
}

ValuePtr Interpreter::apply(const ValuePtr& f,
                            const std::vector<ValuePtr>& args, Span span) {
  switch (f->kind) {
    case ValueKind::Closure: {
      if (f->params.size() != args.size()) {
        throw RuntimeSignal{"arity-mismatch"};
      }
      EnvPtr env = f->env;
      for (std::size_t i = 0; i < args.size(); ++i) {
        env = extend(env, f->params[i], args[i]);
      }
      if (!f->nested.empty()) env = bind_functions(f->nested, env);
      return eval(f->body, env);
    }
    case ValueKind::Fix: {
      // fix g = g (fix g), unrolled one level per application
      ValuePtr unrolled = apply(f->inner, {f}, span);
      return apply(unrolled, args, span);
    }
    case ValueKind::TypeClosure:
      // type application was erased; push through
      return apply(f->inner, args, span);
    default:
      throw RuntimeSignal{"not-a-function"};
  }
}

ValuePtr Interpreter::eval(const ExprPtr& e, const EnvPtr& env) {
  if (fuel_ == 0) throw FuelExhausted();
  --fuel_;
  switch (e->kind) {
    case ExprKind::Var:
      return lookup(env, e->name);
    case ExprKind::True:
      return val::boolean(true);
    case ExprKind::False:
      return val::boolean(false);
    case ExprKind::Zero:
      return val::nat(0);
    case ExprKind::NatLit:
      return val::nat(NatValue(e->nat));
    case ExprKind::Unit:
      return val::unit();
    case ExprKind::Succ: {
      ValuePtr v = eval(e->args[0], env);
      return val::nat(v->nat + 1);
    }
    case ExprKind::NatPred: {
      ValuePtr v = eval(e->args[0], env);
      return val::nat(v->nat == 0 ? NatValue(0) : NatValue(v->nat - 1));
    }
    case ExprKind::NatIsZero: {
      ValuePtr v = eval(e->args[0], env);
      return val::boolean(v->nat == 0);
    }
    case ExprKind::NatRec: {
      ValuePtr n = eval(e->args[0], env);
      ValuePtr acc = eval(e->args[1], env);
      ValuePtr step = eval(e->args[2], env);
      for (NatValue i = 0; i < n->nat; ++i) {
        acc = apply(apply(step, {val::nat(i)}, e->span), {acc}, e->span);
      }
      return acc;
    }
    case ExprKind::If: {
      ValuePtr c = eval(e->args[0], env);
      return eval(c->boolean ? e->args[1] : e->args[2], env);
    }
    case ExprKind::Abstraction: {
      Value v{ValueKind::Closure};
      for (const auto& p : e->params) v.params.push_back(p.name);
      v.body = e->args[0];
      v.env = env;
      return make_value(std::move(v));
    }
    case ExprKind::GenericAbstraction: {
      Value v{ValueKind::TypeClosure};
      v.inner = eval(e->args[0], env);
      return make_value(std::move(v));
    }
    case ExprKind::Application: {
      ValuePtr f = eval(e->args[0], env);
      std::vector<ValuePtr> args;
      for (std::size_t i = 1; i < e->args.size(); ++i) {
        args.push_back(eval(e->args[i], env));
      }
      return apply(f, args, e->span);
    }
    case ExprKind::TypeApplication: {
      ValuePtr f = eval(e->args[0], env);
      return f->kind == ValueKind::TypeClosure ? f->inner : f;
    }
    case ExprKind::Tuple: {
      std::vector<ValuePtr> elems;
      for (const auto& a : e->args) elems.push_back(eval(a, env));
      return val::tuple(std::move(elems));
    }
    case ExprKind::TupleProj: {
      ValuePtr v = eval(e->args[0], env);
      return v->elems[e->index - 1];
    }
    case ExprKind::Record: {
      std::vector<ValueField> fields;
      for (const auto& f : e->fields) {
        fields.push_back({f.label, eval(f.value, env)});
      }
      return val::record(std::move(fields));
    }
    case ExprKind::RecordProj: {
      ValuePtr v = eval(e->args[0], env);
      for (const auto& f : v->fields) {
        if (f.label == e->name) return f.value;
      }
      throw RuntimeSignal{"missing-field"};
    }
    case ExprKind::Inl:
      return val::inl(eval(e->args[0], env));
    case ExprKind::Inr:
      return val::inr(eval(e->args[0], env));
    case ExprKind::Variant:
      return val::variant(e->name, eval(e->args[0], env));
    case ExprKind::ListLit: {
      std::vector<ValuePtr> elems;
      for (const auto& a : e->args) elems.push_back(eval(a, env));
      return val::list(std::move(elems));
    }
    case ExprKind::ConsList: {
      ValuePtr head = eval(e->args[0], env);
      ValuePtr tail = eval(e->args[1], env);
      std::vector<ValuePtr> elems;
      elems.push_back(std::move(head));
      elems.insert(elems.end(), tail->elems.begin(), tail->elems.end());
      return val::list(std::move(elems));
    }
    case ExprKind::ListHead: {
      ValuePtr v = eval(e->args[0], env);
      if (v->elems.empty()) throw RuntimeSignal{"head-of-empty-list"};
      return v->elems[0];
    }
    case ExprKind::ListTail: {
      ValuePtr v = eval(e->args[0], env);
      if (v->elems.empty()) throw RuntimeSignal{"tail-of-empty-list"};
      return val::list({v->elems.begin() + 1, v->elems.end()});
    }
    case ExprKind::ListIsEmpty: {
      ValuePtr v = eval(e->args[0], env);
      return val::boolean(v->elems.empty());
    }
    case ExprKind::Match: {
      ValuePtr v = eval(e->args[0], env);
      for (const auto& c : e->cases) {
        std::vector<std::pair<std::string, ValuePtr>> bound;
        if (!match_pattern(c.pattern, v, bound)) continue;
        EnvPtr inner = env;
        for (auto& [name, value] : bound) {
          inner = extend(inner, name, std::move(value));
        }
        return eval(c.body, inner);
      }
      throw RuntimeSignal{"no-matching-pattern"};
    }
    case ExprKind::Let: {
      EnvPtr inner = env;
      for (const auto& b : e->bindings) {
        inner = extend(inner, b.name, eval(b.value, inner));
      }
      return eval(e->args[0], inner);
    }
    case ExprKind::LetRec: {
      EnvPtr inner = env;
      std::vector<EnvNode*> nodes;
      for (const auto& b : e->bindings) {
        inner = extend(inner, b.name, nullptr);
        nodes.push_back(inner.get());
      }
      for (std::size_t i = 0; i < e->bindings.size(); ++i) {
        nodes[i]->value = eval(e->bindings[i].value, inner);
      }
      return eval(e->args[0], inner);
    }
    case ExprKind::Ascription:
      return eval(e->args[0], env);
    case ExprKind::Sequence:
      (void)eval(e->args[0], env);
      return eval(e->args[1], env);
    case ExprKind::NewRef: {
      ValuePtr v = eval(e->args[0], env);
      store_.cells.push_back(std::move(v));
      return val::location(store_.cells.size() - 1);
    }
    case ExprKind::Deref: {
      ValuePtr v = eval(e->args[0], env);
      return store_.cells.at(v->location);
    }
    case ExprKind::Assign: {
      ValuePtr loc = eval(e->args[0], env);
      store_.cells.at(loc->location) = eval(e->args[1], env);
      return val::unit();
    }
    case ExprKind::Panic:
      throw PanicSignal{};
    case ExprKind::Throw:
      throw ThrownSignal{eval(e->args[0], env)};
    case ExprKind::TryWith: {
      try {
        return eval(e->args[0], env);
      } catch (const ThrownSignal&) {
        return eval(e->args[1], env);
      }
    }
    case ExprKind::TryCatch: {
      try {
        return eval(e->args[0], env);
      } catch (const ThrownSignal& t) {
        std::vector<std::pair<std::string, ValuePtr>> bound;
        if (!match_pattern(e->cases[0].pattern, t.payload, bound)) throw;
        EnvPtr inner = env;
        for (auto& [name, value] : bound) {
          inner = extend(inner, name, std::move(value));
        }
        return eval(e->args[1], inner);
      }
    }
    case ExprKind::CastAs: {
      ValuePtr v = eval(e->args[0], env);
      if (!value_conforms(v, e->type_args[0])) {
        throw RuntimeSignal{"cast-failure"};
      }
      return v;
    }
    case ExprKind::Fix: {
      Value v{ValueKind::Fix};
      v.inner = eval(e->args[0], env);
      return make_value(std::move(v));
    }
    case ExprKind::Fold:
      return val::folded(e->type_args[0], eval(e->args[0], env));
    case ExprKind::Unfold: {
      ValuePtr v = eval(e->args[0], env);
      return v->kind == ValueKind::Folded ? v->inner : v;
    }
  }
  throw RuntimeSignal{"malformed-expression"};
}

Outcome eval_program(const Program& p, const ValuePtr& input,
                     InterpOptions opts) {
  Interpreter interp(p, opts);
  return interp.run_main(input);
}

}  // namespace stella
