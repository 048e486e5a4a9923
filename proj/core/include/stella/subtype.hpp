#ifndef STELLA_SUBTYPE_HPP
#define STELLA_SUBTYPE_HPP

#include "stella/syntax.hpp"

namespace stella {

// Structural subtyping: reflexive; Bot <: t; s <: Top; record width, depth
// and permutation; variant label subset; functions contravariant in
// parameters and covariant in results; invariant references. Operands must
// be alias- and metavariable-free.
bool is_subtype(const TypePtr& s, const TypePtr& t);

// Structural equality after alias expansion elsewhere; alpha-equivalence for
// Forall/Mu binders; record/variant field order is significant.
bool type_eq(const TypePtr& a, const TypePtr& b);

}  // namespace stella

#endif  // STELLA_SUBTYPE_HPP
