#pragma once

/*
 * Precise and gradual simple types with none/any, the precision
 * connection between them, and both type checkers.
 *
 *   precise  t  ::= None | Bool | t -> t | Any
 *   gradual  g  ::= None | Bool | g -> g | Any | ?
 *
 * Subtyping is the usual safe-for-substitution order (None bottom, Any
 * top, arrows contravariant in the domain). Precision has ? on top and is
 * covariant in both arrow positions. Depth counts type constructors along
 * the deepest path: base types have depth 1.
 *
 * Term syntax (gtc):
 *
 *   e ::= x | true | false | \x:T. e | e e | if e then e else e | e :: T
 *   T ::= Bool | None | Any | ? | T -> T | (T)
 *
 * An untyped lambda `\x. e` is accepted by parse_untyped only.
 */

#include <cgc/galois.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cgc::gradual {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { None, Bool, Arrow, Any, Unknown };
  Kind kind;
  TypePtr dom;
  TypePtr cod;
};

TypePtr none_t();
TypePtr bool_t();
TypePtr any_t();
TypePtr unknown_t();
TypePtr arrow(TypePtr dom, TypePtr cod);

bool equal(const Type& a, const Type& b);
bool is_precise(const Type& t);
int depth(const Type& t);
std::string to_string(const Type& t);
TypePtr parse_type(std::string_view src);

// Every type of depth <= d, in a fixed canonical order.
std::vector<TypePtr> enumerate_types(int d, bool gradual);

// Precise lattice. Arguments must be ?-free (DomainError otherwise).
bool subtype(const TypePtr& a, const TypePtr& b);
TypePtr join(const TypePtr& a, const TypePtr& b);
TypePtr meet(const TypePtr& a, const TypePtr& b);

// a is at least as precise as b.
bool precision_leq(const TypePtr& a, const TypePtr& b);

bool consistent_subtype(const TypePtr& a, const TypePtr& b);
// Exists t1 in mu(a), t2 in mu(b), both of depth <= d, with t1 <: t2.
bool consistent_subtype_witness(const TypePtr& a, const TypePtr& b, int d);
TypePtr gradual_join(const TypePtr& a, const TypePtr& b);
TypePtr gradual_meet(const TypePtr& a, const TypePtr& b);

// Precise types of depth <= d in mu(t).
std::vector<TypePtr> concretize(const TypePtr& t, int d);

/// The precision connection at a depth bound, with type <-> id maps.
class GradualGC {
 public:
  explicit GradualGC(int depth);

  int depth() const { return m_depth; }
  const ConstructiveGC& gc() const { return m_gc; }
  const std::vector<TypePtr>& precise() const { return m_precise; }
  const std::vector<TypePtr>& gradual() const { return m_gradual; }
  ElemId precise_id(const TypePtr& t) const;
  ElemId gradual_id(const TypePtr& t) const;

 private:
  int m_depth;
  std::vector<TypePtr> m_precise;
  std::vector<TypePtr> m_gradual;
  std::map<std::string, ElemId> m_precise_ids;
  std::map<std::string, ElemId> m_gradual_ids;
  ConstructiveGC m_gc;
};

ConstructiveGC gradual_gc(int depth);

// --- terms ---

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Bool, Lam, App, If, Ascribe };
  Kind kind;
  std::string name;     // Var, Lam binder
  bool value = false;   // Bool
  TypePtr type;         // Lam annotation (null when untyped), Ascribe target
  TermPtr a, b, c;      // children in source order
};

TermPtr var_e(std::string name);
TermPtr bool_e(bool b);
TermPtr lam_e(std::string x, TypePtr annot, TermPtr body); // annot may be null
TermPtr app_e(TermPtr f, TermPtr arg);
TermPtr if_e(TermPtr g, TermPtr t, TermPtr e);
TermPtr ascribe_e(TermPtr e, TypePtr t);

std::string to_string(const Term& e);
bool equal(const Term& a, const Term& b);
int size(const Term& e);        // AST nodes; annotations do not count
bool is_closed(const Term& e);
bool is_precise(const Term& e); // no annotation mentions ?
bool is_untyped(const Term& e); // no annotations, no ascriptions

TermPtr parse_term(std::string_view src);    // annotated lambdas only
TermPtr parse_untyped(std::string_view src); // `\x. e`, no ascriptions

using Context = std::vector<std::pair<std::string, TypePtr>>; // innermost last

struct TypeError {
  std::string rule;
  std::string subterm;
  std::string detail;

  std::string message() const;
};

using TypeResult = std::variant<TypePtr, TypeError>;

TypeResult typecheck_precise(const Context& ctx, const Term& e);
TypeResult typecheck_gradual(const Context& ctx, const Term& e);

// Binders get ?, every non-variable node is ascribed :: ?. Throws
// DomainError on open or annotated input.
TermPtr embed_dynamic(const Term& un);

// Structurally identical terms, each annotation of `a` at least as precise
// as the corresponding one in `b`.
bool term_precision_leq(const Term& a, const Term& b);

// --- enumeration harness ---

// Closed terms of at most `k` nodes with annotations drawn from `annots`.
std::vector<TermPtr> enumerate_terms(int k, const std::vector<TypePtr>& annots);
std::vector<TermPtr> enumerate_untyped(int k);

LawReport check_fat(int k, int d);
LawReport check_edl(int k);
LawReport check_gg(int k, int d);

struct Metatheory {
  LawReport fat;
  LawReport edl;
  LawReport gg;
};
Metatheory check_metatheory(int k, int d);

} // namespace cgc::gradual
