#pragma once

/*
 * The WHILE language: abstract syntax, a parser for its concrete syntax,
 * and an executable small-step concrete semantics.
 *
 * Concrete grammar (';' is right-associative and binds loosest):
 *
 *   cexp ::= 'skip' | cexp ';' cexp | ident ':=' aexp
 *          | 'if' bexp 'then' cexp 'else' cexp | 'while' bexp 'do' cexp
 *          | '(' cexp ')'
 *   aexp ::= int | ident | 'rand' | aexp ('+'|'-'|'*'|'/') aexp | '(' aexp ')'
 *   bexp ::= 'true' | 'false' | aexp ('<'|'=') aexp
 *          | bexp ('||'|'&&') bexp | '(' bexp ')'
 *
 * Program points: every non-sequence command node gets a pre-order index.
 * Nodes produced while stepping (the residual `skip` after an assignment,
 * the `body; while ...` unrolling) carry no index; point_of() maps any
 * continuation to the index of the command it executes next, or kExitPoint
 * when nothing is left.
 */

#include <cgc/errors.hpp>
#include <cgc/order.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cgc::whilelang {

enum class AOp { Add, Sub, Mul, Div };
enum class CmpOp { Lt, Eq };
enum class BOp { Or, And };

std::string_view symbol(AOp op);
std::string_view symbol(CmpOp op);
std::string_view symbol(BOp op);

struct Aexp;
struct Bexp;
struct Cexp;
using AexpPtr = std::shared_ptr<const Aexp>;
using BexpPtr = std::shared_ptr<const Bexp>;
using CexpPtr = std::shared_ptr<const Cexp>;

struct Aexp {
  struct Int {
    long long value;
  };
  struct Var {
    std::string name;
  };
  struct Rand {};
  struct Bin {
    AOp op;
    AexpPtr lhs;
    AexpPtr rhs;
  };
  std::variant<Int, Var, Rand, Bin> node;
};

struct Bexp {
  struct Bool {
    bool value;
  };
  struct Cmp {
    CmpOp op;
    AexpPtr lhs;
    AexpPtr rhs;
  };
  struct Bin {
    BOp op;
    BexpPtr lhs;
    BexpPtr rhs;
  };
  std::variant<Bool, Cmp, Bin> node;
};

inline constexpr int kNoPoint = -1;
inline constexpr int kExitPoint = -1;

struct Cexp {
  struct Skip {};
  struct Seq {
    CexpPtr first;
    CexpPtr second;
  };
  struct Assign {
    std::string var;
    AexpPtr value;
  };
  struct If {
    BexpPtr guard;
    CexpPtr then_branch;
    CexpPtr else_branch;
  };
  struct While {
    BexpPtr guard;
    CexpPtr body;
  };
  std::variant<Skip, Seq, Assign, If, While> node;
  int point = kNoPoint;

  bool is_skip() const { return std::holds_alternative<Skip>(node); }
};

// Builders. Commands built here carry no program point until renumber().
AexpPtr num(long long i);
AexpPtr var(std::string name);
AexpPtr rand_exp();
AexpPtr bin(AOp op, AexpPtr lhs, AexpPtr rhs);
BexpPtr boolean(bool b);
BexpPtr cmp(CmpOp op, AexpPtr lhs, AexpPtr rhs);
BexpPtr bin(BOp op, BexpPtr lhs, BexpPtr rhs);
CexpPtr skip();
CexpPtr seq(CexpPtr first, CexpPtr second);
CexpPtr assign(std::string var, AexpPtr value);
CexpPtr if_(BexpPtr guard, CexpPtr then_branch, CexpPtr else_branch);
CexpPtr while_(BexpPtr guard, CexpPtr body);

// Deep copy with pre-order point numbering of all non-Seq nodes.
CexpPtr renumber(const CexpPtr& root);

// Parses and numbers a program. Throws ParseError with line/column.
CexpPtr parse(std::string_view src);

std::string to_string(const Aexp& e);
std::string to_string(const Bexp& e);
std::string to_string(const Cexp& c);

// Structural equality, ignoring program points.
bool equal(const Aexp& a, const Aexp& b);
bool equal(const Bexp& a, const Bexp& b);
bool equal(const Cexp& a, const Cexp& b);

std::set<std::string> assigned_vars(const Cexp& c);
std::set<std::string> free_vars(const Cexp& c);
std::set<std::string> free_vars(const Aexp& e);
std::set<std::string> free_vars(const Bexp& e);

// Numbered command nodes of a program indexed by point.
std::vector<const Cexp*> points(const Cexp& root);
int point_of(const Cexp& continuation);
// Canonical identity of a continuation: numbered nodes by point, residual
// structure spelled out.
std::string continuation_key(const Cexp& continuation);

// --- concrete semantics ---

using Env = std::map<std::string, long long>;

struct State {
  Env env;
  CexpPtr cmd;

  bool terminal() const { return cmd->is_skip(); }
};

std::string state_key(const State& s);

// nullopt where the operator is undefined (division by zero). Division
// truncates toward zero. Throws AnalysisError on 64-bit overflow.
std::optional<long long> denote_aop(AOp op, long long a, long long b);
bool denote_cmp(CmpOp op, long long a, long long b);
bool denote_bop(BOp op, bool a, bool b);

// Collecting evaluation; `rand` ranges over the window. Throws
// AnalysisError on unbound variables.
std::set<long long> eval_aexp(const Aexp& e, const Env& env, const IntWindow& window);
std::set<bool> eval_bexp(const Bexp& e, const Env& env, const IntWindow& window);

// All one-step successors, ordered by state_key.
std::vector<State> step(const State& s, const IntWindow& window);

// Shared by the concrete and abstract transition functions.
CexpPtr unroll(const CexpPtr& loop);     // body ; loop
CexpPtr residual_skip();                 // unnumbered skip

struct Reachable {
  std::vector<State> states; // ordered by state_key
  bool exhausted = false;    // unexpanded non-terminal states at the cutoff
};

// Breadth-first closure of `step` for at most `fuel` rounds.
Reachable reachable(const State& init, const IntWindow& window, std::size_t fuel);

} // namespace cgc::whilelang
