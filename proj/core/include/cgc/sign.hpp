#pragma once

/*
 * The sign lattice, a flat abstract boolean domain, abstract environments,
 * and the abstract interpreters for WHILE built on them.
 *
 *                 any
 *           /      |      \
 *        negz    nzer    posz
 *          |  \  /   \  /  |
 *          |   \/     \/   |
 *          |   /\     /\   |
 *        neg     zer      pos        (neg <= negz, nzer; zer <= negz, posz;
 *           \     |     /             pos <= nzer, posz)
 *                none
 */

#include <cgc/galois.hpp>
#include <cgc/while_lang.hpp>

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgc::sign {

using whilelang::AOp;
using whilelang::BOp;
using whilelang::CmpOp;

enum class Sign : ElemId { None, Neg, Zer, Pos, NegZ, NZer, PosZ, Any };
enum class AbsBool : ElemId { None, TT, FF, Any };

inline constexpr Sign kAllSigns[] = {Sign::None, Sign::Neg,  Sign::Zer,  Sign::Pos,
                                     Sign::NegZ, Sign::NZer, Sign::PosZ, Sign::Any};
inline constexpr AbsBool kAllAbsBools[] = {AbsBool::None, AbsBool::TT, AbsBool::FF,
                                           AbsBool::Any};

std::string_view name(Sign s);
std::string_view name(AbsBool b);
std::optional<Sign> parse_sign(std::string_view s);

inline ElemId id(Sign s) { return static_cast<ElemId>(s); }
inline ElemId id(AbsBool b) { return static_cast<ElemId>(b); }

bool leq(Sign a, Sign b);
Sign join(Sign a, Sign b);
Sign meet(Sign a, Sign b);
bool leq(AbsBool a, AbsBool b);
AbsBool join(AbsBool a, AbsBool b);

Sign eta(long long i);
bool in_mu(long long i, Sign s); // unbounded concretization
Sign negate(Sign s);

const DomainRef& sign_domain();
const DomainRef& absbool_domain();
const DomainRef& bool_domain(); // discrete {false, true}, ids 0 and 1

ConstructiveGC sign_gc(const IntWindow& window);
ConstructiveGC absbool_gc();

// Undefined combinations (division by zero, a none operand) give none.
Sign abs_aop(AOp op, Sign a, Sign b);
AbsBool abs_cmp(CmpOp op, Sign a, Sign b);
AbsBool abs_bop(BOp op, AbsBool a, AbsBool b);

// Window large enough to hold every result of a binary operator on `in`.
IntWindow result_window(const IntWindow& in);

// Concrete operators as Kleisli functions over pair carriers, and the
// abstract ones as tables over pairs of abstract values.
KleisliFn aop_fn(AOp op, const ProductDomain& pairs, const IntWindow& in,
                 const IntWindow& out);
MonotoneFn aop_sharp_fn(AOp op, const ProductDomain& sign_pairs);
KleisliFn cmp_fn(CmpOp op, const ProductDomain& pairs, const IntWindow& in);
MonotoneFn cmp_sharp_fn(CmpOp op, const ProductDomain& sign_pairs);
KleisliFn bop_fn(BOp op, const ProductDomain& bool_pairs);
MonotoneFn bop_sharp_fn(BOp op, const ProductDomain& absbool_pairs);

// --- abstract environments ---

using AbsEnv = std::map<std::string, Sign>;

bool leq(const AbsEnv& a, const AbsEnv& b);           // pointwise, same keys
AbsEnv join(const AbsEnv& a, const AbsEnv& b);
bool unreachable(const AbsEnv& env);                   // some binding is none
AbsEnv eta_env(const whilelang::Env& env);
AbsEnv uniform_env(const std::vector<std::string>& vars, Sign s);
std::string to_string(const AbsEnv& env);
nlohmann::json to_json(const AbsEnv& env);

/// Pointwise connection between Env over `vars` (values in the window)
/// and AbsEnv over `vars`.
class EnvGC {
 public:
  EnvGC(std::vector<std::string> vars, const IntWindow& window);

  const std::vector<std::string>& vars() const { return m_vars; }
  const IntWindow& window() const { return m_window; }
  const ConstructiveGC& gc() const { return m_gc; }

  whilelang::Env env(ElemId x) const;
  ElemId id(const whilelang::Env& env) const;
  AbsEnv abs_env(ElemId y) const;
  ElemId abs_id(const AbsEnv& env) const;

 private:
  std::vector<std::string> m_vars;
  IntWindow m_window;
  ConstructiveGC m_gc;
};

// --- abstract interpreters ---

Sign abs_aexp(const whilelang::Aexp& e, const AbsEnv& env);
AbsBool abs_bexp(const whilelang::Bexp& e, const AbsEnv& env);

struct AbsState {
  AbsEnv env;
  whilelang::CexpPtr cmd;
};

// Successors with an unreachable env are dropped and counted in `pruned`.
std::vector<AbsState> abs_step(const AbsState& s, std::size_t* pruned = nullptr);

struct PointResult {
  int point;
  std::string command;
  AbsEnv env;
};

struct AnalysisResult {
  std::vector<PointResult> points; // indexed by program point
  AbsEnv final_env;
  std::size_t pruned_unreachable = 0;
  std::size_t iterations = 0;

  const AbsEnv& at(int point) const;        // kExitPoint gives final_env
};

// Worklist fixpoint of abs_step from <init, program>. Throws AnalysisError
// when the program reads a variable not bound in `init`.
AnalysisResult analyze(const whilelang::CexpPtr& program, const AbsEnv& init);

nlohmann::json to_json(const AnalysisResult& r);
std::string to_text(const AnalysisResult& r);

} // namespace cgc::sign
