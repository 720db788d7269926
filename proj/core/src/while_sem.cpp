#include <cgc/while_lang.hpp>

#include <algorithm>
#include <limits>

namespace cgc::whilelang {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void overflow(AOp op, long long a, long long b) {
  throw AnalysisError("integer overflow in " + std::to_string(a) + " " +
                      std::string(symbol(op)) + " " + std::to_string(b));
}

long long lookup(const Env& env, const std::string& x) {
  auto it = env.find(x);
  if (it == env.end()) {
    throw AnalysisError("unbound variable '" + x + "'");
  }
  return it->second;
}

} // namespace

std::optional<long long> denote_aop(AOp op, long long a, long long b) {
  long long r = 0;
  switch (op) {
  case AOp::Add:
    if (__builtin_add_overflow(a, b, &r)) overflow(op, a, b);
    return r;
  case AOp::Sub:
    if (__builtin_sub_overflow(a, b, &r)) overflow(op, a, b);
    return r;
  case AOp::Mul:
    if (__builtin_mul_overflow(a, b, &r)) overflow(op, a, b);
    return r;
  case AOp::Div:
    if (b == 0) {
      return std::nullopt;
    }
    if (b == -1 && a == std::numeric_limits<long long>::min()) {
      overflow(op, a, b);
    }
    return a / b; // C++ division truncates toward zero
  }
  return std::nullopt;
}

bool denote_cmp(CmpOp op, long long a, long long b) { return op == CmpOp::Lt ? a < b : a == b; }

bool denote_bop(BOp op, bool a, bool b) { return op == BOp::Or ? (a || b) : (a && b); }

std::set<long long> eval_aexp(const Aexp& e, const Env& env, const IntWindow& window) {
  return std::visit(
      overloaded{
          [](const Aexp::Int& i) { return std::set<long long>{i.value}; },
          [&](const Aexp::Var& v) { return std::set<long long>{lookup(env, v.name)}; },
          [&](const Aexp::Rand&) {
            auto vs = window.values();
            return std::set<long long>(vs.begin(), vs.end());
          },
          [&](const Aexp::Bin& b) {
            const auto lhs = eval_aexp(*b.lhs, env, window);
            const auto rhs = eval_aexp(*b.rhs, env, window);
            std::set<long long> out;
            for (long long x : lhs) {
              for (long long y : rhs) {
                if (auto r = denote_aop(b.op, x, y)) {
                  out.insert(*r);
                }
              }
            }
            return out;
          },
      },
      e.node);
}

std::set<bool> eval_bexp(const Bexp& e, const Env& env, const IntWindow& window) {
  return std::visit(
      overloaded{
          [](const Bexp::Bool& b) { return std::set<bool>{b.value}; },
          [&](const Bexp::Cmp& c) {
            const auto lhs = eval_aexp(*c.lhs, env, window);
            const auto rhs = eval_aexp(*c.rhs, env, window);
            std::set<bool> out;
            for (long long x : lhs) {
              for (long long y : rhs) {
                out.insert(denote_cmp(c.op, x, y));
              }
            }
            return out;
          },
          [&](const Bexp::Bin& b) {
            const auto lhs = eval_bexp(*b.lhs, env, window);
            const auto rhs = eval_bexp(*b.rhs, env, window);
            std::set<bool> out;
            for (bool x : lhs) {
              for (bool y : rhs) {
                out.insert(denote_bop(b.op, x, y));
              }
            }
            return out;
          },
      },
      e.node);
}

CexpPtr residual_skip() {
  static const CexpPtr s = skip();
  return s;
}

CexpPtr unroll(const CexpPtr& loop) {
  const auto& w = std::get<Cexp::While>(loop->node);
  return seq(w.body, loop);
}

std::string state_key(const State& s) {
  std::string key;
  for (const auto& [x, v] : s.env) {
    key += x + "=" + std::to_string(v) + ",";
  }
  return key + "|" + continuation_key(*s.cmd);
}

std::vector<State> step(const State& s, const IntWindow& window) {
  std::vector<State> out;
  std::visit(overloaded{
                 [](const Cexp::Skip&) {},
                 [&](const Cexp::Seq& q) {
                   if (q.first->is_skip()) {
                     out.push_back({s.env, q.second});
                     return;
                   }
                   for (auto& next : step(State{s.env, q.first}, window)) {
                     out.push_back({std::move(next.env), seq(next.cmd, q.second)});
                   }
                 },
                 [&](const Cexp::Assign& a) {
                   for (long long v : eval_aexp(*a.value, s.env, window)) {
                     Env env = s.env;
                     env[a.var] = v;
                     out.push_back({std::move(env), residual_skip()});
                   }
                 },
                 [&](const Cexp::If& i) {
                   for (bool b : eval_bexp(*i.guard, s.env, window)) {
                     out.push_back({s.env, b ? i.then_branch : i.else_branch});
                   }
                 },
                 [&](const Cexp::While& w) {
                   for (bool b : eval_bexp(*w.guard, s.env, window)) {
                     out.push_back({s.env, b ? unroll(s.cmd) : residual_skip()});
                   }
                 },
             },
             s.cmd->node);
  std::sort(out.begin(), out.end(),
            [](const State& a, const State& b) { return state_key(a) < state_key(b); });
  return out;
}

Reachable reachable(const State& init, const IntWindow& window, std::size_t fuel) {
  std::map<std::string, State> seen;
  std::vector<State> frontier{init};
  seen.emplace(state_key(init), init);
  for (std::size_t round = 0; round < fuel && !frontier.empty(); ++round) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (auto& t : step(s, window)) {
        auto key = state_key(t);
        if (seen.emplace(key, t).second) {
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  Reachable r;
  r.exhausted = std::any_of(frontier.begin(), frontier.end(),
                            [](const State& s) { return !s.terminal(); });
  r.states.reserve(seen.size());
  for (auto& [key, s] : seen) {
    r.states.push_back(std::move(s));
  }
  return r;
}

} // namespace cgc::whilelang
