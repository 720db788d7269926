#include <cgc/sign.hpp>

#include <deque>
#include <sstream>

namespace cgc::sign {

using whilelang::Aexp;
using whilelang::Bexp;
using whilelang::Cexp;
using whilelang::CexpPtr;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Sign lookup(const AbsEnv& env, const std::string& x) {
  auto it = env.find(x);
  if (it == env.end()) {
    throw AnalysisError("unbound variable '" + x + "'");
  }
  return it->second;
}

void emit(std::vector<AbsState>& out, AbsEnv env, CexpPtr cmd, std::size_t* pruned) {
  if (unreachable(env)) {
    if (pruned) {
      ++*pruned;
    }
    return;
  }
  out.push_back({std::move(env), std::move(cmd)});
}

} // namespace

Sign abs_aexp(const Aexp& e, const AbsEnv& env) {
  return std::visit(overloaded{
                        [](const Aexp::Int& i) { return eta(i.value); },
                        [&](const Aexp::Var& v) { return lookup(env, v.name); },
                        [](const Aexp::Rand&) { return Sign::Any; },
                        [&](const Aexp::Bin& b) {
                          const Sign l = abs_aexp(*b.lhs, env);
                          const Sign r = abs_aexp(*b.rhs, env);
                          return abs_aop(b.op, l, r);
                        },
                    },
                    e.node);
}

AbsBool abs_bexp(const Bexp& e, const AbsEnv& env) {
  return std::visit(overloaded{
                        [](const Bexp::Bool& b) { return b.value ? AbsBool::TT : AbsBool::FF; },
                        [&](const Bexp::Cmp& c) {
                          const Sign l = abs_aexp(*c.lhs, env);
                          const Sign r = abs_aexp(*c.rhs, env);
                          return abs_cmp(c.op, l, r);
                        },
                        [&](const Bexp::Bin& b) {
                          const AbsBool l = abs_bexp(*b.lhs, env);
                          const AbsBool r = abs_bexp(*b.rhs, env);
                          return abs_bop(b.op, l, r);
                        },
                    },
                    e.node);
}

std::vector<AbsState> abs_step(const AbsState& s, std::size_t* pruned) {
  std::vector<AbsState> out;
  std::visit(overloaded{
                 [](const Cexp::Skip&) {},
                 [&](const Cexp::Seq& q) {
                   if (q.first->is_skip()) {
                     emit(out, s.env, q.second, pruned);
                     return;
                   }
                   for (auto& next : abs_step(AbsState{s.env, q.first}, pruned)) {
                     out.push_back({std::move(next.env), whilelang::seq(next.cmd, q.second)});
                   }
                 },
                 [&](const Cexp::Assign& a) {
                   AbsEnv env = s.env;
                   env[a.var] = abs_aexp(*a.value, s.env);
                   emit(out, std::move(env), whilelang::residual_skip(), pruned);
                 },
                 [&](const Cexp::If& i) {
                   const AbsBool g = abs_bexp(*i.guard, s.env);
                   if (leq(AbsBool::TT, g)) {
                     emit(out, s.env, i.then_branch, pruned);
                   }
                   if (leq(AbsBool::FF, g)) {
                     emit(out, s.env, i.else_branch, pruned);
                   }
                 },
                 [&](const Cexp::While& w) {
                   const AbsBool g = abs_bexp(*w.guard, s.env);
                   if (leq(AbsBool::TT, g)) {
                     emit(out, s.env, whilelang::unroll(s.cmd), pruned);
                   }
                   if (leq(AbsBool::FF, g)) {
                     emit(out, s.env, whilelang::residual_skip(), pruned);
                   }
                 },
             },
             s.cmd->node);
  return out;
}

const AbsEnv& AnalysisResult::at(int point) const {
  if (point == whilelang::kExitPoint) {
    return final_env;
  }
  return points.at(static_cast<std::size_t>(point)).env;
}

AnalysisResult analyze(const CexpPtr& program, const AbsEnv& init) {
  std::vector<std::string> vars;
  for (const auto& [x, s] : init) {
    vars.push_back(x);
  }
  const AbsEnv bottom = uniform_env(vars, Sign::None);

  // Continuations keyed canonically; each holds the join of every env that
  // reached it.
  struct Entry {
    CexpPtr cmd;
    AbsEnv env;
    bool queued = false;
  };
  std::map<std::string, Entry> table;
  std::deque<std::string> work;

  AnalysisResult r;
  if (!unreachable(init)) {
    const auto key = whilelang::continuation_key(*program);
    table.emplace(key, Entry{program, init, true});
    work.push_back(key);
  }
  while (!work.empty()) {
    const std::string key = work.front();
    work.pop_front();
    Entry& e = table.at(key);
    e.queued = false;
    ++r.iterations;
    for (auto& next : abs_step(AbsState{e.env, e.cmd}, &r.pruned_unreachable)) {
      auto nkey = whilelang::continuation_key(*next.cmd);
      auto it = table.find(nkey);
      if (it == table.end()) {
        table.emplace(nkey, Entry{next.cmd, std::move(next.env), true});
        work.push_back(std::move(nkey));
        continue;
      }
      AbsEnv joined = join(it->second.env, next.env);
      if (joined != it->second.env) {
        it->second.env = std::move(joined);
        if (!it->second.queued) {
          it->second.queued = true;
          work.push_back(std::move(nkey));
        }
      }
    }
  }

  const auto nodes = whilelang::points(*program);
  r.points.reserve(nodes.size());
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    r.points.push_back({static_cast<int>(p), nodes[p] ? whilelang::to_string(*nodes[p]) : "",
                        bottom});
  }
  r.final_env = bottom;
  for (const auto& [key, e] : table) {
    const int p = whilelang::point_of(*e.cmd);
    if (p != whilelang::kExitPoint) {
      auto& slot = r.points.at(static_cast<std::size_t>(p)).env;
      slot = join(slot, e.env);
    }
    if (e.cmd->is_skip()) {
      r.final_env = join(r.final_env, e.env);
    }
  }
  return r;
}

nlohmann::json to_json(const AnalysisResult& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : r.points) {
    pts.push_back({{"point", p.point}, {"command", p.command}, {"env", to_json(p.env)}});
  }
  nlohmann::json j;
  j["program_points"] = std::move(pts);
  j["final"] = to_json(r.final_env);
  j["pruned_unreachable"] = r.pruned_unreachable;
  return j;
}

std::string to_text(const AnalysisResult& r) {
  std::ostringstream out;
  for (const auto& p : r.points) {
    out << p.point << "\t" << to_string(p.env) << "\t" << p.command << "\n";
  }
  out << "final\t" << to_string(r.final_env) << "\n";
  out << "pruned unreachable: " << r.pruned_unreachable << "\n";
  return out.str();
}

} // namespace cgc::sign
