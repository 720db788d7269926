#include <cgc/sign.hpp>

#include <algorithm>

namespace cgc::sign {

namespace {

constexpr std::string_view kSignNames[] = {"none", "neg",  "zer",  "pos",
                                           "negz", "nzer", "posz", "any"};

// The three atoms {neg, zer, pos} below a sign.
std::vector<Sign> atoms(Sign s) {
  std::vector<Sign> out;
  for (Sign a : {Sign::Neg, Sign::Zer, Sign::Pos}) {
    if (leq(a, s)) {
      out.push_back(a);
    }
  }
  return out;
}

Sign mul_atoms(Sign a, Sign b) {
  if (a == Sign::Zer || b == Sign::Zer) {
    return Sign::Zer;
  }
  return a == b ? Sign::Pos : Sign::Neg;
}

// Truncating division; a zero divisor contributes nothing.
Sign div_atoms(Sign a, Sign b) {
  if (b == Sign::Zer) {
    return Sign::None;
  }
  if (a == Sign::Zer) {
    return Sign::Zer;
  }
  return a == b ? Sign::PosZ : Sign::NegZ;
}

AbsBool lift(bool b) { return b ? AbsBool::TT : AbsBool::FF; }

AbsBool lt_atoms(Sign a, Sign b) {
  if (a == b) {
    return a == Sign::Zer ? AbsBool::FF : AbsBool::Any;
  }
  // distinct atoms are strictly ordered neg < zer < pos
  return lift(static_cast<int>(a == Sign::Neg ? 0 : a == Sign::Zer ? 1 : 2) <
              static_cast<int>(b == Sign::Neg ? 0 : b == Sign::Zer ? 1 : 2));
}

AbsBool eq_atoms(Sign a, Sign b) {
  if (a != b) {
    return AbsBool::FF;
  }
  return a == Sign::Zer ? AbsBool::TT : AbsBool::Any;
}

std::vector<bool> bool_atoms(AbsBool b) {
  std::vector<bool> out;
  if (leq(AbsBool::FF, b)) out.push_back(false);
  if (leq(AbsBool::TT, b)) out.push_back(true);
  return out;
}

} // namespace

std::string_view name(Sign s) { return kSignNames[id(s)]; }

std::string_view name(AbsBool b) {
  switch (b) {
  case AbsBool::None: return "none";
  case AbsBool::TT: return "tt";
  case AbsBool::FF: return "ff";
  case AbsBool::Any: return "any";
  }
  return "?";
}

std::optional<Sign> parse_sign(std::string_view s) {
  for (Sign x : kAllSigns) {
    if (name(x) == s) {
      return x;
    }
  }
  return std::nullopt;
}

const DomainRef& sign_domain() {
  static const DomainRef d = [] {
    using S = Sign;
    const FiniteDomain::Cover covers[] = {
        {id(S::None), id(S::Neg)},  {id(S::None), id(S::Zer)},  {id(S::None), id(S::Pos)},
        {id(S::Neg), id(S::NegZ)},  {id(S::Neg), id(S::NZer)},  {id(S::Pos), id(S::NZer)},
        {id(S::Pos), id(S::PosZ)},  {id(S::Zer), id(S::NegZ)},  {id(S::Zer), id(S::PosZ)},
        {id(S::NegZ), id(S::Any)},  {id(S::NZer), id(S::Any)},  {id(S::PosZ), id(S::Any)}};
    return FiniteDomain::from_hasse("sign", {kSignNames, kSignNames + 8}, covers);
  }();
  return d;
}

const DomainRef& absbool_domain() {
  static const DomainRef d = [] {
    const FiniteDomain::Cover covers[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    return FiniteDomain::from_hasse("absbool", {"none", "tt", "ff", "any"}, covers);
  }();
  return d;
}

const DomainRef& bool_domain() {
  static const DomainRef d = FiniteDomain::discrete("bool", {"false", "true"});
  return d;
}

bool leq(Sign a, Sign b) { return sign_domain()->leq(id(a), id(b)); }
Sign join(Sign a, Sign b) { return static_cast<Sign>(*sign_domain()->join(id(a), id(b))); }
Sign meet(Sign a, Sign b) { return static_cast<Sign>(*sign_domain()->meet(id(a), id(b))); }
bool leq(AbsBool a, AbsBool b) { return absbool_domain()->leq(id(a), id(b)); }
AbsBool join(AbsBool a, AbsBool b) {
  return static_cast<AbsBool>(*absbool_domain()->join(id(a), id(b)));
}

Sign eta(long long i) {
  if (i < 0) return Sign::Neg;
  if (i == 0) return Sign::Zer;
  return Sign::Pos;
}

bool in_mu(long long i, Sign s) {
  switch (s) {
  case Sign::None: return false;
  case Sign::Neg: return i < 0;
  case Sign::Zer: return i == 0;
  case Sign::Pos: return i > 0;
  case Sign::NegZ: return i <= 0;
  case Sign::NZer: return i != 0;
  case Sign::PosZ: return i >= 0;
  case Sign::Any: return true;
  }
  return false;
}

Sign negate(Sign s) {
  switch (s) {
  case Sign::Neg: return Sign::Pos;
  case Sign::Pos: return Sign::Neg;
  case Sign::NegZ: return Sign::PosZ;
  case Sign::PosZ: return Sign::NegZ;
  default: return s;
  }
}

ConstructiveGC sign_gc(const IntWindow& window) {
  if (window.bound() < 1) {
    throw DomainError("sign_gc needs a window of at least 1");
  }
  const auto& z = window.domain();
  auto e = MonotoneFn::tabulate(z, sign_domain(),
                                [&](ElemId x) { return id(eta(window.value(x))); });
  auto mu = KleisliFn::tabulate(sign_domain(), z, [&](ElemId s) {
    std::vector<ElemId> out;
    for (long long i : window.values()) {
      if (in_mu(i, static_cast<Sign>(s))) {
        out.push_back(window.id(i));
      }
    }
    return out;
  });
  return ConstructiveGC("sign", std::move(e), std::move(mu), window.bound());
}

ConstructiveGC absbool_gc() {
  auto e = MonotoneFn::tabulate(bool_domain(), absbool_domain(),
                                [](ElemId b) { return id(lift(b == 1)); });
  auto mu = KleisliFn::tabulate(absbool_domain(), bool_domain(), [](ElemId a) {
    std::vector<ElemId> out;
    for (bool b : bool_atoms(static_cast<AbsBool>(a))) {
      out.push_back(b ? 1 : 0);
    }
    return out;
  });
  return ConstructiveGC("absbool", std::move(e), std::move(mu));
}

Sign abs_aop(AOp op, Sign a, Sign b) {
  if (a == Sign::None || b == Sign::None) {
    return Sign::None;
  }
  switch (op) {
  case AOp::Add: {
    Sign r = Sign::None;
    if (leq(Sign::Pos, a) || leq(Sign::Pos, b)) r = join(r, Sign::Pos);
    if (leq(Sign::Neg, a) || leq(Sign::Neg, b)) r = join(r, Sign::Neg);
    if (leq(Sign::Zer, a) && leq(Sign::Zer, b)) r = join(r, Sign::Zer);
    if (leq(Sign::Pos, a) && leq(Sign::Neg, b)) r = join(r, Sign::Zer);
    if (leq(Sign::Neg, a) && leq(Sign::Pos, b)) r = join(r, Sign::Zer);
    return r;
  }
  case AOp::Sub:
    return abs_aop(AOp::Add, a, negate(b));
  case AOp::Mul:
  case AOp::Div: {
    Sign r = Sign::None;
    for (Sign x : atoms(a)) {
      for (Sign y : atoms(b)) {
        r = join(r, op == AOp::Mul ? mul_atoms(x, y) : div_atoms(x, y));
      }
    }
    return r;
  }
  }
  return Sign::Any;
}

AbsBool abs_cmp(CmpOp op, Sign a, Sign b) {
  AbsBool r = AbsBool::None;
  for (Sign x : atoms(a)) {
    for (Sign y : atoms(b)) {
      r = join(r, op == CmpOp::Lt ? lt_atoms(x, y) : eq_atoms(x, y));
    }
  }
  return r;
}

AbsBool abs_bop(BOp op, AbsBool a, AbsBool b) {
  AbsBool r = AbsBool::None;
  for (bool x : bool_atoms(a)) {
    for (bool y : bool_atoms(b)) {
      r = join(r, lift(whilelang::denote_bop(op, x, y)));
    }
  }
  return r;
}

IntWindow result_window(const IntWindow& in) {
  const int w = in.bound();
  return IntWindow(std::max(2 * w, w * w));
}

KleisliFn aop_fn(AOp op, const ProductDomain& pairs, const IntWindow& in,
                 const IntWindow& out) {
  return KleisliFn::tabulate(pairs.domain(), out.domain(), [&](ElemId p) {
    const auto [a, b] = pairs.split(p);
    std::vector<ElemId> r;
    if (auto v = whilelang::denote_aop(op, in.value(a), in.value(b))) {
      r.push_back(out.id(*v));
    }
    return r;
  });
}

MonotoneFn aop_sharp_fn(AOp op, const ProductDomain& sign_pairs) {
  return MonotoneFn::tabulate(sign_pairs.domain(), sign_domain(), [&](ElemId q) {
    const auto [a, b] = sign_pairs.split(q);
    return id(abs_aop(op, static_cast<Sign>(a), static_cast<Sign>(b)));
  });
}

KleisliFn cmp_fn(CmpOp op, const ProductDomain& pairs, const IntWindow& in) {
  return KleisliFn::tabulate(pairs.domain(), bool_domain(), [&](ElemId p) {
    const auto [a, b] = pairs.split(p);
    const bool r = whilelang::denote_cmp(op, in.value(a), in.value(b));
    return std::vector<ElemId>{r ? 1u : 0u};
  });
}

MonotoneFn cmp_sharp_fn(CmpOp op, const ProductDomain& sign_pairs) {
  return MonotoneFn::tabulate(sign_pairs.domain(), absbool_domain(), [&](ElemId q) {
    const auto [a, b] = sign_pairs.split(q);
    return id(abs_cmp(op, static_cast<Sign>(a), static_cast<Sign>(b)));
  });
}

KleisliFn bop_fn(BOp op, const ProductDomain& bool_pairs) {
  return KleisliFn::tabulate(bool_pairs.domain(), bool_domain(), [&](ElemId p) {
    const auto [a, b] = bool_pairs.split(p);
    return std::vector<ElemId>{whilelang::denote_bop(op, a == 1, b == 1) ? 1u : 0u};
  });
}

MonotoneFn bop_sharp_fn(BOp op, const ProductDomain& absbool_pairs) {
  return MonotoneFn::tabulate(absbool_pairs.domain(), absbool_domain(), [&](ElemId q) {
    const auto [a, b] = absbool_pairs.split(q);
    return id(abs_bop(op, static_cast<AbsBool>(a), static_cast<AbsBool>(b)));
  });
}

// --- environments ---

bool leq(const AbsEnv& a, const AbsEnv& b) {
  for (const auto& [x, s] : a) {
    auto it = b.find(x);
    if (it == b.end() || !leq(s, it->second)) {
      return false;
    }
  }
  return a.size() == b.size();
}

AbsEnv join(const AbsEnv& a, const AbsEnv& b) {
  AbsEnv out = a;
  for (const auto& [x, s] : b) {
    auto [it, fresh] = out.emplace(x, s);
    if (!fresh) {
      it->second = join(it->second, s);
    }
  }
  return out;
}

bool unreachable(const AbsEnv& env) {
  return std::any_of(env.begin(), env.end(),
                     [](const auto& kv) { return kv.second == Sign::None; });
}

AbsEnv eta_env(const whilelang::Env& env) {
  AbsEnv out;
  for (const auto& [x, v] : env) {
    out.emplace(x, eta(v));
  }
  return out;
}

AbsEnv uniform_env(const std::vector<std::string>& vars, Sign s) {
  AbsEnv out;
  for (const auto& x : vars) {
    out.emplace(x, s);
  }
  return out;
}

std::string to_string(const AbsEnv& env) {
  std::string s = "{";
  for (const auto& [x, v] : env) {
    if (s.size() > 1) {
      s += ", ";
    }
    s += x + ": " + std::string(name(v));
  }
  return s + "}";
}

nlohmann::json to_json(const AbsEnv& env) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [x, v] : env) {
    j[x] = name(v);
  }
  return j;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) {
    r *= b;
  }
  return r;
}

ConstructiveGC build_env_gc(const std::vector<std::string>& vars, const IntWindow& window) {
  if (window.bound() < 1) {
    throw DomainError("env_gc needs a window of at least 1");
  }
  const std::size_t nv = vars.size();
  const std::size_t width = window.domain()->size();
  const std::size_t nc = ipow(width, nv);
  const std::size_t na = ipow(8, nv);
  if (nc > 100000 || na > 4096) {
    throw DomainError("env_gc carrier too large to enumerate");
  }
  // mixed radix, first variable most significant
  auto digits = [nv](std::size_t x, std::size_t radix) {
    std::vector<ElemId> d(nv);
    for (std::size_t k = nv; k-- > 0;) {
      d[k] = static_cast<ElemId>(x % radix);
      x /= radix;
    }
    return d;
  };
  std::vector<std::string> clabels;
  for (std::size_t x = 0; x < nc; ++x) {
    std::string l;
    auto d = digits(x, width);
    for (std::size_t k = 0; k < nv; ++k) {
      l += (k ? "," : "") + vars[k] + "=" + std::to_string(window.value(d[k]));
    }
    clabels.push_back("{" + l + "}");
  }
  std::vector<std::string> alabels;
  for (std::size_t y = 0; y < na; ++y) {
    std::string l;
    auto d = digits(y, 8);
    for (std::size_t k = 0; k < nv; ++k) {
      l += (k ? "," : "") + vars[k] + "=" + std::string(kSignNames[d[k]]);
    }
    alabels.push_back("{" + l + "}");
  }
  auto conc = FiniteDomain::discrete("env", std::move(clabels));
  auto abs = FiniteDomain::from_order("env#", std::move(alabels), [&](ElemId a, ElemId b) {
    auto da = digits(a, 8);
    auto db = digits(b, 8);
    for (std::size_t k = 0; k < nv; ++k) {
      if (!sign_domain()->leq(da[k], db[k])) {
        return false;
      }
    }
    return true;
  });
  auto e = MonotoneFn::tabulate(conc, abs, [&](ElemId x) {
    auto d = digits(x, width);
    ElemId y = 0;
    for (std::size_t k = 0; k < nv; ++k) {
      y = y * 8 + id(eta(window.value(d[k])));
    }
    return y;
  });
  auto mu = KleisliFn::tabulate(abs, conc, [&](ElemId y) {
    auto ds = digits(y, 8);
    std::vector<ElemId> out;
    for (std::size_t x = 0; x < nc; ++x) {
      auto d = digits(x, width);
      bool ok = true;
      for (std::size_t k = 0; k < nv && ok; ++k) {
        ok = in_mu(window.value(d[k]), static_cast<Sign>(ds[k]));
      }
      if (ok) {
        out.push_back(static_cast<ElemId>(x));
      }
    }
    return out;
  });
  return ConstructiveGC("env", std::move(e), std::move(mu), window.bound());
}

} // namespace

EnvGC::EnvGC(std::vector<std::string> vars, const IntWindow& window)
    : m_vars(std::move(vars)), m_window(window), m_gc(build_env_gc(m_vars, m_window)) {}

whilelang::Env EnvGC::env(ElemId x) const {
  whilelang::Env out;
  const std::size_t width = m_window.domain()->size();
  for (std::size_t k = m_vars.size(); k-- > 0;) {
    out[m_vars[k]] = m_window.value(static_cast<ElemId>(x % width));
    x = static_cast<ElemId>(x / width);
  }
  return out;
}

ElemId EnvGC::id(const whilelang::Env& env) const {
  const std::size_t width = m_window.domain()->size();
  ElemId x = 0;
  for (const auto& v : m_vars) {
    x = static_cast<ElemId>(x * width + m_window.id(env.at(v)));
  }
  return x;
}

AbsEnv EnvGC::abs_env(ElemId y) const {
  AbsEnv out;
  for (std::size_t k = m_vars.size(); k-- > 0;) {
    out[m_vars[k]] = static_cast<Sign>(y % 8);
    y /= 8;
  }
  return out;
}

ElemId EnvGC::abs_id(const AbsEnv& env) const {
  ElemId y = 0;
  for (const auto& v : m_vars) {
    y = y * 8 + sign::id(env.at(v));
  }
  return y;
}

} // namespace cgc::sign
