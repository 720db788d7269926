#include "cli.hpp"

#include <cgc/galois.hpp>
#include <cgc/gradual.hpp>
#include <cgc/parity.hpp>
#include <cgc/sign.hpp>

#include <stdexcept>

namespace cgc::cli {

namespace {

void append_gc_laws(std::vector<LawReport>& out, const ConstructiveGC& gc) {
  out.push_back(check_correspondence(gc));
  out.push_back(check_expansive(gc));
  out.push_back(check_reductive(gc));
}

void append_operator(std::vector<LawReport>& out, const std::string& label,
                     const KleisliFn& f, const MonotoneFn& fsharp,
                     const ConstructiveGC& in, const ConstructiveGC& ogc) {
  for (Variant v : kAllVariants) {
    auto r = check_soundness(f, fsharp, in, ogc, v);
    r.note("operator " + label);
    out.push_back(std::move(r));
  }
  auto r = check_optimality(f, fsharp, in, ogc);
  r.note("operator " + label);
  out.push_back(std::move(r));
}

std::vector<LawReport> parity_suite(const Config& cfg) {
  std::vector<LawReport> out;
  const IntWindow w(cfg.window);
  const IntWindow w1(cfg.window + 1);
  const auto gc = parity::parity_gc(w);
  append_gc_laws(out, gc);
  append_operator(out, "succ", parity::succ_fn(w, w1), parity::succ_sharp_fn(), gc,
                  parity::parity_gc(w1));
  return out;
}

std::vector<LawReport> parity_plus_suite(const Config& cfg) {
  std::vector<LawReport> out;
  const IntWindow w(cfg.window);
  const auto gc = parity::parity_plus_gc(w);
  append_gc_laws(out, gc);
  const auto pairs = product_gc(gc, gc);
  append_operator(out, "max", parity::max_fn(pairs.concrete, w),
                  parity::max_sharp_fn(pairs.abstract), pairs.gc, gc);
  return out;
}

std::vector<LawReport> sign_suite(const Config& cfg) {
  using namespace sign;
  std::vector<LawReport> out;
  const IntWindow w(cfg.window);
  const IntWindow wide = result_window(w);
  const auto gc = sign_gc(w);
  const auto out_gc = sign_gc(wide);
  const auto bgc = absbool_gc();
  append_gc_laws(out, gc);
  append_gc_laws(out, bgc);

  const auto pairs = product_gc(gc, gc);
  for (AOp op : {AOp::Add, AOp::Sub, AOp::Mul, AOp::Div}) {
    append_operator(out, std::string(whilelang::symbol(op)),
                    aop_fn(op, pairs.concrete, w, wide), aop_sharp_fn(op, pairs.abstract),
                    pairs.gc, out_gc);
  }
  for (CmpOp op : {CmpOp::Lt, CmpOp::Eq}) {
    append_operator(out, std::string(whilelang::symbol(op)), cmp_fn(op, pairs.concrete, w),
                    cmp_sharp_fn(op, pairs.abstract), pairs.gc, bgc);
  }
  const auto bpairs = product_gc(bgc, bgc);
  for (BOp op : {BOp::Or, BOp::And}) {
    append_operator(out, std::string(whilelang::symbol(op)), bop_fn(op, bpairs.concrete),
                    bop_sharp_fn(op, bpairs.abstract), bpairs.gc, bgc);
  }

  // The lifted classical connection: every abstract downset, sampled
  // concrete downsets (the concrete carrier has 2^(2W+1) of them).
  const auto classical = lift_to_classical(lift_to_kleisli(gc));
  const auto cs = sample_downsets(gc.concrete(), 256, cfg.seed);
  const auto as = all_downsets(gc.abstract());
  out.push_back(check_classical_correspondence(
      classical, cs, as, "256 sampled concrete downsets, seed " + std::to_string(cfg.seed)));
  return out;
}

std::vector<LawReport> env_suite(const Config& cfg) {
  using namespace sign;
  std::vector<LawReport> out;
  const EnvGC env({"x", "y"}, IntWindow(cfg.window));
  const IntWindow& w = env.window();
  append_gc_laws(out, env.gc());

  // A#[rand] and A#[x] against the concrete collecting semantics (mu-eta).
  const auto out_gc = sign_gc(w);
  const std::pair<const char*, whilelang::AexpPtr> exprs[] = {
      {"rand", whilelang::rand_exp()}, {"x", whilelang::var("x")}};
  for (const auto& [label, ae] : exprs) {
    const auto f = KleisliFn::tabulate(env.gc().concrete(), w.domain(), [&](ElemId x) {
      std::vector<ElemId> ids;
      for (long long i : whilelang::eval_aexp(*ae, env.env(x), w)) {
        ids.push_back(w.id(i));
      }
      return ids;
    });
    const auto fsharp = MonotoneFn::tabulate(env.gc().abstract(), sign_domain(), [&](ElemId y) {
      return id(abs_aexp(*ae, env.abs_env(y)));
    });
    auto r = check_soundness(f, fsharp, env.gc(), out_gc, Variant::MuEta);
    r.note(std::string("expression ") + label);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<LawReport> gradual_suite(const Config& cfg) {
  using namespace gradual;
  std::vector<LawReport> out;
  const GradualGC g(cfg.depth);
  append_gc_laws(out, g.gc());

  const auto& types = g.gradual();
  LawReport cs("consistent-subtype/witness", g.gc().carrier(), std::nullopt);
  LawReport unknown("unknown-absorbs", g.gc().carrier(), std::nullopt);
  for (const auto& a : types) {
    for (const auto& b : types) {
      const bool alg = consistent_subtype(a, b);
      const bool wit = consistent_subtype_witness(a, b, cfg.depth + 1);
      if (alg != wit) {
        cs.add({{"left", to_string(*a)}, {"right", to_string(*b)},
                {"algorithmic", alg ? "true" : "false"}, {"witness", wit ? "true" : "false"}});
      }
    }
    const auto q = unknown_t();
    if (!consistent_subtype(q, a) || !consistent_subtype(a, q) ||
        gradual_join(q, a)->kind != Type::Kind::Unknown ||
        gradual_join(a, q)->kind != Type::Kind::Unknown) {
      unknown.add({{"type", to_string(*a)}});
    }
  }
  cs.set_checked(types.size() * types.size());
  cs.note("witness depth " + std::to_string(cfg.depth + 1));
  unknown.set_checked(types.size());
  out.push_back(std::move(cs));
  out.push_back(std::move(unknown));

  // Gradual join over-approximates the precise join through the connection.
  const auto pairs = product_gc(g.gc(), g.gc());
  const auto& precise = g.precise();
  const auto f = KleisliFn::tabulate(pairs.concrete.domain(), g.gc().concrete(), [&](ElemId p) {
    const auto [a, b] = pairs.concrete.split(p);
    return std::vector<ElemId>{g.precise_id(join(precise[a], precise[b]))};
  });
  const auto fsharp = MonotoneFn::tabulate(pairs.abstract.domain(), g.gc().abstract(),
                                           [&](ElemId q) {
                                             const auto [a, b] = pairs.abstract.split(q);
                                             return g.gradual_id(gradual_join(types[a], types[b]));
                                           });
  auto js = check_soundness(f, fsharp, pairs.gc, g.gc(), Variant::EtaMu);
  js.note("operator gradual join");
  out.push_back(std::move(js));
  return out;
}

} // namespace

std::vector<LawReport> law_suite(const std::string& domain, const Config& cfg) {
  if (domain == "parity") return parity_suite(cfg);
  if (domain == "parity+") return parity_plus_suite(cfg);
  if (domain == "sign") return sign_suite(cfg);
  if (domain == "env") return env_suite(cfg);
  if (domain == "gradual") return gradual_suite(cfg);
  throw std::invalid_argument("unknown law domain '" + domain +
                              "' (expected parity, parity+, sign, env or gradual)");
}

} // namespace cgc::cli
