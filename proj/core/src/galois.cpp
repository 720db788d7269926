#include <cgc/galois.hpp>

namespace cgc {

namespace {

std::string arrow(const DomainRef& c, const DomainRef& a) {
  return c->name() + " <-> " + a->name();
}

template <typename Fn>
void for_each_member(const Bits& bits, Fn&& fn) {
  for (std::size_t x = bits.find_first(); x != Bits::npos; x = bits.find_next(x)) {
    fn(static_cast<ElemId>(x));
  }
}

std::optional<int> first_window(const ConstructiveGC& in, const ConstructiveGC& out) {
  return in.window() ? in.window() : out.window();
}

} // namespace

ConstructiveGC::ConstructiveGC(std::string name, MonotoneFn eta, KleisliFn mu,
                               std::optional<int> window)
    : m_name(std::move(name)), m_eta(std::move(eta)), m_mu(std::move(mu)),
      m_window(window) {
  require_same(m_eta.dom(), m_mu.cod(), "constructive GC concrete carrier");
  require_same(m_eta.cod(), m_mu.dom(), "constructive GC abstract carrier");
}

std::string ConstructiveGC::carrier() const {
  return m_name + ": " + arrow(concrete(), abstract());
}

KleisliGC::KleisliGC(std::string name, KleisliFn kalpha, KleisliFn kgamma,
                     std::optional<int> window)
    : m_name(std::move(name)), m_kalpha(std::move(kalpha)),
      m_kgamma(std::move(kgamma)), m_window(window) {
  require_same(m_kalpha.dom(), m_kgamma.cod(), "Kleisli GC concrete carrier");
  require_same(m_kalpha.cod(), m_kgamma.dom(), "Kleisli GC abstract carrier");
}

std::string KleisliGC::carrier() const {
  return m_name + ": " + arrow(concrete(), abstract());
}

ClassicalGC::ClassicalGC(std::string name, DomainRef concrete, DomainRef abstract,
                         Map alpha, Map gamma, std::optional<int> window)
    : m_name(std::move(name)), m_concrete(std::move(concrete)),
      m_abstract(std::move(abstract)), m_alpha(std::move(alpha)),
      m_gamma(std::move(gamma)), m_window(window) {}

DownSet ClassicalGC::alpha(const DownSet& xs) const {
  require_same(xs.domain(), m_concrete, "alpha");
  DownSet out = m_alpha(xs);
  require_same(out.domain(), m_abstract, "alpha result");
  return out;
}

DownSet ClassicalGC::gamma(const DownSet& ys) const {
  require_same(ys.domain(), m_abstract, "gamma");
  DownSet out = m_gamma(ys);
  require_same(out.domain(), m_concrete, "gamma result");
  return out;
}

std::string ClassicalGC::carrier() const {
  return m_name + ": P(" + m_concrete->name() + ") <-> P(" + m_abstract->name() + ")";
}

LawReport check_correspondence(const ConstructiveGC& gc) {
  LawReport report("correspondence", gc.carrier(), gc.window());
  const auto& c = *gc.concrete();
  const auto& a = *gc.abstract();
  std::size_t checked = 0;
  for (ElemId x = 0; x < c.size(); ++x) {
    const ElemId ex = gc.eta()(x);
    for (ElemId y = 0; y < a.size(); ++y) {
      ++checked;
      const bool in_mu = gc.mu()(y).contains(x);
      const bool below = a.leq(ex, y);
      if (in_mu != below) {
        report.add({{"x", c.label(x)},
                    {"y", a.label(y)},
                    {"x_in_mu_y", in_mu ? "true" : "false"},
                    {"eta_x_leq_y", below ? "true" : "false"}});
      }
    }
  }
  report.set_checked(checked);
  return report;
}

LawReport check_expansive(const ConstructiveGC& gc) {
  LawReport report("expansive", gc.carrier(), gc.window());
  const auto& c = *gc.concrete();
  for (ElemId x = 0; x < c.size(); ++x) {
    const ElemId ex = gc.eta()(x);
    if (!gc.mu()(ex).contains(x)) {
      report.add({{"x", c.label(x)}, {"eta_x", gc.abstract()->label(ex)}});
    }
  }
  report.set_checked(c.size());
  return report;
}

LawReport check_reductive(const ConstructiveGC& gc) {
  LawReport report("reductive", gc.carrier(), gc.window());
  const auto& c = *gc.concrete();
  const auto& a = *gc.abstract();
  std::size_t checked = 0;
  for (ElemId y = 0; y < a.size(); ++y) {
    for_each_member(gc.mu()(y).bits(), [&](ElemId x) {
      ++checked;
      const ElemId ex = gc.eta()(x);
      if (!a.leq(ex, y)) {
        report.add({{"x", c.label(x)}, {"y", a.label(y)}, {"eta_x", a.label(ex)}});
      }
    });
  }
  report.set_checked(checked);
  return report;
}

LawReport check_kleisli_expansive(const KleisliGC& gc) {
  LawReport report("kleisli-expansive", gc.carrier(), gc.window());
  const auto round_trip = kcompose(gc.kgamma(), gc.kalpha());
  const auto& c = gc.concrete();
  for (ElemId x = 0; x < c->size(); ++x) {
    if (!ret(x, c).subset_of(round_trip(x))) {
      report.add({{"x", c->label(x)}, {"kgamma_kalpha_x", round_trip(x).to_string()}});
    }
  }
  report.set_checked(c->size());
  return report;
}

LawReport check_kleisli_reductive(const KleisliGC& gc) {
  LawReport report("kleisli-reductive", gc.carrier(), gc.window());
  const auto round_trip = kcompose(gc.kalpha(), gc.kgamma());
  const auto& a = gc.abstract();
  for (ElemId y = 0; y < a->size(); ++y) {
    if (!round_trip(y).subset_of(ret(y, a))) {
      report.add({{"y", a->label(y)}, {"kalpha_kgamma_y", round_trip(y).to_string()}});
    }
  }
  report.set_checked(a->size());
  return report;
}

LawReport check_classical_correspondence(const ClassicalGC& gc,
                                         std::span<const DownSet> concrete_sets,
                                         std::span<const DownSet> abstract_sets,
                                         std::string_view sampling) {
  LawReport report("classical-correspondence", gc.carrier(), gc.window());
  report.note(std::string(sampling));
  std::vector<DownSet> gammas;
  gammas.reserve(abstract_sets.size());
  for (const DownSet& p : abstract_sets) {
    gammas.push_back(gc.gamma(p));
  }
  std::size_t checked = 0;
  for (const DownSet& n : concrete_sets) {
    const DownSet an = gc.alpha(n);
    for (std::size_t i = 0; i < abstract_sets.size(); ++i) {
      ++checked;
      const bool lhs = n.subset_of(gammas[i]);
      const bool rhs = an.subset_of(abstract_sets[i]);
      if (lhs != rhs) {
        report.add({{"N", n.to_string()},
                    {"P", abstract_sets[i].to_string()},
                    {"N_sub_gamma_P", lhs ? "true" : "false"},
                    {"alpha_N_sub_P", rhs ? "true" : "false"}});
      }
    }
  }
  report.set_checked(checked);
  return report;
}

KleisliGC lift_to_kleisli(const ConstructiveGC& gc) {
  return KleisliGC(gc.name(), pure(gc.eta()), gc.mu(), gc.window());
}

ClassicalGC lift_to_classical(const KleisliGC& gc) {
  KleisliFn ka = gc.kalpha();
  KleisliFn kg = gc.kgamma();
  return ClassicalGC(
      gc.name(), gc.concrete(), gc.abstract(),
      [ka](const DownSet& xs) { return bind(xs, ka); },
      [kg](const DownSet& ys) { return bind(ys, kg); }, gc.window());
}

KleisliGC lower_to_kleisli(const ClassicalGC& gc) {
  const auto& c = gc.concrete();
  const auto& a = gc.abstract();
  std::vector<DownSet> ka;
  ka.reserve(c->size());
  for (ElemId x = 0; x < c->size(); ++x) {
    ka.push_back(gc.alpha(ret(x, c)));
  }
  std::vector<DownSet> kg;
  kg.reserve(a->size());
  for (ElemId y = 0; y < a->size(); ++y) {
    kg.push_back(gc.gamma(ret(y, a)));
  }
  return KleisliGC(gc.name(), KleisliFn(c, a, std::move(ka)),
                   KleisliFn(a, c, std::move(kg)), gc.window());
}

Induced induce(const KleisliGC& gc) {
  const auto& c = gc.concrete();
  std::vector<ElemId> eta;
  eta.reserve(c->size());
  for (ElemId x = 0; x < c->size(); ++x) {
    const DownSet& image = gc.kalpha()(x);
    const auto top = gc.abstract()->maximum(image.bits());
    if (!top) {
      return NotLiftedForm{x, c->label(x), image.to_string()};
    }
    eta.push_back(*top);
  }
  return ConstructiveGC(gc.name(), MonotoneFn(c, gc.abstract(), std::move(eta)),
                        gc.kgamma(), gc.window());
}

std::string_view to_string(Variant v) {
  switch (v) {
  case Variant::EtaMu: return "eta-mu";
  case Variant::MuMu: return "mu-mu";
  case Variant::EtaEta: return "eta-eta";
  case Variant::MuEta: return "mu-eta";
  }
  return "?";
}

LawReport check_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                          const ConstructiveGC& in, const ConstructiveGC& out,
                          Variant variant) {
  require_same(f.dom(), in.concrete(), "soundness: concrete input");
  require_same(f.cod(), out.concrete(), "soundness: concrete output");
  require_same(fsharp.dom(), in.abstract(), "soundness: abstract input");
  require_same(fsharp.cod(), out.abstract(), "soundness: abstract output");

  LawReport report("soundness/" + std::string(to_string(variant)),
                   in.carrier() + " => " + out.carrier(), first_window(in, out));
  const auto& ci = *in.concrete();
  const auto& ai = *in.abstract();
  const auto& co = *out.concrete();
  const auto& ao = *out.abstract();
  std::size_t checked = 0;

  switch (variant) {
  case Variant::EtaMu:
    // x in mu(y) and y' <= eta(x'), x' in f(x)  ==>  y' <= f#(y)
    for (ElemId y = 0; y < ai.size(); ++y) {
      const ElemId fy = fsharp(y);
      for_each_member(in.mu()(y).bits(), [&](ElemId x) {
        for_each_member(f(x).bits(), [&](ElemId x2) {
          for_each_member(ao.down(out.eta()(x2)), [&](ElemId y2) {
            ++checked;
            if (!ao.leq(y2, fy)) {
              report.add({{"y", ai.label(y)}, {"x", ci.label(x)},
                          {"x'", co.label(x2)}, {"y'", ao.label(y2)},
                          {"fsharp_y", ao.label(fy)}});
            }
          });
        });
      });
    }
    break;
  case Variant::MuMu:
    // x in mu(y) and x' in f(x)  ==>  x' in mu(f#(y))
    for (ElemId y = 0; y < ai.size(); ++y) {
      const DownSet& target = out.mu()(fsharp(y));
      for_each_member(in.mu()(y).bits(), [&](ElemId x) {
        for_each_member(f(x).bits(), [&](ElemId x2) {
          ++checked;
          if (!target.contains(x2)) {
            report.add({{"y", ai.label(y)}, {"x", ci.label(x)},
                        {"x'", co.label(x2)}, {"fsharp_y", ao.label(fsharp(y))}});
          }
        });
      });
    }
    break;
  case Variant::EtaEta:
    // y <= eta(x'), x' in f(x)  ==>  y <= f#(eta(x))
    for (ElemId x = 0; x < ci.size(); ++x) {
      const ElemId fex = fsharp(in.eta()(x));
      for_each_member(f(x).bits(), [&](ElemId x2) {
        for_each_member(ao.down(out.eta()(x2)), [&](ElemId y) {
          ++checked;
          if (!ao.leq(y, fex)) {
            report.add({{"x", ci.label(x)}, {"x'", co.label(x2)},
                        {"y", ao.label(y)}, {"fsharp_eta_x", ao.label(fex)}});
          }
        });
      });
    }
    break;
  case Variant::MuEta:
    // x' in f(x)  ==>  x' in mu(f#(eta(x)))
    for (ElemId x = 0; x < ci.size(); ++x) {
      const ElemId fex = fsharp(in.eta()(x));
      const DownSet& target = out.mu()(fex);
      for_each_member(f(x).bits(), [&](ElemId x2) {
        ++checked;
        if (!target.contains(x2)) {
          report.add({{"x", ci.label(x)}, {"x'", co.label(x2)},
                      {"fsharp_eta_x", ao.label(fex)}});
        }
      });
    }
    break;
  }
  report.set_checked(checked);
  return report;
}

LawReport check_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                          const ConstructiveGC& gc, Variant variant) {
  return check_soundness(f, fsharp, gc, gc, variant);
}

MonotoneFn best_abstraction(const KleisliFn& f, const ConstructiveGC& in,
                            const ConstructiveGC& out) {
  require_same(f.dom(), in.concrete(), "best_abstraction: concrete input");
  require_same(f.cod(), out.concrete(), "best_abstraction: concrete output");
  const auto& ao = *out.abstract();
  std::vector<ElemId> table;
  table.reserve(in.abstract()->size());
  for (ElemId y = 0; y < in.abstract()->size(); ++y) {
    Bits images = ao.empty_bits();
    for_each_member(in.mu()(y).bits(), [&](ElemId x) {
      for_each_member(f(x).bits(), [&](ElemId x2) { images.set(out.eta()(x2)); });
    });
    const auto j = ao.join(images);
    if (!j) {
      throw LatticeError("best_abstraction: no join in " + ao.name() +
                         " for the image of " + in.abstract()->label(y));
    }
    table.push_back(*j);
  }
  return MonotoneFn(in.abstract(), out.abstract(), std::move(table));
}

MonotoneFn best_abstraction(const KleisliFn& f, const ConstructiveGC& gc) {
  return best_abstraction(f, gc, gc);
}

LawReport check_optimality(const KleisliFn& f, const MonotoneFn& fsharp,
                           const ConstructiveGC& in, const ConstructiveGC& out) {
  require_same(fsharp.dom(), in.abstract(), "optimality: abstract input");
  require_same(fsharp.cod(), out.abstract(), "optimality: abstract output");
  LawReport report("optimality", in.carrier() + " => " + out.carrier(),
                   first_window(in, out));
  const MonotoneFn best = best_abstraction(f, in, out);
  const auto& ai = *in.abstract();
  const auto& ao = *out.abstract();
  for (ElemId y = 0; y < ai.size(); ++y) {
    if (best(y) != fsharp(y)) {
      report.add({{"y", ai.label(y)},
                  {"expected", ao.label(best(y))},
                  {"actual", ao.label(fsharp(y))}});
    }
  }
  report.set_checked(ai.size());
  return report;
}

LawReport check_optimality(const KleisliFn& f, const MonotoneFn& fsharp,
                           const ConstructiveGC& gc) {
  return check_optimality(f, fsharp, gc, gc);
}

LawReport check_kleisli_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                                  const KleisliGC& in, const KleisliGC& out) {
  require_same(f.dom(), in.concrete(), "Kleisli soundness: concrete input");
  require_same(f.cod(), out.concrete(), "Kleisli soundness: concrete output");
  LawReport report("kleisli-soundness", in.carrier() + " => " + out.carrier(),
                   in.window() ? in.window() : out.window());
  const auto spec = kcompose(out.kalpha(), kcompose(f, in.kgamma()));
  const auto lifted = pure(fsharp);
  const auto& ai = *in.abstract();
  for (ElemId y = 0; y < ai.size(); ++y) {
    if (!spec(y).subset_of(lifted(y))) {
      report.add({{"y", ai.label(y)},
                  {"spec", spec(y).to_string()},
                  {"fsharp_y", out.abstract()->label(fsharp(y))}});
    }
  }
  report.set_checked(ai.size());
  return report;
}

LawReport check_classical_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                                    const ClassicalGC& in, const ClassicalGC& out,
                                    std::span<const DownSet> abstract_sets,
                                    std::string_view sampling) {
  LawReport report("classical-soundness", in.carrier() + " => " + out.carrier(),
                   in.window() ? in.window() : out.window());
  report.note(std::string(sampling));
  const auto lifted = pure(fsharp);
  for (const DownSet& ys : abstract_sets) {
    const DownSet lhs = out.alpha(bind(in.gamma(ys), f));
    const DownSet rhs = bind(ys, lifted);
    if (!lhs.subset_of(rhs)) {
      report.add({{"Y", ys.to_string()},
                  {"alpha_f_gamma_Y", lhs.to_string()},
                  {"fsharp_Y", rhs.to_string()}});
    }
  }
  report.set_checked(abstract_sets.size());
  return report;
}

ProductGC product_gc(const ConstructiveGC& left, const ConstructiveGC& right) {
  ProductDomain conc(left.concrete(), right.concrete());
  ProductDomain abs(left.abstract(), right.abstract());
  auto eta = MonotoneFn::tabulate(conc.domain(), abs.domain(), [&](ElemId p) {
    const auto [a, b] = conc.split(p);
    return abs.pair(left.eta()(a), right.eta()(b));
  });
  auto mu = KleisliFn::tabulate(abs.domain(), conc.domain(), [&](ElemId q) {
    const auto [ya, yb] = abs.split(q);
    std::vector<ElemId> out;
    for (ElemId a : left.mu()(ya).members()) {
      for (ElemId b : right.mu()(yb).members()) {
        out.push_back(conc.pair(a, b));
      }
    }
    return out;
  });
  std::optional<int> window = left.window() ? left.window() : right.window();
  ConstructiveGC gc(left.name() + "x" + right.name(), std::move(eta), std::move(mu),
                    window);
  return ProductGC{std::move(conc), std::move(abs), std::move(gc)};
}

DownSet IaConnection::components_of(const DownSet& left, const DownSet& right) const {
  require_same(left.domain(), pairs.left(), "IA left component");
  require_same(right.domain(), pairs.right(), "IA right component");
  const std::size_t nl = pairs.left()->size();
  std::vector<ElemId> raw;
  for (ElemId a : left.members()) {
    raw.push_back(a);
  }
  for (ElemId b : right.members()) {
    raw.push_back(static_cast<ElemId>(nl + b));
  }
  return DownSet(components, std::span<const ElemId>(raw));
}

std::pair<DownSet, DownSet> IaConnection::split(const DownSet& comps) const {
  require_same(comps.domain(), components, "IA components");
  const std::size_t nl = pairs.left()->size();
  std::vector<ElemId> l;
  std::vector<ElemId> r;
  for (ElemId z : comps.members()) {
    if (z < nl) {
      l.push_back(z);
    } else {
      r.push_back(static_cast<ElemId>(z - nl));
    }
  }
  return {DownSet(pairs.left(), std::span<const ElemId>(l)),
          DownSet(pairs.right(), std::span<const ElemId>(r))};
}

IaConnection ia_connection(const DomainRef& a, const DomainRef& b) {
  ProductDomain pairs(a, b);
  const std::size_t na = a->size();
  const std::size_t nb = b->size();
  std::vector<std::string> labels;
  labels.reserve(na + nb);
  for (ElemId x = 0; x < na; ++x) {
    labels.push_back("l:" + a->label(x));
  }
  for (ElemId y = 0; y < nb; ++y) {
    labels.push_back("r:" + b->label(y));
  }
  DomainRef sum = FiniteDomain::from_order(
      a->name() + "+" + b->name(), std::move(labels), [a, b, na](ElemId p, ElemId q) {
        if (p < na && q < na) {
          return a->leq(p, q);
        }
        if (p >= na && q >= na) {
          return b->leq(static_cast<ElemId>(p - na), static_cast<ElemId>(q - na));
        }
        return false;
      });

  const ProductDomain pd = pairs;
  auto alpha = [pd, sum, na](const DownSet& rel) {
    std::vector<ElemId> raw;
    for (ElemId p : rel.members()) {
      const auto [x, y] = pd.split(p);
      raw.push_back(x);
      raw.push_back(static_cast<ElemId>(na + y));
    }
    return DownSet(sum, std::span<const ElemId>(raw));
  };
  auto gamma = [pd, na](const DownSet& comps) {
    std::vector<ElemId> raw;
    std::vector<ElemId> ls;
    std::vector<ElemId> rs;
    for (ElemId z : comps.members()) {
      (z < na ? ls : rs).push_back(z < na ? z : static_cast<ElemId>(z - na));
    }
    for (ElemId x : ls) {
      for (ElemId y : rs) {
        raw.push_back(pd.pair(x, y));
      }
    }
    return DownSet(pd.domain(), std::span<const ElemId>(raw));
  };
  ClassicalGC gc("independent-attributes", pairs.domain(), sum, alpha, gamma);
  return IaConnection{std::move(pairs), std::move(sum), std::move(gc)};
}

} // namespace cgc
