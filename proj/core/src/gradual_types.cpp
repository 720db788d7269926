#include <cgc/gradual.hpp>

namespace cgc::gradual {

namespace {

using K = Type::Kind;

TypePtr make(K k) { return std::make_shared<const Type>(Type{k, nullptr, nullptr}); }

void require_precise(const TypePtr& t, std::string_view what) {
  if (!is_precise(*t)) {
    throw DomainError(std::string(what) + ": expected a precise type, got " + to_string(*t));
  }
}

bool is_base(const Type& t) { return t.kind != K::Arrow; }

} // namespace

TypePtr none_t() {
  static const TypePtr t = make(K::None);
  return t;
}
TypePtr bool_t() {
  static const TypePtr t = make(K::Bool);
  return t;
}
TypePtr any_t() {
  static const TypePtr t = make(K::Any);
  return t;
}
TypePtr unknown_t() {
  static const TypePtr t = make(K::Unknown);
  return t;
}
TypePtr arrow(TypePtr dom, TypePtr cod) {
  return std::make_shared<const Type>(Type{K::Arrow, std::move(dom), std::move(cod)});
}

bool equal(const Type& a, const Type& b) {
  if (a.kind != b.kind) {
    return false;
  }
  return a.kind != K::Arrow || (equal(*a.dom, *b.dom) && equal(*a.cod, *b.cod));
}

bool is_precise(const Type& t) {
  if (t.kind == K::Arrow) {
    return is_precise(*t.dom) && is_precise(*t.cod);
  }
  return t.kind != K::Unknown;
}

int depth(const Type& t) {
  return t.kind == K::Arrow ? 1 + std::max(depth(*t.dom), depth(*t.cod)) : 1;
}

std::string to_string(const Type& t) {
  switch (t.kind) {
  case K::None: return "None";
  case K::Bool: return "Bool";
  case K::Any: return "Any";
  case K::Unknown: return "?";
  case K::Arrow: {
    std::string d = to_string(*t.dom);
    if (t.dom->kind == K::Arrow) {
      d = "(" + d + ")";
    }
    return d + " -> " + to_string(*t.cod);
  }
  }
  return "";
}

std::vector<TypePtr> enumerate_types(int d, bool gradual) {
  std::vector<TypePtr> out;
  if (d < 1) {
    return out;
  }
  out = {none_t(), bool_t(), any_t()};
  if (gradual) {
    out.push_back(unknown_t());
  }
  if (d == 1) {
    return out;
  }
  const auto smaller = enumerate_types(d - 1, gradual);
  for (const auto& a : smaller) {
    for (const auto& b : smaller) {
      out.push_back(arrow(a, b));
    }
  }
  return out;
}

bool subtype(const TypePtr& a, const TypePtr& b) {
  require_precise(a, "subtype");
  require_precise(b, "subtype");
  if (a->kind == K::None || b->kind == K::Any) {
    return true;
  }
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return subtype(b->dom, a->dom) && subtype(a->cod, b->cod);
  }
  return a->kind == K::Bool && b->kind == K::Bool;
}

TypePtr join(const TypePtr& a, const TypePtr& b) {
  if (subtype(a, b)) return b;
  if (subtype(b, a)) return a;
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return arrow(meet(a->dom, b->dom), join(a->cod, b->cod));
  }
  return any_t();
}

TypePtr meet(const TypePtr& a, const TypePtr& b) {
  if (subtype(a, b)) return a;
  if (subtype(b, a)) return b;
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return arrow(join(a->dom, b->dom), meet(a->cod, b->cod));
  }
  return none_t();
}

bool precision_leq(const TypePtr& a, const TypePtr& b) {
  if (b->kind == K::Unknown) {
    return true;
  }
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return precision_leq(a->dom, b->dom) && precision_leq(a->cod, b->cod);
  }
  return is_base(*a) && a->kind == b->kind;
}

bool consistent_subtype(const TypePtr& a, const TypePtr& b) {
  if (a->kind == K::Unknown || b->kind == K::Unknown) {
    return true;
  }
  if (a->kind == K::None || b->kind == K::Any) {
    return true;
  }
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return consistent_subtype(b->dom, a->dom) && consistent_subtype(a->cod, b->cod);
  }
  return a->kind == K::Bool && b->kind == K::Bool;
}

std::vector<TypePtr> concretize(const TypePtr& t, int d) {
  std::vector<TypePtr> out;
  for (const auto& p : enumerate_types(d, false)) {
    if (precision_leq(p, t)) {
      out.push_back(p);
    }
  }
  return out;
}

bool consistent_subtype_witness(const TypePtr& a, const TypePtr& b, int d) {
  const auto ls = concretize(a, d);
  const auto rs = concretize(b, d);
  for (const auto& l : ls) {
    for (const auto& r : rs) {
      if (subtype(l, r)) {
        return true;
      }
    }
  }
  return false;
}

// ? absorbs before the none/any identities apply.
TypePtr gradual_join(const TypePtr& a, const TypePtr& b) {
  if (a->kind == K::Unknown || b->kind == K::Unknown) return unknown_t();
  if (a->kind == K::None) return b;
  if (b->kind == K::None) return a;
  if (a->kind == K::Any || b->kind == K::Any) return any_t();
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return arrow(gradual_meet(a->dom, b->dom), gradual_join(a->cod, b->cod));
  }
  if (a->kind == K::Bool && b->kind == K::Bool) return bool_t();
  return any_t();
}

TypePtr gradual_meet(const TypePtr& a, const TypePtr& b) {
  if (a->kind == K::Unknown || b->kind == K::Unknown) return unknown_t();
  if (a->kind == K::Any) return b;
  if (b->kind == K::Any) return a;
  if (a->kind == K::None || b->kind == K::None) return none_t();
  if (a->kind == K::Arrow && b->kind == K::Arrow) {
    return arrow(gradual_join(a->dom, b->dom), gradual_meet(a->cod, b->cod));
  }
  if (a->kind == K::Bool && b->kind == K::Bool) return bool_t();
  return none_t();
}

namespace {

std::vector<std::string> labels_of(const std::vector<TypePtr>& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const auto& t : ts) {
    out.push_back(to_string(*t));
  }
  return out;
}

ConstructiveGC build(int d, const std::vector<TypePtr>& precise,
                     const std::vector<TypePtr>& gradual) {
  if (d < 1) {
    throw DomainError("gradual_gc needs depth at least 1");
  }
  auto conc = FiniteDomain::discrete("type[" + std::to_string(d) + "]", labels_of(precise));
  auto abs = FiniteDomain::from_order(
      "type#[" + std::to_string(d) + "]", labels_of(gradual),
      [&](ElemId a, ElemId b) { return precision_leq(gradual[a], gradual[b]); });
  auto eta = MonotoneFn::tabulate(conc, abs, [&](ElemId x) {
    return abs->at(to_string(*precise[x])); // the identity injection
  });
  auto mu = KleisliFn::tabulate(abs, conc, [&](ElemId y) {
    std::vector<ElemId> out;
    for (ElemId x = 0; x < precise.size(); ++x) {
      if (precision_leq(precise[x], gradual[y])) {
        out.push_back(x);
      }
    }
    return out;
  });
  return ConstructiveGC("gradual", std::move(eta), std::move(mu));
}

} // namespace

GradualGC::GradualGC(int d)
    : m_depth(d),
      m_precise(enumerate_types(d, false)),
      m_gradual(enumerate_types(d, true)),
      m_gc(build(d, m_precise, m_gradual)) {
  for (ElemId i = 0; i < m_precise.size(); ++i) {
    m_precise_ids.emplace(to_string(*m_precise[i]), i);
  }
  for (ElemId i = 0; i < m_gradual.size(); ++i) {
    m_gradual_ids.emplace(to_string(*m_gradual[i]), i);
  }
}

ElemId GradualGC::precise_id(const TypePtr& t) const {
  auto it = m_precise_ids.find(to_string(*t));
  if (it == m_precise_ids.end()) {
    throw DomainError("type " + to_string(*t) + " is outside the depth-" +
                      std::to_string(m_depth) + " precise carrier");
  }
  return it->second;
}

ElemId GradualGC::gradual_id(const TypePtr& t) const {
  auto it = m_gradual_ids.find(to_string(*t));
  if (it == m_gradual_ids.end()) {
    throw DomainError("type " + to_string(*t) + " is outside the depth-" +
                      std::to_string(m_depth) + " gradual carrier");
  }
  return it->second;
}

ConstructiveGC gradual_gc(int depth) { return GradualGC(depth).gc(); }

} // namespace cgc::gradual
