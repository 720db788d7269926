#include <cgc/parity.hpp>

#include <algorithm>
#include <cstdlib>

namespace cgc::parity {

std::string_view name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view name(ParityPlus p) {
  switch (p) {
  case ParityPlus::Even: return "even";
  case ParityPlus::Odd: return "odd";
  case ParityPlus::Any: return "any";
  }
  return "?";
}

Parity parity(long long n) { return (std::llabs(n) % 2 == 0) ? Parity::Even : Parity::Odd; }

Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

Parity succ_sharp(Parity p) { return flip(p); }

ParityPlus max_sharp(ParityPlus a, ParityPlus b) {
  if (a == b) {
    return a;
  }
  // mixed parities or any operand: the max may take either parity
  return ParityPlus::Any;
}

const DomainRef& parity_domain() {
  static const DomainRef d = FiniteDomain::discrete("parity", {"even", "odd"});
  return d;
}

const DomainRef& parity_plus_domain() {
  static const DomainRef d = [] {
    const FiniteDomain::Cover covers[] = {{0, 2}, {1, 2}};
    return FiniteDomain::from_hasse("parity+", {"even", "odd", "any"}, covers);
  }();
  return d;
}

ConstructiveGC parity_gc(const IntWindow& window) {
  if (window.bound() < 1) {
    throw DomainError("parity_gc needs a window of at least 1");
  }
  const auto& z = window.domain();
  auto eta = MonotoneFn::tabulate(z, parity_domain(), [&](ElemId x) {
    return id(parity(window.value(x)));
  });
  auto mu = KleisliFn::tabulate(parity_domain(), z, [&](ElemId p) {
    std::vector<ElemId> out;
    for (long long n : window.values()) {
      if ((std::llabs(n) % 2) == p) {
        out.push_back(window.id(n));
      }
    }
    return out;
  });
  return ConstructiveGC("parity", std::move(eta), std::move(mu), window.bound());
}

ConstructiveGC parity_plus_gc(const IntWindow& window) {
  if (window.bound() < 1) {
    throw DomainError("parity_plus_gc needs a window of at least 1");
  }
  const auto& z = window.domain();
  auto eta = MonotoneFn::tabulate(z, parity_plus_domain(), [&](ElemId x) {
    return id(parity(window.value(x)));
  });
  auto mu = KleisliFn::tabulate(parity_plus_domain(), z, [&](ElemId p) {
    std::vector<ElemId> out;
    for (long long n : window.values()) {
      if (p == id(ParityPlus::Any) || (std::llabs(n) % 2) == p) {
        out.push_back(window.id(n));
      }
    }
    return out;
  });
  return ConstructiveGC("parity+", std::move(eta), std::move(mu), window.bound());
}

KleisliFn succ_fn(const IntWindow& in, const IntWindow& out) {
  return KleisliFn::tabulate(in.domain(), out.domain(), [&](ElemId x) {
    return std::vector<ElemId>{out.id(in.value(x) + 1)};
  });
}

MonotoneFn succ_sharp_fn() {
  return MonotoneFn::tabulate(parity_domain(), parity_domain(), [](ElemId p) {
    return id(succ_sharp(static_cast<Parity>(p)));
  });
}

KleisliFn max_fn(const ProductDomain& pairs, const IntWindow& window) {
  return KleisliFn::tabulate(pairs.domain(), window.domain(), [&](ElemId p) {
    const auto [a, b] = pairs.split(p);
    return std::vector<ElemId>{
        window.id(std::max(window.value(a), window.value(b)))};
  });
}

MonotoneFn max_sharp_fn(const ProductDomain& abstract_pairs) {
  return MonotoneFn::tabulate(abstract_pairs.domain(), parity_plus_domain(),
                              [&](ElemId q) {
                                const auto [a, b] = abstract_pairs.split(q);
                                return id(max_sharp(static_cast<ParityPlus>(a),
                                                    static_cast<ParityPlus>(b)));
                              });
}

} // namespace cgc::parity
