#pragma once

// Parity abstraction of the integers: the two-point discrete domain
// {even, odd} and its extension with a top element `any`.

#include <cgc/galois.hpp>

namespace cgc::parity {

enum class Parity : ElemId { Even = 0, Odd = 1 };
enum class ParityPlus : ElemId { Even = 0, Odd = 1, Any = 2 };

std::string_view name(Parity p);
std::string_view name(ParityPlus p);

// Extended to negative integers through |n|.
Parity parity(long long n);
Parity flip(Parity p);
Parity succ_sharp(Parity p);
ParityPlus max_sharp(ParityPlus a, ParityPlus b);

const DomainRef& parity_domain();
const DomainRef& parity_plus_domain();

ConstructiveGC parity_gc(const IntWindow& window);
ConstructiveGC parity_plus_gc(const IntWindow& window);

inline ElemId id(Parity p) { return static_cast<ElemId>(p); }
inline ElemId id(ParityPlus p) { return static_cast<ElemId>(p); }

// Concrete successor as a Kleisli function Z[W] -> P(Z[W+1]).
KleisliFn succ_fn(const IntWindow& in, const IntWindow& out);
MonotoneFn succ_sharp_fn();

// Pairwise max on Z[W] x Z[W] -> P(Z[W]) and max# on ParityPlus pairs.
KleisliFn max_fn(const ProductDomain& pairs, const IntWindow& window);
MonotoneFn max_sharp_fn(const ProductDomain& abstract_pairs);

} // namespace cgc::parity
