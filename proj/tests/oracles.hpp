#pragma once

// Independent reference models used to check the library. Nothing here
// calls into cgc except to translate names, so a shared bug cannot make
// both sides agree.

#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

// A sign is the set of atoms it admits: bit 0 negative, bit 1 zero,
// bit 2 positive. Order is inclusion, join is union.
using Mask = unsigned;

inline constexpr std::string_view kSignNames[8] = {"none", "neg",  "zer",  "negz",
                                                   "pos",  "nzer", "posz", "any"};

inline Mask mask(std::string_view name) {
  for (Mask m = 0; m < 8; ++m) {
    if (kSignNames[m] == name) {
      return m;
    }
  }
  throw std::invalid_argument("not a sign: " + std::string(name));
}

inline std::string name(Mask m) { return std::string(kSignNames[m & 7]); }

inline Mask atom(long long i) { return i < 0 ? 1u : i == 0 ? 2u : 4u; }
inline bool member(long long i, Mask m) { return (atom(i) & m) != 0; }
inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

using BinOp = std::function<std::optional<long long>(long long, long long)>;

inline std::optional<long long> plus(long long a, long long b) { return a + b; }
inline std::optional<long long> minus(long long a, long long b) { return a - b; }
inline std::optional<long long> times(long long a, long long b) { return a * b; }
inline std::optional<long long> divide(long long a, long long b) {
  if (b == 0) {
    return std::nullopt;
  }
  return std::lldiv(a, b).quot; // truncates toward zero
}

// Brute-force best abstraction of a binary operator over [-w, w].
inline Mask best(const BinOp& op, Mask m1, Mask m2, int w) {
  Mask out = 0;
  for (long long i = -w; i <= w; ++i) {
    for (long long j = -w; j <= w; ++j) {
      if (member(i, m1) && member(j, m2)) {
        if (auto r = op(i, j)) {
          out |= atom(*r);
        }
      }
    }
  }
  return out;
}

// The five-case join for abstract addition, transcribed literally.
inline Mask five_case_plus(Mask a, Mask b) {
  const Mask pos = 4, neg = 1, zer = 2;
  Mask out = 0;
  if (sub(pos, a) || sub(pos, b)) out |= pos;
  if (sub(neg, a) || sub(neg, b)) out |= neg;
  if (sub(zer, a) && sub(zer, b)) out |= zer;
  if (sub(pos, a) && sub(neg, b)) out |= zer;
  if (sub(neg, a) && sub(pos, b)) out |= zer;
  return out;
}

// Flat booleans as subsets of {false, true}: bit 0 false, bit 1 true.
inline std::string bool_name(unsigned m) {
  static const char* names[] = {"none", "ff", "tt", "any"};
  return names[m & 3];
}

} // namespace oracle
