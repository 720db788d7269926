#pragma once

// WHILE programs shared by the unit, acceptance and benchmark suites.

#include <string>
#include <vector>

namespace fixtures {

struct Program {
  std::string name;
  std::string source;
};

inline const std::vector<Program>& programs() {
  static const std::vector<Program> ps = {
      {"count-up", "x := 1; while x < 3 do x := x + 1"},
      {"square", "x := rand; y := x * x"},
      {"abs", "x := rand; if x < 0 then y := 0 - x else y := x"},
      {"div-rand", "x := rand; y := 10 / x"},
      {"sum-down", "x := 5; y := 0; while 0 < x do (y := y + x; x := x - 1)"},
      {"nested",
       "i := 3; j := 0; while 0 < i do (j := i; while 0 < j do j := j - 1; i := i - 1)"},
      {"climb", "x := rand; while x < 0 do x := x + 1"},
      {"diff", "x := rand; y := rand; if x = y then z := 0 else z := x - y"},
      {"retry", "x := 0; while x = 0 do x := rand"},
      {"halve", "x := rand; y := x / 2; z := y * 2 - x"},
      {"guarded-div", "x := rand; if x < 0 || 0 < x then y := 1 / x else y := 0"},
      {"quot-rem", "x := 7; y := 0 - 3; q := x / y; r := x - q * y"},
      {"dead-branch", "x := 1; if x < 0 then y := 0 - 1 else y := 1"},
      {"skip", "skip"},
  };
  return ps;
}

} // namespace fixtures
