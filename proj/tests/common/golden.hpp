#pragma once

#include <sstream>
#include <string>

#include "pdlab/resolution/betti.hpp"

namespace golden {

// Rows "r: b_0 b_{1} ..." where column i holds beta_{i, i+r} and '-' is zero.
inline pdlab::BettiTable parse_rows(const std::string& text) {
  pdlab::BettiTable t;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find(':') == std::string::npos) continue;
    std::istringstream in(line);
    int r;
    char colon;
    in >> r >> colon;
    std::string cell;
    for (int i = 0; in >> cell; ++i)
      if (cell != "-") t.set(i, i + r, std::stoll(cell));
  }
  return t;
}

// I_{2,(3,1)} over F_32003.
inline const char* const k31 = R"(
0: 1 - - - - - - - -
4: - 3 - - - - - - -
8: - - 3 - - - - - -
9: - - 3 4 - - - - -
10: - - 13 46 68 56 28 8 1
11: - - 33 132 218 192 96 26 3
12: - - 1 2 1 - - - -
)";

// I_{2,(2,1,2)} over F_32003.
inline const char* const k212 = R"(
0: 1 - - - - - -
5: - 3 - - - - -
10: - - 3 - - - -
13: - - 2 3 - - -
16: - - 3 6 3 - -
18: - - 1 4 5 2 -
19: - - 4 8 4 - -
20: - - 1 4 6 4 1
21: - - 2 8 10 4 -
22: - - 6 14 11 4 1
23: - - 2 8 12 8 2
24: - - 4 16 21 10 1
25: - - 8 20 18 8 2
26: - - 3 12 18 12 3
27: - - 6 24 32 16 2
28: - - 3 12 18 12 3
29: - - 4 16 24 16 4
30: - - 3 12 18 12 3
31: - - 4 16 24 16 4
32: - - 1 4 6 4 1
33: - - 4 16 24 16 4
34: - - 1 4 6 4 1
35: - - 2 8 12 8 2
36: - - 1 4 6 4 1
37: - - 2 8 12 8 2
38: - - 1 4 6 4 1
39: - - 2 8 12 8 2
41: - - 2 8 12 8 2
)";

}  // namespace golden
