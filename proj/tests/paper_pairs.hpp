#pragma once

#include <array>
#include <string>

#include "selfsim/combinatorics.hpp"

namespace selfsim::testing {

struct PrintedPair {
  const char* s;
  const char* t;
  const char* equation;
};

// n = 5 pair and its equation as printed.
inline constexpr PrintedPair kPairN5{"+---+", "-++--",
                                     "2x^2y^3 + x^2y^2 - x^2y - xy^3 - xy^2 - 2xy + x + y"};

// The four n = 6 pairs; the fourth s is printed as "(1,-1-,1,-1,1,1)" and
// resolves to +---++ (the only repair with three +1 entries; it reproduces
// the fourth equation).
inline constexpr std::array<PrintedPair, 4> kPairsN6{{
    {"+--+++", "-++++-",
     "2x^4y^2 - x^4y + x^3y^2 - x^3y + x^2y^2 - x^2y - xy^2 - 2xy + x + y"},
    {"+-+-++", "-++++-", "2x^4y^2 - x^4y + x^3y^2 - x^3y - x^2y^2 - 2xy + x + y"},
    {"+---++", "-+-++-", "2x^3y^3 - x^3y^2 + x^2y^3 - x^2y^2 - xy^3 - 2xy + x + y"},
    {"+---++", "-++-+-",
     "2x^3y^3 - x^3y^2 + x^2y^3 + x^2y^2 - x^2y - xy^3 - xy^2 - 2xy + x + y"},
}};

inline SeqPair make_pair(const char* s, const char* t) {
  return validate_pair(SignSeq::parse(s), SignSeq::parse(t));
}

inline SeqPair make_pair(const PrintedPair& p) { return make_pair(p.s, p.t); }

}  // namespace selfsim::testing
