#pragma once

#include <string>

#include "bramsey/coloring.hpp"

namespace bramsey {

/// Statistics a bundled witness is expected to reproduce under verify().
struct WitnessClaims {
  int pairwise = 1;
  int min_union_k = 6;
  int min_union_value = 0;
};

struct NamedWitness {
  std::string name;
  ProblemSpec spec;
  Coloring coloring;
  WitnessClaims claims;
};

/// x_0 red to every column, every other row all blue.
Coloring star_witness(int m, int n);

/// Good colouring of K_{7,56} for (K_{2,2}, K_{6,6}): seven 11-sets, pairwise meeting in one point.
NamedWitness witness_7_56();

/// Good colouring of K_{8,44} for (K_{2,2}, K_{6,6}): eight 9-sets, pairwise meeting in one point.
NamedWitness witness_8_44();

/// Whether verify() on the witness yields a good colouring with exactly the stored claims.
bool claims_hold(const NamedWitness& w);

}  // namespace bramsey
