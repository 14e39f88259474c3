#pragma once

#include <vector>

#include "gbg/cell.hpp"
#include "gbg/intmat.hpp"

namespace gbg {

// Freely reduced word over generators 0..g-1; letters are (generator, +-1).
struct FreeWord {
  std::vector<std::pair<int, int>> letters;

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const FreeWord& o) const { return letters == o.letters; }
};

FreeWord reduce(FreeWord w);
FreeWord concat(const FreeWord& a, const FreeWord& b);
FreeWord inverse(const FreeWord& w);
FreeWord conjugate(const FreeWord& by, const FreeWord& w);  // by * w * by^-1
FreeWord commutator(const FreeWord& a, const FreeWord& b);
FreeWord cyclic_reduce(FreeWord w);
// Canonical representative under rotation and inversion, for set comparisons.
FreeWord cyclic_normal_form(const FreeWord& w);
bool is_commutator_of_generators(const FreeWord& w);

std::vector<long long> abelianize(const FreeWord& w, int generators);

// Image in Lambda^2 Z^g as an antisymmetric matrix; entry (i,j), i<j, is the
// signed count of ordered occurrence pairs.
IntMatrix lambda2_class(const FreeWord& w, int generators);

// Permutation-sign invariant of a critical 1-cell.
int pi_star(const EmbeddedTree& t, const Cell& c, int n);

}  // namespace gbg
