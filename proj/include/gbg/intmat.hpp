#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbg/error.hpp"

namespace gbg {

// Dense exact integer matrix; arithmetic is overflow-checked and never wraps.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const IntMatrix& o) const = default;

  static IntMatrix identity(int n);
  IntMatrix mul(const IntMatrix& o) const;
  bool is_zero() const;
};

long long checked_add(long long x, long long y);
long long checked_mul(long long x, long long y);

struct SmithResult {
  IntMatrix s;                     // diagonal, successive divisibility
  IntMatrix u, v;                  // unimodular, u*a*v = s (when requested)
  std::vector<long long> diagonal; // nonzero entries
  int rank = 0;
};

SmithResult smith_normal_form(const IntMatrix& a, bool with_transforms = true);
int rank_of(const IntMatrix& a);

struct HomologySummary {
  int dimension = 0;
  int betti = 0;
  std::vector<long long> torsion;  // invariant factors > 1, divisibility order
  bool operator==(const HomologySummary& o) const = default;
};

// Homology at the middle of  C_{k+1} --d_k1--> C_k --d_k--> C_{k-1}.
HomologySummary homology(const IntMatrix& d_k, const IntMatrix& d_k1, int dimension = 0);

}  // namespace gbg
