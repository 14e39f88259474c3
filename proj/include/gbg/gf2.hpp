#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gbg/error.hpp"

namespace gbg {

// Matrix over GF(2), rows packed into 64-bit words.
struct GF2Matrix {
  int rows = 0, cols = 0;
  int words = 0;
  std::vector<uint64_t> bits;

  GF2Matrix() = default;
  GF2Matrix(int r, int c)
      : rows(r), cols(c), words((c + 63) / 64), bits(static_cast<size_t>(r) * words, 0) {}
  bool get(int i, int j) const {
    return (bits[static_cast<size_t>(i) * words + j / 64] >> (j % 64)) & 1;
  }
  void set(int i, int j, bool v) {
    uint64_t& w = bits[static_cast<size_t>(i) * words + j / 64];
    uint64_t m = 1ull << (j % 64);
    if (v) w |= m;
    else w &= ~m;
  }
  void xor_row(int dst, int src) {
    for (int k = 0; k < words; ++k)
      bits[static_cast<size_t>(dst) * words + k] ^= bits[static_cast<size_t>(src) * words + k];
  }
};

int gf2_rank(GF2Matrix m);
// Solves m * x = b; nullopt encodes NoSolution at the call sites that allow it.
std::optional<std::vector<char>> gf2_try_solve(const GF2Matrix& m, const std::vector<char>& b);
std::vector<char> gf2_solve(const GF2Matrix& m, const std::vector<char>& b);
std::vector<std::vector<char>> gf2_nullspace(const GF2Matrix& m);

}  // namespace gbg
