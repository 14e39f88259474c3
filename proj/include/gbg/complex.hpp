#pragma once

#include <functional>
#include <optional>

#include "gbg/cell.hpp"

namespace gbg {

struct CellClass {
  enum Tag { Critical, Collapsible, Redundant } tag = Critical;
  int smallest_unblocked = -1;  // set for Redundant
};

bool is_blocked(const EmbeddedTree& t, const Cell& c, int v);
bool is_order_respecting(const EmbeddedTree& t, const Cell& c, int e);
CellClass classify(const EmbeddedTree& t, const Cell& c);

// Farley-Sabalka matching: redundant cells pair with the collapsible cell one
// dimension up; everything else maps to void (nullopt).
std::optional<Cell> matching_W(const EmbeddedTree& t, const Cell& c);

// Single V step (smallest unblocked vertex to its parent) and its fixed point.
Cell shift_V(const EmbeddedTree& t, const Cell& c);
Cell stabilized_V(const EmbeddedTree& t, const Cell& c);

// Streams every (dim)-cell of UD_n in canonical order.
void enumerate_cells(const EmbeddedTree& t, int n, int dim,
                     const std::function<void(const Cell&)>& sink);
long long count_cells(const EmbeddedTree& t, int n, int dim);

std::vector<Cell> critical_cells(const EmbeddedTree& t, int n, int dim);

}  // namespace gbg
