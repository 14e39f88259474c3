#pragma once

#include <unordered_map>

#include "gbg/complex.hpp"
#include "gbg/intmat.hpp"

namespace gbg {

// Integer chain over interned cells, sorted by cell id.
using Chain = std::vector<std::pair<int, long long>>;

void chain_add(Chain& dst, const Chain& src, long long coeff);

// Word over interned cells, letters (cell id, +-1), freely reduced.
struct CellWord {
  std::vector<std::pair<int, int>> letters;
  bool operator==(const CellWord& o) const { return letters == o.letters; }
};

CellWord cellword_concat(const CellWord& a, const CellWord& b);
CellWord cellword_inverse(const CellWord& a);

// Rewriting engine for one (tree, n) pair. Caches classification and the
// stabilized rewriting maps; all methods are deterministic.
class MorseContext {
 public:
  MorseContext(const EmbeddedTree& t, int n);

  const EmbeddedTree& tree() const { return t_; }
  int n() const { return n_; }

  int intern(const Cell& c);
  const Cell& cell(int id) const { return cells_[id]; }
  CellClass cell_class(int id);

  Chain cubical_boundary(int id);
  Chain rewrite_chain(const Chain& x);  // stabilized R
  Chain rewrite_cell(int id);
  Chain morse_boundary(int id);         // R(boundary(c)) for critical c
  CellWord rewrite_word(int id);        // stabilized r for 1-cells

  // Lemma-style shortcut: slide simply unblocked vertices before expanding.
  bool use_simple_slide = true;

 private:
  Chain rewrite_cell_inner(int id);

  EmbeddedTree t_;
  int n_;
  std::vector<Cell> cells_;
  std::unordered_map<Cell, int, CellKeyHash> ids_;
  std::vector<char> cls_;
  std::vector<int> small_unblocked_;
  std::unordered_map<int, Chain> rmemo_;
  std::unordered_map<int, CellWord> wmemo_;
  std::unordered_map<int, char> in_progress_;
  long long expansions_ = 0;
};

struct MorseComplex {
  int n = 0;
  std::vector<std::vector<Cell>> bases;   // per dimension
  std::vector<IntMatrix> boundary;        // boundary[k]: M_k -> M_{k-1}
  int maxdim() const { return static_cast<int>(bases.size()) - 1; }
  int index_of(int dim, const Cell& c) const;
};

MorseComplex build_morse_complex(const EmbeddedTree& t, int n, int maxdim, int threads = 1);

HomologySummary morse_homology(const MorseComplex& m, int dim);

// Order-preserving embedding of graphs inducing a map of Morse complexes.
struct GraphEmbedding {
  std::vector<int> vertex_map;  // small canonical id -> big canonical id
  std::vector<int> edge_map;
};

struct InducedChainMap {
  std::vector<std::vector<int>> index_map;  // per dim: small basis -> big basis
};

// Checks the four embedding conditions, maps critical cells, and verifies
// that the map commutes with the Morse boundaries up to maxdim.
InducedChainMap induced_chain_map(const EmbeddedTree& small, int n_small,
                                  const EmbeddedTree& big, int n_big,
                                  const GraphEmbedding& emb, int maxdim);

Cell map_cell(const EmbeddedTree& small, const EmbeddedTree& big, const GraphEmbedding& emb,
              int extra_particles, const Cell& c);

}  // namespace gbg
