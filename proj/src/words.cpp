#include "gbg/words.hpp"

#include <algorithm>

namespace gbg {

FreeWord reduce(FreeWord w) {
  std::vector<std::pair<int, int>> out;
  for (auto& l : w.letters) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return reduce(std::move(w));
}

FreeWord inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->first, -it->second});
  return out;
}

FreeWord conjugate(const FreeWord& by, const FreeWord& w) {
  return concat(concat(by, w), inverse(by));
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

FreeWord cyclic_reduce(FreeWord w) {
  w = reduce(std::move(w));
  while (w.letters.size() >= 2 && w.letters.front().first == w.letters.back().first &&
         w.letters.front().second == -w.letters.back().second) {
    w.letters.erase(w.letters.begin());
    w.letters.pop_back();
    w = reduce(std::move(w));
  }
  return w;
}

FreeWord cyclic_normal_form(const FreeWord& w_in) {
  FreeWord w = cyclic_reduce(w_in);
  if (w.empty()) return w;
  FreeWord best;
  bool has = false;
  for (int inv = 0; inv < 2; ++inv) {
    FreeWord cand = inv ? inverse(w) : w;
    for (size_t r = 0; r < cand.letters.size(); ++r) {
      FreeWord rot;
      rot.letters.insert(rot.letters.end(), cand.letters.begin() + r, cand.letters.end());
      rot.letters.insert(rot.letters.end(), cand.letters.begin(), cand.letters.begin() + r);
      if (!has || rot.letters < best.letters) {
        best = rot;
        has = true;
      }
    }
  }
  return best;
}

bool is_commutator_of_generators(const FreeWord& w_in) {
  FreeWord w = cyclic_reduce(w_in);
  if (w.length() != 4) return false;
  auto& l = w.letters;
  return l[0].first == l[2].first && l[1].first == l[3].first &&
         l[0].second == -l[2].second && l[1].second == -l[3].second &&
         l[0].first != l[1].first;
}

std::vector<long long> abelianize(const FreeWord& w, int generators) {
  std::vector<long long> v(generators, 0);
  for (auto& [g, e] : w.letters) {
    if (g < 0 || g >= generators) fail(Errc::BadInput, "generator out of range");
    v[g] += e;
  }
  return v;
}

IntMatrix lambda2_class(const FreeWord& w, int generators) {
  auto ab = abelianize(w, generators);
  for (long long x : ab)
    if (x != 0) fail(Errc::NotInCommutatorSubgroup, "word has nonzero abelianization");
  IntMatrix m(generators, generators);
  // Signed ordered-pair counts; antisymmetry holds because the exponent sums
  // vanish.
  std::vector<long long> seen(generators, 0);
  for (auto& [g, e] : w.letters) {
    for (int i = 0; i < generators; ++i) {
      if (i == g || seen[i] == 0) continue;
      m.at(i, g) = checked_add(m.at(i, g), checked_mul(seen[i], e));
    }
    seen[g] += e;
  }
  for (int i = 0; i < generators; ++i)
    for (int j = 0; j < i; ++j) m.at(i, j) = -m.at(j, i);
  return m;
}

int pi_star(const EmbeddedTree& t, const Cell& c, int n) {
  if (c.dim() != 1) fail(Errc::BadInput, "pi_star takes a 1-cell");
  int e = c.edges[0];
  if (t.is_deleted(e)) {
    if (t.tau(e) == 0) return ((n - 1) % 2 + 2) % 2;
    return 0;
  }
  ANotation a = encode_a_notation(t, c);
  if (a.branch_terms.size() != 1) fail(Errc::BadInput, "unexpected branch structure");
  const BranchTerm& term = a.branch_terms[0];
  long long total = 0, from_k = 0;
  for (size_t i = 0; i < term.a.size(); ++i) {
    total += term.a[i];
    if (static_cast<int>(i) + 1 >= term.k) from_k += term.a[i];
  }
  return static_cast<int>((total - from_k) % 2);
}

}  // namespace gbg
