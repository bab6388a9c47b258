#include "latmod/properties.hpp"

#include <algorithm>

namespace latmod {

PropertyReport is_graded(const Lattice& L) {
  PropertyReport rep;
  rep.property = "graded";
  for (auto [a, b] : L.covers()) {
    if (L.height(b) != L.height(a) + 1) {
      rep.holds = false;
      rep.counterexample = {a, b};
      rep.detail = "cover (" + std::to_string(a) + ", " + std::to_string(b) +
                   ") jumps height " + std::to_string(L.height(a)) + " -> " +
                   std::to_string(L.height(b));
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

PropertyReport is_distributive(const Lattice& L) {
  PropertyReport rep;
  rep.property = "distributive";
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          rep.holds = false;
          rep.counterexample = {a, b, c};
          rep.detail = "a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)";
          return rep;
        }
  rep.holds = true;
  return rep;
}

bool modular_triple(const Lattice& L, int x, int y, int z) {
  if (!L.leq(y, z))
    throw not_comparable_error("M(x,y,z) requires y <= z, got y=" +
                                   std::to_string(y) +
                                   " z=" + std::to_string(z),
                               y, z);
  return L.meet(L.join(y, x), z) == L.join(y, L.meet(x, z));
}

PropertyReport is_left_modular_element(const Lattice& L, int x) {
  PropertyReport rep;
  rep.property = "left_modular_element";
  const int n = L.size();
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      if (!L.leq(y, z)) continue;
      if (L.meet(L.join(y, x), z) != L.join(y, L.meet(x, z))) {
        rep.holds = false;
        rep.counterexample = {y, z};
        rep.detail = "M(x,y,z) fails at x=" + std::to_string(x);
        return rep;
      }
    }
  rep.holds = true;
  rep.witness = {x};
  return rep;
}

std::vector<int> left_modular_elements(const Lattice& L) {
  std::vector<int> out;
  for (int x = 0; x < L.size(); ++x)
    if (is_left_modular_element(L, x).holds) out.push_back(x);
  return out;
}

namespace {

bool lm_chain_dfs(const Lattice& L, const Bitset& lm, int v, Chain& cur) {
  if (v == L.top()) return true;
  for (int w : L.upper_covers(v)) {
    if (!lm.test(w)) continue;
    cur.push_back(w);
    if (lm_chain_dfs(L, lm, w, cur)) return true;
    cur.pop_back();
  }
  return false;
}

void lm_chains_dfs(const Lattice& L, const Bitset& lm, int v, Chain& cur,
                   std::vector<Chain>& out) {
  if (v == L.top()) {
    out.push_back(cur);
    return;
  }
  for (int w : L.upper_covers(v)) {
    if (!lm.test(w)) continue;
    cur.push_back(w);
    lm_chains_dfs(L, lm, w, cur, out);
    cur.pop_back();
  }
}

Bitset lm_mask(const Lattice& L) {
  Bitset lm(L.size());
  for (int x : left_modular_elements(L)) lm.set(x);
  return lm;
}

}  // namespace

std::optional<Chain> find_left_modular_chain(const Lattice& L) {
  Bitset lm = lm_mask(L);
  if (!lm.test(L.bottom())) return std::nullopt;
  Chain cur{L.bottom()};
  if (lm_chain_dfs(L, lm, L.bottom(), cur)) return cur;
  return std::nullopt;
}

std::vector<Chain> left_modular_maximal_chains(const Lattice& L) {
  Bitset lm = lm_mask(L);
  std::vector<Chain> out;
  if (!lm.test(L.bottom())) return out;
  Chain cur{L.bottom()};
  lm_chains_dfs(L, lm, L.bottom(), cur, out);
  return out;
}

bool is_distributive_subset(const Lattice& L, const std::vector<int>& elems) {
  for (int a : elems)
    for (int b : elems)
      for (int c : elems)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return false;
  return true;
}

PropertyReport is_supersolvable(const Lattice& L) {
  PropertyReport rep;
  rep.property = "supersolvable";
  auto chains = maximal_chains(L);
  // Left modular chains first: Theorem-1 candidates are the likely
  // witnesses. Ordering is a heuristic only.
  Bitset lm = lm_mask(L);
  std::stable_sort(chains.begin(), chains.end(),
                   [&](const Chain& a, const Chain& b) {
                     int ca = 0, cb = 0;
                     for (int v : a) ca += lm.test(v);
                     for (int v : b) cb += lm.test(v);
                     return ca > cb;
                   });
  for (const Chain& m : chains) {
    bool ok = true;
    for (const Chain& c : chains) {
      std::vector<int> gens = m;
      gens.insert(gens.end(), c.begin(), c.end());
      if (!is_distributive_subset(L, sublattice_generated(L, gens))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rep.holds = true;
      rep.witness = m;
      return rep;
    }
  }
  rep.holds = false;
  rep.detail = "no maximal chain generates distributive sublattices with "
               "every other maximal chain";
  return rep;
}

int induced_element(const Lattice& L, int x, int y, int z) {
  if (!L.leq(y, z))
    throw not_comparable_error("induced_element requires y <= z", y, z);
  return L.meet(L.join(y, x), z);
}

Chain induced_chain(const Lattice& L, const Chain& xchain, int y, int z) {
  if (!is_maximal_chain(L, xchain))
    throw hypothesis_error("induced_chain: xchain is not a maximal chain");
  for (int x : xchain)
    if (!is_left_modular_element(L, x).holds)
      throw hypothesis_error("induced_chain: element " + std::to_string(x) +
                             " of xchain is not left modular");
  if (!L.leq(y, z))
    throw not_comparable_error("induced_chain requires y <= z", y, z);
  Chain out;
  for (int x : xchain) {
    int e = L.meet(L.join(y, x), z);
    if (out.empty() || out.back() != e) out.push_back(e);
  }
  return out;
}

}  // namespace latmod
