#include "latmod/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace latmod {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

bool Lattice::covers_pair(int a, int b) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::pair{a, b});
  return it != covers_.end() && *it == std::pair{a, b};
}

Lattice build_from_covers(int n, CoverList covers) {
  if (n <= 0) throw param_error("lattice size must be positive");
  if (n > kMaxElements)
    throw too_large_error("lattice size " + std::to_string(n) +
                          " exceeds the element cap " +
                          std::to_string(kMaxElements));

  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw param_error("cover " + pair_str(a, b) + " out of range for size " +
                        std::to_string(n));
    if (a == b) throw cycle_error("self-loop cover " + pair_str(a, b));
    if (!seen.insert({a, b}).second)
      throw redundant_cover_error("duplicate cover " + pair_str(a, b), a, b);
  }
  std::sort(covers.begin(), covers.end());

  Lattice L;
  L.n_ = n;
  L.covers_ = covers;
  L.up_adj_.assign(n, {});
  L.dn_adj_.assign(n, {});
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers) {
    L.up_adj_[a].push_back(b);
    L.dn_adj_[b].push_back(a);
    ++indeg[b];
  }

  // Kahn: fails exactly when the cover digraph has a cycle.
  std::vector<int> topo;
  topo.reserve(n);
  {
    std::vector<int> deg = indeg;
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 0) q.push(v);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      topo.push_back(v);
      for (int w : L.up_adj_[v])
        if (--deg[w] == 0) q.push(w);
    }
    if (int(topo.size()) != n)
      throw cycle_error("cover relation contains a cycle");
  }

  // Reachability: up[x] = {x} ∪ ⋃ up[successor], tops first.
  L.up_ = BitRel(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    L.up_.set(v, v);
    for (int w : L.up_adj_[v]) L.up_.or_row_into(w, v);
  }
  L.dn_ = BitRel(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (L.up_.get(a, b)) L.dn_.set(b, a);

  // The input must be a transitive reduction already.
  for (auto [a, b] : covers) {
    int between = 0;
    const uint64_t* ua = L.up_.row(a);
    const uint64_t* db = L.dn_.row(b);
    for (size_t k = 0; k < L.up_.stride(); ++k)
      between += std::popcount(ua[k] & db[k]);
    if (between > 2)
      throw redundant_cover_error(
          "cover " + pair_str(a, b) + " is implied by other covers", a, b);
  }

  // Longest-chain height from below and depth from above.
  L.height_.assign(n, 0);
  for (int v : topo)
    for (int w : L.up_adj_[v])
      L.height_[w] = std::max(L.height_[w], L.height_[v] + 1);
  L.depth_.assign(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (int w : L.up_adj_[*it])
      L.depth_[*it] = std::max(L.depth_[*it], L.depth_[w] + 1);

  // Meet = unique maximum of the common lower bounds; the candidate is
  // the max-height common bound, then verified to dominate the set.
  L.meet_.assign(size_t(n) * n, 0);
  L.join_.assign(size_t(n) * n, 0);
  const size_t stride = L.up_.stride();
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const uint64_t* da = L.dn_.row(a);
      const uint64_t* db = L.dn_.row(b);
      int best = -1;
      for (size_t k = 0; k < stride; ++k) {
        uint64_t w = da[k] & db[k];
        while (w) {
          int v = int(k * 64) + std::countr_zero(w);
          w &= w - 1;
          if (best < 0 || L.height_[v] > L.height_[best]) best = v;
        }
      }
      if (best < 0)
        throw not_a_lattice_error("not a lattice: elements " +
                                      std::to_string(a) + " and " +
                                      std::to_string(b) + " have no meet",
                                  a, b);
      const uint64_t* dc = L.dn_.row(best);
      for (size_t k = 0; k < stride; ++k)
        if ((da[k] & db[k]) & ~dc[k])
          throw not_a_lattice_error("not a lattice: elements " +
                                        std::to_string(a) + " and " +
                                        std::to_string(b) +
                                        " have no unique meet",
                                    a, b);
      L.meet_[L.idx(a, b)] = L.meet_[L.idx(b, a)] = uint16_t(best);

      const uint64_t* ua = L.up_.row(a);
      const uint64_t* ub = L.up_.row(b);
      best = -1;
      for (size_t k = 0; k < stride; ++k) {
        uint64_t w = ua[k] & ub[k];
        while (w) {
          int v = int(k * 64) + std::countr_zero(w);
          w &= w - 1;
          if (best < 0 || L.height_[v] < L.height_[best]) best = v;
        }
      }
      if (best < 0)
        throw not_a_lattice_error("not a lattice: elements " +
                                      std::to_string(a) + " and " +
                                      std::to_string(b) + " have no join",
                                  a, b);
      const uint64_t* uc = L.up_.row(best);
      for (size_t k = 0; k < stride; ++k)
        if ((ua[k] & ub[k]) & ~uc[k])
          throw not_a_lattice_error("not a lattice: elements " +
                                        std::to_string(a) + " and " +
                                        std::to_string(b) +
                                        " have no unique join",
                                    a, b);
      L.join_[L.idx(a, b)] = L.join_[L.idx(b, a)] = uint16_t(best);
    }
  }

  int bot = 0, top = 0;
  for (int v = 1; v < n; ++v) {
    bot = L.meet(bot, v);
    top = L.join(top, v);
  }
  L.bottom_ = bot;
  L.top_ = top;

  for (auto& adj : L.up_adj_) std::sort(adj.begin(), adj.end());
  for (auto& adj : L.dn_adj_) std::sort(adj.begin(), adj.end());
  return L;
}

std::pair<Lattice, std::vector<int>> interval(const Lattice& L, int y, int z) {
  if (!L.leq(y, z))
    throw not_comparable_error(
        "interval requires y <= z, got " + pair_str(y, z), y, z);
  std::vector<int> embed;
  for (int w = 0; w < L.size(); ++w)
    if (L.leq(y, w) && L.leq(w, z)) embed.push_back(w);
  std::vector<int> pos(L.size(), -1);
  for (size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = int(i);
  CoverList covers;
  for (auto [a, b] : L.covers())
    if (pos[a] >= 0 && pos[b] >= 0) covers.push_back({pos[a], pos[b]});
  return {build_from_covers(int(embed.size()), covers), embed};
}

namespace {

void chain_dfs(const Lattice& L, int v, int goal, Chain& cur,
               std::vector<Chain>& out) {
  if (v == goal) {
    out.push_back(cur);
    return;
  }
  for (int w : L.upper_covers(v)) {
    if (!L.leq(w, goal)) continue;
    cur.push_back(w);
    chain_dfs(L, w, goal, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Chain> maximal_chains(const Lattice& L) {
  return maximal_chains_between(L, L.bottom(), L.top());
}

std::vector<Chain> maximal_chains_between(const Lattice& L, int y, int z) {
  if (!L.leq(y, z))
    throw not_comparable_error(
        "maximal_chains_between requires y <= z, got " + pair_str(y, z), y, z);
  std::vector<Chain> out;
  Chain cur{y};
  chain_dfs(L, y, z, cur, out);
  return out;
}

namespace {

void all_chains_dfs(const Lattice& L, Chain& cur, std::vector<Chain>& out) {
  out.push_back(cur);
  int last = cur.back();
  for (int w = 0; w < L.size(); ++w) {
    if (w == last || !L.leq(last, w)) continue;
    cur.push_back(w);
    all_chains_dfs(L, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Chain> all_chains(const Lattice& L) {
  std::vector<Chain> out;
  Chain cur;
  for (int v = 0; v < L.size(); ++v) {
    cur = {v};
    all_chains_dfs(L, cur, out);
  }
  return out;
}

bool is_chain(const Lattice& L, const Chain& c) {
  if (c.empty()) return false;
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!L.less(c[i], c[i + 1])) return false;
  for (int v : c)
    if (v < 0 || v >= L.size()) return false;
  return true;
}

bool is_maximal_chain(const Lattice& L, const Chain& c) {
  return is_maximal_chain_between(L, c, L.bottom(), L.top());
}

bool is_maximal_chain_between(const Lattice& L, const Chain& c, int y, int z) {
  if (!is_chain(L, c)) return false;
  if (c.front() != y || c.back() != z) return false;
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!L.covers_pair(c[i], c[i + 1])) return false;
  return true;
}

std::vector<int> sublattice_generated(const Lattice& L,
                                      const std::vector<int>& gens) {
  if (gens.empty())
    throw param_error("sublattice_generated needs a nonempty generator set");
  Bitset in(L.size());
  std::vector<int> members;
  std::vector<int> work;
  auto add = [&](int v) {
    if (!in.test(v)) {
      in.set(v);
      members.push_back(v);
      work.push_back(v);
    }
  };
  for (int g : gens) {
    if (g < 0 || g >= L.size())
      throw param_error("generator " + std::to_string(g) + " out of range");
    add(g);
  }
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    // members may grow during the loop; new pairs get their own pass.
    for (size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      add(L.meet(x, y));
      add(L.join(x, y));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Lattice dual(const Lattice& L) {
  CoverList covers;
  covers.reserve(L.covers().size());
  for (auto [a, b] : L.covers()) covers.push_back({b, a});
  return build_from_covers(L.size(), covers);
}

// ---------------------------------------------------------------------------
// Canonical form: colour refinement on the order relation, then a
// cell-respecting lex-min search over the full leq matrix. Twin elements
// (interchangeable by a transposition automorphism) are tried once per
// node, which keeps antichain-heavy lattices from exploding.

namespace {

struct CanonState {
  const Lattice* L;
  int n;
  std::vector<std::vector<int>> cells;  // canonical cell order
  std::vector<int> cell_of_pos;         // position -> cell index
  std::vector<int> twin_root;           // element -> twin class root
  std::vector<int> perm;                // position -> element
  std::vector<char> used;
  std::vector<char> cur_bits;           // n*(n-1) bits, position-major
  std::vector<char> best_bits;
  bool best_valid = false;
};

// equal: cur_bits before this position coincide with best_bits (or no
// best exists yet). Returns true when a descendant replaced best, which
// makes the caller's prefix the best prefix again.
bool canon_dfs(CanonState& st, int pos, bool equal) {
  if (pos == st.n) {
    if (!st.best_valid || !equal) {
      st.best_bits = st.cur_bits;
      st.best_valid = true;
      return true;
    }
    return false;
  }
  bool replaced = false;
  int cell = st.cell_of_pos[pos];
  std::vector<int> tried_roots;
  for (int e : st.cells[cell]) {
    if (st.used[e]) continue;
    int root = st.twin_root[e];
    bool skip = false;
    for (int r : tried_roots)
      if (r == root) {
        skip = true;
        break;
      }
    if (skip) continue;
    tried_roots.push_back(root);

    const size_t off = size_t(pos) * (pos - 1);
    bool worse = false;
    bool child_equal = equal;
    const bool compare = equal && st.best_valid;
    bool still_equal = compare;
    for (int i = 0; i < pos; ++i) {
      char b1 = st.L->leq(st.perm[i], e) ? 1 : 0;
      char b2 = st.L->leq(e, st.perm[i]) ? 1 : 0;
      st.cur_bits[off + 2 * i] = b1;
      st.cur_bits[off + 2 * i + 1] = b2;
      if (still_equal) {
        if (b1 != st.best_bits[off + 2 * i]) {
          if (b1 > st.best_bits[off + 2 * i]) worse = true;
          still_equal = false;
          child_equal = false;
        }
        if (!worse && still_equal && b2 != st.best_bits[off + 2 * i + 1]) {
          if (b2 > st.best_bits[off + 2 * i + 1]) worse = true;
          still_equal = false;
          child_equal = false;
        }
        if (worse) break;
      }
    }
    if (worse) continue;
    st.perm[pos] = e;
    st.used[e] = 1;
    if (canon_dfs(st, pos + 1, child_equal)) {
      replaced = true;
      equal = true;  // the replacing path runs through this prefix
    }
    st.used[e] = 0;
  }
  return replaced;
}

}  // namespace

std::string canonical_form(const Lattice& L) {
  const int n = L.size();

  // Initial colours from order-theoretic invariants.
  std::vector<std::vector<long>> sig(n);
  for (int v = 0; v < n; ++v)
    sig[v] = {L.height(v), L.depth(v), long(L.lower_covers(v).size()),
              long(L.upper_covers(v).size()), long(L.down().row_count(v)),
              long(L.up().row_count(v))};
  std::vector<int> color(n, 0);
  int ncolors = 0;
  {
    auto order = sig;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    ncolors = int(order.size());
    for (int v = 0; v < n; ++v)
      color[v] =
          int(std::lower_bound(order.begin(), order.end(), sig[v]) -
              order.begin());
  }

  // Refine: count, per colour, how many elements lie above and below.
  while (true) {
    std::vector<std::vector<long>> rsig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long> s;
      s.push_back(color[v]);
      std::vector<long> lo(ncolors, 0), hi(ncolors, 0);
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        if (L.less(v, w)) ++hi[color[w]];
        if (L.less(w, v)) ++lo[color[w]];
      }
      s.insert(s.end(), lo.begin(), lo.end());
      s.insert(s.end(), hi.begin(), hi.end());
      rsig[v] = std::move(s);
    }
    auto order = rsig;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    if (int(order.size()) == ncolors) break;
    ncolors = int(order.size());
    for (int v = 0; v < n; ++v)
      color[v] =
          int(std::lower_bound(order.begin(), order.end(), rsig[v]) -
              order.begin());
  }

  // Twin classes: transposition automorphisms within a colour.
  std::vector<int> twin(n);
  std::iota(twin.begin(), twin.end(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (twin[b] != b || color[a] != color[b]) continue;
      if (L.leq(a, b) || L.leq(b, a)) continue;
      bool same = true;
      for (int z = 0; z < n && same; ++z) {
        if (z == a || z == b) continue;
        if (L.leq(a, z) != L.leq(b, z) || L.leq(z, a) != L.leq(z, b))
          same = false;
      }
      if (same) twin[b] = twin[a];
    }

  CanonState st;
  st.L = &L;
  st.n = n;
  st.cells.assign(ncolors, {});
  for (int v = 0; v < n; ++v) st.cells[color[v]].push_back(v);
  st.cell_of_pos.reserve(n);
  for (int c = 0; c < ncolors; ++c)
    for (size_t i = 0; i < st.cells[c].size(); ++i) st.cell_of_pos.push_back(c);
  st.twin_root = twin;
  st.perm.assign(n, -1);
  st.used.assign(n, 0);
  st.cur_bits.assign(size_t(n) * (n - 1), 0);
  canon_dfs(st, 0, true);

  std::string key;
  key.push_back(char(n & 0xff));
  key.push_back(char((n >> 8) & 0xff));
  uint8_t acc = 0;
  int nb = 0;
  for (char b : st.best_bits) {
    acc = uint8_t((acc << 1) | (b & 1));
    if (++nb == 8) {
      key.push_back(char(acc));
      acc = 0;
      nb = 0;
    }
  }
  if (nb) key.push_back(char(acc << (8 - nb)));
  return key;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string canonical_hex(const Lattice& L) {
  return to_hex(canonical_form(L));
}

}  // namespace latmod
