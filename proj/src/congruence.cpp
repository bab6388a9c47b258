#include "latmod/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace latmod {

namespace {

void normalize(std::vector<int>& cls) {
  std::vector<int> remap(cls.size(), -1);
  int next = 0;
  for (int& c : cls) {
    if (remap[c] < 0) remap[c] = next++;
    c = remap[c];
  }
}

Congruence from_classes(std::vector<int> cls) {
  normalize(cls);
  Congruence c;
  c.num_classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  c.class_of = std::move(cls);
  return c;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

Congruence from_union_find(UnionFind& uf) {
  std::vector<int> cls(uf.parent.size());
  for (size_t i = 0; i < cls.size(); ++i) cls[i] = uf.find(int(i));
  return from_classes(std::move(cls));
}

}  // namespace

Congruence equality_congruence(int n) {
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  return from_classes(std::move(cls));
}

Congruence all_in_one_congruence(int n) {
  return from_classes(std::vector<int>(n, 0));
}

Congruence principal_congruence(const Lattice& L, int a, int b) {
  const int n = L.size();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw param_error("principal_congruence: element out of range");
  UnionFind uf(n);
  std::queue<std::pair<int, int>> work;
  work.push({a, b});
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop();
    if (!uf.unite(x, y)) continue;
    for (int z = 0; z < n; ++z) {
      int mx = L.meet(x, z), my = L.meet(y, z);
      if (uf.find(mx) != uf.find(my)) work.push({mx, my});
      int jx = L.join(x, z), jy = L.join(y, z);
      if (uf.find(jx) != uf.find(jy)) work.push({jx, jy});
    }
  }
  return from_union_find(uf);
}

bool is_congruence(const Lattice& L, const Congruence& c) {
  const int n = L.size();
  if (int(c.class_of.size()) != n) return false;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.same(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!c.same(L.meet(x, z), L.meet(y, z))) return false;
        if (!c.same(L.join(x, z), L.join(y, z))) return false;
      }
    }
  return true;
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  const int n = int(a.class_of.size());
  UnionFind uf(n);
  std::vector<int> first_a(a.num_classes, -1), first_b(b.num_classes, -1);
  for (int v = 0; v < n; ++v) {
    int ca = a.class_of[v];
    if (first_a[ca] < 0)
      first_a[ca] = v;
    else
      uf.unite(first_a[ca], v);
    int cb = b.class_of[v];
    if (first_b[cb] < 0)
      first_b[cb] = v;
    else
      uf.unite(first_b[cb], v);
  }
  return from_union_find(uf);
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  const int n = int(a.class_of.size());
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v) {
    auto key = std::pair{a.class_of[v], b.class_of[v]};
    auto [it, fresh] = ids.try_emplace(key, int(ids.size()));
    cls[v] = it->second;
    (void)fresh;
  }
  return from_classes(std::move(cls));
}

bool refines(const Congruence& finer, const Congruence& coarser) {
  std::vector<int> image(finer.num_classes, -1);
  for (size_t v = 0; v < finer.class_of.size(); ++v) {
    int f = finer.class_of[v];
    int c = coarser.class_of[v];
    if (image[f] < 0)
      image[f] = c;
    else if (image[f] != c)
      return false;
  }
  return true;
}

std::vector<Congruence> all_congruences(const Lattice& L, size_t cap) {
  std::set<std::vector<int>> seen;
  std::vector<Congruence> out;
  std::vector<Congruence> seeds;
  auto add = [&](const Congruence& c) {
    if (seen.insert(c.class_of).second) {
      out.push_back(c);
      if (out.size() > cap)
        throw too_large_error("congruence count exceeds cap " +
                              std::to_string(cap));
      return true;
    }
    return false;
  };
  add(equality_congruence(L.size()));
  for (auto [a, b] : L.covers()) {
    Congruence p = principal_congruence(L, a, b);
    if (add(p)) seeds.push_back(p);
  }
  // Join-closure of the cover-principal congruences: every congruence of
  // a finite lattice is a join of these.
  for (size_t i = 0; i < out.size(); ++i) {
    Congruence cur = out[i];
    for (const Congruence& s : seeds) add(congruence_join(cur, s));
  }
  return out;
}

std::pair<Lattice, std::vector<int>> quotient(const Lattice& L,
                                              const Congruence& c) {
  if (!is_congruence(L, c))
    throw partition_error("partition is not compatible with meet and join");
  const int q = c.num_classes;
  std::vector<int> rep(q, -1);
  for (int v = 0; v < L.size(); ++v)
    if (rep[c.class_of[v]] < 0) rep[c.class_of[v]] = v;

  // [a] <= [b]  iff  a ∨ b ≡ b (well defined for a congruence).
  BitRel qle(q);
  for (int A = 0; A < q; ++A)
    for (int B = 0; B < q; ++B)
      if (c.class_of[L.join(rep[A], rep[B])] == B) qle.set(A, B);
  for (int A = 0; A < q; ++A)
    for (int B = 0; B < q; ++B)
      if (A != B && qle.get(A, B) && qle.get(B, A))
        throw partition_error("quotient order is not antisymmetric");

  CoverList covers;
  for (int A = 0; A < q; ++A)
    for (int B = 0; B < q; ++B) {
      if (A == B || !qle.get(A, B)) continue;
      bool is_cover = true;
      for (int C = 0; C < q && is_cover; ++C)
        if (C != A && C != B && qle.get(A, C) && qle.get(C, B))
          is_cover = false;
      if (is_cover) covers.push_back({A, B});
    }
  return {build_from_covers(q, covers), c.class_of};
}

Congruence g_congruence(const Lattice& L, size_t cap) {
  Congruence acc = all_in_one_congruence(L.size());
  for (const Congruence& c : all_congruences(L, cap)) {
    auto [Q, proj] = quotient(L, c);
    (void)proj;
    if (is_graded(Q).holds) acc = congruence_meet(acc, c);
  }
  return acc;
}

std::optional<std::pair<Lattice, std::vector<int>>> maximum_graded_quotient(
    const Lattice& L, size_t cap) {
  Congruence g = g_congruence(L, cap);
  auto Q = quotient(L, g);
  if (!is_graded(Q.first).holds) return std::nullopt;
  return Q;
}

PropertyReport lemma_quotient_separation(const Lattice& L, size_t cap) {
  PropertyReport rep;
  rep.property = "quotient_separation";
  Congruence g = g_congruence(L, cap);
  auto [Q, proj] = quotient(L, g);
  (void)proj;
  const int q = Q.size();
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      if (!Q.preceq(x, y)) continue;
      for (int z = 0; z < q; ++z) {
        if (!Q.preceq(y, z)) continue;
        for (int u = 0; u < q; ++u) {
          if (!(Q.leq(x, u) && Q.leq(u, z))) continue;
          if (Q.join(u, y) != z) continue;
          for (int v = 0; v < q; ++v) {
            if (!(Q.leq(u, v) && Q.leq(v, z))) continue;
            if (Q.meet(v, y) != x) continue;
            if (u != v) {
              rep.holds = false;
              rep.counterexample = {x, y, z, u, v};
              rep.detail = "classes u != v despite u∨y=z and v∧y=x";
              return rep;
            }
          }
        }
      }
    }
  }
  rep.holds = true;
  return rep;
}

}  // namespace latmod
