#include "latmod/birkhoff.hpp"

#include "latmod/io.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace latmod {

UVTables make_uv_tables(const Lattice& L, const Chain& xchain,
                        const Chain& ychain) {
  if (!is_maximal_chain(L, xchain))
    throw hypothesis_error("uv tables: xchain is not a maximal chain");
  if (!is_maximal_chain(L, ychain))
    throw hypothesis_error("uv tables: ychain is not a maximal chain");
  UVTables t;
  t.L = &L;
  t.xchain = xchain;
  t.ychain = ychain;
  t.r = int(xchain.size()) - 1;
  t.s = int(ychain.size()) - 1;
  t.u.resize(size_t(t.r + 1) * (t.s + 1));
  t.v.resize(size_t(t.r + 1) * (t.s + 1));
  for (int i = 0; i <= t.r; ++i)
    for (int j = 0; j <= t.s; ++j) {
      t.u[size_t(i) * (t.s + 1) + j] = L.meet(xchain[i], ychain[j]);
      t.v[size_t(i) * (t.s + 1) + j] = L.join(xchain[i], ychain[j]);
    }
  return t;
}

int phi(const UVTables& t, const DownSet& I) {
  if (I.rows != t.r || I.cols != t.s)
    throw param_error("down-set grid does not match the chain ranks");
  int acc = t.L->bottom();
  for (int i = 1; i <= t.r; ++i)
    for (int j = 1; j <= I.profile[i - 1]; ++j)
      acc = t.L->join(acc, t.u_at(i, j));
  return acc;
}

int psi(const UVTables& t, const DownSet& I) {
  if (I.rows != t.r || I.cols != t.s)
    throw param_error("down-set grid does not match the chain ranks");
  int acc = t.L->top();
  for (int i = 1; i <= t.r; ++i)
    for (int j = I.profile[i - 1] + 1; j <= t.s; ++j)
      acc = t.L->meet(acc, t.v_at(i - 1, j - 1));
  return acc;
}

namespace {

std::vector<int> join_closure(const Lattice& L, std::vector<int> elems) {
  Bitset in(L.size());
  std::vector<int> work = elems;
  std::vector<int> members;
  for (int e : elems)
    if (!in.test(e)) {
      in.set(e);
      members.push_back(e);
    }
  work = members;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int j = L.join(x, members[i]);
      if (!in.test(j)) {
        in.set(j);
        members.push_back(j);
        work.push_back(j);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> meet_closure(const Lattice& L, std::vector<int> elems) {
  Bitset in(L.size());
  std::vector<int> work;
  std::vector<int> members;
  for (int e : elems)
    if (!in.test(e)) {
      in.set(e);
      members.push_back(e);
    }
  work = members;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int m = L.meet(x, members[i]);
      if (!in.test(m)) {
        in.set(m);
        members.push_back(m);
        work.push_back(m);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

CertifyResult certify_supersolvable(const Lattice& L, const Chain& mchain,
                                    size_t downset_cap) {
  if (!is_maximal_chain(L, mchain))
    throw hypothesis_error("certify_supersolvable: mchain is not maximal");
  CertifyResult res;
  SupersolvabilityCertificate cert;
  cert.mchain = mchain;

  for (const Chain& ychain : maximal_chains(L)) {
    UVTables t = make_uv_tables(L, mchain, ychain);
    auto fail = [&](const std::string& check, std::vector<int> witness) {
      res.failure = CertifyFailure{ychain, check, std::move(witness)};
    };

    if (t.r == 0) {  // one-element lattice: the grid is empty
      ChainCheck check;
      check.ychain = ychain;
      check.downsets = 1;
      check.image = {L.bottom()};
      cert.per_chain.push_back(std::move(check));
      continue;
    }

    auto sets = DownSet::all(t.r, t.s, downset_cap);
    const int nd = int(sets.size());
    std::vector<int> phiv(nd), psiv(nd);
    for (int i = 0; i < nd; ++i) {
      phiv[i] = phi(t, sets[i]);
      psiv[i] = psi(t, sets[i]);
      if (phiv[i] != psiv[i]) {
        std::vector<int> w = sets[i].profile;
        w.push_back(phiv[i]);
        w.push_back(psiv[i]);
        fail("phi_equals_psi", std::move(w));
        return res;
      }
    }

    // Mixed-radix profile index keeps the pairwise homomorphism check
    // cheap even for chain-on-chain instances with thousands of sets.
    const uint64_t radix = uint64_t(t.s) + 1;
    uint64_t key_space = 1;
    bool dense = true;
    for (int i = 0; i < t.r && dense; ++i) {
      key_space *= radix;
      if (key_space > (uint64_t(1) << 23)) dense = false;
    }
    auto key_of = [&](const std::vector<int>& prof) {
      uint64_t k = 0;
      for (int i = t.r - 1; i >= 0; --i) k = k * radix + uint64_t(prof[i]);
      return k;
    };
    std::vector<int> dense_idx;
    std::map<uint64_t, int> sparse_idx;
    if (dense) {
      dense_idx.assign(key_space, -1);
      for (int i = 0; i < nd; ++i) dense_idx[key_of(sets[i].profile)] = i;
    } else {
      for (int i = 0; i < nd; ++i) sparse_idx[key_of(sets[i].profile)] = i;
    }
    auto idx_of = [&](uint64_t key) {
      return dense ? dense_idx[key] : sparse_idx.at(key);
    };
    std::vector<int> lo(t.r), hi(t.r);
    for (int a = 0; a < nd; ++a)
      for (int b = a; b < nd; ++b) {
        const auto& pa = sets[a].profile;
        const auto& pb = sets[b].profile;
        for (int i = 0; i < t.r; ++i) {
          lo[i] = std::min(pa[i], pb[i]);
          hi[i] = std::max(pa[i], pb[i]);
        }
        int pm = phiv[idx_of(key_of(lo))];
        int pj = phiv[idx_of(key_of(hi))];
        if (pm != L.meet(phiv[a], phiv[b])) {
          fail("phi_preserves_meet", {a, b, pm, L.meet(phiv[a], phiv[b])});
          return res;
        }
        if (pj != L.join(phiv[a], phiv[b])) {
          fail("phi_preserves_join", {a, b, pj, L.join(phiv[a], phiv[b])});
          return res;
        }
      }

    std::vector<int> image = phiv;
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    std::vector<int> gens = mchain;
    gens.insert(gens.end(), ychain.begin(), ychain.end());
    std::vector<int> generated = sublattice_generated(L, gens);
    if (image != generated) {
      fail("image_equals_generated_sublattice", image);
      return res;
    }
    std::vector<int> uvec(t.u.begin(), t.u.end());
    std::vector<int> vvec(t.v.begin(), t.v.end());
    if (join_closure(L, uvec) != image || meet_closure(L, vvec) != image) {
      fail("joins_of_u_equal_meets_of_v", image);
      return res;
    }
    if (!is_distributive_subset(L, image)) {
      fail("image_distributive", image);
      return res;
    }

    ChainCheck check;
    check.ychain = ychain;
    check.rows = t.r;
    check.cols = t.s;
    check.downsets = size_t(nd);
    check.image = std::move(image);
    cert.per_chain.push_back(std::move(check));
  }
  res.certificate = std::move(cert);
  return res;
}

std::pair<int, int> eval_p(const Lattice& L, const std::vector<int>& a,
                           const std::vector<int>& b) {
  const int t = int(a.size());
  int lhs = L.top();
  for (int i = 0; i < t; ++i) lhs = L.meet(lhs, L.join(b[i], a[i]));
  int rhs = b[0];
  for (int i = 0; i + 1 < t; ++i) rhs = L.join(rhs, L.meet(a[i], b[i + 1]));
  rhs = L.join(rhs, a[t - 1]);
  return {lhs, rhs};
}

std::pair<int, int> eval_q(const Lattice& L, const std::vector<int>& a,
                           const std::vector<int>& b) {
  const int t = int(a.size());
  int lhs = L.bottom();
  for (int i = 0; i < t; ++i) lhs = L.join(lhs, L.meet(a[i], b[i]));
  int rhs = a[0];
  for (int i = 0; i + 1 < t; ++i) rhs = L.meet(rhs, L.join(b[i], a[i + 1]));
  rhs = L.meet(rhs, b[t - 1]);
  return {lhs, rhs};
}

namespace {

// Non-strict monotone index sequences of length t over 0..m.
void monotone_sequences(int m, int t, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(t, 0);
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[i] == m) --i;
    if (i < 0) return;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = cur[i];
  }
}

}  // namespace

PropertyReport verify_pq(const Lattice& L, const Chain& xchain,
                         const Chain& ychain, int t) {
  PropertyReport rep;
  rep.property = "pq_identities";
  if (t < 1) throw param_error("pq identities need t >= 1");
  if (!is_maximal_chain(L, xchain))
    throw hypothesis_error("pq identities: xchain is not a maximal chain");
  if (!is_chain(L, ychain))
    throw hypothesis_error("pq identities: ychain is not a chain");

  std::vector<std::vector<int>> idx_a, idx_b;
  monotone_sequences(int(xchain.size()) - 1, t, idx_a);
  monotone_sequences(int(ychain.size()) - 1, t, idx_b);

  std::vector<int> a(t), b(t);
  for (const auto& ia : idx_a) {
    // a decreasing along the chain
    for (int i = 0; i < t; ++i) a[i] = xchain[int(xchain.size()) - 1 - ia[i]];
    for (const auto& ib : idx_b) {
      for (int i = 0; i < t; ++i) b[i] = ychain[ib[i]];
      auto [pl, pr] = eval_p(L, a, b);
      if (pl != pr) {
        rep.holds = false;
        rep.counterexample = {0};
        rep.counterexample.insert(rep.counterexample.end(), a.begin(), a.end());
        rep.counterexample.insert(rep.counterexample.end(), b.begin(), b.end());
        rep.counterexample.push_back(pl);
        rep.counterexample.push_back(pr);
        rep.detail = "identity P fails";
        return rep;
      }
      auto [ql, qr] = eval_q(L, a, b);
      if (ql != qr) {
        rep.holds = false;
        rep.counterexample = {1};
        rep.counterexample.insert(rep.counterexample.end(), a.begin(), a.end());
        rep.counterexample.insert(rep.counterexample.end(), b.begin(), b.end());
        rep.counterexample.push_back(ql);
        rep.counterexample.push_back(qr);
        rep.detail = "identity Q fails";
        return rep;
      }
    }
  }
  rep.holds = true;
  return rep;
}

namespace {

PropertyReport check_cover_translation(const Lattice& L,
                                       const std::vector<int>& lm) {
  PropertyReport rep;
  rep.property = "cover_translation";
  Bitset lmset(L.size());
  for (int x : lm) lmset.set(x);
  long instances = 0;
  for (auto [u, v] : L.covers()) {
    if (!lmset.test(u) || !lmset.test(v)) continue;
    for (int z = 0; z < L.size(); ++z) {
      ++instances;
      if (!L.preceq(L.join(u, z), L.join(v, z)) ||
          !L.preceq(L.meet(u, z), L.meet(v, z))) {
        rep.holds = false;
        rep.counterexample = {u, v, z};
        rep.detail = "join/meet translation breaks covers-or-equal";
        return rep;
      }
    }
  }
  rep.holds = true;
  if (instances == 0) rep.detail = "no left modular cover pair; vacuous";
  return rep;
}

PropertyReport check_interval_left_modularity(const Lattice& L,
                                              const std::vector<int>& lm) {
  PropertyReport rep;
  rep.property = "interval_left_modularity";
  long instances = 0;
  for (int y = 0; y < L.size(); ++y)
    for (int z = 0; z < L.size(); ++z) {
      if (y == z || !L.leq(y, z)) continue;
      auto [sub, embed] = interval(L, y, z);
      std::vector<int> pos(L.size(), -1);
      for (size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = int(i);
      for (int x : lm) {
        ++instances;
        int e = L.meet(L.join(y, x), z);
        if (!is_left_modular_element(sub, pos[e]).holds) {
          rep.holds = false;
          rep.counterexample = {x, y, z, e};
          rep.detail = "induced element is not left modular in the interval";
          return rep;
        }
      }
    }
  rep.holds = true;
  if (instances == 0) rep.detail = "no left modular element; vacuous";
  return rep;
}

PropertyReport check_induced_chain_maximality(
    const Lattice& L, const std::vector<Chain>& lm_chains) {
  PropertyReport rep;
  rep.property = "induced_chain_maximality";
  long instances = 0;
  for (const Chain& xc : lm_chains)
    for (int y = 0; y < L.size(); ++y)
      for (int z = 0; z < L.size(); ++z) {
        if (!L.leq(y, z)) continue;
        ++instances;
        Chain ind = induced_chain(L, xc, y, z);
        auto [sub, embed] = interval(L, y, z);
        std::vector<int> pos(L.size(), -1);
        for (size_t i = 0; i < embed.size(); ++i) pos[embed[i]] = int(i);
        Chain mapped;
        for (int e : ind) mapped.push_back(pos[e]);
        if (!is_maximal_chain(sub, mapped)) {
          rep.holds = false;
          rep.counterexample = {y, z};
          rep.detail = "induced chain is not maximal in the interval";
          return rep;
        }
        for (int e : mapped)
          if (!is_left_modular_element(sub, e).holds) {
            rep.holds = false;
            rep.counterexample = {y, z, embed[e]};
            rep.detail = "induced chain element not left modular in interval";
            return rep;
          }
      }
  rep.holds = true;
  if (instances == 0) rep.detail = "no maximal left modular chain; vacuous";
  return rep;
}

PropertyReport check_chain_modular_pairs(const Lattice& L,
                                         const std::vector<Chain>& lm_chains,
                                         bool graded) {
  PropertyReport rep;
  rep.property = "chain_modular_pairs";
  if (!graded || lm_chains.empty()) {
    rep.holds = true;
    rep.detail = "hypotheses (graded + left modular chain) not met; vacuous";
    return rep;
  }
  for (const Chain& xc : lm_chains) {
    for (int w = 0; w < L.size(); ++w) {
      for (size_t i = 0; i < xc.size(); ++i)
        for (size_t j = i + 1; j < xc.size(); ++j)
          if (!modular_triple(L, w, xc[i], xc[j])) {
            rep.holds = false;
            rep.counterexample = {w, xc[i], xc[j]};
            rep.detail = "M(w, x_i, x_j) fails";
            return rep;
          }
      // Proof step: the sublattice generated by the chain and w is
      // graded, with covers inherited from L.
      std::vector<int> gens = xc;
      gens.push_back(w);
      std::vector<int> K = sublattice_generated(L, gens);
      Bitset inK(L.size());
      for (int e : K) inK.set(e);
      for (int a : K)
        for (int b : K) {
          if (a == b || !L.less(a, b)) continue;
          bool between = false;
          for (int c : K)
            if (c != a && c != b && L.less(a, c) && L.less(c, b)) {
              between = true;
              break;
            }
          if (!between && !L.covers_pair(a, b)) {
            rep.holds = false;
            rep.counterexample = {w, a, b};
            rep.detail = "generated sublattice has a cover not inherited "
                         "from the ambient lattice";
            return rep;
          }
        }
    }
  }
  rep.holds = true;
  return rep;
}

}  // namespace

LemmaSuiteReport verify_lemma_suite(const Lattice& L, size_t congruence_cap) {
  LemmaSuiteReport out;
  std::vector<int> lm = left_modular_elements(L);
  std::vector<Chain> lm_chains = left_modular_maximal_chains(L);
  bool graded = is_graded(L).holds;

  out.checks.push_back(lemma_quotient_separation(L, congruence_cap));
  out.checks.push_back(check_cover_translation(L, lm));
  out.checks.push_back(check_interval_left_modularity(L, lm));
  out.checks.push_back(check_induced_chain_maximality(L, lm_chains));
  out.checks.push_back(check_chain_modular_pairs(L, lm_chains, graded));
  return out;
}

PropertyReport universal_property_check(int k, const Lattice& M,
                                        const Chain& chain, int w) {
  PropertyReport rep;
  rep.property = "universal_property";
  if (int(chain.size()) != k + 1)
    throw param_error("universal_property_check: chain must have k+1 elements");
  if (!is_chain(M, chain))
    throw hypothesis_error("universal_property_check: not a chain of M");
  if (w < 0 || w >= M.size())
    throw param_error("universal_property_check: w out of range");
  if (!is_graded(M).holds)
    throw hypothesis_error("universal_property_check: M is not graded");
  std::vector<int> gens = chain;
  gens.push_back(w);
  if (int(sublattice_generated(M, gens).size()) != M.size())
    throw hypothesis_error(
        "universal_property_check: chain and w do not generate M");

  // node-based map: references stay valid across inserts by other callers
  static std::mutex cache_mutex;
  static std::map<int, GridQuotient> cache;
  const GridQuotient* Gp;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, grid_quotient(k)).first;
    Gp = &it->second;
  }
  const GridQuotient& G = *Gp;
  const Lattice& GL = G.lattice;

  std::vector<int> img(GL.size());
  for (int e = 0; e < GL.size(); ++e) {
    auto [i, j] = G.coords[e];
    if (i == -1 && j == k + 1)
      img[e] = w;
    else if (i == -1)
      img[e] = M.meet(w, chain[j]);
    else if (j == k + 1)
      img[e] = M.join(w, chain[i]);
    else
      img[e] = M.meet(M.join(w, chain[i]), chain[j]);
  }

  for (int a = 0; a < GL.size(); ++a)
    for (int b = a; b < GL.size(); ++b) {
      if (img[GL.meet(a, b)] != M.meet(img[a], img[b])) {
        rep.holds = false;
        rep.counterexample = {a, b};
        rep.detail = "map does not preserve meet";
        return rep;
      }
      if (img[GL.join(a, b)] != M.join(img[a], img[b])) {
        rep.holds = false;
        rep.counterexample = {a, b};
        rep.detail = "map does not preserve join";
        return rep;
      }
    }
  std::vector<int> image = img;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (int(image.size()) != M.size()) {
    rep.holds = false;
    rep.detail = "map is not surjective";
    return rep;
  }
  rep.holds = true;
  rep.witness = img;
  return rep;
}

TheoremSummary verify_theorem1(const std::vector<Lattice>& corpus) {
  TheoremSummary sum;
  for (const Lattice& L : corpus) {
    ++sum.lattices;
    bool graded = is_graded(L).holds;
    auto lm_chain = find_left_modular_chain(L);
    PropertyReport ss = is_supersolvable(L);
    bool lhs = graded && lm_chain.has_value();
    if (lhs) ++sum.graded_left_modular;
    if (ss.holds) ++sum.supersolvable;
    if (lhs != ss.holds) {
      sum.violations.push_back(
          {canonical_hex(L),
           lhs ? "graded left modular but not supersolvable"
               : "supersolvable but not graded left modular",
           serialize_lattice(L)});
      continue;
    }
    if (lhs) {
      CertifyResult cert = certify_supersolvable(L, *lm_chain);
      if (!cert.ok())
        sum.violations.push_back(
            {canonical_hex(L),
             "certification failed at check " + cert.failure->check,
             serialize_lattice(L)});
    }
  }
  return sum;
}

}  // namespace latmod
