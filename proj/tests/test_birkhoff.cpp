#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latmod/birkhoff.hpp"
#include "latmod/constructions.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace latmod;

namespace {

Chain chain_through(const Lattice& L, int mid) {
  for (const Chain& c : maximal_chains(L))
    if (std::find(c.begin(), c.end(), mid) != c.end()) return c;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("uv tables on the diamond") {
  Lattice b2 = boolean_lattice(2);
  Chain x = chain_through(b2, 1);  // 0 < {0} < top
  Chain y = chain_through(b2, 2);
  UVTables t = make_uv_tables(b2, x, y);
  CHECK(t.r == 2);
  CHECK(t.s == 2);
  for (int j = 0; j <= t.s; ++j) CHECK(t.u_at(0, j) == b2.bottom());
  // monotone in both indices
  for (int i = 0; i <= t.r; ++i)
    for (int j = 0; j <= t.s; ++j) {
      if (i > 0) {
        CHECK(b2.leq(t.u_at(i - 1, j), t.u_at(i, j)));
        CHECK(b2.leq(t.v_at(i - 1, j), t.v_at(i, j)));
      }
      if (j > 0) {
        CHECK(b2.leq(t.u_at(i, j - 1), t.u_at(i, j)));
        CHECK(b2.leq(t.v_at(i, j - 1), t.v_at(i, j)));
      }
    }

  CHECK(phi(t, DownSet::empty(2, 2)) == b2.bottom());
  CHECK(phi(t, DownSet::full(2, 2)) == b2.top());
  CHECK(psi(t, DownSet::full(2, 2)) == b2.top());
  CHECK(psi(t, DownSet::empty(2, 2)) == b2.bottom());
  DownSet row1(2, 2, {2, 0});  // {(1,1), (1,2)}
  CHECK(phi(t, row1) == 1);
  CHECK(psi(t, row1) == 1);

  CHECK_THROWS_AS(phi(t, DownSet::empty(3, 2)), param_error);
  CHECK_THROWS_AS(make_uv_tables(b2, Chain{0, 3}, y), hypothesis_error);
}

TEST_CASE("phi is monotone") {
  Lattice pi4 = partition_lattice(4);
  auto chains = maximal_chains(pi4);
  UVTables t = make_uv_tables(pi4, chains[0], chains[1]);
  auto sets = DownSet::all(t.r, t.s, 100000);
  for (const auto& I : sets)
    for (const auto& J : sets)
      if (I.subset_of(J)) CHECK(pi4.leq(phi(t, I), phi(t, J)));
}

TEST_CASE("certification succeeds on distributive and partition lattices") {
  Lattice b3 = boolean_lattice(3);
  for (const Chain& m : maximal_chains(b3)) {
    CertifyResult res = certify_supersolvable(b3, m);
    CHECK(res.ok());
  }

  auto [pi4, labels] = partition_lattice_labeled(4);
  auto label_id = [&](const std::string& s) {
    return int(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  Chain mchain = {pi4.bottom(), label_id("12|3|4"), label_id("123|4"),
                  pi4.top()};
  REQUIRE(is_maximal_chain(pi4, mchain));
  CertifyResult res = certify_supersolvable(pi4, mchain);
  REQUIRE(res.ok());
  // each per-chain image is the generated sublattice and is distributive
  for (const auto& cc : res.certificate->per_chain) {
    std::vector<int> gens = mchain;
    gens.insert(gens.end(), cc.ychain.begin(), cc.ychain.end());
    CHECK(cc.image == sublattice_generated(pi4, gens));
    CHECK(is_distributive_subset(pi4, cc.image));
  }

  Lattice pi5 = partition_lattice(5);
  PropertyReport ss5 = is_supersolvable(pi5);
  REQUIRE(ss5.holds);
  CertifyResult res5 = certify_supersolvable(pi5, ss5.witness);
  CHECK(res5.ok());
  CHECK(res5.certificate->per_chain.size() == maximal_chains(pi5).size());
}

TEST_CASE("certification fails with witnesses on the hexagon and pentagon") {
  Lattice hex = benzene();
  for (const Chain& m : maximal_chains(hex)) {
    CertifyResult res = certify_supersolvable(hex, m);
    CHECK(!res.ok());
    CHECK(res.failure.has_value());
  }
  Lattice n5 = pentagon_n5();
  CertifyResult res = certify_supersolvable(n5, Chain{0, 1, 2, 4});
  REQUIRE(!res.ok());
  CHECK(res.failure->check == "phi_equals_psi");
  CHECK(res.failure->ychain == Chain{0, 3, 4});
  CHECK_THROWS_AS(certify_supersolvable(n5, Chain{0, 1, 4}),
                  hypothesis_error);
}

TEST_CASE("ladder identities level 1 are tautologous") {
  for (const Lattice& L : {pentagon_n5(), benzene(), diamond_m3()})
    for (const Chain& x : maximal_chains(L))
      for (const Chain& y : maximal_chains(L))
        CHECK(verify_pq(L, x, y, 1).holds);
}

TEST_CASE("the pentagon pins the exact failing Q2 witness") {
  Lattice n5 = pentagon_n5();
  // a = (b, a) decreasing, b = (c, top) increasing
  auto [ql, qr] = eval_q(n5, {2, 1}, {3, 4});
  CHECK(ql == 1);
  CHECK(qr == 2);
  PropertyReport rep = verify_pq(n5, Chain{0, 1, 2, 4}, Chain{0, 3, 4}, 2);
  CHECK(!rep.holds);
  // the reported violation re-evaluates to a violation
  REQUIRE(rep.counterexample.size() == 7);
  std::vector<int> a = {rep.counterexample[1], rep.counterexample[2]};
  std::vector<int> b = {rep.counterexample[3], rep.counterexample[4]};
  auto sides = rep.counterexample[0] == 0 ? eval_p(n5, a, b) : eval_q(n5, a, b);
  CHECK(sides.first == rep.counterexample[5]);
  CHECK(sides.second == rep.counterexample[6]);
  CHECK(sides.first != sides.second);
}

TEST_CASE("ladder identities hold with graded left modular hypotheses") {
  for (const Lattice& L : {partition_lattice(4), boolean_lattice(3),
                           diamond_m3(), grid_quotient(2).lattice}) {
    REQUIRE(is_graded(L).holds);
    auto xs = left_modular_maximal_chains(L);
    REQUIRE(!xs.empty());
    for (const Chain& x : xs)
      for (const Chain& y : maximal_chains(L))
        for (int t = 1; t <= 3; ++t) CHECK(verify_pq(L, x, y, t).holds);
  }
}

TEST_CASE("ladder identities accept non-maximal second chains") {
  Lattice pi4 = partition_lattice(4);
  Chain x = *find_left_modular_chain(pi4);
  Chain y = {pi4.bottom(), pi4.top()};
  for (int t = 1; t <= 3; ++t) CHECK(verify_pq(pi4, x, y, t).holds);
}

TEST_CASE("repeating the last pair changes neither ladder side") {
  oracle::Rng rng;
  for (const Lattice& L : {partition_lattice(4), pentagon_n5(), benzene()}) {
    auto chains = maximal_chains(L);
    for (int trial = 0; trial < 50; ++trial) {
      const Chain& xc = chains[rng.below(int(chains.size()))];
      const Chain& yc = chains[rng.below(int(chains.size()))];
      int t = 2 + rng.below(2);
      std::vector<int> a(t), b(t);
      int ai = rng.below(int(xc.size()));
      int bi = rng.below(int(yc.size()));
      for (int i = 0; i < t; ++i) {
        a[i] = xc[ai];
        b[i] = yc[bi];
        ai -= rng.below(ai + 1);  // indices fall: a is decreasing
        bi += rng.below(int(yc.size()) - bi);
      }
      std::vector<int> a2 = a, b2 = b;
      a2.push_back(a.back());
      b2.push_back(b.back());
      CHECK(eval_p(L, a, b) == eval_p(L, a2, b2));
      CHECK(eval_q(L, a, b) == eval_q(L, a2, b2));
    }
  }
}

TEST_CASE("lemma suite passes where hypotheses hold") {
  for (const Lattice& L : {diamond_m3(), partition_lattice(4),
                           partition_lattice(5), boolean_lattice(4),
                           pentagon_n5(), benzene(), parallel_chains(3, 2),
                           divisor_lattice(36)}) {
    LemmaSuiteReport rep = verify_lemma_suite(L);
    for (const auto& c : rep.checks) {
      INFO(c.property);
      CHECK(c.holds);
    }
  }
}

TEST_CASE("universal property") {
  for (int k = 0; k <= 4; ++k) {
    GridQuotient G = grid_quotient(k);
    PropertyReport rep = universal_property_check(k, G.lattice, G.chain, G.y);
    CHECK(rep.holds);
    // identity witness: image of element e is e itself
    for (int e = 0; e < G.lattice.size(); ++e) CHECK(rep.witness[e] == e);
  }

  Lattice b2 = boolean_lattice(2);
  PropertyReport rep = universal_property_check(2, b2, Chain{0, 1, 3}, 2);
  CHECK(rep.holds);

  CHECK_THROWS_AS(universal_property_check(2, pentagon_n5(), Chain{0, 1, 2}, 3),
                  hypothesis_error);
  Lattice b3 = boolean_lattice(3);
  CHECK_THROWS_AS(universal_property_check(1, b3, Chain{0, 7}, 1),
                  hypothesis_error);
  CHECK_THROWS_AS(universal_property_check(1, b2, Chain{0, 1, 3}, 2),
                  param_error);
}

TEST_CASE("theorem equivalence on named lattices") {
  std::vector<Lattice> corpus = {chain_lattice(3),
                                 boolean_lattice(2),
                                 boolean_lattice(3),
                                 boolean_lattice(4),
                                 diamond_m3(),
                                 pentagon_n5(),
                                 benzene(),
                                 parallel_chains(3, 2),
                                 partition_lattice(3),
                                 partition_lattice(4),
                                 divisor_lattice(12),
                                 divisor_lattice(36),
                                 product(chain_lattice(2), chain_lattice(3)),
                                 grid_quotient(0).lattice,
                                 grid_quotient(1).lattice,
                                 grid_quotient(2).lattice};
  TheoremSummary sum = verify_theorem1(corpus);
  CHECK(sum.lattices == long(corpus.size()));
  CHECK(sum.violations.empty());
  CHECK(sum.graded_left_modular == sum.supersolvable);
  // negative controls are classified correctly
  CHECK(!is_supersolvable(pentagon_n5()).holds);
  CHECK(!is_supersolvable(benzene()).holds);
  CHECK(!is_supersolvable(parallel_chains(3, 2)).holds);
  // larger grid models: both sides of the equivalence hold; the full
  // pairwise down-set certification is exercised up to k = 2 above,
  // where it stays within the down-set cap
  for (int k = 3; k <= 5; ++k) {
    const Lattice& G = grid_quotient(k).lattice;
    CHECK(is_graded(G).holds);
    CHECK(find_left_modular_chain(G).has_value());
    CHECK(is_supersolvable(G).holds);
  }
}
