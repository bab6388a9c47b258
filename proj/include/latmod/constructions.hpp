#pragma once

#include "latmod/lattice.hpp"

#include <map>
#include <string>

namespace latmod {

// Chain with k+1 elements 0 < 1 < ... < k.
Lattice chain_lattice(int k);
Lattice point_lattice();
// Subsets of {0..nbits-1}; element id is the subset mask.
Lattice boolean_lattice(int nbits);
Lattice diamond_m3();
// 0 < a < b < 1 and 0 < c < 1, with ids (0,1,2,4) and c = 3.
Lattice pentagon_n5();
// Hexagon: two incomparable 2-chains between bottom and top.
Lattice benzene();
// Bottom and top joined by two otherwise disjoint chains with the given
// interior lengths; (3, 2) is the classical non-graded 7-element example.
Lattice parallel_chains(int left_len, int right_len);
// Set partitions of {1..n} by refinement; bottom = all singletons.
Lattice partition_lattice(int n);
std::pair<Lattice, std::vector<std::string>> partition_lattice_labeled(int n);
Lattice divisor_lattice(long m);
// Componentwise order on pairs; id = a * |B| + b.
Lattice product(const Lattice& A, const Lattice& B);

// CLI-facing dispatch. Families: chain(k), boolean(n), m3, n5, benzene,
// figure1, partition(n), divisor(m), point, grid(k), downset(r,s).
Lattice named_lattice(const std::string& family,
                      const std::map<std::string, long>& params);

// Index-set model of the maximum graded quotient of a length-k chain
// freely joined with one extra generator: pairs (i,j), i in {-1..k},
// max(i,0) <= j <= k+1, ordered componentwise. Semantics: (i,j) with
// 0 <= i <= j <= k is (y∨x_i)∧x_j, (-1,j) is y∧x_j, (i,k+1) is y∨x_i,
// and (-1,k+1) is y itself.
struct GridQuotient {
  int k = 0;
  Lattice lattice;
  std::vector<std::pair<int, int>> coords;  // element id -> (i, j)
  std::vector<int> chain;                   // images of x_0..x_k
  int y = 0;                                // image of y
  int id_of(int i, int j) const;
};
GridQuotient grid_quotient(int k);

// Down-closed subset of the grid [1,r] x [1,s], stored as the column
// heights per row: (i,j) is a member iff j <= profile[i-1]; the profile
// is non-increasing.
struct DownSet {
  int rows = 0;
  int cols = 0;
  std::vector<int> profile;

  DownSet() = default;
  DownSet(int r, int s, std::vector<int> prof);
  static DownSet empty(int r, int s);
  static DownSet full(int r, int s);
  static std::vector<DownSet> all(int r, int s, size_t cap);

  bool contains(int i, int j) const {  // 1-based
    return i >= 1 && i <= rows && j >= 1 && j <= profile[i - 1];
  }
  int count() const;
  bool subset_of(const DownSet& o) const;
  DownSet intersect(const DownSet& o) const;
  DownSet unite(const DownSet& o) const;
  bool operator==(const DownSet&) const = default;
};

// All down-sets of [1,r] x [1,s] ordered by inclusion, with id lookup.
struct DownSetLattice {
  int rows = 0;
  int cols = 0;
  Lattice lattice;
  std::vector<DownSet> sets;  // element id -> down-set
  int id_of(const DownSet& d) const;
};
DownSetLattice downset_lattice(int r, int s, size_t cap = 100000);

}  // namespace latmod
