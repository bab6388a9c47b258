#pragma once

#include "latmod/bits.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latmod {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The covers given to build_from_covers contain a directed cycle.
class cycle_error : public error {
 public:
  using error::error;
};

// Some pair has no unique meet or join (includes missing bottom/top).
class not_a_lattice_error : public error {
 public:
  not_a_lattice_error(const std::string& msg, int a, int b)
      : error(msg), a(a), b(b) {}
  int a;
  int b;
};

// An input cover edge is implied by the others (or duplicated).
class redundant_cover_error : public error {
 public:
  redundant_cover_error(const std::string& msg, int a, int b)
      : error(msg), a(a), b(b) {}
  int a;
  int b;
};

// An operation requiring y <= z was given an incomparable pair.
class not_comparable_error : public error {
 public:
  not_comparable_error(const std::string& msg, int a, int b)
      : error(msg), a(a), b(b) {}
  int a;
  int b;
};

class too_large_error : public error {
 public:
  using error::error;
};

// Unknown family name or parameter out of its documented range.
class param_error : public error {
 public:
  using error::error;
};

// A partition handed to quotient() is not compatible with meet/join.
class partition_error : public error {
 public:
  using error::error;
};

// A stated hypothesis (maximal left modular chain, graded, generating
// set, ...) does not hold for the given arguments.
class hypothesis_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

// A chain is a strictly increasing (in the lattice order) id sequence.
using Chain = std::vector<int>;
using CoverList = std::vector<std::pair<int, int>>;

// Finite bounded lattice on elements 0..n-1, built from its cover
// relation. The order and the meet/join tables are precomputed in full;
// values are immutable after construction and safe to share.
class Lattice {
 public:
  // Empty placeholder; assign from build_from_covers before use.
  Lattice() = default;

  int size() const { return n_; }

  // Transitive reduction, sorted lexicographically.
  const CoverList& covers() const { return covers_; }

  bool leq(int a, int b) const { return up_.get(a, b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool covers_pair(int a, int b) const;  // a is covered by b
  // covers-or-equal
  bool preceq(int a, int b) const { return a == b || covers_pair(a, b); }

  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Length of the longest chain from bottom / to top.
  int height(int x) const { return height_[x]; }
  int depth(int x) const { return depth_[x]; }
  int rank() const { return height_[top_]; }

  // row x = { y : x <= y } resp. { y : y <= x }
  const BitRel& up() const { return up_; }
  const BitRel& down() const { return dn_; }

  const std::vector<int>& upper_covers(int x) const { return up_adj_[x]; }
  const std::vector<int>& lower_covers(int x) const { return dn_adj_[x]; }

  friend Lattice build_from_covers(int n, CoverList covers);

 private:
  size_t idx(int a, int b) const { return size_t(a) * n_ + b; }

  int n_ = 0;
  CoverList covers_;
  BitRel up_;
  BitRel dn_;
  std::vector<uint16_t> meet_;
  std::vector<uint16_t> join_;
  std::vector<int> height_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> up_adj_;
  std::vector<std::vector<int>> dn_adj_;
  int bottom_ = 0;
  int top_ = 0;
};

inline constexpr int kMaxElements = 4096;

// Validates and derives everything. The input must be exactly the
// transitive reduction: redundant or duplicate edges are rejected.
Lattice build_from_covers(int n, CoverList covers);

// Sublattice on { w : y <= w <= z } plus the map new id -> old id.
std::pair<Lattice, std::vector<int>> interval(const Lattice& L, int y, int z);

// All maximal chains bottom..top (resp. y..z), in lexicographic
// element-id order. Every returned chain is saturated.
std::vector<Chain> maximal_chains(const Lattice& L);
std::vector<Chain> maximal_chains_between(const Lattice& L, int y, int z);

// Every nonempty chain of L, as ascending id sequences.
std::vector<Chain> all_chains(const Lattice& L);

bool is_chain(const Lattice& L, const Chain& c);
bool is_maximal_chain(const Lattice& L, const Chain& c);
bool is_maximal_chain_between(const Lattice& L, const Chain& c, int y, int z);

// Least subset containing gens closed under pairwise meet and join,
// computed by iterating one-step closures to a fixpoint. Sorted.
std::vector<int> sublattice_generated(const Lattice& L,
                                      const std::vector<int>& gens);

// Isomorphism-invariant key: equal keys iff isomorphic lattices.
// Computed by height-level colour refinement plus lex-min backtracking.
std::string canonical_form(const Lattice& L);
std::string canonical_hex(const Lattice& L);
std::string to_hex(const std::string& bytes);

Lattice dual(const Lattice& L);

}  // namespace latmod
