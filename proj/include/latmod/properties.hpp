#pragma once

#include "latmod/lattice.hpp"

#include <optional>

namespace latmod {

// Verdict plus evidence. For a true existential verdict the witness is
// populated; for a false universal verdict the counterexample is; the
// counterexample always re-evaluates to a violation.
struct PropertyReport {
  std::string property;
  bool holds = false;
  std::vector<int> witness;
  std::vector<int> counterexample;
  std::string detail;
};

// True iff every cover raises the longest-chain height by exactly one;
// for finite bounded lattices this matches the all-maximal-chains-agree
// definition (the equivalence is itself under test, not assumed).
PropertyReport is_graded(const Lattice& L);

PropertyReport is_distributive(const Lattice& L);

// The statement M(x,y,z): (y ∨ x) ∧ z = y ∨ (x ∧ z), defined for y <= z.
bool modular_triple(const Lattice& L, int x, int y, int z);

// x is left modular iff M(x,y,z) for every comparable pair y <= z.
PropertyReport is_left_modular_element(const Lattice& L, int x);
std::vector<int> left_modular_elements(const Lattice& L);

// A maximal chain all of whose elements are left modular, if any.
std::optional<Chain> find_left_modular_chain(const Lattice& L);
std::vector<Chain> left_modular_maximal_chains(const Lattice& L);

// Definition-level check: some maximal chain m such that for every
// maximal chain c, the sublattice generated by m ∪ c is distributive.
// Maximal chains c suffice: chains extend to maximal ones, generation is
// monotone, and sublattices of distributive lattices are distributive.
PropertyReport is_supersolvable(const Lattice& L);

// (y ∨ x) ∧ z, for y <= z; equals y ∨ (x ∧ z) when x is left modular.
int induced_element(const Lattice& L, int x, int y, int z);

// Deduplicated sequence of induced elements of a maximal left modular
// chain, restricted to [y, z].
Chain induced_chain(const Lattice& L, const Chain& xchain, int y, int z);

// Distributivity of a meet/join-closed subset, under L's operations.
bool is_distributive_subset(const Lattice& L, const std::vector<int>& elems);

}  // namespace latmod
