#pragma once

#include "latmod/lattice.hpp"
#include "latmod/properties.hpp"

#include <optional>

namespace latmod {

// Partition of the elements, compatible with meet and join. Class ids
// are normalized by first occurrence, so equal partitions compare equal.
struct Congruence {
  std::vector<int> class_of;
  int num_classes = 0;

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  bool operator==(const Congruence&) const = default;
};

Congruence equality_congruence(int n);
Congruence all_in_one_congruence(int n);

// Least congruence with a ≡ b, by the usual fixpoint: whenever x ≡ y is
// merged, x∧z ≡ y∧z and x∨z ≡ y∨z are queued for every z.
Congruence principal_congruence(const Lattice& L, int a, int b);

bool is_congruence(const Lattice& L, const Congruence& c);

// Partition join (transitive closure of the union); for congruences of a
// lattice this is again a congruence. Meet is the common refinement.
Congruence congruence_join(const Congruence& a, const Congruence& b);
Congruence congruence_meet(const Congruence& a, const Congruence& b);

// finer has smaller-or-equal classes everywhere.
bool refines(const Congruence& finer, const Congruence& coarser);

inline constexpr size_t kDefaultCongruenceCap = size_t(1) << 20;

// Every congruence, as the join-closure of the principal congruences on
// covers plus equality. Throws too_large_error past the cap.
std::vector<Congruence> all_congruences(
    const Lattice& L, size_t cap = kDefaultCongruenceCap);

// Quotient lattice plus the projection map element -> class id.
// Class order: [a] <= [b] iff a ∨ b ≡ b.
std::pair<Lattice, std::vector<int>> quotient(const Lattice& L,
                                              const Congruence& c);

// Common refinement of all congruences with graded quotient; quotienting
// by it gives g(L).
Congruence g_congruence(const Lattice& L,
                        size_t cap = kDefaultCongruenceCap);

// Present iff the quotient by g_congruence is itself graded.
std::optional<std::pair<Lattice, std::vector<int>>> maximum_graded_quotient(
    const Lattice& L, size_t cap = kDefaultCongruenceCap);

// Over g(L): classes X ⪯ Y ⪯ Z with X <= U <= V <= Z, U∨Y=Z and V∧Y=X
// force U = V.
PropertyReport lemma_quotient_separation(
    const Lattice& L, size_t cap = kDefaultCongruenceCap);

}  // namespace latmod
