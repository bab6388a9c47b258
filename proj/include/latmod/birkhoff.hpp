#pragma once

#include "latmod/congruence.hpp"
#include "latmod/constructions.hpp"
#include "latmod/lattice.hpp"
#include "latmod/properties.hpp"

#include <optional>

namespace latmod {

// Meet/join tables of two maximal chains: u[i][j] = x_i ∧ y_j and
// v[i][j] = x_i ∨ y_j, indices 0..r by 0..s from bottom to top.
struct UVTables {
  const Lattice* L = nullptr;
  Chain xchain;
  Chain ychain;
  int r = 0;
  int s = 0;
  std::vector<int> u;
  std::vector<int> v;

  int u_at(int i, int j) const { return u[size_t(i) * (s + 1) + j]; }
  int v_at(int i, int j) const { return v[size_t(i) * (s + 1) + j]; }
};

UVTables make_uv_tables(const Lattice& L, const Chain& xchain,
                        const Chain& ychain);

// phi(I) = join of u[i][j] over (i,j) in I  (empty join = bottom).
// psi(I) = meet of v[i-1][j-1] over (i,j) not in I  (empty meet = top).
int phi(const UVTables& t, const DownSet& I);
int psi(const UVTables& t, const DownSet& I);

struct ChainCheck {
  Chain ychain;
  int rows = 0;
  int cols = 0;
  size_t downsets = 0;
  std::vector<int> image;  // = sublattice generated by the two chains
};

// Witnessed evidence that the given maximal chain is an M-chain: for
// every maximal chain, the down-set map is a lattice homomorphism onto
// the generated (distributive) sublattice, with phi = psi pointwise.
struct SupersolvabilityCertificate {
  Chain mchain;
  std::vector<ChainCheck> per_chain;
};

struct CertifyFailure {
  Chain ychain;
  std::string check;
  std::vector<int> witness;
};

struct CertifyResult {
  std::optional<SupersolvabilityCertificate> certificate;
  std::optional<CertifyFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

inline constexpr size_t kDefaultDownsetCap = 1000000;

CertifyResult certify_supersolvable(const Lattice& L, const Chain& mchain,
                                    size_t downset_cap = kDefaultDownsetCap);

// The two alternating-ladder identities for a non-strict decreasing
// sequence a from xchain and increasing sequence b from ychain:
//   P_t: (b1∨a1) ∧ ... ∧ (bt∨at) = b1 ∨ (a1∧b2) ∨ ... ∨ (a_{t-1}∧bt) ∨ at
//   Q_t: (a1∧b1) ∨ ... ∨ (at∧bt) = a1 ∧ (b1∨a2) ∧ ... ∧ (b_{t-1}∨at) ∧ bt
// xchain must be maximal; ychain may be any chain.
PropertyReport verify_pq(const Lattice& L, const Chain& xchain,
                         const Chain& ychain, int t);

// Single evaluations, exposed for witness reproduction.
std::pair<int, int> eval_p(const Lattice& L, const std::vector<int>& a,
                           const std::vector<int>& b);
std::pair<int, int> eval_q(const Lattice& L, const std::vector<int>& a,
                           const std::vector<int>& b);

struct LemmaSuiteReport {
  std::vector<PropertyReport> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

// Hypotheses are evaluated as part of the run; a check with no
// applicable instance passes vacuously (noted in its detail).
LemmaSuiteReport verify_lemma_suite(const Lattice& L,
                                    size_t congruence_cap = kDefaultCongruenceCap);

// The map from the grid model sending (i,j) to (w∨c_i)∧c_j (with the
// virtual indices for meets/joins with w alone) must be a surjective
// lattice homomorphism onto M whenever M is graded and generated by the
// chain together with w.
PropertyReport universal_property_check(int k, const Lattice& M,
                                        const Chain& chain, int w);

struct TheoremViolation {
  std::string lattice_key;
  std::string reason;
  std::string lattice_json;  // the offending lattice, ready for triage
};

struct TheoremSummary {
  long lattices = 0;
  long graded_left_modular = 0;
  long supersolvable = 0;
  std::vector<TheoremViolation> violations;
};

// (graded ∧ has left modular maximal chain) <=> supersolvable, and the
// found left modular chain certifies. Any violation is an implementation
// bug and is reported, never tolerated.
TheoremSummary verify_theorem1(const std::vector<Lattice>& corpus);

}  // namespace latmod
