#pragma once

#include "latmod/lattice.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <string>

namespace latmod {

inline constexpr int kEnumerationCap = 11;

// Emits exactly one representative per isomorphism class per size, sizes
// ascending, deterministic order. Generation peels a lattice down to its
// top: removing the bottom leaves a join-semilattice, and removing the
// deepest depth-level of a join-semilattice leaves a smaller one, so
// every lattice is reached by repeatedly attaching a new deepest level
// (an antichain of new minimal elements with up-closed up-sets) and
// finally a bottom. Duplicates are rejected by canonical form.
void enumerate_lattices(int max_size,
                        const std::function<void(const Lattice&)>& emit,
                        int cap = kEnumerationCap);

// Number of isomorphism classes per size 1..max_size.
std::vector<long> lattice_counts(int max_size, int cap = kEnumerationCap);

struct CatalogEntry {
  int size = 0;
  std::string file;
  std::map<std::string, bool> flags;
};

// One lattice file per isomorphism class, addressed by canonical key.
class LatticeCatalog {
 public:
  const std::map<std::string, CatalogEntry>& index() const { return index_; }
  const Lattice& get(const std::string& key_hex) const;
  void insert(const Lattice& L, std::map<std::string, bool> flags);
  size_t size() const { return index_.size(); }

 private:
  std::map<std::string, CatalogEntry> index_;
  std::map<std::string, Lattice> lattices_;
};

// The four cached corpus flags, recomputable from scratch.
std::map<std::string, bool> property_flags(const Lattice& L);

// Property names: graded, distributive, left_modular, supersolvable;
// prefix with '!' to negate. All four flags are cached regardless.
LatticeCatalog filter_corpus(int max_size,
                             const std::vector<std::string>& predicates,
                             int cap = kEnumerationCap);

void catalog_save(const LatticeCatalog& catalog,
                  const std::filesystem::path& dir);
LatticeCatalog catalog_load(const std::filesystem::path& dir);

}  // namespace latmod
