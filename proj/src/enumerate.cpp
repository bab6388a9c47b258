#include "latmod/enumerate.hpp"

#include "latmod/io.hpp"
#include "latmod/properties.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>

namespace latmod {

namespace {

// A lattice minus its bottom is a join-semilattice with top; masks are
// over the current elements, strict relations only.
struct Semi {
  int n = 0;
  std::vector<uint64_t> up;  // strict up-sets
  std::vector<uint64_t> dn;  // strict down-sets
  uint64_t deepest = 0;      // elements of maximal depth (all minimal)
};

// Least element of the nonempty subset S, or -1 if S has two minimal
// elements (finite poset: unique minimal = least).
int least_of(const Semi& s, uint64_t S) {
  int found = -1;
  uint64_t w = S;
  while (w) {
    int x = std::countr_zero(w);
    w &= w - 1;
    if ((S & s.dn[x]) == 0) {
      if (found >= 0) return -1;
      found = x;
    }
  }
  return found;
}

Lattice semi_to_lattice(const Semi& s) {
  CoverList covers;
  for (int x = 0; x < s.n; ++x) {
    if (s.dn[x] == 0) covers.push_back({0, x + 1});  // bottom below minimal
    uint64_t u = s.up[x];
    while (u) {
      int y = std::countr_zero(u);
      u &= u - 1;
      if ((s.up[x] & s.dn[y]) == 0) covers.push_back({x + 1, y + 1});
    }
  }
  return build_from_covers(s.n + 1, covers);
}

struct Generator {
  int max_size;
  const std::function<void(const Lattice&)>* emit;
  std::set<std::string> seen;
  std::vector<std::vector<Semi>> frontier;

  // Emits the child's lattice if its class is new; registers the child
  // semilattice for further extension when it can still grow.
  void offer(Semi&& child) {
    Lattice L = semi_to_lattice(child);
    if (!seen.insert(canonical_form(L)).second) return;
    (*emit)(L);
    if (child.n + 2 <= max_size) frontier[child.n].push_back(std::move(child));
  }

  void extend(const Semi& p) {
    const int n = p.n;
    const uint64_t all = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    const int kmax = max_size - 1 - n;

    // Candidate up-sets for a new deepest element: up-closed, touching
    // the current deepest level, joins with every old element defined.
    std::vector<uint64_t> cand;
    for (uint64_t U = 1; U <= all; ++U) {
      if (!(U & p.deepest)) continue;
      bool ok = true;
      uint64_t w = U;
      while (w && ok) {
        int x = std::countr_zero(w);
        w &= w - 1;
        if (p.up[x] & ~U) ok = false;
      }
      if (!ok) continue;
      for (int y = 0; y < n && ok; ++y) {
        if (U >> y & 1) continue;
        if (least_of(p, U & p.up[y]) < 0) ok = false;
      }
      if (ok) cand.push_back(U);
    }
    if (cand.empty()) return;

    // Two new elements may share a level iff their up-sets intersect in
    // a set with a least element (their join).
    const int nc = int(cand.size());
    std::vector<char> compat(size_t(nc) * nc, 0);
    for (int i = 0; i < nc; ++i)
      for (int j = i; j < nc; ++j) {
        char c = least_of(p, cand[i] & cand[j]) >= 0 ? 1 : 0;
        compat[size_t(i) * nc + j] = compat[size_t(j) * nc + i] = c;
      }

    std::vector<int> chosen;
    build_level(p, cand, compat, chosen, 0, kmax);
  }

  void build_level(const Semi& p, const std::vector<uint64_t>& cand,
                   const std::vector<char>& compat, std::vector<int>& chosen,
                   int from, int kmax) {
    if (!chosen.empty()) make_child(p, cand, chosen);
    if (int(chosen.size()) == kmax) return;
    const int nc = int(cand.size());
    for (int c = from; c < nc; ++c) {
      bool ok = true;
      for (int prev : chosen)
        if (!compat[size_t(prev) * nc + c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      build_level(p, cand, compat, chosen, c, kmax);
      chosen.pop_back();
    }
  }

  void make_child(const Semi& p, const std::vector<uint64_t>& cand,
                  const std::vector<int>& chosen) {
    Semi c;
    const int k = int(chosen.size());
    c.n = p.n + k;
    c.up = p.up;
    c.dn = p.dn;
    c.up.resize(c.n, 0);
    c.dn.resize(c.n, 0);
    c.deepest = 0;
    for (int i = 0; i < k; ++i) {
      const int x = p.n + i;
      const uint64_t U = cand[chosen[i]];
      c.up[x] = U;
      c.deepest |= uint64_t(1) << x;
      uint64_t w = U;
      while (w) {
        int y = std::countr_zero(w);
        w &= w - 1;
        c.dn[y] |= uint64_t(1) << x;
      }
    }
    offer(std::move(c));
  }
};

}  // namespace

void enumerate_lattices(int max_size,
                        const std::function<void(const Lattice&)>& emit,
                        int cap) {
  if (max_size < 1) throw param_error("max_size must be >= 1");
  if (max_size > cap)
    throw too_large_error("max_size " + std::to_string(max_size) +
                          " exceeds the enumeration cap " +
                          std::to_string(cap));
  if (max_size > 63)
    throw too_large_error("enumeration is limited to 63 elements");

  emit(build_from_covers(1, {}));
  if (max_size == 1) return;

  Generator gen;
  gen.max_size = max_size;
  gen.emit = &emit;
  gen.frontier.assign(max_size, {});

  // Root: the one-element semilattice (its lattice is the 2-chain).
  Semi root;
  root.n = 1;
  root.up = {0};
  root.dn = {0};
  root.deepest = 1;
  Lattice two = semi_to_lattice(root);
  gen.seen.insert(canonical_form(two));
  emit(two);
  if (max_size >= 3) gen.frontier[1].push_back(std::move(root));

  for (int m = 1; m <= max_size - 2; ++m)
    for (size_t i = 0; i < gen.frontier[m].size(); ++i) {
      // extend() only appends to strictly larger frontiers.
      Semi parent = gen.frontier[m][i];
      gen.extend(parent);
    }
}

std::vector<long> lattice_counts(int max_size, int cap) {
  std::vector<long> counts(max_size + 1, 0);
  enumerate_lattices(
      max_size, [&](const Lattice& L) { ++counts[L.size()]; }, cap);
  counts.erase(counts.begin());
  return counts;
}

const Lattice& LatticeCatalog::get(const std::string& key_hex) const {
  auto it = lattices_.find(key_hex);
  if (it == lattices_.end())
    throw io_error("catalog has no lattice with key " + key_hex);
  return it->second;
}

void LatticeCatalog::insert(const Lattice& L, std::map<std::string, bool> flags) {
  std::string key = canonical_hex(L);
  CatalogEntry e;
  e.size = L.size();
  e.file = key + ".json";
  e.flags = std::move(flags);
  index_[key] = std::move(e);
  lattices_.emplace(key, L);
}

namespace {

struct Predicate {
  std::string name;
  bool want = true;
};

std::vector<Predicate> parse_predicates(const std::vector<std::string>& specs) {
  std::vector<Predicate> out;
  for (std::string s : specs) {
    Predicate p;
    if (!s.empty() && s[0] == '!') {
      p.want = false;
      s = s.substr(1);
    }
    std::replace(s.begin(), s.end(), '-', '_');
    if (s != "graded" && s != "distributive" && s != "left_modular" &&
        s != "supersolvable")
      throw param_error("unknown property '" + s + "'");
    p.name = s;
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::map<std::string, bool> property_flags(const Lattice& L) {
  return {{"graded", is_graded(L).holds},
          {"distributive", is_distributive(L).holds},
          {"left_modular", find_left_modular_chain(L).has_value()},
          {"supersolvable", is_supersolvable(L).holds}};
}

LatticeCatalog filter_corpus(int max_size,
                             const std::vector<std::string>& predicates,
                             int cap) {
  auto preds = parse_predicates(predicates);
  LatticeCatalog cat;
  enumerate_lattices(
      max_size,
      [&](const Lattice& L) {
        auto flags = property_flags(L);
        for (const auto& p : preds)
          if (flags.at(p.name) != p.want) return;
        cat.insert(L, std::move(flags));
      },
      cap);
  return cat;
}

void catalog_save(const LatticeCatalog& catalog,
                  const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json index;
  index["entries"] = nlohmann::ordered_json::object();
  for (const auto& [key, entry] : catalog.index()) {
    write_file((dir / entry.file).string(),
               serialize_lattice(catalog.get(key)));
    nlohmann::ordered_json e;
    e["size"] = entry.size;
    e["file"] = entry.file;
    e["flags"] = entry.flags;
    index["entries"][key] = e;
  }
  write_file((dir / "index.json").string(), index.dump(2) + "\n");
}

LatticeCatalog catalog_load(const std::filesystem::path& dir) {
  nlohmann::json index;
  try {
    index = nlohmann::json::parse(read_file((dir / "index.json").string()));
  } catch (const nlohmann::json::parse_error& e) {
    throw io_error(std::string("corrupt catalog index: ") + e.what());
  }
  if (!index.contains("entries") || !index["entries"].is_object())
    throw io_error("corrupt catalog index: missing 'entries'");
  LatticeCatalog cat;
  for (const auto& [key, e] : index["entries"].items()) {
    if (!e.contains("file") || !e.contains("size") || !e.contains("flags"))
      throw io_error("corrupt catalog index at entry " + key);
    std::filesystem::path file = dir / e["file"].get<std::string>();
    if (!std::filesystem::exists(file))
      throw io_error("catalog entry " + key + " is missing its file " +
                     file.string());
    Lattice L = parse_lattice_file(read_file(file.string()));
    if (canonical_hex(L) != key)
      throw io_error("catalog entry " + key +
                     " does not match its stored lattice");
    std::map<std::string, bool> flags;
    for (const auto& [fk, fv] : e["flags"].items()) flags[fk] = fv.get<bool>();
    cat.insert(L, std::move(flags));
  }
  return cat;
}

}  // namespace latmod
