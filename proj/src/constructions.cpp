#include "latmod/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace latmod {

Lattice chain_lattice(int k) {
  if (k < 0) throw param_error("chain length must be >= 0");
  CoverList covers;
  for (int i = 0; i < k; ++i) covers.push_back({i, i + 1});
  return build_from_covers(k + 1, covers);
}

Lattice point_lattice() { return chain_lattice(0); }

Lattice boolean_lattice(int nbits) {
  if (nbits < 0 || nbits > 10)
    throw param_error("boolean lattice supports 0 <= n <= 10");
  const int n = 1 << nbits;
  CoverList covers;
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < nbits; ++b)
      if (!(s >> b & 1)) covers.push_back({s, s | (1 << b)});
  return build_from_covers(n, covers);
}

Lattice diamond_m3() {
  return build_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Lattice pentagon_n5() {
  return build_from_covers(5, {{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}});
}

Lattice benzene() {
  return build_from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}});
}

Lattice parallel_chains(int left_len, int right_len) {
  if (left_len < 1 || right_len < 1)
    throw param_error("parallel_chains needs interior lengths >= 1");
  const int top = left_len + 1;
  const int n = left_len + right_len + 2;
  CoverList covers;
  for (int i = 0; i < left_len; ++i) covers.push_back({i, i + 1});
  covers.push_back({left_len, top});
  covers.push_back({0, top + 1});
  for (int i = 0; i < right_len - 1; ++i)
    covers.push_back({top + 1 + i, top + 2 + i});
  covers.push_back({top + right_len, top});
  return build_from_covers(n, covers);
}

namespace {

// Restricted growth strings enumerate set partitions of {0..n-1}.
void rgs_rec(int n, int i, int maxc, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= maxc + 1; ++c) {
    cur[i] = c;
    rgs_rec(n, i + 1, std::max(maxc, c), cur, out);
  }
}

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  if (n == 0) return {{}};
  rgs_rec(n, 1, 0, cur, out);
  return out;
}

int block_count(const std::vector<int>& p) {
  return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

// p refines q: every block of p lies inside a block of q.
bool refines_partition(const std::vector<int>& p, const std::vector<int>& q) {
  int nb = block_count(p);
  std::vector<int> img(nb, -1);
  for (size_t v = 0; v < p.size(); ++v) {
    if (img[p[v]] < 0)
      img[p[v]] = q[v];
    else if (img[p[v]] != q[v])
      return false;
  }
  return true;
}

std::string partition_label(const std::vector<int>& p) {
  int nb = block_count(p);
  std::vector<std::string> blocks(nb);
  for (size_t v = 0; v < p.size(); ++v)
    blocks[p[v]] += char('1' + int(v));
  std::string out;
  for (int b = 0; b < nb; ++b) {
    if (b) out += '|';
    out += blocks[b];
  }
  return out;
}

}  // namespace

std::pair<Lattice, std::vector<std::string>> partition_lattice_labeled(int n) {
  if (n < 1 || n > 6) throw param_error("partition lattice supports 1 <= n <= 6");
  auto parts = set_partitions(n);
  // Finer partitions first, then lexicographic on the growth string.
  std::sort(parts.begin(), parts.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ba = block_count(a), bb = block_count(b);
              if (ba != bb) return ba > bb;
              return a < b;
            });
  const int m = int(parts.size());
  CoverList covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      // Merging exactly two blocks is the cover relation.
      if (block_count(parts[j]) == block_count(parts[i]) - 1 &&
          refines_partition(parts[i], parts[j]))
        covers.push_back({i, j});
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& p : parts) labels.push_back(partition_label(p));
  return {build_from_covers(m, covers), labels};
}

Lattice partition_lattice(int n) { return partition_lattice_labeled(n).first; }

Lattice divisor_lattice(long m) {
  if (m < 1) throw param_error("divisor lattice needs m >= 1");
  if (m > 1000000000L) throw param_error("divisor lattice supports m <= 1e9");
  std::vector<long> divs;
  for (long d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      divs.push_back(d);
      if (d != m / d) divs.push_back(m / d);
    }
  std::sort(divs.begin(), divs.end());
  const int n = int(divs.size());
  if (n > kMaxElements) throw too_large_error("too many divisors");
  std::vector<long> primes;
  {
    long rest = m;
    for (long p = 2; p * p <= rest; ++p)
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    if (rest > 1) primes.push_back(rest);
  }
  auto id = [&](long d) {
    return int(std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
  };
  CoverList covers;
  for (int i = 0; i < n; ++i)
    for (long p : primes)
      if ((long(divs[i]) <= m / p) && m % (divs[i] * p) == 0)
        covers.push_back({id(divs[i]), id(divs[i] * p)});
  return build_from_covers(n, covers);
}

Lattice product(const Lattice& A, const Lattice& B) {
  const long n = long(A.size()) * B.size();
  if (n > kMaxElements) throw too_large_error("product lattice too large");
  auto id = [&](int a, int b) { return a * B.size() + b; };
  CoverList covers;
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < B.size(); ++b) {
      for (int a2 : A.upper_covers(a)) covers.push_back({id(a, b), id(a2, b)});
      for (int b2 : B.upper_covers(b)) covers.push_back({id(a, b), id(a, b2)});
    }
  return build_from_covers(int(n), covers);
}

namespace {

long get_param(const std::map<std::string, long>& params, const std::string& k) {
  auto it = params.find(k);
  if (it == params.end())
    throw param_error("missing parameter --" + k + " for this family");
  return it->second;
}

}  // namespace

Lattice named_lattice(const std::string& family,
                      const std::map<std::string, long>& params) {
  if (family == "chain") return chain_lattice(int(get_param(params, "k")));
  if (family == "boolean") return boolean_lattice(int(get_param(params, "n")));
  if (family == "m3") return diamond_m3();
  if (family == "n5") return pentagon_n5();
  if (family == "benzene") return benzene();
  if (family == "figure1") return parallel_chains(3, 2);
  if (family == "partition")
    return partition_lattice(int(get_param(params, "n")));
  if (family == "divisor") return divisor_lattice(get_param(params, "m"));
  if (family == "point") return point_lattice();
  if (family == "grid") return grid_quotient(int(get_param(params, "k"))).lattice;
  if (family == "downset")
    return downset_lattice(int(get_param(params, "r")),
                           int(get_param(params, "s")))
        .lattice;
  throw param_error("unknown family '" + family + "'");
}

int GridQuotient::id_of(int i, int j) const {
  for (size_t e = 0; e < coords.size(); ++e)
    if (coords[e] == std::pair{i, j}) return int(e);
  throw param_error("grid coordinate out of the index set");
}

GridQuotient grid_quotient(int k) {
  if (k < 0) throw param_error("grid quotient needs k >= 0");
  GridQuotient G;
  G.k = k;
  for (int i = -1; i <= k; ++i)
    for (int j = std::max(i, 0); j <= k + 1; ++j)
      G.coords.push_back({i, j});
  const int n = int(G.coords.size());
  if (n > kMaxElements) throw too_large_error("grid quotient too large");
  auto find = [&](int i, int j) -> int {
    for (int e = 0; e < n; ++e)
      if (G.coords[e] == std::pair{i, j}) return e;
    return -1;
  };
  CoverList covers;
  for (int e = 0; e < n; ++e) {
    auto [i, j] = G.coords[e];
    int up_i = find(i + 1, j);
    if (up_i >= 0) covers.push_back({e, up_i});
    int up_j = find(i, j + 1);
    if (up_j >= 0) covers.push_back({e, up_j});
  }
  G.lattice = build_from_covers(n, covers);
  for (int i = 0; i <= k; ++i) G.chain.push_back(find(i, i));
  G.y = find(-1, k + 1);
  return G;
}

DownSet::DownSet(int r, int s, std::vector<int> prof)
    : rows(r), cols(s), profile(std::move(prof)) {
  if (r < 1 || s < 1 || int(profile.size()) != r)
    throw param_error("down-set profile has wrong shape");
  for (int i = 0; i < r; ++i) {
    if (profile[i] < 0 || profile[i] > s)
      throw param_error("down-set profile entry out of range");
    if (i > 0 && profile[i] > profile[i - 1])
      throw param_error("down-set profile must be non-increasing");
  }
}

DownSet DownSet::empty(int r, int s) {
  return DownSet(r, s, std::vector<int>(r, 0));
}

DownSet DownSet::full(int r, int s) {
  return DownSet(r, s, std::vector<int>(r, s));
}

int DownSet::count() const {
  return std::accumulate(profile.begin(), profile.end(), 0);
}

bool DownSet::subset_of(const DownSet& o) const {
  for (int i = 0; i < rows; ++i)
    if (profile[i] > o.profile[i]) return false;
  return true;
}

DownSet DownSet::intersect(const DownSet& o) const {
  std::vector<int> prof(rows);
  for (int i = 0; i < rows; ++i) prof[i] = std::min(profile[i], o.profile[i]);
  return DownSet(rows, cols, prof);
}

DownSet DownSet::unite(const DownSet& o) const {
  std::vector<int> prof(rows);
  for (int i = 0; i < rows; ++i) prof[i] = std::max(profile[i], o.profile[i]);
  return DownSet(rows, cols, prof);
}

namespace {

void downsets_rec(int r, int s, int i, int bound, std::vector<int>& cur,
                  std::vector<DownSet>& out, size_t cap) {
  if (i == r) {
    out.emplace_back(r, s, cur);
    if (out.size() > cap)
      throw too_large_error("down-set count exceeds cap " +
                            std::to_string(cap));
    return;
  }
  for (int h = bound; h >= 0; --h) {
    cur[i] = h;
    downsets_rec(r, s, i + 1, h, cur, out, cap);
  }
}

}  // namespace

std::vector<DownSet> DownSet::all(int r, int s, size_t cap) {
  if (r < 1 || s < 1) throw param_error("down-set grid needs r, s >= 1");
  std::vector<DownSet> out;
  std::vector<int> cur(r, 0);
  downsets_rec(r, s, 0, s, cur, out, cap);
  std::sort(out.begin(), out.end(), [](const DownSet& a, const DownSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.profile < b.profile;
  });
  return out;
}

int DownSetLattice::id_of(const DownSet& d) const {
  auto it = std::lower_bound(
      sets.begin(), sets.end(), d, [](const DownSet& a, const DownSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.profile < b.profile;
      });
  if (it == sets.end() || !(*it == d))
    throw param_error("down-set not in this lattice");
  return int(it - sets.begin());
}

DownSetLattice downset_lattice(int r, int s, size_t cap) {
  DownSetLattice D;
  D.rows = r;
  D.cols = s;
  D.sets = DownSet::all(r, s, cap);
  const int n = int(D.sets.size());
  if (n > kMaxElements)
    throw too_large_error("down-set lattice exceeds the element cap");
  CoverList covers;
  // Covers add exactly one cell: bump one row height, staying monotone.
  for (int e = 0; e < n; ++e) {
    const DownSet& d = D.sets[e];
    for (int i = 0; i < r; ++i) {
      if (d.profile[i] >= s) continue;
      if (i > 0 && d.profile[i] + 1 > d.profile[i - 1]) continue;
      DownSet up = d;
      up.profile[i] += 1;
      covers.push_back({e, D.id_of(up)});
    }
  }
  D.lattice = build_from_covers(n, covers);
  return D;
}

}  // namespace latmod
