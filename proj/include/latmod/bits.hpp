#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace latmod {

// Fixed-size dynamic bitset. Sized once at construction; all binary
// operations assume equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(words_for(n), 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // Calls f(i) for every set bit, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(int(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }

  static size_t words_for(int n) { return size_t(n + 63) / 64; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Square boolean relation on {0..n-1}, stored as packed 64-bit rows.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(int n)
      : n_(n), stride_(Bitset::words_for(n)), w_(size_t(n) * stride_, 0) {}

  int n() const { return n_; }

  bool get(int i, int j) const {
    return (w_[size_t(i) * stride_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j) {
    w_[size_t(i) * stride_ + (j >> 6)] |= uint64_t(1) << (j & 63);
  }

  const uint64_t* row(int i) const { return w_.data() + size_t(i) * stride_; }
  uint64_t* row(int i) { return w_.data() + size_t(i) * stride_; }
  size_t stride() const { return stride_; }

  void or_row_into(int src, int dst) {
    const uint64_t* s = row(src);
    uint64_t* d = row(dst);
    for (size_t k = 0; k < stride_; ++k) d[k] |= s[k];
  }

  int row_count(int i) const {
    const uint64_t* r = row(i);
    int c = 0;
    for (size_t k = 0; k < stride_; ++k) c += std::popcount(r[k]);
    return c;
  }

  // popcount(row(i) & row(j))
  int and_count(int i, int j) const {
    const uint64_t* a = row(i);
    const uint64_t* b = row(j);
    int c = 0;
    for (size_t k = 0; k < stride_; ++k) c += std::popcount(a[k] & b[k]);
    return c;
  }

  // row(i) & row(j) as a Bitset
  Bitset row_and(int i, int j) const {
    Bitset out(n_);
    const uint64_t* a = row(i);
    const uint64_t* b = row(j);
    auto& w = out.words();
    for (size_t k = 0; k < stride_; ++k) w[k] = a[k] & b[k];
    return out;
  }

  Bitset row_copy(int i) const {
    Bitset out(n_);
    const uint64_t* a = row(i);
    auto& w = out.words();
    for (size_t k = 0; k < stride_; ++k) w[k] = a[k];
    return out;
  }

 private:
  int n_ = 0;
  size_t stride_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace latmod
