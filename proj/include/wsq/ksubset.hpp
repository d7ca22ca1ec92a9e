#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsq {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 63;

/// A subset of the ground set [1..n], stored as a bitmask (bit i-1 <-> index i).
///
/// Ordering is lexicographic on the ascending index lists, which is the
/// canonical order used everywhere collections are sorted or printed.
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, std::initializer_list<int> indices);

  static KSubset from_indices(int n, std::span<const int> indices);
  static KSubset from_mask(int n, Mask mask);
  /// The integer interval [lo..hi]; empty when lo > hi.
  static KSubset interval(int n, int lo, int hi);
  static KSubset empty_set(int n) { return from_mask(n, 0); }
  /// Parses "1,3,5" (whitespace tolerated, empty string is the empty set).
  static KSubset parse(int n, std::string_view text);

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const {
    return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1U) != 0;
  }
  /// Smallest / largest index; undefined on the empty set.
  int min() const { return std::countr_zero(mask_) + 1; }
  int max() const { return 64 - std::countl_zero(mask_); }

  std::vector<int> indices() const;
  std::string to_string() const;

  KSubset with(int i) const;
  KSubset without(int i) const;

  KSubset operator|(const KSubset& other) const;
  KSubset operator&(const KSubset& other) const;
  KSubset operator-(const KSubset& other) const;

  bool subset_of(const KSubset& other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  friend bool operator==(const KSubset& a, const KSubset& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b);

 private:
  KSubset(int n, Mask mask) : n_(n), mask_(mask) {}
  void check_same_ground(const KSubset& other) const;

  int n_ = 0;
  Mask mask_ = 0;
};

/// Lexicographic comparison of the ascending index lists of two masks.
std::strong_ordering lex_compare(Mask a, Mask b);

/// All subsets of [1..n] of cardinality k, in lexicographic order.
std::vector<KSubset> all_k_subsets(int n, int k);

struct KSubsetHash {
  std::size_t operator()(const KSubset& s) const noexcept {
    return std::hash<Mask>{}(s.mask() * 0x9E3779B97F4A7C15ULL ^
                             static_cast<Mask>(s.n()));
  }
};

}  // namespace wsq
