#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mcgame {

// Budgets guarding exponential objects. Both values are log2 counts.
struct Limits {
  // (k+1)^n table entries.
  int table_bits = 28;
  // Evaluations performed by a single index query.
  int query_bits = 26;
};

// A profile x in {0..k}^N. Attribute i (0-based) has level levels[i].
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> levels) : levels_(std::move(levels)) {}
  LatticePoint(std::initializer_list<int> levels) : levels_(levels) {}

  static LatticePoint zeros(int n) { return LatticePoint(std::vector<int>(n, 0)); }
  static LatticePoint filled(int n, int level) {
    return LatticePoint(std::vector<int>(n, level));
  }

  int size() const { return static_cast<int>(levels_.size()); }
  int operator[](int i) const { return levels_[i]; }
  int& operator[](int i) { return levels_[i]; }
  std::span<const int> levels() const { return levels_; }
  auto begin() const { return levels_.begin(); }
  auto end() const { return levels_.end(); }

  // Throws GameError unless size()==n and every level lies in [0, k].
  void check(int n, int k) const;

  std::string to_string() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<int> levels_;
};

// A subset of attributes, stored as a bitmask over 0-based indices.
class Coalition {
 public:
  static constexpr int kMaxAttributes = 32;

  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}
  Coalition(std::initializer_list<int> members);

  // Throws GameError on duplicates or indices outside [0, 32).
  static Coalition from_members(std::span<const int> members);
  static constexpr Coalition full(int n) {
    return Coalition(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr Coalition single(int i) { return Coalition(1u << i); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(Coalition other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Largest member index + 1, or 0 when empty.
  constexpr int span_width() const { return 32 - std::countl_zero(bits_); }

  constexpr Coalition with(int i) const { return Coalition(bits_ | (1u << i)); }
  constexpr Coalition without(int i) const { return Coalition(bits_ & ~(1u << i)); }
  constexpr Coalition operator|(Coalition o) const { return Coalition(bits_ | o.bits_); }
  constexpr Coalition operator&(Coalition o) const { return Coalition(bits_ & o.bits_); }
  constexpr Coalition minus(Coalition o) const { return Coalition(bits_ & ~o.bits_); }

  // Ascending 0-based member indices.
  std::vector<int> members() const;

  // "1+2+3" with 1-based labels.
  std::string label() const;

  friend constexpr bool operator==(Coalition, Coalition) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Orders coalitions by size, then lexicographically by ascending members.
bool coalition_less(Coalition a, Coalition b);

// All nonempty coalitions of {0..n-1} with size in [1, max_size], in
// coalition_less order.
std::vector<Coalition> coalitions_up_to(int n, int max_size);

// (k+1)^n, throwing SizeLimitError when it needs more than `bits` bits.
std::uint64_t checked_table_size(int n, int k, int bits);

// Little-endian mixed-radix code: sum_i x_i * (k+1)^i.
std::uint64_t encode_index(const LatticePoint& x, int n, int k);
LatticePoint decode_index(std::uint64_t index, int n, int k);

// Attributes with a positive level.
Coalition support(const LatticePoint& x);
// Attributes at the top level k.
Coalition kernel(const LatticePoint& x, int k);

}  // namespace mcgame
