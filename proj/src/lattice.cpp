#include "mcgame/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "mcgame/error.hpp"

namespace mcgame {

void LatticePoint::check(int n, int k) const {
  if (size() != n) {
    throw GameError("lattice point has " + std::to_string(size()) + " components, expected " +
                    std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (levels_[i] < 0 || levels_[i] > k) {
      throw GameError("component " + std::to_string(i + 1) + " = " +
                      std::to_string(levels_[i]) + " outside [0, " + std::to_string(k) + "]");
    }
  }
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << levels_[i];
  os << ')';
  return os.str();
}

Coalition::Coalition(std::initializer_list<int> members)
    : Coalition(from_members(std::span<const int>(members.begin(), members.size()))) {}

Coalition Coalition::from_members(std::span<const int> members) {
  std::uint32_t bits = 0;
  for (int i : members) {
    if (i < 0 || i >= kMaxAttributes) {
      throw GameError("attribute index " + std::to_string(i) + " out of range");
    }
    if ((bits >> i) & 1u) throw GameError("duplicate attribute " + std::to_string(i + 1));
    bits |= 1u << i;
  }
  return Coalition(bits);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Coalition::label() const {
  std::string out;
  for (int i : members()) {
    if (!out.empty()) out += '+';
    out += std::to_string(i + 1);
  }
  return out;
}

bool coalition_less(Coalition a, Coalition b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<Coalition> coalitions_up_to(int n, int max_size) {
  std::vector<Coalition> out;
  const std::uint32_t full = Coalition::full(n).bits();
  for (std::uint32_t b = 1; b != 0 && b <= full; ++b) {
    if (std::popcount(b) <= max_size) out.emplace_back(b);
  }
  std::sort(out.begin(), out.end(), coalition_less);
  return out;
}

std::uint64_t checked_table_size(int n, int k, int bits) {
  if (n < 1) throw GameError("attribute count must be at least 1");
  if (k < 1) throw GameError("level count k must be at least 1");
  if (n > Coalition::kMaxAttributes) throw SizeLimitError("too many attributes");
  const std::uint64_t cap = bits >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << bits);
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > cap / static_cast<std::uint64_t>(k + 1)) {
      throw SizeLimitError("lattice {0.." + std::to_string(k) + "}^" + std::to_string(n) +
                           " exceeds the 2^" + std::to_string(bits) + " entry limit");
    }
    size *= static_cast<std::uint64_t>(k + 1);
  }
  return size;
}

std::uint64_t encode_index(const LatticePoint& x, int n, int k) {
  x.check(n, k);
  std::uint64_t index = 0;
  for (int i = n - 1; i >= 0; --i) index = index * static_cast<std::uint64_t>(k + 1) + x[i];
  return index;
}

LatticePoint decode_index(std::uint64_t index, int n, int k) {
  std::vector<int> levels(n);
  const auto radix = static_cast<std::uint64_t>(k + 1);
  for (int i = 0; i < n; ++i) {
    levels[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  if (index != 0) throw GameError("index outside the lattice");
  return LatticePoint(std::move(levels));
}

Coalition support(const LatticePoint& x) {
  std::uint32_t bits = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] > 0) bits |= 1u << i;
  }
  return Coalition(bits);
}

Coalition kernel(const LatticePoint& x, int k) {
  std::uint32_t bits = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] == k) bits |= 1u << i;
  }
  return Coalition(bits);
}

}  // namespace mcgame
