#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace assoc {

// Unsigned arbitrary-precision integer with base-1e9 limbs. Search-tree
// counts overflow 64 bits around n = 21 (21! > 2^64), so exact counting
// needs this.
class BigUint {
public:
  BigUint() = default;
  BigUint(std::uint64_t value);

  BigUint& operator+=(const BigUint& rhs);
  BigUint operator+(const BigUint& rhs) const;
  BigUint operator*(const BigUint& rhs) const;
  BigUint& operator*=(const BigUint& rhs);

  bool operator==(const BigUint& rhs) const = default;
  std::strong_ordering operator<=>(const BigUint& rhs) const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // valid only when fits_u64()
  std::string to_string() const;

private:
  static constexpr std::uint64_t kBase = 1'000'000'000;
  // little endian, no trailing zero limbs; empty vector encodes 0
  std::vector<std::uint32_t> limbs_;

  void trim();
};

}  // namespace assoc
