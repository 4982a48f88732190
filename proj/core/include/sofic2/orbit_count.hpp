#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sofic2 {

/// Exact natural number used for transition-edge labels. Counts grow like
/// 2^k on small presentations, so there is no fixed-width fallback.
class OrbitCount {
 public:
  OrbitCount() = default;
  OrbitCount(std::uint64_t v) : value_(v) {}  // NOLINT: implicit on purpose

  /// Parses a nonempty string of decimal digits.
  static OrbitCount from_decimal(std::string_view digits);
  std::string to_decimal() const;

  static OrbitCount power_of_two(unsigned exponent);

  bool is_zero() const { return value_.is_zero(); }
  /// Bits needed to write the value; 0 for zero.
  unsigned bit_length() const;
  bool bit(unsigned index) const;

  /// Saturating conversion used where callers have already bounded the value.
  std::uint64_t to_u64_saturated() const;

  OrbitCount& operator+=(const OrbitCount& other) {
    value_ += other.value_;
    return *this;
  }
  OrbitCount& operator*=(const OrbitCount& other) {
    value_ *= other.value_;
    return *this;
  }
  /// Precondition: other <= *this.
  OrbitCount& operator-=(const OrbitCount& other);

  friend OrbitCount operator+(OrbitCount a, const OrbitCount& b) { return a += b; }
  friend OrbitCount operator*(OrbitCount a, const OrbitCount& b) { return a *= b; }
  friend OrbitCount operator-(OrbitCount a, const OrbitCount& b) { return a -= b; }

  friend bool operator==(const OrbitCount& a, const OrbitCount& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const OrbitCount& a, const OrbitCount& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_int value_;
};

}  // namespace sofic2
