#include "sofic2/orbit_count.hpp"

#include <limits>

#include "sofic2/error.hpp"

namespace sofic2 {

OrbitCount OrbitCount::from_decimal(std::string_view digits) {
  if (digits.empty()) throw Error(ErrorKind::ParseError, "empty count");
  OrbitCount out;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError, "count is not a decimal natural: '" + std::string(digits) + "'");
    }
    out.value_ *= 10;
    out.value_ += c - '0';
  }
  return out;
}

std::string OrbitCount::to_decimal() const { return value_.str(); }

OrbitCount OrbitCount::power_of_two(unsigned exponent) {
  OrbitCount out;
  boost::multiprecision::bit_set(out.value_, exponent);
  return out;
}

unsigned OrbitCount::bit_length() const {
  if (value_.is_zero()) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(value_)) + 1;
}

bool OrbitCount::bit(unsigned index) const { return boost::multiprecision::bit_test(value_, index); }

std::uint64_t OrbitCount::to_u64_saturated() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(value_);
}

OrbitCount& OrbitCount::operator-=(const OrbitCount& other) {
  if (other.value_ > value_) throw std::logic_error("OrbitCount underflow");
  value_ -= other.value_;
  return *this;
}

}  // namespace sofic2
