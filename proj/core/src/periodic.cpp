#include "sofic2/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sofic2/error.hpp"

namespace sofic2 {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

PeriodicOrbit PeriodicOrbit::of(const Word& w) {
  auto [root, exponent] = primitive_root(w);
  (void)exponent;
  return PeriodicOrbit(rotate_left(root, least_rotation_offset(root)));
}

std::strong_ordering operator<=>(const PeriodicOrbit& a, const PeriodicOrbit& b) {
  if (a.root_ == b.root_) return std::strong_ordering::equal;
  if (auto c = a.period() <=> b.period(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.root_->begin(), a.root_->end(), b.root_->begin(),
                                                b.root_->end());
}

const Symbol& PeriodicPoint::at(std::int64_t t) const {
  const auto p = static_cast<std::int64_t>(orbit.period());
  return orbit.root()[static_cast<std::size_t>(floor_mod(t + static_cast<std::int64_t>(phase), p))];
}

PeriodicPoint point_of(const PeriodicOrbit& orbit, std::int64_t phase) {
  return PeriodicPoint{orbit, static_cast<std::size_t>(floor_mod(phase, static_cast<std::int64_t>(orbit.period())))};
}

PeriodicPoint canonicalize_point(const Word& u, std::int64_t phase) {
  if (u.empty()) throw Error(ErrorKind::EmptyWord, "canonicalize_point of the empty word");
  auto [root, exponent] = primitive_root(u);
  (void)exponent;
  // u-indexing and root-indexing agree because |root| divides |u|.
  const std::size_t k = least_rotation_offset(root);
  // root[i] = least[(i - k) mod p]
  PeriodicOrbit orbit = PeriodicOrbit::of(root);
  return point_of(orbit, phase - static_cast<std::int64_t>(k));
}

PeriodicPoint shift_point(const PeriodicPoint& x, std::int64_t n) {
  return point_of(x.orbit, static_cast<std::int64_t>(x.phase) + n);
}

Symbol EventuallyPeriodicPoint::at(std::int64_t t) const {
  const auto d = static_cast<std::int64_t>(defect.size());
  if (t >= 0) return right.at(t);
  if (t >= -d) return defect[static_cast<std::size_t>(t + d)];
  return left.at(t);
}

std::strong_ordering operator<=>(const EventuallyPeriodicPoint& a, const EventuallyPeriodicPoint& b) {
  if (auto c = a.left <=> b.left; c != 0) return c;
  if (auto c = a.right <=> b.right; c != 0) return c;
  if (auto c = a.defect.size() <=> b.defect.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.defect.begin(), a.defect.end(), b.defect.begin(),
                                                b.defect.end());
}

Configuration canonicalize_config(const PeriodicPoint& left, const Word& middle,
                                  const PeriodicPoint& right) {
  const auto d = static_cast<std::int64_t>(middle.size());
  const auto window = static_cast<std::int64_t>(lcm_u64(left.period(), right.period()));
  auto z = [&](std::int64_t t) -> const Symbol& {
    if (t < 0) return left.at(t);
    if (t < d) return middle[static_cast<std::size_t>(t)];
    return right.at(t - d);
  };

  // First coordinate where z leaves the left tail. If z follows the left
  // tail through the middle and one full common period of both tails, it
  // follows it forever.
  std::int64_t leave = -1;
  for (std::int64_t t = 0; t < d + window; ++t) {
    if (!(z(t) == left.at(t))) {
      leave = t;
      break;
    }
  }
  if (leave < 0) return left;

  // Leftmost onset of the right tail: z agrees with the right point
  // (extended to all of Z) on [onset, inf).
  auto right_abs = [&](std::int64_t t) -> const Symbol& { return right.at(t - d); };
  std::int64_t onset = d;
  const std::int64_t floor_limit = -(window + d + 1);
  while (z(onset - 1) == right_abs(onset - 1)) {
    --onset;
    if (onset < floor_limit) {
      throw std::logic_error("canonicalize_config: right tail onset did not terminate");
    }
  }

  const std::int64_t start = std::min(leave, onset);
  Word defect;
  for (std::int64_t t = start; t < onset; ++t) defect.push_back(z(t));
  return EventuallyPeriodicPoint{shift_point(left, onset), std::move(defect),
                                 shift_point(right, onset - d)};
}

}  // namespace sofic2
