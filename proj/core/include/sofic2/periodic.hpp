#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <variant>

#include "sofic2/word.hpp"

namespace sofic2 {

/// The σ-orbit of a periodic configuration, named by its root: a primitive
/// word that is least among its rotations. Ordered by period, then root.
class PeriodicOrbit {
 public:
  /// Orbit of the configuration ...www... for any nonempty w.
  static PeriodicOrbit of(const Word& w);

  const Word& root() const noexcept { return *root_; }
  std::size_t period() const noexcept { return root_->size(); }

  friend bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b) {
    return a.root_ == b.root_ || *a.root_ == *b.root_;
  }
  friend std::strong_ordering operator<=>(const PeriodicOrbit& a, const PeriodicOrbit& b);

 private:
  explicit PeriodicOrbit(Word root) : root_(std::make_shared<const Word>(std::move(root))) {}
  // Shared and immutable, so points copy cheaply.
  std::shared_ptr<const Word> root_;
};

/// A periodic configuration x with x_t = root[(t + phase) mod period].
struct PeriodicPoint {
  PeriodicOrbit orbit;
  std::size_t phase = 0;

  const Symbol& at(std::int64_t t) const;
  std::size_t period() const noexcept { return orbit.period(); }

  friend bool operator==(const PeriodicPoint&, const PeriodicPoint&) = default;
  friend std::strong_ordering operator<=>(const PeriodicPoint& a, const PeriodicPoint& b) {
    if (auto c = a.orbit <=> b.orbit; c != 0) return c;
    return a.phase <=> b.phase;
  }
};

/// The point of the orbit of `orbit` whose coordinate 0 reads root[phase].
PeriodicPoint point_of(const PeriodicOrbit& orbit, std::int64_t phase);

/// Canonical name of the configuration x_t = u[(t + phase) mod |u|].
PeriodicPoint canonicalize_point(const Word& u, std::int64_t phase);

/// σ^n(x), where σ(x)_t = x_{t+1}.
PeriodicPoint shift_point(const PeriodicPoint& x, std::int64_t n);

/// Canonical representative of the σ-orbit of an aperiodic configuration
/// that is periodic on both tails. Anchored at the leftmost onset of the
/// right tail:
///   z_t = right.at(t)                for t >= 0
///   z_t = defect[t + |defect|]       for -|defect| <= t < 0
///   z_t = left.at(t)                 for t < -|defect|
/// and the defect is as short as possible, i.e. `left` already disagrees
/// with z at -|defect| whenever the defect is nonempty.
struct EventuallyPeriodicPoint {
  PeriodicPoint left;
  Word defect;
  PeriodicPoint right;

  Symbol at(std::int64_t t) const;

  friend bool operator==(const EventuallyPeriodicPoint&, const EventuallyPeriodicPoint&) = default;
  friend std::strong_ordering operator<=>(const EventuallyPeriodicPoint& a,
                                          const EventuallyPeriodicPoint& b);
};

using Configuration = std::variant<PeriodicPoint, EventuallyPeriodicPoint>;

/// Builds z = left on (-inf, 0), middle on [0, |middle|), and right read
/// from its own coordinate 0 onwards on [|middle|, inf), i.e.
/// z_t = right.at(t - |middle|). Returns the periodic point if z is
/// periodic, otherwise the canonical representative of its σ-orbit.
Configuration canonicalize_config(const PeriodicPoint& left, const Word& middle,
                                  const PeriodicPoint& right);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace sofic2
