#include "sofic2/decisions.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>

#include "sofic2/error.hpp"

namespace sofic2 {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::BlockMap: return "hom";
    case Mode::Embedding: return "embed";
    case Mode::Factor: return "factor";
    case Mode::Conjugacy: return "conj";
  }
  return "?";
}

namespace {

// Structure graph with points numbered orbit by orbit. A dense matrix
// holds indices into the list of distinct counts; index 0 is zero, i.e.
// no transition edge.
class IndexedGraph {
 public:
  explicit IndexedGraph(const StructureGraph& s) : source_(&s) {
    for (const auto& o : s.orbits()) {
      offset_.push_back(n_);
      period_.push_back(o.period());
      n_ += o.period();
    }
    slot_.assign(n_ * n_, 0);
    values_.emplace_back();
    for (const auto& [pair, c] : s.transitions()) {
      slot_[id(pair.first) * n_ + id(pair.second)] = static_cast<std::uint32_t>(values_.size());
      values_.push_back(c);
    }
  }

  std::size_t orbit_count() const noexcept { return period_.size(); }
  std::size_t point_count() const noexcept { return n_; }
  std::size_t period(std::size_t orbit) const { return period_[orbit]; }
  std::size_t id(std::size_t orbit, std::size_t phase) const { return offset_[orbit] + phase; }
  std::size_t id(const PeriodicPoint& x) const { return id(*source_->orbit_index(x.orbit), x.phase); }
  const OrbitCount& count(std::size_t a, std::size_t b) const { return values_[slot_[a * n_ + b]]; }
  PeriodicPoint point(std::size_t orbit, std::size_t phase) const {
    return PeriodicPoint{source_->orbits()[orbit], phase};
  }

  // Period, then the sorted outgoing and incoming transition counts.
  using Signature = std::tuple<std::size_t, std::vector<OrbitCount>, std::vector<OrbitCount>>;
  Signature signature(std::size_t orbit, std::size_t phase) const {
    const std::size_t a = id(orbit, phase);
    Signature sig{period_[orbit], {}, {}};
    for (std::size_t b = 0; b < n_; ++b) {
      if (!count(a, b).is_zero()) std::get<1>(sig).push_back(count(a, b));
      if (!count(b, a).is_zero()) std::get<2>(sig).push_back(count(b, a));
    }
    std::sort(std::get<1>(sig).begin(), std::get<1>(sig).end());
    std::sort(std::get<2>(sig).begin(), std::get<2>(sig).end());
    return sig;
  }

 private:
  const StructureGraph* source_;
  std::size_t n_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> period_;
  std::vector<std::uint32_t> slot_;
  std::vector<OrbitCount> values_;
};

struct Candidate {
  std::size_t target;
  std::size_t offset;
};

class HomomorphismSearch {
 public:
  HomomorphismSearch(Mode mode, const StructureGraph& x, const StructureGraph& y, std::stop_token stop)
      : mode_(mode), x_(x), y_(y), stop_(std::move(stop)) {}

  std::optional<std::vector<Candidate>> run() {
    const std::size_t m = x_.orbit_count();
    if (mode_ == Mode::Conjugacy &&
        (m != y_.orbit_count() || x_.point_count() != y_.point_count())) {
      return std::nullopt;
    }
    if (mode_ == Mode::Factor && y_.orbit_count() > 0 && m == 0) return std::nullopt;

    std::vector<std::vector<Candidate>> domains(m);
    const auto leaders = component_leaders();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t t = 0; t < y_.orbit_count(); ++t) {
        const std::size_t q = y_.period(t);
        const bool period_ok = needs_equal_periods() ? q == x_.period(i) : x_.period(i) % q == 0;
        if (!period_ok) continue;
        for (std::size_t off = 0; off < (leaders[i] ? 1 : q); ++off) {
          Candidate c{t, off};
          if (mode_ == Mode::Conjugacy && !signatures_match(i, c)) continue;
          if (consistent(i, c, i, c)) domains[i].push_back(c);
        }
      }
      if (domains[i].empty()) return std::nullopt;
    }
    assignment_.assign(m, std::nullopt);
    if (!solve(domains, 0)) return std::nullopt;
    std::vector<Candidate> out;
    for (const auto& a : assignment_) out.push_back(*a);
    return out;
  }

 private:
  bool needs_equal_periods() const { return mode_ == Mode::Embedding || mode_ == Mode::Conjugacy; }
  bool injective() const { return needs_equal_periods(); }

  std::size_t image(std::size_t phase, const Candidate& c) const {
    return y_.id(c.target, (phase + c.offset) % y_.period(c.target));
  }

  // Orbits that start a connected component of x (transition edges taken
  // undirected). Composing a witness with a shift on one component gives
  // another witness, so their phase offset can be fixed to zero.
  std::vector<bool> component_leaders() const {
    const std::size_t m = x_.orbit_count();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (orbits_linked(i, j)) parent[find(j)] = find(i);
      }
    }
    std::vector<bool> leader(m, false);
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < m; ++i) leader[i] = seen.insert(find(i)).second;
    return leader;
  }

  bool orbits_linked(std::size_t i, std::size_t j) const {
    for (std::size_t r = 0; r < x_.period(i); ++r) {
      for (std::size_t s = 0; s < x_.period(j); ++s) {
        const auto a = x_.id(i, r), b = x_.id(j, s);
        if (!x_.count(a, b).is_zero() || !x_.count(b, a).is_zero()) return true;
      }
    }
    return false;
  }

  bool signatures_match(std::size_t i, const Candidate& c) const {
    for (std::size_t r = 0; r < x_.period(i); ++r) {
      if (x_.signature(i, r) != y_.signature(c.target, (r + c.offset) % y_.period(c.target))) return false;
    }
    return true;
  }

  bool edge_ok(std::size_t a, std::size_t b, std::size_t fa, std::size_t fb) const {
    const OrbitCount& cx = x_.count(a, b);
    const OrbitCount& cy = y_.count(fa, fb);
    switch (mode_) {
      case Mode::BlockMap:
      case Mode::Factor:
        return cx.is_zero() || !cy.is_zero();
      case Mode::Embedding:
        return cx <= cy;
      case Mode::Conjugacy:
        return cx == cy;
    }
    return false;
  }

  bool consistent(std::size_t i, const Candidate& ci, std::size_t j, const Candidate& cj) const {
    if (i != j && injective() && ci.target == cj.target) return false;
    for (std::size_t r = 0; r < x_.period(i); ++r) {
      for (std::size_t s = 0; s < x_.period(j); ++s) {
        const auto a = x_.id(i, r), b = x_.id(j, s);
        const auto fa = image(r, ci), fb = image(s, cj);
        if (!edge_ok(a, b, fa, fb) || !edge_ok(b, a, fb, fa)) return false;
      }
    }
    return true;
  }

  // Every target orbit not yet hit needs some unassigned orbit that can
  // still reach it.
  bool coverage_possible(const std::vector<std::vector<Candidate>>& domains) const {
    std::vector<bool> hit(y_.orbit_count(), false);
    std::size_t free_orbits = 0;
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      if (assignment_[i]) {
        hit[assignment_[i]->target] = true;
      } else {
        ++free_orbits;
        for (const auto& c : domains[i]) hit[c.target] = true;
      }
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
    std::set<std::size_t> assigned_targets;
    for (const auto& a : assignment_) {
      if (a) assigned_targets.insert(a->target);
    }
    return y_.orbit_count() - assigned_targets.size() <= free_orbits;
  }

  bool factor_complete() const {
    std::vector<bool> hit(y_.orbit_count(), false);
    for (const auto& a : assignment_) hit[a->target] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;

    const std::size_t n = y_.point_count();
    std::vector<OrbitCount> covered(n * n);
    for (std::size_t i = 0; i < x_.orbit_count(); ++i) {
      for (std::size_t j = 0; j < x_.orbit_count(); ++j) {
        for (std::size_t r = 0; r < x_.period(i); ++r) {
          for (std::size_t s = 0; s < x_.period(j); ++s) {
            const OrbitCount& c = x_.count(x_.id(i, r), x_.id(j, s));
            if (c.is_zero()) continue;
            covered[image(r, *assignment_[i]) * n + image(s, *assignment_[j])] += c;
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (covered[a * n + b] < y_.count(a, b)) return false;
      }
    }
    return true;
  }

  bool solve(const std::vector<std::vector<Candidate>>& domains, std::size_t depth) {
    if (stop_.stop_requested()) throw Error(ErrorKind::Cancelled, "decision search cancelled");
    if (depth == assignment_.size()) return mode_ != Mode::Factor || factor_complete();
    if (mode_ == Mode::Factor && !coverage_possible(domains)) return false;

    std::size_t pick = assignment_.size();
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      if (assignment_[i]) continue;
      if (pick == assignment_.size() || domains[i].size() < domains[pick].size()) pick = i;
    }

    for (const auto& c : domains[pick]) {
      std::vector<std::vector<Candidate>> next(domains.size());
      bool dead = false;
      for (std::size_t j = 0; j < assignment_.size() && !dead; ++j) {
        if (assignment_[j] || j == pick) continue;
        for (const auto& cj : domains[j]) {
          if (consistent(pick, c, j, cj)) next[j].push_back(cj);
        }
        dead = next[j].empty();
      }
      if (dead) continue;
      assignment_[pick] = c;
      if (solve(next, depth + 1)) return true;
      assignment_[pick].reset();
    }
    return false;
  }

  Mode mode_;
  IndexedGraph x_;
  IndexedGraph y_;
  std::stop_token stop_;
  std::vector<std::optional<Candidate>> assignment_;
};

SGHomomorphism to_homomorphism(const StructureGraph& x, const StructureGraph& y,
                               const std::vector<Candidate>& assignment) {
  SGHomomorphism h;
  for (std::size_t i = 0; i < x.orbits().size(); ++i) {
    const PeriodicOrbit& target = y.orbits()[assignment[i].target];
    for (std::size_t r = 0; r < x.orbits()[i].period(); ++r) {
      h.vertex_map.emplace(PeriodicPoint{x.orbits()[i], r},
                           PeriodicPoint{target, (r + assignment[i].offset) % target.period()});
    }
  }
  return h;
}

std::vector<std::size_t> periods_of(const StructureGraph& s) {
  std::vector<std::size_t> out;
  for (const auto& o : s.orbits()) out.push_back(o.period());
  return out;
}

// Kuhn's augmenting paths. Left side: target orbits; right side: source
// orbits; j -- i allowed when q_j divides p_i. Returns, per target orbit,
// the matched source orbit or npos.
std::vector<std::size_t> match_targets(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> source_owner(p.size(), npos);
  std::vector<std::size_t> matched(q.size(), npos);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, std::size_t j) -> bool {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] % q[j] != 0 || visited[i]) continue;
      visited[i] = true;
      if (source_owner[i] == npos || self(self, source_owner[i])) {
        source_owner[i] = j;
        matched[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t j = 0; j < q.size(); ++j) {
    visited.assign(p.size(), false);
    augment(augment, j);
  }
  return matched;
}

std::optional<std::vector<Candidate>> rank1_assignment(Mode mode, const StructureGraph& x,
                                                       const StructureGraph& y) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const auto p = periods_of(x);
  const auto q = periods_of(y);
  std::vector<Candidate> out(p.size(), Candidate{npos, 0});
  if (mode == Mode::Embedding || mode == Mode::Conjugacy) {
    std::vector<bool> used(q.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (!used[j] && q[j] == p[i]) {
          used[j] = true;
          out[i].target = j;
          break;
        }
      }
      if (out[i].target == npos) return std::nullopt;
    }
    if (mode == Mode::Conjugacy && p.size() != q.size()) return std::nullopt;
    return out;
  }
  if (mode == Mode::Factor) {
    const auto matched = match_targets(p, q);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (matched[j] == npos) return std::nullopt;
      out[matched[j]].target = j;
    }
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (out[i].target != npos) continue;
    for (std::size_t j = 0; j < q.size() && out[i].target == npos; ++j) {
      if (p[i] % q[j] == 0) out[i].target = j;
    }
    if (out[i].target == npos) return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<SGHomomorphism> decide(Mode mode, const StructureGraph& x, const StructureGraph& y,
                                     const DecideOptions& options) {
  x.validate();
  y.validate();
  if (options.use_fastpath && x.is_rank_one() && y.is_rank_one()) {
    auto assignment = rank1_assignment(mode, x, y);
    if (!assignment) return std::nullopt;
    return to_homomorphism(x, y, *assignment);
  }
  HomomorphismSearch search(mode, x, y, options.stop);
  auto assignment = search.run();
  if (!assignment) return std::nullopt;
  return to_homomorphism(x, y, *assignment);
}

bool rank1_decide(Mode mode, const StructureGraph& x, const StructureGraph& y) {
  if (!x.is_rank_one() || !y.is_rank_one()) {
    throw Error(ErrorKind::NotRankOne, "rank1_decide needs two finite shifts");
  }
  auto p = periods_of(x);
  auto q = periods_of(y);
  auto divisible_somewhere = [&] {
    return std::all_of(p.begin(), p.end(), [&](std::size_t pi) {
      return std::any_of(q.begin(), q.end(), [&](std::size_t qj) { return pi % qj == 0; });
    });
  };
  switch (mode) {
    case Mode::Conjugacy:
      std::sort(p.begin(), p.end());
      std::sort(q.begin(), q.end());
      return p == q;
    case Mode::BlockMap:
      return divisible_somewhere();
    case Mode::Embedding: {
      std::map<std::size_t, std::ptrdiff_t> balance;
      for (auto pi : p) ++balance[pi];
      for (auto qj : q) --balance[qj];
      return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second <= 0; });
    }
    case Mode::Factor: {
      if (!divisible_somewhere()) return false;
      const auto matched = match_targets(p, q);
      return std::none_of(matched.begin(), matched.end(),
                          [](std::size_t i) { return i == static_cast<std::size_t>(-1); });
    }
  }
  return false;
}

bool verify_witness(Mode mode, const StructureGraph& x, const StructureGraph& y,
                    const SGHomomorphism& h) noexcept {
  try {
    const auto source_points = x.points();
    if (h.vertex_map.size() != source_points.size()) return false;
    std::set<PeriodicPoint> image;
    for (const auto& p : source_points) {
      auto it = h.vertex_map.find(p);
      if (it == h.vertex_map.end()) return false;
      const PeriodicPoint& fp = it->second;
      if (!y.has_orbit(fp.orbit) || fp.phase >= fp.period()) return false;
      if (!(h.vertex_map.at(shift_point(p, 1)) == shift_point(fp, 1))) return false;
      image.insert(fp);
    }

    std::map<PointPair, OrbitCount> preimage_sum;
    std::map<PointPair, std::size_t> preimage_edges;
    for (const auto& [pair, c] : x.transitions()) {
      PointPair target{h.vertex_map.at(pair.first), h.vertex_map.at(pair.second)};
      if (!y.has_transition(target.first, target.second)) return false;
      preimage_sum[target] += c;
      ++preimage_edges[target];
    }

    const bool vertex_injective = image.size() == source_points.size();
    const bool vertex_surjective = image.size() == y.point_count();
    const bool edge_injective = std::all_of(preimage_edges.begin(), preimage_edges.end(),
                                            [](const auto& kv) { return kv.second == 1; });
    const bool edge_surjective = preimage_edges.size() == y.transitions().size();

    switch (mode) {
      case Mode::BlockMap:
        return true;
      case Mode::Embedding:
        if (!vertex_injective || !edge_injective) return false;
        for (const auto& [pair, c] : x.transitions()) {
          if (y.count(h.vertex_map.at(pair.first), h.vertex_map.at(pair.second)) < c) return false;
        }
        return true;
      case Mode::Factor:
        if (!vertex_surjective || !edge_surjective) return false;
        for (const auto& [pair, c] : y.transitions()) {
          if (preimage_sum[pair] < c) return false;
        }
        return true;
      case Mode::Conjugacy:
        if (!vertex_injective || !vertex_surjective || !edge_injective || !edge_surjective) return false;
        for (const auto& [pair, c] : y.transitions()) {
          if (!(preimage_sum[pair] == c)) return false;
        }
        return true;
    }
    return false;
  } catch (...) {
    return false;
  }
}

std::vector<EdgeAssignment> realize_orbit_map(Mode mode, const StructureGraph& x,
                                              const StructureGraph& y, const SGHomomorphism& h) {
  if (!verify_witness(mode, x, y, h)) {
    throw Error(ErrorKind::WitnessInvalid, "homomorphism fails the conditions of mode " +
                                               std::string(to_string(mode)));
  }
  std::map<PointPair, std::vector<PointPair>> sources;
  for (const auto& [pair, c] : x.transitions()) {
    sources[{h.vertex_map.at(pair.first), h.vertex_map.at(pair.second)}].push_back(pair);
  }
  std::vector<EdgeAssignment> out;
  for (const auto& [target, count] : y.transitions()) {
    EdgeAssignment a{target, count, sources[target], {}};
    const std::uint64_t available = count.to_u64_saturated();
    for (const auto& e : a.sources) {
      const std::uint64_t k = x.count(e.first, e.second).to_u64_saturated();
      for (std::uint64_t i = 0; i < k; ++i) {
        a.image.push_back(std::min<std::uint64_t>(a.image.size(), available - 1));
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace sofic2
