#include "sofic2/structure.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include "sofic2/error.hpp"
#include "sofic2/periodic.hpp"

namespace sofic2 {

namespace {

struct CyclePosition {
  std::size_t cycle;
  std::size_t phase;
};

std::vector<std::optional<CyclePosition>> cycle_positions(std::size_t n,
                                                          const std::vector<Cycle>& cycles) {
  std::vector<std::optional<CyclePosition>> pos(n);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t r = 0; r < cycles[c].length(); ++r) pos[cycles[c].vertices[r]] = CyclePosition{c, r};
  }
  return pos;
}

std::vector<bool> cycle_edge_mask(std::size_t m, const std::vector<Cycle>& cycles) {
  std::vector<bool> mask(m, false);
  for (const auto& c : cycles) {
    for (std::size_t e : c.edges) mask[e] = true;
  }
  return mask;
}

// Adds one σ-orbit asymptotic to (x, y) to every edge of its simultaneous
// shift class.
void add_orbit_class(StructureGraph& s, const PeriodicPoint& x, const PeriodicPoint& y,
                     const OrbitCount& count) {
  const auto period = lcm_u64(x.period(), y.period());
  for (std::uint64_t k = 0; k < period; ++k) {
    const auto shift = static_cast<std::int64_t>(k);
    s.add_transition(shift_point(x, shift), shift_point(y, shift), count);
  }
}

void add_diagonal(StructureGraph& s) {
  for (const auto& x : s.points()) s.add_transition(x, x, 1);
}

using Subset = std::vector<VertexId>;

// Deterministic transition table of a right-resolving graph.
class Transitions {
 public:
  explicit Transitions(const LabeledGraph& g) : next_(g.vertex_count()) {
    for (const auto& e : g.edges()) {
      next_[e.source].emplace(e.label, e.target);
      labels_.insert(e.label);
    }
  }

  Subset move(const Subset& from, const Symbol& a) const {
    std::set<VertexId> to;
    for (VertexId v : from) {
      auto it = next_[v].find(a);
      if (it != next_[v].end()) to.insert(it->second);
    }
    return {to.begin(), to.end()};
  }

  const std::set<Symbol>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::map<Symbol, VertexId>> next_;
  std::set<Symbol> labels_;
};

}  // namespace

TransferMatrix::TransferMatrix(const LabeledGraph& g, const std::vector<Cycle>& cycles)
    : rows_(g.vertex_count()) {
  const auto on_cycle = cycle_edge_mask(g.edge_count(), cycles);
  std::vector<std::map<VertexId, std::uint64_t>> dense(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!on_cycle[i]) ++dense[g.edge(i).source][g.edge(i).target];
  }
  for (VertexId v = 0; v < dense.size(); ++v) rows_[v].assign(dense[v].begin(), dense[v].end());
}

std::uint64_t TransferMatrix::at(VertexId v, VertexId w) const {
  for (const auto& [target, mult] : rows_.at(v)) {
    if (target == w) return mult;
  }
  return 0;
}

TransferMatrix::Row TransferMatrix::step(const Row& row) const {
  Row out;
  for (const auto& [v, count] : row) {
    for (const auto& [w, mult] : rows_[v]) out[w] += count * OrbitCount(mult);
  }
  return out;
}

LabeledGraph departure_normal_form(const LabeledGraph& minimized, const AnalysisReport& report) {
  const Transitions delta(minimized);
  const std::size_t n = minimized.vertex_count();

  std::vector<PeriodicOrbit> orbits;
  for (const auto& c : report.cycles) orbits.push_back(PeriodicOrbit::of(c.label));
  std::sort(orbits.begin(), orbits.end());
  orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());

  LabeledGraph h;
  std::map<Subset, VertexId> state_of;
  std::deque<Subset> pending;
  auto intern = [&](Subset s) {
    auto it = state_of.find(s);
    if (it != state_of.end()) return it->second;
    VertexId id = h.add_vertex("s" + std::to_string(state_of.size()));
    state_of.emplace(s, id);
    pending.push_back(std::move(s));
    return id;
  };

  Subset everything(n);
  for (VertexId v = 0; v < n; ++v) everything[v] = v;

  for (std::size_t x = 0; x < orbits.size(); ++x) {
    const Word& root = orbits[x].root();
    const std::size_t p = root.size();

    // reach[r]: endpoints of left-infinite walks labeled by the past of the
    // point with phase r. Greatest fixpoint of reach[r] = δ(reach[r-1], root[r-1]).
    std::vector<Subset> reach(p, everything);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = 0; r < p; ++r) {
        const std::size_t prev = (r + p - 1) % p;
        Subset next = delta.move(reach[prev], root[prev]);
        if (next != reach[r]) {
          reach[r] = std::move(next);
          changed = true;
        }
      }
    }

    std::vector<VertexId> loop(p);
    for (std::size_t r = 0; r < p; ++r) {
      loop[r] = h.add_vertex("l" + std::to_string(x) + "_" + std::to_string(r));
    }
    for (std::size_t r = 0; r < p; ++r) {
      h.add_edge(loop[r], loop[(r + 1) % p], root[r]);
      for (const auto& a : delta.labels()) {
        if (a == root[r]) continue;
        Subset target = delta.move(reach[r], a);
        if (!target.empty()) h.add_edge(loop[r], intern(std::move(target)), a);
      }
    }
  }

  while (!pending.empty()) {
    Subset s = std::move(pending.front());
    pending.pop_front();
    const VertexId from = state_of.at(s);
    for (const auto& a : delta.labels()) {
      Subset target = delta.move(s, a);
      if (!target.empty()) h.add_edge(from, intern(std::move(target)), a);
    }
  }
  return trim_essential(h);
}

StructureGraph build_structure(const LabeledGraph& g) {
  const LabeledGraph minimized = minimize_right_resolving(g);
  const AnalysisReport report = require_rank_at_most_two(minimized);
  const LabeledGraph h = departure_normal_form(minimized, report);
  const AnalysisReport h_report = analyze(h);
  if (!h_report.is_countable_certified || h_report.rank_status != RankStatus::Exact) {
    throw std::logic_error("departure normal form lost the rank-two shape");
  }

  StructureGraph s;
  for (const auto& c : report.cycles) s.add_orbit(PeriodicOrbit::of(c.label));

  const auto pos = cycle_positions(h.vertex_count(), h_report.cycles);
  const TransferMatrix m(h, h_report.cycles);
  for (std::size_t i = 0; i < h_report.cycles.size(); ++i) {
    const Cycle& from = h_report.cycles[i];
    for (std::size_t a = 0; a < from.length(); ++a) {
      const PeriodicPoint x = canonicalize_point(from.label, static_cast<std::int64_t>(a));
      TransferMatrix::Row row{{from.vertices[a], OrbitCount(1)}};
      for (std::int64_t length = 1; !row.empty(); ++length) {
        row = m.step(row);
        for (const auto& [w, count] : row) {
          if (!pos[w]) continue;
          const Cycle& to = h_report.cycles[pos[w]->cycle];
          const PeriodicPoint y =
              canonicalize_point(to.label, static_cast<std::int64_t>(pos[w]->phase) - length);
          add_orbit_class(s, x, y, count);
        }
      }
    }
  }
  add_diagonal(s);
  return s;
}

std::vector<TransitionalPath> enumerate_transitional_paths(const LabeledGraph& g,
                                                           const AnalysisReport& report,
                                                           std::uint64_t budget) {
  const auto pos = cycle_positions(g.vertex_count(), report.cycles);
  const auto on_cycle = cycle_edge_mask(g.edge_count(), report.cycles);
  const auto out = g.out_edges();
  std::vector<TransitionalPath> paths;

  TransitionalPath current;
  // Depth-first over non-cycle edges; stops at the first cycle vertex.
  auto extend = [&](auto&& self, VertexId v) -> void {
    for (std::size_t ei : out[v]) {
      if (on_cycle[ei]) continue;
      const auto& e = g.edge(ei);
      current.vertices.push_back(e.target);
      current.label.push_back(e.label);
      if (pos[e.target]) {
        if (paths.size() >= budget) {
          throw Error(ErrorKind::BudgetExceeded,
                      "more than " + std::to_string(budget) + " transitional paths");
        }
        TransitionalPath done = current;
        done.end_cycle = pos[e.target]->cycle;
        done.end_phase = pos[e.target]->phase;
        paths.push_back(std::move(done));
      } else {
        self(self, e.target);
      }
      current.vertices.pop_back();
      current.label.pop_back();
    }
  };

  for (std::size_t c = 0; c < report.cycles.size(); ++c) {
    for (std::size_t a = 0; a < report.cycles[c].length(); ++a) {
      current = TransitionalPath{};
      current.vertices = {report.cycles[c].vertices[a]};
      current.start_cycle = c;
      current.start_phase = a;
      extend(extend, report.cycles[c].vertices[a]);
    }
  }
  return paths;
}

StructureGraph oracle_structure(const LabeledGraph& g, std::uint64_t path_budget) {
  const LabeledGraph trimmed = trim_essential(g);
  const AnalysisReport report = require_rank_at_most_two(trimmed);

  StructureGraph s;
  for (const auto& c : report.cycles) s.add_orbit(PeriodicOrbit::of(c.label));

  std::set<EventuallyPeriodicPoint> orbits;
  for (const auto& path : enumerate_transitional_paths(trimmed, report, path_budget)) {
    const Cycle& from = report.cycles[path.start_cycle];
    const Cycle& to = report.cycles[path.end_cycle];
    auto z = canonicalize_config(canonicalize_point(from.label, static_cast<std::int64_t>(path.start_phase)),
                                 path.label,
                                 canonicalize_point(to.label, static_cast<std::int64_t>(path.end_phase)));
    if (auto* epp = std::get_if<EventuallyPeriodicPoint>(&z)) orbits.insert(std::move(*epp));
  }
  for (const auto& z : orbits) add_orbit_class(s, z.left, z.right, 1);
  add_diagonal(s);
  return s;
}

Word synthesized_root(std::size_t orbit_index, std::size_t period) {
  const std::size_t width = std::to_string(period == 0 ? 0 : period - 1).size();
  Word root;
  for (std::size_t r = 0; r < period; ++r) {
    std::string digits = std::to_string(r);
    digits.insert(0, width - digits.size(), '0');
    root.emplace_back("a" + std::to_string(orbit_index) + "_" + digits);
  }
  return root;
}

LabeledGraph synthesize(const StructureGraph& s) {
  s.validate();
  const auto& orbits = s.orbits();
  LabeledGraph g;

  auto entry = [](std::size_t i, std::size_t r) { return "q" + std::to_string(i) + "_" + std::to_string(r); };
  auto exit = [](std::size_t i, std::size_t r) { return "p" + std::to_string(i) + "_" + std::to_string(r); };

  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const Word root = synthesized_root(i, orbits[i].period());
    const std::size_t p = root.size();
    for (std::size_t r = 0; r < p; ++r) {
      g.add_vertex(entry(i, r));
      g.add_vertex(exit(i, r));
    }
    for (std::size_t r = 0; r < p; ++r) {
      g.add_edge(entry(i, r), entry(i, (r + 1) % p), root[r]);
      g.add_edge(exit(i, r), exit(i, (r + 1) % p), root[r]);
    }
  }

  // One gadget family per simultaneous-shift class: an orbit realized for
  // (x, y) already counts on every (σ^k x, σ^k y).
  std::set<PointPair> covered;
  std::size_t gadget = 0;
  for (const auto& [pair, total] : s.transitions()) {
    if (covered.contains(pair)) continue;
    const auto& [x, y] = pair;
    const auto period = lcm_u64(x.period(), y.period());
    for (std::uint64_t k = 0; k < period; ++k) {
      const auto shift = static_cast<std::int64_t>(k);
      covered.insert({shift_point(x, shift), shift_point(y, shift)});
    }

    OrbitCount wanted = total;
    if (x == y) wanted -= 1;
    const std::size_t i = *s.orbit_index(x.orbit);
    const std::size_t j = *s.orbit_index(y.orbit);
    for (unsigned bit = 0; bit < wanted.bit_length(); ++bit) {
      if (!wanted.bit(bit)) continue;
      // 2^bit paths: one single edge, `bit` doubled edges, single edges up
      // to a multiple of the lcm so the path lands on the phase of y.
      const std::uint64_t length = ((bit + 2 + period - 1) / period) * period;
      const std::string tag = "g" + std::to_string(gadget++);
      std::string from = entry(i, x.phase);
      for (std::uint64_t t = 0; t < length; ++t) {
        const std::string to = t + 1 == length ? exit(j, y.phase) : tag + "v" + std::to_string(t + 1);
        const std::string label = tag + "e" + std::to_string(t);
        g.add_edge(from, to, Symbol(label));
        if (t >= 1 && t <= bit) g.add_edge(from, to, Symbol(label + "x"));
        from = to;
      }
    }
  }
  return minimize_right_resolving(g);
}

}  // namespace sofic2
