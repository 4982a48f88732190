#include "sofic2/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sofic2/comb_rep.hpp"
#include "sofic2/error.hpp"
#include "sofic2/presentation.hpp"
#include "sofic2/structure.hpp"

namespace sofic2 {

std::size_t SimpleGraph::add_vertex(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, names_.size());
  if (inserted) names_.push_back(name);
  return it->second;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw Error(ErrorKind::ParseError, "self-loop at vertex " + names_.at(u));
  if (u > v) std::swap(u, v);
  auto e = std::make_pair(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void SimpleGraph::add_edge(const std::string& u, const std::string& v) {
  add_edge(add_vertex(u), add_vertex(v));
}

std::optional<std::size_t> SimpleGraph::find(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

std::size_t ColoredGraph::add_vertex(const std::string& name, int c) {
  const std::size_t v = graph.add_vertex(name);
  if (v == color.size()) {
    color.push_back(c);
  } else {
    color[v] = c;
  }
  return v;
}

std::size_t Digraph::add_vertex(std::string name) {
  names.push_back(std::move(name));
  return names.size() - 1;
}

namespace {

void require_no_isolated(const SimpleGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + g.name(v) + " has no edges");
  }
}

}  // namespace

StructureGraph gi_gadget(const ColoredGraph& g) {
  const SimpleGraph& graph = g.graph;
  if (graph.vertex_count() == 0) throw Error(ErrorKind::IsolatedVertex, "graph has no edges");
  require_no_isolated(graph);
  for (const auto& [u, v] : graph.edges()) {
    if (g.color.at(u) == g.color.at(v) || (g.color[u] != 0 && g.color[u] != 1) ||
        (g.color[v] != 0 && g.color[v] != 1)) {
      throw Error(ErrorKind::ImproperColoring, "edge " + graph.name(u) + " " + graph.name(v));
    }
  }
  auto fixed = [&](std::size_t v) { return PeriodicPoint{PeriodicOrbit::of({Symbol(graph.name(v))}), 0}; };
  StructureGraph s;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) s.add_orbit(fixed(v).orbit);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) s.add_transition(fixed(v), fixed(v), 1);
  for (const auto& [u, v] : graph.edges()) {
    if (g.color[u] == 0) {
      s.add_transition(fixed(u), fixed(v), 1);
    } else {
      s.add_transition(fixed(v), fixed(u), 1);
    }
  }
  return s;
}

StructureGraph hom_gadget(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorKind::IsolatedVertex, "graph has no edges");
  require_no_isolated(g);
  std::string hash = "#";
  while (g.find(hash)) hash += "#";
  const Symbol sep(hash);

  std::vector<CombTerm> terms;
  for (const auto& [a, b] : g.edges()) {
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      const Symbol su(g.name(u)), sv(g.name(v));
      terms.push_back(CombTerm::interleaved({Word{sep, su}, Word{}, Word{sep, sv}}));
      terms.push_back(CombTerm::interleaved({Word{sep, su}, Word{}, Word{sv, sep}}));
    }
  }
  return build_structure(from_comb_rep(CombRep(std::move(terms))));
}

std::size_t bundle_size(std::size_t count) { return count + 3; }

Digraph digraph_gadget(const StructureGraph& s) {
  s.validate();
  Digraph d;
  std::map<PeriodicPoint, std::size_t> id;
  std::map<PeriodicOrbit, std::size_t> orbit_number;
  for (std::size_t i = 0; i < s.orbits().size(); ++i) orbit_number.emplace(s.orbits()[i], i);
  for (const auto& x : s.points()) {
    id.emplace(x, d.add_vertex("o" + std::to_string(orbit_number.at(x.orbit)) + ":" +
                               std::to_string(x.phase)));
  }

  std::size_t bundle = 0;
  auto add_bundle = [&](std::size_t from, std::size_t to, std::size_t m) {
    const std::string tag = "b" + std::to_string(bundle++);
    for (std::size_t path = 0; path < m; ++path) {
      std::size_t prev = from;
      for (std::size_t step = 1; step < m; ++step) {
        const std::size_t mid = d.add_vertex(tag + "p" + std::to_string(path) + "s" + std::to_string(step));
        d.arcs.emplace_back(prev, mid);
        prev = mid;
      }
      d.arcs.emplace_back(prev, to);
    }
  };

  for (const auto& x : s.points()) add_bundle(id.at(x), id.at(shift_point(x, 1)), 3);
  for (const auto& [pair, count] : s.transitions()) {
    const std::uint64_t k = count.to_u64_saturated();
    if (k > 1000) throw Error(ErrorKind::TooLarge, "transition count " + count.to_decimal() + " is too large to encode");
    add_bundle(id.at(pair.first), id.at(pair.second), bundle_size(static_cast<std::size_t>(k)));
  }
  return d;
}

namespace {

// Color refinement on the disjoint union of two digraphs so that colors
// are comparable across them. Vertices [0, n) belong to a, [n, 2n) to b.
class UnionRefiner {
 public:
  UnionRefiner(const Digraph& a, const Digraph& b) : n_(a.vertex_count()), out_(2 * n_), in_(2 * n_) {
    for (const auto& [u, v] : a.arcs) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    for (const auto& [u, v] : b.arcs) {
      out_[u + n_].push_back(v + n_);
      in_[v + n_].push_back(u + n_);
    }
  }

  std::size_t half() const noexcept { return n_; }

  // Refines until stable; returns false when the two halves disagree on
  // some color class size.
  bool refine(std::vector<std::size_t>& color) const {
    std::size_t classes = count_classes(color);
    for (;;) {
      using Key = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
      std::map<Key, std::size_t> ids;
      std::vector<Key> keys(color.size());
      for (std::size_t v = 0; v < color.size(); ++v) {
        auto& [own, outs, ins] = keys[v];
        own = color[v];
        for (auto w : out_[v]) outs.push_back(color[w]);
        for (auto w : in_[v]) ins.push_back(color[w]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        ids.emplace(keys[v], 0);
      }
      std::size_t next_id = 0;
      for (auto& kv : ids) kv.second = next_id++;
      for (std::size_t v = 0; v < color.size(); ++v) color[v] = ids.at(keys[v]);
      if (!balanced(color)) return false;
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  bool balanced(const std::vector<std::size_t>& color) const {
    std::map<std::size_t, std::ptrdiff_t> diff;
    for (std::size_t v = 0; v < n_; ++v) {
      ++diff[color[v]];
      --diff[color[v + n_]];
    }
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

 private:
  static std::size_t count_classes(const std::vector<std::size_t>& color) {
    return std::set<std::size_t>(color.begin(), color.end()).size();
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

bool arcs_match(const Digraph& a, const Digraph& b, const std::vector<std::size_t>& map) {
  std::multiset<std::pair<std::size_t, std::size_t>> mapped, target(b.arcs.begin(), b.arcs.end());
  for (const auto& [u, v] : a.arcs) mapped.emplace(map[u], map[v]);
  return mapped == target;
}

std::optional<std::vector<std::size_t>> individualize(const Digraph& a, const Digraph& b,
                                                      const UnionRefiner& refiner,
                                                      std::vector<std::size_t> color) {
  if (!refiner.refine(color)) return std::nullopt;
  const std::size_t n = refiner.half();

  std::map<std::size_t, std::vector<std::size_t>> cells_a, cells_b;
  for (std::size_t v = 0; v < n; ++v) {
    cells_a[color[v]].push_back(v);
    cells_b[color[v + n]].push_back(v);
  }
  // Branch on the smallest nontrivial cell.
  const std::vector<std::size_t>* branch = nullptr;
  std::size_t branch_color = 0;
  for (const auto& [c, cell] : cells_a) {
    if (cell.size() > 1 && (!branch || cell.size() < branch->size())) {
      branch = &cell;
      branch_color = c;
    }
  }
  if (!branch) {
    std::vector<std::size_t> map(n);
    for (const auto& [c, cell] : cells_a) map[cell.front()] = cells_b.at(c).front();
    if (arcs_match(a, b, map)) return map;
    return std::nullopt;
  }

  const std::size_t fresh = *std::max_element(color.begin(), color.end()) + 1;
  const std::size_t v = branch->front();
  for (std::size_t w : cells_b.at(branch_color)) {
    auto next = color;
    next[v] = fresh;
    next[w + n] = fresh;
    if (auto found = individualize(a, b, refiner, std::move(next))) return found;
  }
  return std::nullopt;
}

struct Target {
  std::size_t n;
  std::vector<std::vector<bool>> adj;
  std::vector<int> color;
};

Target target_of(const SimpleGraph& g, const std::vector<int>& color) {
  Target t{g.vertex_count(), std::vector<std::vector<bool>>(g.vertex_count(), std::vector<bool>(g.vertex_count())),
           color};
  for (const auto& [u, v] : g.edges()) t.adj[u][v] = t.adj[v][u] = true;
  return t;
}

class BruteForce {
 public:
  BruteForce(OracleKind kind, const Target& g, const Target& h) : kind_(kind), g_(g), h_(h), map_(g.n) {}

  bool run() {
    if (kind_ == OracleKind::IsoColored && (g_.n != h_.n || edge_count(g_) != edge_count(h_))) return false;
    if (kind_ == OracleKind::EdgeInjectiveHom && g_.n > h_.n) return false;
    used_.assign(h_.n, 0);
    return extend(0);
  }

 private:
  static std::size_t edge_count(const Target& t) {
    std::size_t m = 0;
    for (std::size_t u = 0; u < t.n; ++u) {
      for (std::size_t v = u + 1; v < t.n; ++v) m += t.adj[u][v];
    }
    return m;
  }

  bool injective() const { return kind_ == OracleKind::IsoColored || kind_ == OracleKind::EdgeInjectiveHom; }

  bool complete() const {
    switch (kind_) {
      case OracleKind::Hom:
      case OracleKind::EdgeInjectiveHom:
        return true;
      case OracleKind::IsoColored:
        // Injective, same vertex and edge counts, edges kept: an isomorphism.
        return true;
      case OracleKind::Compaction: {
        if (std::find(used_.begin(), used_.end(), 0) != used_.end()) return false;
        for (std::size_t a = 0; a < h_.n; ++a) {
          for (std::size_t b = a + 1; b < h_.n; ++b) {
            if (!h_.adj[a][b]) continue;
            bool covered = false;
            for (std::size_t u = 0; u < g_.n && !covered; ++u) {
              for (std::size_t v = 0; v < g_.n && !covered; ++v) {
                covered = g_.adj[u][v] && map_[u] == a && map_[v] == b;
              }
            }
            if (!covered) return false;
          }
        }
        return true;
      }
    }
    return false;
  }

  bool extend(std::size_t u) {
    if (u == g_.n) return complete();
    if (kind_ == OracleKind::Compaction) {
      const auto unused = static_cast<std::size_t>(std::count(used_.begin(), used_.end(), 0));
      if (unused > g_.n - u) return false;
    }
    for (std::size_t a = 0; a < h_.n; ++a) {
      if (injective() && used_[a]) continue;
      if (kind_ == OracleKind::IsoColored && g_.color[u] != h_.color[a]) continue;
      bool ok = true;
      for (std::size_t v = 0; v < u && ok; ++v) {
        if (g_.adj[u][v]) ok = h_.adj[a][map_[v]];
      }
      if (!ok) continue;
      map_[u] = a;
      ++used_[a];
      if (extend(u + 1)) return true;
      --used_[a];
    }
    return false;
  }

  OracleKind kind_;
  const Target& g_;
  const Target& h_;
  std::vector<std::size_t> map_;
  std::vector<int> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> digraph_isomorphism(const Digraph& a, const Digraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.arcs.size() != b.arcs.size()) return std::nullopt;
  const UnionRefiner refiner(a, b);
  return individualize(a, b, refiner, std::vector<std::size_t>(2 * a.vertex_count(), 0));
}

bool brute_graph_oracle(OracleKind kind, const ColoredGraph& g, const ColoredGraph& h) {
  if (g.graph.vertex_count() > 8 || h.graph.vertex_count() > 8) {
    throw Error(ErrorKind::TooLarge, "brute-force oracles are limited to 8 vertices");
  }
  const Target tg = target_of(g.graph, g.color);
  const Target th = target_of(h.graph, h.color);
  return BruteForce(kind, tg, th).run();
}

bool brute_graph_oracle(OracleKind kind, const SimpleGraph& g, const SimpleGraph& h) {
  ColoredGraph cg{g, std::vector<int>(g.vertex_count(), 0)};
  ColoredGraph ch{h, std::vector<int>(h.vertex_count(), 0)};
  return brute_graph_oracle(kind, cg, ch);
}

}  // namespace sofic2
