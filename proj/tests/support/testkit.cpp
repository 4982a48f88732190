#include "testkit.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sofic2/periodic.hpp"
#include "sofic2/presentation.hpp"

namespace sofic2::testkit {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Word random_word(Rng& rng, const std::vector<Symbol>& alphabet, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[uniform(rng, 0, alphabet.size() - 1)]);
  return w;
}

}  // namespace

CombRep figure1_rep() {
  return CombRep({
      CombTerm::parse({"0", "1", "0"}),
      CombTerm::parse({"0", "", "12"}),
      CombTerm::parse({"0", "", "13"}),
      CombTerm::parse({"12", "1", "13"}),
      CombTerm::parse({"12", "2", "13"}),
  });
}

StructureGraph figure1_structure() {
  const auto zero = PeriodicOrbit::of(word_of("0"));
  const auto twelve = PeriodicOrbit::of(word_of("12"));
  const auto thirteen = PeriodicOrbit::of(word_of("13"));
  const PeriodicPoint p0{zero, 0}, p12{twelve, 0}, p21{twelve, 1}, p13{thirteen, 0}, p31{thirteen, 1};
  StructureGraph s;
  for (const auto& o : {zero, twelve, thirteen}) s.add_orbit(o);
  s.add_transition(p0, p0, 2);
  for (const auto& p : {p12, p21, p13, p31}) {
    s.add_transition(p, p, 1);
    s.add_transition(p0, p, 1);
  }
  s.add_transition(p12, p31, 2);
  s.add_transition(p21, p13, 2);
  return s;
}

std::string figure1_structure_file() {
  return "orbit o0 word=0\n"
         "orbit o1 word=12\n"
         "orbit o2 word=13\n"
         "trans o0:0 o0:0 count=2\n"
         "trans o0:0 o1:0 count=1\n"
         "trans o0:0 o1:1 count=1\n"
         "trans o0:0 o2:0 count=1\n"
         "trans o0:0 o2:1 count=1\n"
         "trans o1:0 o1:0 count=1\n"
         "trans o1:0 o2:1 count=2\n"
         "trans o1:1 o1:1 count=1\n"
         "trans o1:1 o2:0 count=2\n"
         "trans o2:0 o2:0 count=1\n"
         "trans o2:1 o2:1 count=1\n";
}

LabeledGraph chain_graph(unsigned k) {
  LabeledGraph g;
  auto q = [](unsigned i) { return "q" + std::to_string(i); };
  g.add_edge(q(0), q(0), Symbol("0"));
  for (unsigned i = 0; i < k; ++i) {
    g.add_edge(q(i), q(i + 1), Symbol("1"));
    g.add_edge(q(i), q(i + 1), Symbol("2"));
  }
  g.add_edge(q(k), q(k), Symbol("3"));
  return g;
}

LabeledGraph edge_shift(const std::vector<std::pair<std::string, std::string>>& edges) {
  LabeledGraph g;
  for (const auto& [u, v] : edges) g.add_edge(u, v, Symbol(u + v + "_" + std::to_string(g.edge_count())));
  return g;
}

LabeledGraph random_rank2_graph(Rng& rng, std::size_t max_vertices) {
  static const std::vector<Symbol> letters{Symbol("a"), Symbol("b"), Symbol("c")};
  for (;;) {
    const std::vector<Symbol> alphabet(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 2, 3)));
    LabeledGraph g;
    std::vector<std::set<Symbol>> used;
    auto vertex = [&] {
      used.emplace_back();
      return g.add_vertex("v" + std::to_string(g.vertex_count()));
    };
    auto try_edge = [&](VertexId from, VertexId to, const Symbol& a) {
      if (!used[from].insert(a).second) return;
      g.add_edge(from, to, a);
    };

    std::vector<VertexId> sources, sinks;
    const std::size_t cycles = uniform(rng, 1, 4);
    for (std::size_t c = 0; c < cycles && g.vertex_count() < max_vertices; ++c) {
      const std::size_t len = std::min<std::size_t>(uniform(rng, 1, 3), max_vertices - g.vertex_count());
      const Word label = random_word(rng, alphabet, len);
      std::vector<VertexId> vs;
      for (std::size_t r = 0; r < len; ++r) vs.push_back(vertex());
      for (std::size_t r = 0; r < len; ++r) try_edge(vs[r], vs[(r + 1) % len], label[r]);
      auto& role = (c == 0 || coin(rng, 0.5)) ? sources : sinks;
      if (c == 1 && sinks.empty()) {
        sinks.insert(sinks.end(), vs.begin(), vs.end());
      } else {
        role.insert(role.end(), vs.begin(), vs.end());
      }
    }
    std::vector<VertexId> middle;
    const std::size_t room = max_vertices - g.vertex_count();
    for (std::size_t i = 0, n = uniform(rng, 0, std::min<std::size_t>(room, 5)); i < n; ++i) middle.push_back(vertex());

    // Transitional edges run from sources to the middle part or to sinks,
    // and forward within the middle part, so no new cycle can close.
    auto targets_after = [&](std::size_t middle_index) {
      std::vector<VertexId> out(sinks);
      for (std::size_t j = middle_index; j < middle.size(); ++j) out.push_back(middle[j]);
      return out;
    };
    auto wire = [&](VertexId from, const std::vector<VertexId>& targets, double p) {
      if (targets.empty()) return;
      for (const auto& a : alphabet) {
        if (coin(rng, p)) try_edge(from, targets[uniform(rng, 0, targets.size() - 1)], a);
      }
    };
    for (VertexId v : sources) wire(v, targets_after(0), 0.45);
    for (std::size_t i = 0; i < middle.size(); ++i) wire(middle[i], targets_after(i + 1), 0.6);

    LabeledGraph trimmed = trim_essential(g);
    if (trimmed.edge_count() > 0) return trimmed;
  }
}

StructureGraph random_structure_graph(Rng& rng, std::size_t max_orbits, std::size_t max_period,
                                      std::uint64_t max_count) {
  static const std::vector<Symbol> alphabet{Symbol("a"), Symbol("b"), Symbol("c")};
  StructureGraph s;
  const std::size_t wanted = uniform(rng, 1, max_orbits);
  for (std::size_t attempt = 0; attempt < 50 && s.orbits().size() < wanted; ++attempt) {
    s.add_orbit(PeriodicOrbit::of(random_word(rng, alphabet, uniform(rng, 1, max_period))));
  }
  auto count = [&] { return OrbitCount(std::uniform_int_distribution<std::uint64_t>(1, max_count)(rng)); };
  auto set_class = [&](const PeriodicPoint& x, const PeriodicPoint& y, const OrbitCount& c) {
    const auto period = lcm_u64(x.period(), y.period());
    for (std::uint64_t k = 0; k < period; ++k) {
      const auto shift = static_cast<std::int64_t>(k);
      s.set_transition(shift_point(x, shift), shift_point(y, shift), c);
    }
  };
  const auto orbits = s.orbits();
  for (const auto& o : orbits) set_class({o, 0}, {o, 0}, count());
  const std::size_t extra = uniform(rng, 0, 2 * orbits.size());
  for (std::size_t e = 0; e < extra; ++e) {
    const auto& a = orbits[uniform(rng, 0, orbits.size() - 1)];
    const auto& b = orbits[uniform(rng, 0, orbits.size() - 1)];
    const std::size_t s_phase = uniform(rng, 0, std::gcd(a.period(), b.period()) - 1);
    if (a == b && s_phase == 0) continue;
    set_class({a, 0}, {b, s_phase}, count());
  }
  return s;
}

StructureGraph finite_shift(const std::vector<std::size_t>& periods) {
  StructureGraph s;
  for (std::size_t i = 0; i < periods.size(); ++i) {
    Word root;
    for (std::size_t r = 0; r < periods[i]; ++r) {
      root.emplace_back("f" + std::to_string(i) + "_" + std::to_string(r));
    }
    const auto orbit = PeriodicOrbit::of(root);
    s.add_orbit(orbit);
    for (std::size_t r = 0; r < periods[i]; ++r) s.add_transition({orbit, r}, {orbit, r}, 1);
  }
  return s;
}

StructureGraph rename_orbits(const StructureGraph& s, Rng& rng) {
  std::vector<std::size_t> perm(s.orbits().size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<PeriodicOrbit, PeriodicOrbit> renamed;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto& o = s.orbits()[i];
    Word root;
    for (std::size_t r = 0; r < o.period(); ++r) {
      root.emplace_back("z" + std::to_string(perm[i]) + "_" + std::to_string(r));
    }
    renamed.emplace(o, PeriodicOrbit::of(root));
  }
  StructureGraph out;
  for (const auto& [from, to] : renamed) out.add_orbit(to);
  for (const auto& [pair, c] : s.transitions()) {
    out.set_transition({renamed.at(pair.first.orbit), pair.first.phase},
                       {renamed.at(pair.second.orbit), pair.second.phase}, c);
  }
  return out;
}

ColoredGraph random_colored_graph(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 2, max_vertices);
  std::vector<int> color(n);
  for (auto& c : color) c = coin(rng, 0.5) ? 1 : 0;
  color[0] = 0;
  color[1] = 1;
  ColoredGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("c" + std::to_string(v), color[v]);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (color[u] != color[v] && coin(rng, 0.4)) g.graph.add_edge(u, v);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.graph.degree(v) > 0) continue;
    std::vector<std::size_t> other;
    for (std::size_t w = 0; w < n; ++w) {
      if (color[w] != color[v]) other.push_back(w);
    }
    g.graph.add_edge(v, other[uniform(rng, 0, other.size() - 1)]);
  }
  return g;
}

ColoredGraph relabel(const ColoredGraph& g, Rng& rng) {
  const std::size_t n = g.graph.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  // perm lists old vertices in their new insertion order.
  std::vector<std::string> new_name(n);
  ColoredGraph out;
  for (std::size_t i = 0; i < n; ++i) {
    new_name[perm[i]] = "r" + std::to_string(i);
    out.add_vertex(new_name[perm[i]], g.color[perm[i]]);
  }
  auto edges = g.graph.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const auto& [u, v] : edges) out.graph.add_edge(new_name[u], new_name[v]);
  return out;
}

SimpleGraph random_simple_graph(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 2, max_vertices);
  SimpleGraph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("s" + std::to_string(v));
  const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng, p)) g.add_edge(u, v);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) > 0) continue;
    std::size_t w = uniform(rng, 0, n - 2);
    if (w >= v) ++w;
    g.add_edge(v, w);
  }
  return g;
}

CombRep random_comb_rep(Rng& rng, std::size_t max_terms, std::size_t max_arity) {
  static const std::vector<Symbol> alphabet{Symbol("0"), Symbol("1"), Symbol("2")};
  std::vector<CombTerm> terms;
  const std::size_t count = uniform(rng, 1, max_terms);
  while (terms.size() < count) {
    std::vector<Word> words;
    const std::size_t arity = uniform(rng, 0, max_arity);
    for (std::size_t i = 0; i <= arity; ++i) {
      if (i > 0) words.push_back(random_word(rng, alphabet, uniform(rng, 0, 2)));
      words.push_back(random_word(rng, alphabet, uniform(rng, 1, 3)));
    }
    CombTerm t = CombTerm::interleaved(words);
    if (t.junctions_aperiodic()) terms.push_back(std::move(t));
  }
  return CombRep(std::move(terms));
}

std::vector<Word> all_words(const std::vector<Symbol>& alphabet, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (const auto& a : alphabet) {
        Word w2 = w;
        w2.push_back(a);
        next.push_back(std::move(w2));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace sofic2::testkit
