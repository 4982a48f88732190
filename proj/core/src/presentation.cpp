#include "sofic2/presentation.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "sofic2/error.hpp"

namespace sofic2 {

LabeledGraph trim_essential(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const auto& e : g.edges()) {
    ++outdeg[e.source];
    ++indeg[e.target];
  }
  const auto out = g.out_edges();
  const auto in = g.in_edges();
  std::vector<bool> keep(n, true);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) {
      keep[v] = false;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (std::size_t ei : out[v]) {
      VertexId w = g.edge(ei).target;
      if (keep[w] && --indeg[w] == 0) {
        keep[w] = false;
        queue.push_back(w);
      }
    }
    for (std::size_t ei : in[v]) {
      VertexId w = g.edge(ei).source;
      if (keep[w] && --outdeg[w] == 0) {
        keep[w] = false;
        queue.push_back(w);
      }
    }
  }
  return g.induced(keep);
}

std::vector<std::pair<VertexId, Symbol>> check_right_resolving(const LabeledGraph& g) {
  std::map<std::pair<VertexId, Symbol>, std::size_t> seen;
  for (const auto& e : g.edges()) ++seen[{e.source, e.label}];
  std::vector<std::pair<VertexId, Symbol>> out;
  for (const auto& [key, count] : seen) {
    if (count >= 2) out.push_back(key);
  }
  return out;
}

LabeledGraph minimize_right_resolving(const LabeledGraph& input) {
  if (!check_right_resolving(input).empty()) {
    throw Error(ErrorKind::NotRightResolving, "minimize_right_resolving needs a right-resolving graph");
  }
  const LabeledGraph g = trim_essential(input);
  const std::size_t n = g.vertex_count();
  const auto out = g.out_edges();

  // Sorted (label, target) lists per vertex; right-resolving makes labels unique.
  std::vector<std::vector<std::pair<Symbol, VertexId>>> moves(n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t ei : out[v]) moves[v].emplace_back(g.edge(ei).label, g.edge(ei).target);
    std::sort(moves[v].begin(), moves[v].end());
  }

  // Moore refinement: start from "same outgoing label set", refine by the
  // classes reached under each label until stable.
  std::vector<std::size_t> cls(n, 0);
  {
    std::map<std::vector<Symbol>, std::size_t> ids;
    for (VertexId v = 0; v < n; ++v) {
      std::vector<Symbol> labels;
      for (const auto& m : moves[v]) labels.push_back(m.first);
      auto [it, inserted] = ids.try_emplace(std::move(labels), ids.size());
      cls[v] = it->second;
    }
  }
  std::size_t class_count = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::pair<Symbol, std::size_t>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> next(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      Signature sig{cls[v], {}};
      for (const auto& [label, target] : moves[v]) sig.second.emplace_back(label, cls[target]);
      auto [it, inserted] = ids.try_emplace(std::move(sig), ids.size());
      next[v] = it->second;
    }
    const std::size_t count = ids.size();
    cls = std::move(next);
    if (count == class_count) break;
    class_count = count;
  }

  // Renumber classes by first member so that output ids follow input order.
  std::vector<std::size_t> renum(n, n);
  std::vector<VertexId> representative;
  for (VertexId v = 0; v < n; ++v) {
    if (renum[cls[v]] == n) {
      renum[cls[v]] = representative.size();
      representative.push_back(v);
    }
  }
  LabeledGraph result;
  for (VertexId rep : representative) result.add_vertex(g.name(rep));
  for (std::size_t c = 0; c < representative.size(); ++c) {
    for (const auto& [label, target] : moves[representative[c]]) {
      result.add_edge(c, renum[cls[target]], label);
    }
  }
  return result;
}

namespace {

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<VertexId>> strongly_connected_components(
    std::size_t n, const std::vector<std::vector<VertexId>>& succ) {
  std::vector<std::vector<VertexId>> comps;
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::size_t counter = 0;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != SIZE_MAX) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next < succ[f.v].size()) {
        VertexId w = succ[f.v][f.next++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

}  // namespace

AnalysisReport analyze(const LabeledGraph& g) {
  AnalysisReport report;
  report.is_right_resolving = check_right_resolving(g).empty();
  report.is_essential = trim_essential(g).vertex_count() == g.vertex_count();

  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> succ(n);
  for (const auto& e : g.edges()) succ[e.source].push_back(e.target);
  const auto comps = strongly_connected_components(n, succ);

  std::vector<std::size_t> comp_of(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (VertexId v : comps[c]) comp_of[v] = c;
  }
  std::vector<std::size_t> internal_edges(comps.size(), 0);
  for (const auto& e : g.edges()) {
    if (comp_of[e.source] == comp_of[e.target]) ++internal_edges[comp_of[e.source]];
  }

  const auto out = g.out_edges();
  bool disjoint = true;
  std::vector<bool> cyclic(comps.size(), false);
  std::vector<Cycle> cycles;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (internal_edges[c] == 0) continue;
    cyclic[c] = true;
    // A strongly connected component with as many internal edges as
    // vertices is exactly one simple cycle.
    if (internal_edges[c] != comps[c].size()) {
      disjoint = false;
      continue;
    }
    Cycle cyc;
    VertexId start = *std::min_element(comps[c].begin(), comps[c].end());
    VertexId v = start;
    do {
      std::size_t chosen = SIZE_MAX;
      for (std::size_t ei : out[v]) {
        if (comp_of[g.edge(ei).target] == c) {
          chosen = ei;
          break;
        }
      }
      cyc.vertices.push_back(v);
      cyc.edges.push_back(chosen);
      cyc.label.push_back(g.edge(chosen).label);
      v = g.edge(chosen).target;
    } while (v != start);
    cycles.push_back(std::move(cyc));
  }

  report.is_countable_certified = disjoint;
  if (!disjoint) {
    report.rank_status = RankStatus::NotCertified;
    return report;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices.front() < b.vertices.front(); });
  report.cycles = std::move(cycles);

  // Longest chain of cyclic components in the condensation. Tarjan emits
  // sinks first, so successors are always finished before their sources.
  std::vector<std::size_t> best(comps.size(), 0);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t succ_best = 0;
    for (VertexId v : comps[c]) {
      for (VertexId w : succ[v]) {
        if (comp_of[w] != c) succ_best = std::max(succ_best, best[comp_of[w]]);
      }
    }
    best[c] = succ_best + (cyclic[c] ? 1 : 0);
    rank = std::max(rank, best[c]);
  }
  report.rank = rank;
  report.rank_status = rank >= 3 ? RankStatus::AtLeastThree : RankStatus::Exact;
  return report;
}

AnalysisReport require_rank_at_most_two(const LabeledGraph& g) {
  AnalysisReport report = analyze(g);
  if (!report.is_right_resolving) {
    throw Error(ErrorKind::NotRightResolving, "presentation is not right-resolving");
  }
  if (!report.is_countable_certified) {
    throw Error(ErrorKind::NotCountableCertified, "presentation has cycles sharing a vertex");
  }
  if (report.rank_status == RankStatus::AtLeastThree) {
    throw Error(ErrorKind::RankTooHigh, "a path meets three or more cycles");
  }
  return report;
}

LabeledGraph determinize(const LabeledGraph& g) {
  using Subset = std::vector<VertexId>;
  const auto out = g.out_edges();
  LabeledGraph result;
  std::map<Subset, VertexId> ids;
  std::deque<Subset> queue;

  auto intern = [&](Subset s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    VertexId id = result.add_vertex("d" + std::to_string(ids.size()));
    ids.emplace(s, id);
    queue.push_back(std::move(s));
    return id;
  };

  Subset all(g.vertex_count());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  if (all.empty()) return result;
  intern(all);
  while (!queue.empty()) {
    Subset s = std::move(queue.front());
    queue.pop_front();
    const VertexId from = ids.at(s);
    std::map<Symbol, std::set<VertexId>> step;
    for (VertexId v : s) {
      for (std::size_t ei : out[v]) step[g.edge(ei).label].insert(g.edge(ei).target);
    }
    for (auto& [label, targets] : step) {
      VertexId to = intern(Subset(targets.begin(), targets.end()));
      result.add_edge(from, to, label);
    }
  }
  return result;
}

namespace {

// Nondeterministic presentation of one term: a cycle per u_i and, for every
// i < j, a path spelling v_{i+1} ... v_j followed by the first symbol of u_j,
// from the entry vertex of cycle i to the second vertex of cycle j. Paths
// with j > i + 1 skip the inner loops, whose exponents may be zero.
void add_term(LabeledGraph& g, const CombTerm& term, std::size_t term_index) {
  const std::string prefix = "t" + std::to_string(term_index);
  std::vector<std::vector<VertexId>> cycle_vertices;
  for (std::size_t j = 0; j < term.loops.size(); ++j) {
    const Word& u = term.loops[j];
    std::vector<VertexId> vs;
    for (std::size_t r = 0; r < u.size(); ++r) {
      vs.push_back(g.add_vertex(prefix + "c" + std::to_string(j) + "r" + std::to_string(r)));
    }
    for (std::size_t r = 0; r < u.size(); ++r) g.add_edge(vs[r], vs[(r + 1) % u.size()], u[r]);
    cycle_vertices.push_back(std::move(vs));
  }
  for (std::size_t i = 0; i + 1 < term.loops.size(); ++i) {
    Word spelled;
    for (std::size_t j = i + 1; j < term.loops.size(); ++j) {
      spelled = concat(spelled, term.connectors[j - 1]);
      Word path = spelled;
      path.push_back(term.loops[j].front());
      VertexId cur = cycle_vertices[i].front();
      const VertexId end = cycle_vertices[j][1 % term.loops[j].size()];
      const std::string stem = prefix + "p" + std::to_string(i) + "_" + std::to_string(j) + "s";
      for (std::size_t k = 0; k < path.size(); ++k) {
        VertexId next = (k + 1 == path.size()) ? end : g.add_vertex(stem + std::to_string(k));
        g.add_edge(cur, next, path[k]);
        cur = next;
      }
    }
  }
}

}  // namespace

LabeledGraph from_comb_rep(const CombRep& r) {
  LabeledGraph nfa;
  for (std::size_t i = 0; i < r.terms().size(); ++i) add_term(nfa, r.terms()[i], i);
  return minimize_right_resolving(trim_essential(determinize(trim_essential(nfa))));
}

LabeledGraph from_forbidden_words(const std::vector<Symbol>& alphabet,
                                  const std::vector<Word>& forbidden,
                                  const std::map<Symbol, Symbol>& symbol_map) {
  std::size_t block = 2;
  for (const auto& f : forbidden) block = std::max(block, f.size());

  std::vector<Symbol> letters = alphabet;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  auto allowed = [&](const Word& w) {
    for (const auto& f : forbidden) {
      if (f.empty() || f.size() > w.size()) continue;
      for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
        if (std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) return false;
      }
    }
    return true;
  };

  // All allowed words of length block-1, in lexicographic order.
  std::vector<Word> states{Word{}};
  for (std::size_t len = 0; len + 1 < block; ++len) {
    std::vector<Word> next;
    for (const auto& w : states) {
      for (const auto& a : letters) {
        Word w2 = w;
        w2.push_back(a);
        if (allowed(w2)) next.push_back(std::move(w2));
      }
    }
    states = std::move(next);
  }

  LabeledGraph g;
  std::map<Word, VertexId> ids;
  for (const auto& w : states) ids.emplace(w, g.add_vertex(format_word(w)));
  for (const auto& w : states) {
    for (const auto& b : letters) {
      Word blk = w;
      blk.push_back(b);
      if (!allowed(blk)) continue;
      Word suffix(blk.begin() + 1, blk.end());
      auto it = ids.find(suffix);
      if (it == ids.end()) continue;
      auto mapped = symbol_map.find(b);
      g.add_edge(ids.at(w), it->second, mapped == symbol_map.end() ? b : mapped->second);
    }
  }
  return trim_essential(g);
}

std::size_t rank_of_comb_rep(const CombRep& r) {
  if (r.empty()) throw Error(ErrorKind::EmptyRepresentation, "rank of an empty representation");
  std::size_t m = 0;
  for (const auto& t : r.terms()) m = std::max(m, t.arity());
  return 1 + m;
}

namespace {

// A periodic junction u_i v_{i+1} u_{i+1} collapses into one periodic
// region; merge it into u_i.
CombTerm fold_periodic_junctions(CombTerm t) {
  for (std::size_t i = 0; i < t.connectors.size();) {
    CombTerm probe;
    probe.loops = {t.loops[i], t.loops[i + 1]};
    probe.connectors = {t.connectors[i]};
    if (probe.junctions_aperiodic()) {
      ++i;
      continue;
    }
    t.connectors.erase(t.connectors.begin() + static_cast<std::ptrdiff_t>(i));
    t.loops.erase(t.loops.begin() + static_cast<std::ptrdiff_t>(i + 1));
  }
  return t;
}

}  // namespace

CombRep derivative_of_comb_rep(const CombRep& r) {
  if (r.empty()) throw Error(ErrorKind::EmptyRepresentation, "derivative of an empty representation");
  std::vector<CombTerm> out;
  auto push = [&](CombTerm t) {
    t = fold_periodic_junctions(std::move(t));
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  };
  for (const auto& t : r.terms()) {
    const std::size_t m = t.arity();
    if (m == 0) continue;
    CombTerm right;
    right.loops.assign(t.loops.begin() + 1, t.loops.end());
    right.connectors.assign(t.connectors.begin() + 1, t.connectors.end());
    CombTerm left;
    left.loops.assign(t.loops.begin(), t.loops.end() - 1);
    left.connectors.assign(t.connectors.begin(), t.connectors.end() - 1);
    push(std::move(left));
    push(std::move(right));
  }
  return CombRep(std::move(out));
}

}  // namespace sofic2
