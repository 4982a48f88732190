#include "sofic2/labeled_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sofic2 {

VertexId LabeledGraph::add_vertex(const std::string& name) {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  VertexId id = names_.size();
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

void LabeledGraph::add_edge(VertexId source, VertexId target, Symbol label) {
  if (source >= names_.size() || target >= names_.size()) {
    throw std::out_of_range("LabeledGraph::add_edge: unknown vertex");
  }
  edges_.push_back(LabeledEdge{source, target, std::move(label)});
}

void LabeledGraph::add_edge(const std::string& source, const std::string& target, Symbol label) {
  VertexId s = add_vertex(source);
  VertexId t = add_vertex(target);
  add_edge(s, t, std::move(label));
}

std::optional<VertexId> LabeledGraph::find(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> LabeledGraph::out_edges() const {
  std::vector<std::vector<std::size_t>> out(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) out[edges_[i].source].push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> LabeledGraph::in_edges() const {
  std::vector<std::vector<std::size_t>> in(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) in[edges_[i].target].push_back(i);
  return in;
}

LabeledGraph LabeledGraph::induced(const std::vector<bool>& keep) const {
  LabeledGraph out;
  std::vector<VertexId> remap(names_.size(), 0);
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (keep[v]) remap[v] = out.add_vertex(names_[v]);
  }
  for (const auto& e : edges_) {
    if (keep[e.source] && keep[e.target]) out.add_edge(remap[e.source], remap[e.target], e.label);
  }
  return out;
}

LabeledGraph LabeledGraph::canonical() const {
  std::vector<VertexId> order(names_.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return names_[a] < names_[b]; });
  LabeledGraph out;
  for (VertexId v : order) out.add_vertex(names_[v]);
  std::vector<LabeledEdge> sorted;
  sorted.reserve(edges_.size());
  for (const auto& e : edges_) {
    sorted.push_back(LabeledEdge{*out.find(names_[e.source]), *out.find(names_[e.target]), e.label});
  }
  std::sort(sorted.begin(), sorted.end(), [&](const LabeledEdge& a, const LabeledEdge& b) {
    const auto& as = out.names_[a.source];
    const auto& bs = out.names_[b.source];
    if (as != bs) return as < bs;
    const auto& at = out.names_[a.target];
    const auto& bt = out.names_[b.target];
    if (at != bt) return at < bt;
    return a.label < b.label;
  });
  for (auto& e : sorted) out.add_edge(e.source, e.target, std::move(e.label));
  return out;
}

std::vector<Word> path_labels(const LabeledGraph& g, std::size_t length) {
  // Frontier of (vertex, label so far); deduplicated per step.
  std::set<std::pair<VertexId, Word>> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.insert({v, Word{}});
  const auto out = g.out_edges();
  for (std::size_t step = 0; step < length; ++step) {
    std::set<std::pair<VertexId, Word>> next;
    for (const auto& [v, w] : frontier) {
      for (std::size_t ei : out[v]) {
        Word w2 = w;
        w2.push_back(g.edge(ei).label);
        next.insert({g.edge(ei).target, std::move(w2)});
      }
    }
    frontier = std::move(next);
  }
  std::set<Word> words;
  for (const auto& entry : frontier) words.insert(entry.second);
  return {words.begin(), words.end()};
}

}  // namespace sofic2
