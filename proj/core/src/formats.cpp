#include "sofic2/formats.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "sofic2/error.hpp"

namespace sofic2 {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream in{std::string(text.substr(start, end - start))};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty() && line.tokens.front().front() != '#') lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line.number) + ": " + what);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    fail(line, "'" + line.tokens.front() + "' expects " + std::to_string(n - 1) + " operand(s)");
  }
}

Symbol parse_symbol(const Line& line, const std::string& token) {
  Word w = parse_word(token);
  if (w.size() != 1) fail(line, "expected a single symbol, got '" + token + "'");
  return w.front();
}

// "key=value" with the expected key.
std::string keyed(const Line& line, const std::string& token, std::string_view key) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || std::string_view(token).substr(0, eq) != key) {
    fail(line, "expected " + std::string(key) + "=...");
  }
  return token.substr(eq + 1);
}

// "id:phase".
std::pair<std::string, std::size_t> split_point(const Line& line, const std::string& token) {
  const auto colon = token.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) {
    fail(line, "expected <orbit>:<phase>, got '" + token + "'");
  }
  const std::string digits = token.substr(colon + 1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 9) {
    fail(line, "bad phase in '" + token + "'");
  }
  return {token.substr(0, colon), static_cast<std::size_t>(std::stoul(digits))};
}

}  // namespace

FileKind detect_kind(std::string_view text) {
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens.front();
    if (key == "orbit" || key == "trans") return FileKind::Structure;
    if (key == "term") return FileKind::CombRep;
    if (key == "alphabet" || key == "forbid") return FileKind::Forbidden;
    if (key == "color") return FileKind::ColoredGraph;
    if (key == "arc") return FileKind::Digraph;
    if (key == "map") {
      return line.tokens.size() == 3 && line.tokens[1].find(':') != std::string::npos ? FileKind::Witness
                                                                                      : FileKind::Forbidden;
    }
    if (key == "edge") return line.tokens.size() == 3 ? FileKind::SimpleGraph : FileKind::Graph;
    if (key == "vertex") continue;
    return FileKind::Unknown;
  }
  return FileKind::Unknown;
}

LabeledGraph parse_graph(std::string_view text) {
  LabeledGraph g;
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens.front();
    if (key == "vertex") {
      expect_arity(line, 2);
      g.add_vertex(line.tokens[1]);
    } else if (key == "edge") {
      expect_arity(line, 4);
      g.add_edge(line.tokens[1], line.tokens[2], parse_symbol(line, line.tokens[3]));
    } else {
      fail(line, "unknown keyword '" + key + "' in a graph file");
    }
  }
  return g;
}

std::string format_graph(const LabeledGraph& g) {
  std::vector<bool> touched(g.vertex_count(), false);
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : g.edges()) {
    touched[e.source] = touched[e.target] = true;
    edges.emplace_back(g.name(e.source), g.name(e.target), format_word({e.label}));
  }
  std::vector<std::string> lonely;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) lonely.push_back(g.name(v));
  }
  std::sort(lonely.begin(), lonely.end());
  std::sort(edges.begin(), edges.end());
  std::string out;
  for (const auto& v : lonely) out += "vertex " + v + "\n";
  for (const auto& [s, t, l] : edges) out += "edge " + s + " " + t + " " + l + "\n";
  return out;
}

StructureGraph parse_structure(std::string_view text) {
  std::map<std::string, Word> words;
  StructureGraph s;
  std::set<PointPair> seen;
  auto resolve = [&](const Line& line, const std::string& token) {
    auto [id, phase] = split_point(line, token);
    auto it = words.find(id);
    if (it == words.end()) fail(line, "unknown orbit '" + id + "'");
    if (phase >= it->second.size()) fail(line, "phase out of range in '" + token + "'");
    return canonicalize_point(it->second, static_cast<std::int64_t>(phase));
  };
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens.front();
    if (key == "orbit") {
      expect_arity(line, 3);
      Word w = parse_word(keyed(line, line.tokens[2], "word"));
      if (w.empty()) fail(line, "orbit word is empty");
      if (!words.emplace(line.tokens[1], w).second) fail(line, "duplicate orbit id '" + line.tokens[1] + "'");
      s.add_orbit(PeriodicOrbit::of(w));
    } else if (key == "trans") {
      expect_arity(line, 4);
      const PeriodicPoint x = resolve(line, line.tokens[1]);
      const PeriodicPoint y = resolve(line, line.tokens[2]);
      const OrbitCount c = OrbitCount::from_decimal(keyed(line, line.tokens[3], "count"));
      if (c.is_zero()) fail(line, "transition count must be positive");
      if (!seen.insert({x, y}).second) fail(line, "duplicate transition");
      s.set_transition(x, y, c);
    } else {
      fail(line, "unknown keyword '" + key + "' in a structure file");
    }
  }
  s.validate();
  return s;
}

std::string format_structure(const StructureGraph& s) {
  std::string out;
  for (std::size_t i = 0; i < s.orbits().size(); ++i) {
    out += "orbit o" + std::to_string(i) + " word=" + format_word(s.orbits()[i].root()) + "\n";
  }
  auto name = [&](const PeriodicPoint& x) {
    return "o" + std::to_string(*s.orbit_index(x.orbit)) + ":" + std::to_string(x.phase);
  };
  for (const auto& [pair, c] : s.transitions()) {
    out += "trans " + name(pair.first) + " " + name(pair.second) + " count=" + c.to_decimal() + "\n";
  }
  return out;
}

CombRep parse_comb_rep(std::string_view text) {
  std::vector<CombTerm> terms;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.front() != "term") fail(line, "unknown keyword '" + line.tokens.front() + "' in a term file");
    if (line.tokens.size() < 2 || line.tokens.size() % 2 != 0) {
      fail(line, "a term needs u0 [v1 u1 ...] (an odd number of words)");
    }
    std::vector<Word> words;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) words.push_back(parse_word(line.tokens[i]));
    terms.push_back(CombTerm::interleaved(words));
  }
  return CombRep(std::move(terms));
}

std::string format_comb_rep(const CombRep& r) {
  std::string out;
  for (const auto& t : r.terms()) {
    out += "term";
    for (const auto& w : t.words()) out += " " + format_word(w);
    out += "\n";
  }
  return out;
}

ForbiddenSpec parse_forbidden(std::string_view text) {
  ForbiddenSpec spec;
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens.front();
    if (key == "alphabet") {
      for (std::size_t i = 1; i < line.tokens.size(); ++i) spec.alphabet.push_back(parse_symbol(line, line.tokens[i]));
    } else if (key == "forbid") {
      expect_arity(line, 2);
      spec.forbidden.push_back(parse_word(line.tokens[1]));
    } else if (key == "map") {
      expect_arity(line, 3);
      spec.symbol_map[parse_symbol(line, line.tokens[1])] = parse_symbol(line, line.tokens[2]);
    } else {
      fail(line, "unknown keyword '" + key + "' in a forbidden-word file");
    }
  }
  if (spec.alphabet.empty()) throw Error(ErrorKind::ParseError, "forbidden-word file without an alphabet line");
  const std::set<Symbol> alphabet(spec.alphabet.begin(), spec.alphabet.end());
  auto check = [&](const Symbol& a) {
    if (!alphabet.contains(a)) throw Error(ErrorKind::ParseError, "symbol '" + a.token() + "' is not in the alphabet");
  };
  for (const auto& w : spec.forbidden) std::for_each(w.begin(), w.end(), check);
  for (const auto& [from, to] : spec.symbol_map) check(from);
  return spec;
}

SimpleGraph parse_simple_graph(std::string_view text) {
  SimpleGraph g;
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens.front();
    if (key == "vertex") {
      expect_arity(line, 2);
      g.add_vertex(line.tokens[1]);
    } else if (key == "edge") {
      expect_arity(line, 3);
      g.add_edge(line.tokens[1], line.tokens[2]);
    } else {
      fail(line, "unknown keyword '" + key + "' in a graph file");
    }
  }
  return g;
}

std::string format_simple_graph(const SimpleGraph& g) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(std::min(g.name(u), g.name(v)), std::max(g.name(u), g.name(v)));
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::string> lonely;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) lonely.push_back(g.name(v));
  }
  std::sort(lonely.begin(), lonely.end());
  std::string out;
  for (const auto& v : lonely) out += "vertex " + v + "\n";
  for (const auto& [u, v] : edges) out += "edge " + u + " " + v + "\n";
  return out;
}

ColoredGraph parse_colored_graph(std::string_view text) {
  ColoredGraph g;
  std::set<std::string> colored;
  std::vector<std::pair<Line, std::pair<std::string, std::string>>> edges;
  for (const auto& line : tokenize(text)) {
    const auto& key = line.tokens.front();
    if (key == "color") {
      expect_arity(line, 3);
      if (line.tokens[2] != "0" && line.tokens[2] != "1") fail(line, "color must be 0 or 1");
      if (!colored.insert(line.tokens[1]).second) fail(line, "vertex colored twice");
      g.add_vertex(line.tokens[1], line.tokens[2] == "0" ? 0 : 1);
    } else if (key == "edge") {
      expect_arity(line, 3);
      edges.push_back({line, {line.tokens[1], line.tokens[2]}});
    } else {
      fail(line, "unknown keyword '" + key + "' in a colored graph file");
    }
  }
  for (const auto& [line, e] : edges) {
    if (!colored.contains(e.first) || !colored.contains(e.second)) fail(line, "edge endpoint has no color");
    g.graph.add_edge(e.first, e.second);
  }
  return g;
}

std::string format_colored_graph(const ColoredGraph& g) {
  std::vector<std::pair<std::string, int>> colors;
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) colors.emplace_back(g.graph.name(v), g.color[v]);
  std::sort(colors.begin(), colors.end());
  std::string out;
  for (const auto& [name, c] : colors) out += "color " + name + " " + std::to_string(c) + "\n";
  std::string edges = format_simple_graph(g.graph);
  // Drop the vertex lines: every vertex already has a color line.
  std::istringstream in(edges);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("edge ", 0) == 0) out += line + "\n";
  }
  return out;
}

SGHomomorphism parse_witness(std::string_view text, const StructureGraph& x, const StructureGraph& y) {
  auto resolve = [](const Line& line, const std::string& token, const StructureGraph& s) {
    auto [id, phase] = split_point(line, token);
    if (id.size() < 2 || id[0] != 'o' ||
        !std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; }) || id.size() > 10) {
      fail(line, "expected an orbit id o<index>, got '" + id + "'");
    }
    const std::size_t index = std::stoul(id.substr(1));
    if (index >= s.orbits().size()) fail(line, "no orbit " + id);
    if (phase >= s.orbits()[index].period()) fail(line, "phase out of range in '" + token + "'");
    return PeriodicPoint{s.orbits()[index], phase};
  };
  SGHomomorphism h;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.front() != "map") fail(line, "unknown keyword '" + line.tokens.front() + "' in a witness file");
    expect_arity(line, 3);
    if (!h.vertex_map.emplace(resolve(line, line.tokens[1], x), resolve(line, line.tokens[2], y)).second) {
      fail(line, "point mapped twice");
    }
  }
  return h;
}

std::string format_witness(const SGHomomorphism& h, const StructureGraph& x, const StructureGraph& y) {
  auto name = [](const StructureGraph& s, const PeriodicPoint& p) {
    return "o" + std::to_string(*s.orbit_index(p.orbit)) + ":" + std::to_string(p.phase);
  };
  std::string out;
  for (const auto& [from, to] : h.vertex_map) out += "map " + name(x, from) + " " + name(y, to) + "\n";
  return out;
}

std::string format_digraph(const Digraph& d) {
  std::string out;
  for (const auto& v : d.names) out += "vertex " + v + "\n";
  for (const auto& [u, v] : d.arcs) out += "arc " + d.names[u] + " " + d.names[v] + "\n";
  return out;
}

std::string format_report(const AnalysisReport& report, const LabeledGraph& g) {
  auto yes_no = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  std::string out;
  out += "right_resolving " + yes_no(report.is_right_resolving) + "\n";
  out += "essential " + yes_no(report.is_essential) + "\n";
  out += "countable_certified " + yes_no(report.is_countable_certified) + "\n";
  switch (report.rank_status) {
    case RankStatus::Exact: out += "rank " + std::to_string(report.rank) + "\n"; break;
    case RankStatus::AtLeastThree: out += "rank >=3\n"; break;
    case RankStatus::NotCertified: out += "rank not-certified\n"; break;
  }
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    const Cycle& c = report.cycles[i];
    out += "cycle " + std::to_string(i) + " word=" + format_word(c.label) + " vertices=";
    for (std::size_t r = 0; r < c.vertices.size(); ++r) out += (r ? "," : "") + g.name(c.vertices[r]);
    out += "\n";
  }
  return out;
}

}  // namespace sofic2
