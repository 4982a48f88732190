#pragma once

#include <string>
#include <string_view>

#include "sofic2/comb_rep.hpp"
#include "sofic2/decisions.hpp"
#include "sofic2/labeled_graph.hpp"
#include "sofic2/presentation.hpp"
#include "sofic2/reductions.hpp"
#include "sofic2/structure_graph.hpp"

// Line-oriented text formats. Tokens are separated by whitespace; a line
// whose first non-blank character is '#' is a comment. Words use the
// syntax of parse_word. Parse failures throw Error(ParseError) naming the
// offending line.

namespace sofic2 {

enum class FileKind { Graph, Structure, CombRep, Forbidden, SimpleGraph, ColoredGraph, Witness, Digraph, Unknown };

/// Guesses the format from the first keyword: edge/vertex (graph; an edge
/// line with two operands means a simple graph), orbit/trans, term,
/// alphabet/forbid/map, color, map with point operands, arc.
FileKind detect_kind(std::string_view text);

/// `vertex <id>` (optional) and `edge <src> <dst> <label>`.
LabeledGraph parse_graph(std::string_view text);
/// Canonical order: `vertex` lines only for vertices without edges, then
/// edges sorted by source, target, label.
std::string format_graph(const LabeledGraph& g);

/// `orbit <oid> word=<w>` and `trans <oid>:<phase> <oid>:<phase>
/// count=<n>`. Words need not be canonical; phases refer to the word as
/// written. Orbit ids are local to the file.
StructureGraph parse_structure(std::string_view text);
/// Orbits are written as o0, o1, ... in canonical order with their roots,
/// transitions sorted. This is also the naming used by witness files.
std::string format_structure(const StructureGraph& s);

/// `term u0 [v1 u1 ...]`, `-` for an empty connector.
CombRep parse_comb_rep(std::string_view text);
std::string format_comb_rep(const CombRep& r);

struct ForbiddenSpec {
  std::vector<Symbol> alphabet;
  std::vector<Word> forbidden;
  std::map<Symbol, Symbol> symbol_map;
};
/// `alphabet <a>...`, `forbid <w>`, `map <b> <a>` (b is written as a).
ForbiddenSpec parse_forbidden(std::string_view text);

/// `vertex <id>` (optional) and `edge <u> <v>`.
SimpleGraph parse_simple_graph(std::string_view text);
std::string format_simple_graph(const SimpleGraph& g);

/// `color <id> <0|1>` and `edge <u> <v>`.
ColoredGraph parse_colored_graph(std::string_view text);
std::string format_colored_graph(const ColoredGraph& g);

/// `map o<i>:<phase> o<j>:<phase>`, orbits numbered as in format_structure
/// of the source and target structure graphs.
SGHomomorphism parse_witness(std::string_view text, const StructureGraph& x, const StructureGraph& y);
std::string format_witness(const SGHomomorphism& h, const StructureGraph& x, const StructureGraph& y);

/// `vertex <name>` for every vertex, then `arc <u> <v>`.
std::string format_digraph(const Digraph& d);

std::string format_report(const AnalysisReport& report, const LabeledGraph& g);

}  // namespace sofic2
