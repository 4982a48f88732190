#include <doctest.h>

#include "sofic2/error.hpp"
#include "sofic2/formats.hpp"
#include "sofic2/presentation.hpp"
#include "sofic2/structure.hpp"
#include "testkit.hpp"

using namespace sofic2;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("detect_kind") {
  CHECK(detect_kind("edge a b x\n") == FileKind::Graph);
  CHECK(detect_kind("# note\nvertex a\nedge a a x\n") == FileKind::Graph);
  CHECK(detect_kind("edge a b\n") == FileKind::SimpleGraph);
  CHECK(detect_kind("orbit o0 word=0\n") == FileKind::Structure);
  CHECK(detect_kind("term 0 1 0\n") == FileKind::CombRep);
  CHECK(detect_kind("alphabet 0 1\nforbid 11\n") == FileKind::Forbidden);
  CHECK(detect_kind("color a 0\n") == FileKind::ColoredGraph);
  CHECK(detect_kind("map o0:0 o1:0\n") == FileKind::Witness);
  CHECK(detect_kind("arc a b\n") == FileKind::Digraph);
  CHECK(detect_kind("") == FileKind::Unknown);
}

TEST_CASE("graph files round trip") {
  const std::string text =
      "# comment\n"
      "edge q1 q0 [ab]\n"
      "vertex lonely\n"
      "edge q0 q0 0\n"
      "  # indented comment\n"
      "edge q0 q1 1\n";
  const LabeledGraph g = parse_graph(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  const std::string canonical = format_graph(g);
  CHECK(canonical == "vertex lonely\nedge q0 q0 0\nedge q0 q1 1\nedge q1 q0 [ab]\n");
  CHECK(format_graph(parse_graph(canonical)) == canonical);

  testkit::Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string f = format_graph(testkit::random_rank2_graph(rng));
    CHECK(format_graph(parse_graph(f)) == f);
  }
  CHECK(kind_of([] { parse_graph("edge a b\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_graph("nonsense a b c\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_graph("edge a b [x\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("structure files round trip") {
  const StructureGraph s = testkit::figure1_structure();
  const std::string text = format_structure(s);
  CHECK(text == testkit::figure1_structure_file());
  CHECK(parse_structure(text) == s);

  testkit::Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const StructureGraph r = testkit::random_structure_graph(rng);
    const std::string f = format_structure(r);
    CHECK(parse_structure(f) == r);
    CHECK(format_structure(parse_structure(f)) == f);
  }

  const std::string big = "orbit a word=x\ntrans a:0 a:0 count=123456789012345678901234567890\n";
  CHECK(parse_structure(big).count({PeriodicOrbit::of(word_of("x")), 0}, {PeriodicOrbit::of(word_of("x")), 0}) ==
        OrbitCount::from_decimal("123456789012345678901234567890"));

  // Missing diagonal, unknown orbit, phase out of range, bad count.
  CHECK(kind_of([] { parse_structure("orbit a word=xy\ntrans a:0 a:0 count=1\n"); }) ==
        ErrorKind::MalformedStructureGraph);
  CHECK(kind_of([] { parse_structure("orbit a word=x\ntrans b:0 a:0 count=1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_structure("orbit a word=x\ntrans a:1 a:0 count=1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_structure("orbit a word=x\ntrans a:0 a:0 count=-1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_structure("orbit a word=xx\n"); }) == ErrorKind::MalformedStructureGraph);
}

TEST_CASE("combinatorial representation files round trip") {
  const CombRep r = parse_comb_rep("term 0 1 0\nterm 0 - 12\n");
  CHECK(r.terms().size() == 2);
  CHECK(r.terms()[1].connectors[0].empty());
  CHECK(format_comb_rep(r) == "term 0 1 0\nterm 0 - 12\n");
  testkit::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const CombRep c = testkit::random_comb_rep(rng);
    CHECK(parse_comb_rep(format_comb_rep(c)) == c);
  }
  CHECK(kind_of([] { parse_comb_rep("term 0 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_comb_rep("term 0 - 0\n"); }) == ErrorKind::InvalidCombRep);
}

TEST_CASE("forbidden-word files") {
  const ForbiddenSpec spec = parse_forbidden("alphabet 0 1\nforbid 10\nmap 1 0\n");
  CHECK(spec.alphabet.size() == 2);
  CHECK(spec.forbidden == std::vector<Word>{word_of("10")});
  CHECK(spec.symbol_map.at(Symbol("1")) == Symbol("0"));
  CHECK(kind_of([] { parse_forbidden("forbid 10\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_forbidden("alphabet 0\nforbid 10\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("simple and colored graph files round trip") {
  testkit::Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const SimpleGraph g = testkit::random_simple_graph(rng);
    const std::string f = format_simple_graph(g);
    CHECK(format_simple_graph(parse_simple_graph(f)) == f);
    const ColoredGraph c = testkit::random_colored_graph(rng);
    const std::string cf = format_colored_graph(c);
    CHECK(format_colored_graph(parse_colored_graph(cf)) == cf);
  }
  CHECK(kind_of([] { parse_simple_graph("edge a a\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_colored_graph("color a 2\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("witness files round trip") {
  testkit::Rng rng(5);
  const StructureGraph s = testkit::figure1_structure();
  const StructureGraph t = testkit::rename_orbits(s, rng);
  const auto h = decide(Mode::Conjugacy, s, t);
  REQUIRE(h.has_value());
  const std::string text = format_witness(*h, s, t);
  CHECK(parse_witness(text, s, t) == *h);
  CHECK(kind_of([&] { parse_witness("map o9:0 o0:0\n", s, t); }) == ErrorKind::ParseError);
}

TEST_CASE("analysis report") {
  const LabeledGraph g = testkit::chain_graph(2);
  const std::string report = format_report(analyze(g), g);
  CHECK(report.find("rank 2") != std::string::npos);
  CHECK(report.find("countable_certified yes") != std::string::npos);
}
