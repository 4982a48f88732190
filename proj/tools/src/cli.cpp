#include "sofic2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sofic2/decisions.hpp"
#include "sofic2/error.hpp"
#include "sofic2/formats.hpp"
#include "sofic2/presentation.hpp"
#include "sofic2/reductions.hpp"
#include "sofic2/structure.hpp"

namespace sofic2::cli {

namespace {

constexpr std::uint64_t kDefaultPathBudget = 1'000'000;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

LabeledGraph load_presentation(const std::string& path) {
  const std::string text = read_file(path);
  switch (detect_kind(text)) {
    case FileKind::Graph:
      return parse_graph(text);
    case FileKind::CombRep:
      return from_comb_rep(parse_comb_rep(text));
    case FileKind::Forbidden: {
      const ForbiddenSpec spec = parse_forbidden(text);
      return from_forbidden_words(spec.alphabet, spec.forbidden, spec.symbol_map);
    }
    case FileKind::Unknown:
      // An empty or comment-only file is the empty graph.
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
      [[fallthrough]];
    default:
      throw Error(ErrorKind::ParseError, path + " is not a presentation (graph, term or forbidden-word file)");
  }
}

StructureGraph load_structure(const std::string& path) {
  const std::string text = read_file(path);
  if (detect_kind(text) == FileKind::Structure) return parse_structure(text);
  return build_structure(load_presentation(path));
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SOFIC2_PATH_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "SOFIC2_PATH_BUDGET is not a number");
    }
  }
  return kDefaultPathBudget;
}

const std::map<std::string, Mode> kModes{
    {"conj", Mode::Conjugacy}, {"hom", Mode::BlockMap}, {"embed", Mode::Embedding}, {"factor", Mode::Factor}};

// Writes to the named file, or to `out` when no file was given.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure graphs and decision procedures for countable sofic shifts of rank at most 2",
               "sofic2"};
  app.require_subcommand(1);

  std::string input, second, witness_path, output;
  std::string mode_name, gadget;
  std::uint64_t budget = 0;
  bool no_fastpath = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report right-resolvingness, cycles and rank of a presentation");
  analyze_cmd->add_option("input", input, "graph, term or forbidden-word file")->required();

  auto* structure_cmd = app.add_subcommand("structure", "Compute the structure graph of a presentation");
  structure_cmd->add_option("input", input)->required();
  structure_cmd->add_option("-o,--output", output, "write here instead of stdout");

  auto* oracle_cmd = app.add_subcommand("oracle-structure", "Structure graph by enumerating transitional paths");
  oracle_cmd->add_option("input", input)->required();
  oracle_cmd->add_option("--budget", budget, "maximum number of transitional paths (default $SOFIC2_PATH_BUDGET or 1000000)");
  oracle_cmd->add_option("-o,--output", output);

  auto* synth_cmd = app.add_subcommand("synthesize", "Build a presentation realizing a structure graph");
  synth_cmd->add_option("input", input, "structure file")->required();
  synth_cmd->add_option("-o,--output", output);

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a map of the given kind exists from A to B");
  decide_cmd->add_option("--mode", mode_name, "conj | hom | embed | factor")
      ->required()
      ->check(CLI::IsMember({"conj", "hom", "embed", "factor"}));
  decide_cmd->add_option("a", input, "structure file or presentation")->required();
  decide_cmd->add_option("b", second, "structure file or presentation")->required();
  decide_cmd->add_option("--witness", witness_path, "witness file written on YES")->default_val("witness.txt");
  decide_cmd->add_flag("--no-fastpath", no_fastpath, "always run the general search");

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a combinatorial representation");
  rank_cmd->add_option("input", input)->required();

  auto* derive_cmd = app.add_subcommand("derive", "Derivative of a combinatorial representation");
  derive_cmd->add_option("input", input)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Emit a reduction gadget");
  reduce_cmd->add_option("--gadget", gadget, "gi | hom | digraph")
      ->required()
      ->check(CLI::IsMember({"gi", "hom", "digraph"}));
  reduce_cmd->add_option("input", input)->required();
  reduce_cmd->add_option("-o,--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a witness file");
  verify_cmd->add_option("--mode", mode_name)->required()->check(CLI::IsMember({"conj", "hom", "embed", "factor"}));
  verify_cmd->add_option("a", input)->required();
  verify_cmd->add_option("b", second)->required();
  verify_cmd->add_option("witness", witness_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      const LabeledGraph g = load_presentation(input);
      out << format_report(analyze(g), g);
      return 0;
    }
    if (structure_cmd->parsed()) {
      emit(out, output, format_structure(build_structure(load_presentation(input))));
      return 0;
    }
    if (oracle_cmd->parsed()) {
      const std::uint64_t limit = oracle_cmd->count("--budget") ? budget : default_budget();
      emit(out, output, format_structure(oracle_structure(load_presentation(input), limit)));
      return 0;
    }
    if (synth_cmd->parsed()) {
      emit(out, output, format_graph(synthesize(parse_structure(read_file(input)))));
      return 0;
    }
    if (decide_cmd->parsed()) {
      const StructureGraph a = load_structure(input);
      const StructureGraph b = load_structure(second);
      const Mode mode = kModes.at(mode_name);
      DecideOptions options;
      options.use_fastpath = !no_fastpath;
      const auto witness = decide(mode, a, b, options);
      if (!witness) {
        out << "NO\n";
        return 1;
      }
      write_file(witness_path, format_witness(*witness, a, b));
      out << "YES\n";
      return 0;
    }
    if (rank_cmd->parsed()) {
      out << rank_of_comb_rep(parse_comb_rep(read_file(input))) << "\n";
      return 0;
    }
    if (derive_cmd->parsed()) {
      out << format_comb_rep(derivative_of_comb_rep(parse_comb_rep(read_file(input))));
      return 0;
    }
    if (reduce_cmd->parsed()) {
      const std::string text = read_file(input);
      if (gadget == "gi") {
        emit(out, output, format_structure(gi_gadget(parse_colored_graph(text))));
      } else if (gadget == "hom") {
        emit(out, output, format_structure(hom_gadget(parse_simple_graph(text))));
      } else {
        emit(out, output, format_digraph(digraph_gadget(load_structure(input))));
      }
      return 0;
    }
    if (verify_cmd->parsed()) {
      const StructureGraph a = load_structure(input);
      const StructureGraph b = load_structure(second);
      const SGHomomorphism h = parse_witness(read_file(witness_path), a, b);
      const bool ok = verify_witness(kModes.at(mode_name), a, b, h);
      out << (ok ? "VALID\n" : "INVALID\n");
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sofic2::cli
