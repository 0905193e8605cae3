// mrc: minimal Ramsey graphs for cyclicity.
// Every command writes one JSON document to stdout. Exit codes: 0 verdict
// computed, 1 usage/parse/precondition error, 2 theorem violation (or a
// certificate whose claims fail to verify).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "mrc/certificate.hpp"
#include "mrc/errors.hpp"
#include "mrc/graph_io.hpp"

namespace {

using namespace mrc;

struct Options {
  std::string input;
  std::string format;
  int r = 2;
  int n = -1;
  int l = 0;
  int m = 0;
  int steps = 1;
  int budget_edges = 24;
  int jobs = 1;
  std::int64_t seed = -1;
  std::string family;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file or stdin in edge-list or graph6 form, or a seeded random graph with
// 2n - 1 edges when --seed is given without an input file.
Graph read_graph(const Options& o) {
  if (o.seed >= 0 && o.input.empty()) {
    if (o.n < 2) throw PreconditionError("--seed without an input file needs --n >= 2");
    return random_graph(o.n, 2 * o.n - 1, static_cast<std::uint64_t>(o.seed));
  }
  const auto text = read_text(o.input);
  GraphFormat fmt;
  if (o.format == "edgelist") fmt = GraphFormat::EdgeList;
  else if (o.format == "graph6") fmt = GraphFormat::Graph6;
  else fmt = detect_format(text);
  return parse_graph(text, fmt);
}

// One cycle per line as whitespace separated labels ('#' starts a comment),
// or a JSON array of arrays.
std::vector<std::vector<int>> read_forest(const Options& o) {
  const auto text = read_text(o.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return Json::parse(text).get<std::vector<std::vector<int>>>();
    } catch (const Json::exception& e) {
      throw PreconditionError(std::string("forest JSON: ") + e.what());
    }
  }
  std::vector<std::vector<int>> cycles;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        cycle.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("expected an integer vertex label, got '" + tok + "'", number, 0);
      }
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "input file (default: stdin)");
  cmd->add_option("--format", o.format, "input format (default: detected)")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
}

void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random input graph with 2n-1 edges when no file is given")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", o.n, "vertex count of the random input graph");
}

int fail(int code, const std::string& kind, const std::string& message) {
  Json err{{"error", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal Ramsey graphs for cyclicity: verdicts, constructions, reductions and embeddings"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Ramsey / minimal Ramsey verdict with certificate");
  add_input(check, o);
  add_seed(check, o);
  check->add_option("--r", o.r, "number of colours")->check(CLI::Range(2, 64));

  auto* decompose = app.add_subcommand("decompose", "split into --r forests or give a dense witness");
  add_input(decompose, o);
  add_seed(decompose, o);
  decompose->add_option("--r", o.r, "number of forests")->check(CLI::Range(1, 64));

  auto* reduce = app.add_subcommand("reduce", "contract a minimal Ramsey graph down to K5-e or K4vK4");
  add_input(reduce, o);

  auto* minor = app.add_subcommand("minor", "K5-e or K4vK4 minor model of a graph with e >= 2v-1");
  add_input(minor, o);
  add_seed(minor, o);

  auto* generate = app.add_subcommand("generate", "members of a construction family");
  generate->add_option("--family", o.family, "chi4 | chi3 | chi2 | maxdeg")->required();
  generate->add_option("--steps", o.steps, "number of members")->check(CLI::Range(1, 16));

  auto* enumerate = app.add_subcommand("enumerate", "all minimal Ramsey graphs on --n vertices");
  enumerate->add_option("--n", o.n, "vertex count (at most 8)")->required();
  enumerate->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* embed = app.add_subcommand("embed", "embed a forest of cycles into a minimal Ramsey graph");
  embed->add_option("input", o.input, "forest file: one cycle per line, or a JSON array (default: stdin)");
  embed->add_option("--n", o.n, "host vertex count")->required();
  embed->add_option("--jobs", o.jobs, "worker threads for the colouring check")->check(CLI::PositiveNumber);

  auto* separate = app.add_subcommand("separate", "host on <= l vertices whose witness colouring has only C_m");
  separate->add_option("--l", o.l, "longest cycle length of the family")->required();
  separate->add_option("--m", o.m, "only monochromatic cycle length")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive colouring scan");
  add_input(oracle, o);
  add_seed(oracle, o);
  oracle->add_option("--r", o.r, "number of colours (2 or 3)")->check(CLI::Range(2, 3));
  oracle->add_option("--budget-edges", o.budget_edges, "largest scan, in edges")->check(CLI::Range(1, 63));
  oracle->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "re-check a certificate produced by any other command");
  verify->add_option("input", o.input, "certificate file (default: stdin)");
  verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Json out;
    int code = 0;
    if (check->parsed()) {
      out = check_certificate(read_graph(o), o.r);
    } else if (decompose->parsed()) {
      out = decompose_certificate(read_graph(o), o.r);
    } else if (reduce->parsed()) {
      out = reduce_certificate(read_graph(o));
    } else if (minor->parsed()) {
      out = minor_certificate(read_graph(o));
    } else if (generate->parsed()) {
      out = generate_certificate({parse_family(o.family), o.steps});
    } else if (enumerate->parsed()) {
      out = enumerate_certificate(o.n, o.jobs);
    } else if (embed->parsed()) {
      out = embed_certificate(read_forest(o), o.n, o.jobs);
    } else if (separate->parsed()) {
      out = separate_certificate(o.l, o.m);
    } else if (oracle->parsed()) {
      OracleOptions opt;
      opt.budget_edges = o.budget_edges;
      opt.jobs = o.jobs;
      out = oracle_certificate(read_graph(o), o.r, opt);
    } else if (verify->parsed()) {
      Json cert;
      try {
        cert = Json::parse(read_text(o.input));
      } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("certificate is not JSON: ") + e.what());
      }
      const auto outcome = verify_certificate(cert, o.jobs);
      out = verify_report(outcome);
      code = outcome.ok() ? 0 : 2;
    }
    std::cout << out.dump(2) << "\n";
    return code;
  } catch (const PreconditionError& e) {
    return fail(1, "precondition", e.what());
  } catch (const TheoremViolation& e) {
    return fail(2, "theorem_violation", e.what());
  }
}
